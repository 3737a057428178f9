#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mlspec/numeric.hpp"
#include "mlspec/surd.hpp"

namespace mlspec {

using Digit = std::uint32_t;

// Finite sequence of partial quotients a_1..a_n, every digit >= 1.
// The empty word is the concatenation identity.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Digit> digits);
  Word(std::initializer_list<Digit> digits);

  static Word repeat(Digit d, std::size_t count);

  std::span<const Digit> digits() const { return digits_; }
  const std::vector<Digit>& vector() const { return digits_; }
  std::size_t size() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  Digit operator[](std::size_t i) const { return digits_[i]; }
  Digit max_digit() const;
  bool bounded_by(Digit cap) const { return max_digit() <= cap; }

  Word prefix(std::size_t n) const;
  Word suffix_from(std::size_t i) const;
  Word appended(Digit d) const;
  bool is_prefix_of(const Word& other) const;

  Word& operator+=(const Word& other);
  friend Word operator+(Word x, const Word& y) { return x += y; }

  std::string to_string() const;

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Digit> digits_;
};

Word concat(const Word& x, const Word& y);
Word transpose(const Word& w);
Word power(const Word& w, std::size_t n);

// Continuant state after n digits: p_n, p_{n-1}, q_n, q_{n-1}.
// Seeds: p_{-1} = 1, q_{-1} = 0, p_0 = 0, q_0 = 1.
struct ConvergentMatrix {
  std::size_t n = 0;
  Integer p = 0;
  Integer p_prev = 1;
  Integer q = 1;
  Integer q_prev = 0;

  void push(Digit a);
  Integer determinant() const { return p * q_prev - p_prev * q; }
  friend bool operator==(const ConvergentMatrix&, const ConvergentMatrix&) = default;
};

std::vector<ConvergentMatrix> convergents(const Word& w);
ConvergentMatrix continuant(std::span<const Digit> digits);
inline ConvergentMatrix continuant(const Word& w) { return continuant(w.digits()); }

struct CylinderInterval {
  Rational left;
  Rational right;
  Word word;
  Rational size;
};

CylinderInterval cylinder(const Word& w);
Rational cylinder_size(const Word& w);
// 1 / s(w) = q_n (q_n + q_{n-1}), an integer.
Integer inverse_cylinder_size(const Word& w);

// floor(log(1 / s(w))), exact.
unsigned r_floor(const Word& w);
unsigned r_floor(const ConvergentMatrix& m);

// w in P_r: r(w) >= r and r(parent) < r.
bool in_layer(const Word& w, unsigned r);

// x -> (a x + b) / (c x + d)
struct MobiusMap {
  Integer a = 1;
  Integer b = 0;
  Integer c = 0;
  Integer d = 1;

  Rational operator()(const Rational& x) const;
  QuadraticSurd operator()(const QuadraticSurd& x) const;
  // Image of [lo, hi] (the map has no pole there); endpoints sorted.
  RationalInterval image(const RationalInterval& x) const;
  MobiusMap compose(const MobiusMap& inner) const;
  Integer determinant() const { return a * d - b * c; }
  friend bool operator==(const MobiusMap&, const MobiusMap&) = default;
};

// x -> [d_1; d_2, ..., d_k, x]; the identity for no digits.
MobiusMap leading_map(std::span<const Digit> digits);
// x -> [0; d_1, ..., d_k, x].
MobiusMap fraction_map(std::span<const Digit> digits);

// n-th Gauss-map branch on I(w): x -> (q_n x - p_n) / (-q_{n-1} x + p_{n-1}).
MobiusMap mobius_branch(const Word& w);

// [q_n^2, 4 q_n^2], which contains |psi'| on I(w).
RationalInterval derivative_range(const Word& w);

}  // namespace mlspec
