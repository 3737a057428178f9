#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

// Bi-infinite or one-sided repetition of a block. Stores the primitive root
// of the block it was built from; index 0 is the block's first digit.
class PeriodicWord {
 public:
  explicit PeriodicWord(const Word& block);

  const Word& period() const { return period_; }
  std::size_t length() const { return period_.size(); }
  // Block read from position i (0-based, taken mod length).
  Word rotation(std::size_t i) const;

  friend bool operator==(const PeriodicWord&, const PeriodicWord&) = default;

 private:
  Word period_;
};

// Coefficients (A, B, C) of the fixed-point quadratic A x^2 + B x + C whose
// positive root is [0; w, w, ...]: q_{n-1}, q_n - p_{n-1}, -p_n.
std::array<Integer, 3> fixed_point_quadratic(const Word& w);

// [0; p, p, p, ...]
QuadraticSurd periodic_value(const PeriodicWord& p);

// alpha_i + beta_i for each position of one period of ...ppp...
std::vector<QuadraticSurd> periodic_profile(const PeriodicWord& p);

QuadraticSurd markov_value_periodic(const PeriodicWord& p);

// Lagrange value of (tail_left)^inf head (tail_right)^inf.
QuadraticSurd lagrange_value_eventually_periodic(const Word& head, const PeriodicWord& tail_left,
                                                 const PeriodicWord& tail_right);

// Bounds on [b_1; b_2, ...] over infinite sequences with digits in [1, T]:
// min = [1; T, 1, T, ...], max = [T; 1, T, 1, ...].
struct ExtremalTails {
  Digit cap = 0;
  QuadraticSurd min_tail;
  QuadraticSurd max_tail;
};

ExtremalTails extremal_tails(Digit cap);

// Supremum of m over all of {1..T}^Z, namely sqrt(T^2 + 4T).
QuadraticSurd full_shift_markov_bound(Digit cap);

struct WindowBound {
  std::size_t j = 0;
  QuadraticSurd lower;
  QuadraticSurd upper;
};

// Exact range of alpha_j + beta_j (j is 1-based) over all bi-infinite
// extensions of `word` with digits in [1, T].
WindowBound window_bounds(const Word& word, std::size_t j, Digit cap);

// All positions at once, in O(n) surd operations.
std::vector<WindowBound> window_bounds_all(const Word& word, Digit cap);

struct AffinityCertificate {
  bool non_essentially_affine = false;
  std::size_t first = 0;
  std::size_t second = 0;
  std::array<Integer, 3> first_quadratic;
  std::array<Integer, 3> second_quadratic;
};

// True iff two fixed-point quadratics of B are not proportional over Q.
AffinityCertificate nonessentially_affine_certificate(const std::vector<Word>& blocks);

// Alphabet cap floor(t) for t >= 3.
Digit digit_cap(const QuadraticSurd& t);

// Throws DomainError when some word of `blocks` is empty or a prefix of another.
void require_prefix_free(const std::vector<Word>& blocks);

}  // namespace mlspec
