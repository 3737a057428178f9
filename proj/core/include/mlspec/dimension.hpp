#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mlspec/admissible.hpp"
#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

enum class PressureSide { Lower, Upper };

struct PressureOptions {
  Rational tolerance = Rational(1, 1000000);
  unsigned precision_bits = 96;
};

// Root of sum (s/2)^d = 1 (lower, returned rounded down) or of
// sum min(1, 2s)^d = 1 (upper, rounded up, clipped to 1).
Rational pressure_root(const std::vector<Word>& blocks, PressureSide side,
                       const PressureOptions& options = {});
Rational pressure_root_from_sizes(const std::vector<Rational>& sizes, PressureSide side,
                                  const PressureOptions& options = {});

struct Provenance {
  std::string method;
  unsigned depth = 0;
  std::optional<Rational> slack;
  std::size_t family_size = 0;
  std::string notes;
};

struct DimensionBracket {
  Rational lo;
  Rational hi;
  Provenance provenance;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// All n-fold concatenations of blocks, in lexicographic block order.
std::vector<Word> word_power(const std::vector<Word>& blocks, unsigned n, std::size_t cap);

struct CantorOptions {
  std::size_t cap = std::size_t{1} << 22;
  PressureOptions pressure;
};

DimensionBracket cantor_bracket(const std::vector<Word>& blocks, unsigned n,
                                const CantorOptions& options = {});

struct UpperEstimate {
  Rational value;
  unsigned level = 0;  // level attaining the minimum
  std::size_t count = 0;
  Digit alphabet = 0;
};

// min(1, min over k <= m of (2/k) log(T^2 N_over(t, k))), T the effective
// alphabet; 0 when the over-family is empty.
UpperEstimate d_upper(const QuadraticSurd& t, unsigned m, const EnumerationOptions& options = {});

// Free concatenations of `blocks` have every alpha_n + beta_n bounded by an
// exact rational: each neighbour starts a continued-fraction value inside the
// hull of [c_1; ..., c_k, Y] over blocks c and Y in [1, T + 1].
struct ShiftCertificate {
  bool certified = false;
  Rational max_bound;
  std::size_t block = 0;
  std::size_t position = 0;
};

ShiftCertificate certify_shift(const std::vector<Word>& blocks, const QuadraticSurd& t);

// Greedy, order-preserving selection of a prefix-free subfamily whose free
// shift stays certified at t.
std::vector<Word> free_subfamily(const std::vector<Word>& pool, const QuadraticSurd& t);

// 2 1^(2k) 2 and 2 1^(2k+2) 2 for the smallest k with 3 + 2^-k <= t and the
// next three values of k.
std::vector<Word> witness_seeds(const QuadraticSurd& t);

struct LowerOptions {
  EnumerationOptions enumeration;
  std::size_t pool_cap = 4096;
  // Also try t' = 3 + 2^-k < t for k = 1..ladder_steps and keep the best.
  unsigned ladder_steps = 10;
  // and t' = 3 + j / grid_steps < t for 0 < j < grid_steps.
  unsigned grid_steps = 32;
  PressureOptions pressure;
};

struct LowerEstimate {
  Rational value;
  Rational pressure;
  std::vector<Word> witness;
  std::size_t pool_size = 0;
  std::string certificate;
  // The witness shift is certified below this value (<= t).
  QuadraticSurd certified_at;
};

LowerEstimate d_lower(const QuadraticSurd& t, unsigned r, const LowerOptions& options = {});

DimensionBracket spectrum_dimension(const QuadraticSurd& t, unsigned effort,
                                    const LowerOptions& options = {});

}  // namespace mlspec
