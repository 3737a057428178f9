#pragma once

#include <cstddef>
#include <vector>

#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

// x <= y <= z with x^2 + y^2 + z^2 = 3xyz.
struct MarkovTriple {
  Integer x;
  Integer y;
  Integer z;

  bool satisfies_equation() const { return x * x + y * y + z * z == 3 * x * y * z; }
  friend bool operator==(const MarkovTriple&, const MarkovTriple&) = default;
};

// All triples with z <= z_max from the Vieta moves out of (1, 1, 1),
// sorted by z, then x.
std::vector<MarkovTriple> markov_triples(const Integer& z_max);

// sqrt(9 - 4/z^2) for each distinct z <= z_max, increasing.
std::vector<QuadraticSurd> markov_spectrum_below_3(const Integer& z_max);
QuadraticSurd markov_value_for(const Integer& z);

// (2221564096 + 283748 sqrt(462)) / 491993569
QuadraticSurd freiman_constant();

// 1 - 1/(m log 2), rounded down. Requires m > 8.
Rational jarnik_lower(unsigned m);

// C_4 is contained in [[0; 4, 1, 4, ...], [0; 1, 4, 1, ...]] = [(sqrt(2)-1)/2, 2(sqrt(2)-1)].
QuadraticSurd c4_min();
QuadraticSurd c4_max();
// [sqrt(2) - 1, 4(sqrt(2) - 1)]
QuadraticSurd hall_lo();
QuadraticSurd hall_hi();
bool in_hall_interval(const QuadraticSurd& s);

struct SurdInterval {
  QuadraticSurd lo;
  QuadraticSurd hi;
};

// Hull of the points of C_4 inside the cylinder of w: [0; w, X] for
// X in [(1 + sqrt(2))/2, 2 + 2 sqrt(2)].
SurdInterval c4_hull(const Word& w);

struct HallCoverage {
  unsigned depth = 0;
  std::size_t cylinders = 0;  // per factor
  std::size_t sums = 0;
  SurdInterval target;
  SurdInterval extent;        // hull of the union of sums
  std::vector<SurdInterval> gaps;
  bool covered = false;
};

// Union of all sums c4_hull(a) + c4_hull(b), |a| = |b| = depth, swept
// against the target interval. Throws ResourceError past cap sums.
HallCoverage hall_coverage(unsigned depth, std::size_t cap = std::size_t{1} << 24);

struct HallSplit {
  Word alpha;
  Word beta;
  SurdInterval sum;  // c4_hull(alpha) + c4_hull(beta), contains s
};

// Digit pairs tried by |a - b|, then a, then b; backtracks when s leaves
// the hull sum. Throws DomainError outside the Hall interval.
HallSplit hall_decompose(const QuadraticSurd& s, unsigned depth,
                         std::size_t node_cap = 1000000);

}  // namespace mlspec
