#pragma once

#include <compare>
#include <optional>
#include <string>

#include "mlspec/numeric.hpp"

namespace mlspec {

// T(x, 0) = x, T(x, n + 1) = exp(T(x, n)); kept symbolic.
struct TowerExpr {
  Rational base;
  unsigned long height = 0;

  std::string to_string() const;
};

// T(0, n) is stored as T(1, n - 1).
TowerExpr tower(const Rational& x, unsigned long n);
inline TowerExpr tower(unsigned long n) { return tower(Rational(1), n); }

// Decided by iterated certified logarithms of the rational side, doubling
// precision until resolved. Throws ResourceError past max_bits.
std::strong_ordering tower_compare(const TowerExpr& a, const Rational& b,
                                   unsigned max_bits = 4096);
std::strong_ordering tower_compare(const TowerExpr& a, const TowerExpr& b,
                                   unsigned max_bits = 4096);

// Rational enclosure when every intermediate level stays below `limit`.
std::optional<RationalInterval> tower_enclosure(const TowerExpr& a, unsigned bits = 128,
                                                const Rational& limit = Rational(1000000));

struct ModulusBound {
  Rational epsilon;
  Rational tau;                // epsilon / 40
  Integer c0;                  // ceil(1 / tau^2)
  Integer two_over_tau;        // ceil(2 / tau)
  Integer s0_limit;            // ceil((1 + 2/tau) log(4/epsilon)); s0 < s0_limit
  Rational log_c1_upper;       // log of 8 N^2 ceil(2/tau) (c0 - 1), N <= (T+1)^2 e^c0
  unsigned long index_bound;   // floor(1/epsilon) + 2 (s0_limit - 1) + 3
  unsigned long height;        // floor((161/epsilon) log(4/epsilon))
  bool small_t = true;         // floor(t) < 4 + 1/(epsilon log 2)
  bool c0_below_tower = false; // c0 < T(floor(1/epsilon))
  bool c1_below_tower = false; // c1 < T(c0, 2)
  bool index_within_height = false;
  TowerExpr denominator;       // delta > 1 / denominator

  bool chain_verified() const { return c0_below_tower && c1_below_tower && index_within_height; }
};

// Requires 0 < epsilon < 1/7.
ModulusBound modulus_delta_lower(const Rational& epsilon, const Rational& t);

}  // namespace mlspec
