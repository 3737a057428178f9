// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Usage: mlspec_acceptance <path-to-mlspec-cli>

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mlspec/admissible.hpp"
#include "mlspec/dimension.hpp"
#include "mlspec/exact_order.hpp"
#include "mlspec/spectra_facts.hpp"
#include "mlspec/symbolic.hpp"
#include "mlspec/tower.hpp"
#include "oracles.hpp"
#include "property_checks.hpp"

using namespace mlspec;

namespace {

// Tolerances and limits.
constexpr double kConstTol = 1e-12;
constexpr double kFreimanTol = 1e-9;
constexpr double kFreimanDecimal = 4.52782956616;
constexpr double kC2Value = 0.53128;
const Rational kC2MaxWidth(1, 5);
const Rational kExactOrderTol(1, 10000);
constexpr unsigned kC2Refinement = 12;
constexpr unsigned kSqrt12Effort = 14;
constexpr unsigned kLadderEffort = 12;
constexpr unsigned kEmptyMaxR = 8;
constexpr std::size_t kPropertyWords = 1000;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome()> run;
};

QuadraticSurd sqrt_of(long v) { return QuadraticSurd::sqrt(Rational(v)); }

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

Outcome classical_constants() {
  std::vector<QuadraticSurd> k = markov_spectrum_below_3(Integer(5));
  std::array<QuadraticSurd, 3> want{sqrt_of(5), 2 * sqrt_of(2), sqrt_of(221) / 5};
  std::array<double, 3> roots{std::sqrt(5.0), std::sqrt(8.0), std::sqrt(221.0) / 5};
  bool ok = k.size() == 3;
  for (std::size_t i = 0; ok && i < 3; ++i) {
    ok = k[i] == want[i] && std::fabs(k[i].to_double() - roots[i]) <= kConstTol;
  }
  double f = freiman_constant().to_double();
  ok = ok && std::fabs(f - kFreimanDecimal) <= kFreimanTol;
  return {ok, "F = " + freiman_constant().to_decimal(12)};
}

Outcome periodic_values() {
  bool ok = markov_value_periodic(PeriodicWord(Word{1})) == sqrt_of(5) &&
            markov_value_periodic(PeriodicWord(Word{2})) == 2 * sqrt_of(2) &&
            markov_value_periodic(PeriodicWord(Word{1, 2})) == sqrt_of(12);
  QuadraticSurd ones = periodic_value(PeriodicWord(Word{1}));
  QuadraticSurd a = 2 + ones;
  QuadraticSurd b = a.reciprocal();
  ok = ok && a + b == QuadraticSurd(3);
  return {ok, "[2;1,1,...] + [0;2,1,1,...] = " + (a + b).to_string()};
}

Outcome c2_dimension() {
  std::vector<Word> blocks{Word{1}, Word{2}};
  DimensionBracket b4 = cantor_bracket(blocks, 4);
  DimensionBracket b8 = cantor_bracket(blocks, 8);
  DimensionBracket b12 = cantor_bracket(blocks, kC2Refinement);
  Rational value(static_cast<long>(kC2Value * 100000), 100000);
  bool ok = b12.contains(value) && b12.width() <= kC2MaxWidth;
  ok = ok && b4.lo <= b8.lo && b8.hi <= b4.hi && b8.lo <= b12.lo && b12.hi <= b8.hi;
  ok = ok && b8.width() < b4.width() && b12.width() < b8.width();
  return {ok, "[" + fmt(b12.lo.get_d()) + ", " + fmt(b12.hi.get_d()) + "], widths " +
                  fmt(b4.width().get_d()) + " > " + fmt(b8.width().get_d()) + " > " +
                  fmt(b12.width().get_d())};
}

Outcome hall() {
  HallCoverage c = hall_coverage(4);
  bool ok = c.covered && c.gaps.empty() && c.target.lo == hall_lo() && c.target.hi == hall_hi();
  return {ok, std::to_string(c.sums) + " sums, " + std::to_string(c.gaps.size()) + " gaps"};
}

Outcome properties() {
  std::vector<props::PropertyReport> reports = props::run_all(20240601, kPropertyWords);
  bool ok = true;
  std::string detail;
  for (const props::PropertyReport& r : reports) {
    ok = ok && r.cases >= kPropertyWords && r.violations == 0;
    if (!detail.empty()) detail += ", ";
    detail += r.name + " " + std::to_string(r.violations) + "/" + std::to_string(r.cases);
  }
  return {ok, detail};
}

Outcome spectrum_brackets() {
  DimensionBracket top = spectrum_dimension(sqrt_of(12), kSqrt12Effort);
  bool ok = top.lo == 1 && top.hi == 1;
  std::string detail = "sqrt(12): [" + to_string(top.lo) + ", " + to_string(top.hi) + "]";
  Rational prev(2);
  for (long m = 1; m <= 4; ++m) {
    QuadraticSurd t = 3 + QuadraticSurd(Rational(1, 1L << m));
    DimensionBracket b = spectrum_dimension(t, kLadderEffort);
    ok = ok && b.lo > 0 && b.lo <= b.hi && b.lo <= prev;
    prev = b.lo;
    detail += "; 3+2^-" + std::to_string(m) + ": lo " + fmt(b.lo.get_d());
  }
  for (unsigned r = 1; r <= kEmptyMaxR; ++r) {
    ok = ok && enumerate(QuadraticSurd(2), r, FamilyMode::Over).count() == 0;
  }
  return {ok, detail};
}

Outcome exact_order() {
  ExactOrderReport r = exact_order_verify(exact_order_word(Rational(15, 2), 4), kExactOrderTol);
  bool ok = r.pass && r.others_below && !r.rows.empty() && r.rows.back().distance <= kExactOrderTol;
  return {ok, "distance " + fmt(r.rows.empty() ? -1 : r.rows.back().distance.get_d()) +
                  ", others <= " + fmt(r.others_max_upper.get_d())};
}

Outcome tower_modulus() {
  Rational two16(65536), five6 = pow(Rational(5), 6);
  bool ok = tower_compare(tower(4), two16) == std::strong_ordering::greater && two16 > five6;
  for (unsigned long n = 4; n <= 20; ++n) {
    ok = ok && tower_compare(tower(n), pow(Rational(n + 1), 6)) != std::strong_ordering::less;
  }
  ModulusBound m = modulus_delta_lower(Rational(1, 10), Rational(15, 2));
  long expected = static_cast<long>(std::floor(1610 * std::log(40.0L)));
  ok = ok && expected == oracle::kHeightTenth && static_cast<long>(m.height) == expected;
  return {ok, "height " + std::to_string(m.height)};
}

std::string run_capture(const std::string& cmd, int& status) {
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  status = pclose(p);
  return out;
}

Outcome determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  int s1 = 0, s8 = 0;
  std::string base = "'" + cli + "' enum --t 'sqrt(12)' --r 6";
  std::string one = run_capture(base + " --workers 1 2>/dev/null", s1);
  std::string eight = run_capture(base + " --workers 8 2>/dev/null", s8);
  bool ok = s1 == 0 && s8 == 0 && !one.empty() && one == eight;
  std::size_t lines = static_cast<std::size_t>(std::count(one.begin(), one.end(), '\n'));
  return {ok, std::to_string(lines) + " lines, " + std::to_string(one.size()) + " bytes"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli = argc > 1 ? argv[1] : "";
  std::vector<Criterion> criteria{
      {1, "classical constants", 1, classical_constants},
      {2, "periodic Markov values", 1, periodic_values},
      {3, "C2 dimension bracket", 30, c2_dimension},
      {4, "Hall coverage", 60, hall},
      {5, "continued-fraction properties", 30, properties},
      {6, "spectrum brackets", 300, spectrum_brackets},
      {7, "exact-order construction", 10, exact_order},
      {8, "tower and modulus", 1, tower_modulus},
      {9, "enumeration determinism", 60, [&] { return determinism(cli); }},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = secs < c.limit_seconds;
    bool pass = o.pass && in_time;
    if (!pass) ++failures;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail
              << " [" << fmt(secs) << " s, limit " << c.limit_seconds << " s"
              << (in_time ? "" : ", over limit") << "]\n";
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << "\n";
  return failures == 0 ? 0 : 1;
}
