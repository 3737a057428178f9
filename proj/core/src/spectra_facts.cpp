#include "mlspec/spectra_facts.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <set>
#include <tuple>

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

using Key = std::tuple<Integer, Integer, Integer>;

MarkovTriple sorted_triple(Integer a, Integer b, Integer c) {
  std::array<Integer, 3> v{std::move(a), std::move(b), std::move(c)};
  std::sort(v.begin(), v.end());
  return {v[0], v[1], v[2]};
}

QuadraticSurd sqrt2() { return QuadraticSurd::sqrt(Rational(2)); }

bool contains(const SurdInterval& iv, const QuadraticSurd& s) { return iv.lo <= s && s <= iv.hi; }

SurdInterval add(const SurdInterval& x, const SurdInterval& y) { return {x.lo + y.lo, x.hi + y.hi}; }

struct DigitPair {
  Digit a;
  Digit b;
};

std::vector<DigitPair> pair_order() {
  std::vector<DigitPair> pairs;
  for (Digit a = 1; a <= 4; ++a) {
    for (Digit b = 1; b <= 4; ++b) pairs.push_back({a, b});
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const DigitPair& x, const DigitPair& y) {
    auto gap = [](const DigitPair& p) { return p.a > p.b ? p.a - p.b : p.b - p.a; };
    return std::tuple(gap(x), x.a, x.b) < std::tuple(gap(y), y.a, y.b);
  });
  return pairs;
}

}  // namespace

std::vector<MarkovTriple> markov_triples(const Integer& z_max) {
  if (z_max < 1) throw DomainError("z_max must be at least 1");
  std::set<Key> seen;
  std::vector<MarkovTriple> out;
  std::deque<MarkovTriple> queue{{1, 1, 1}};
  seen.insert({1, 1, 1});
  while (!queue.empty()) {
    MarkovTriple t = queue.front();
    queue.pop_front();
    out.push_back(t);
    Integer z1 = 3 * t.x * t.z - t.y;
    Integer z2 = 3 * t.y * t.z - t.x;
    for (MarkovTriple next : {sorted_triple(t.x, t.z, z1), sorted_triple(t.y, t.z, z2)}) {
      if (next.z > z_max) continue;
      if (seen.insert({next.x, next.y, next.z}).second) queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [](const MarkovTriple& a, const MarkovTriple& b) {
    return std::tie(a.z, a.x, a.y) < std::tie(b.z, b.x, b.y);
  });
  return out;
}

QuadraticSurd markov_value_for(const Integer& z) {
  if (z < 1) throw DomainError("z must be positive");
  return QuadraticSurd::sqrt(9 - Rational(4) / (z * z));
}

std::vector<QuadraticSurd> markov_spectrum_below_3(const Integer& z_max) {
  std::vector<QuadraticSurd> out;
  Integer last = 0;
  for (const MarkovTriple& t : markov_triples(z_max)) {
    if (t.z == last) continue;
    last = t.z;
    out.push_back(markov_value_for(t.z));
  }
  return out;
}

QuadraticSurd freiman_constant() {
  return QuadraticSurd(Integer(2221564096), Integer(283748), Integer(491993569), Integer(462));
}

Rational jarnik_lower(unsigned m) {
  if (m <= 8) throw DomainError("jarnik_lower requires m > 8");
  return 1 - 1 / (m * certified::log_lower(2));
}

QuadraticSurd c4_min() { return (sqrt2() - 1) / 2; }
QuadraticSurd c4_max() { return 2 * (sqrt2() - 1); }
QuadraticSurd hall_lo() { return sqrt2() - 1; }
QuadraticSurd hall_hi() { return 4 * (sqrt2() - 1); }

bool in_hall_interval(const QuadraticSurd& s) { return hall_lo() <= s && s <= hall_hi(); }

SurdInterval c4_hull(const Word& w) {
  if (w.empty()) return {c4_min(), c4_max()};
  MobiusMap f = fraction_map(w.digits());
  QuadraticSurd x1 = f((1 + sqrt2()) / 2);
  QuadraticSurd x2 = f(2 + 2 * sqrt2());
  if (x2 < x1) std::swap(x1, x2);
  return {x1, x2};
}

HallCoverage hall_coverage(unsigned depth, std::size_t cap) {
  if (depth < 1) throw DomainError("depth must be at least 1");
  HallCoverage report;
  report.depth = depth;
  report.target = {hall_lo(), hall_hi()};
  std::size_t total = 1;
  for (unsigned i = 0; i < depth; ++i) {
    if (total > cap / 16) throw ResourceError("hall_coverage: too many sums");
    total *= 16;
  }

  std::vector<SurdInterval> hulls;
  std::vector<Digit> digits(depth, 1);
  for (;;) {
    hulls.push_back(c4_hull(Word(digits)));
    std::size_t i = depth;
    while (i > 0 && digits[i - 1] == 4) digits[--i] = 1;
    if (i == 0) break;
    ++digits[i - 1];
  }
  report.cylinders = hulls.size();

  std::vector<SurdInterval> sums;
  sums.reserve(hulls.size() * hulls.size());
  for (const SurdInterval& a : hulls) {
    for (const SurdInterval& b : hulls) sums.push_back(add(a, b));
  }
  report.sums = sums.size();
  std::sort(sums.begin(), sums.end(),
            [](const SurdInterval& x, const SurdInterval& y) { return x.lo < y.lo; });

  report.extent = {sums.front().lo, sums.front().hi};
  QuadraticSurd reach = report.target.lo;
  for (const SurdInterval& iv : sums) {
    if (iv.lo > reach) report.gaps.push_back({reach, iv.lo});
    if (iv.hi > reach) reach = iv.hi;
    if (iv.hi > report.extent.hi) report.extent.hi = iv.hi;
  }
  if (reach < report.target.hi) report.gaps.push_back({reach, report.target.hi});
  report.covered = report.gaps.empty();
  return report;
}

HallSplit hall_decompose(const QuadraticSurd& s, unsigned depth, std::size_t node_cap) {
  if (!in_hall_interval(s)) throw DomainError("s lies outside the Hall interval");
  static const std::vector<DigitPair> order = pair_order();

  std::vector<Digit> a, b;
  std::vector<std::size_t> next{0};
  std::size_t nodes = 0;
  while (a.size() < depth) {
    std::size_t& k = next.back();
    bool advanced = false;
    for (; k < order.size(); ++k) {
      if (++nodes > node_cap) throw ResourceError("hall_decompose: node cap exceeded");
      a.push_back(order[k].a);
      b.push_back(order[k].b);
      if (contains(add(c4_hull(Word(a)), c4_hull(Word(b))), s)) {
        ++k;
        advanced = true;
        break;
      }
      a.pop_back();
      b.pop_back();
    }
    if (advanced) {
      next.push_back(0);
      continue;
    }
    next.pop_back();
    if (next.empty()) throw InconsistencyError("hall_decompose: search exhausted");
    a.pop_back();
    b.pop_back();
  }
  HallSplit split{Word(a), Word(b), {}};
  split.sum = add(c4_hull(split.alpha), c4_hull(split.beta));
  return split;
}

}  // namespace mlspec
