#include "mlspec/dimension.hpp"

#include <mpfr.h>

#include <algorithm>
#include <numeric>

#include "mlspec/errors.hpp"
#include "mlspec/symbolic.hpp"

namespace mlspec {

namespace {

class MpfrVec {
 public:
  MpfrVec(std::size_t n, unsigned bits) : v_(n) {
    for (auto& x : v_) mpfr_init2(x, bits);
  }
  ~MpfrVec() {
    for (auto& x : v_) mpfr_clear(x);
  }
  MpfrVec(const MpfrVec&) = delete;
  MpfrVec& operator=(const MpfrVec&) = delete;
  mpfr_ptr operator[](std::size_t i) { return v_[i]; }
  std::size_t size() const { return v_.size(); }

 private:
  std::vector<mpfr_t> v_;
};

// Certified comparison of sum exp(d * L_i) with 1: +1 if > 1, -1 if < 1,
// 0 if undecided at this precision.
int pressure_sign(MpfrVec& lo_logs, MpfrVec& hi_logs, const Rational& d, unsigned bits) {
  mpfr_t dd, term, sum;
  mpfr_inits2(bits, dd, term, sum, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_q(dd, d.get_mpq_t(), MPFR_RNDN);  // dyadic, exact
  int result = 0;
  mpfr_set_ui(sum, 0, MPFR_RNDD);
  for (std::size_t i = 0; i < lo_logs.size(); ++i) {
    mpfr_mul(term, dd, lo_logs[i], MPFR_RNDD);
    mpfr_exp(term, term, MPFR_RNDD);
    mpfr_add(sum, sum, term, MPFR_RNDD);
  }
  if (mpfr_cmp_ui(sum, 1) > 0) {
    result = 1;
  } else {
    mpfr_set_ui(sum, 0, MPFR_RNDU);
    for (std::size_t i = 0; i < hi_logs.size(); ++i) {
      mpfr_mul(term, dd, hi_logs[i], MPFR_RNDU);
      mpfr_exp(term, term, MPFR_RNDU);
      mpfr_add(sum, sum, term, MPFR_RNDU);
    }
    if (mpfr_cmp_ui(sum, 1) < 0) result = -1;
  }
  mpfr_clears(dd, term, sum, static_cast<mpfr_ptr>(nullptr));
  return result;
}

}  // namespace

Rational pressure_root_from_sizes(const std::vector<Rational>& sizes, PressureSide side,
                                  const PressureOptions& options) {
  if (sizes.size() < 2) throw DomainError("pressure equation needs at least two blocks");
  if (options.tolerance <= 0) throw DomainError("tolerance must be positive");
  unsigned bits = std::max(64u, options.precision_bits);
  std::size_t n = sizes.size();
  MpfrVec lo(n, bits), hi(n, bits);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational& s = sizes[i];
    if (s <= 0 || s >= 1) throw DomainError("block sizes must lie in (0, 1)");
    Rational scaled = side == PressureSide::Lower ? Rational(s / 2) : Rational(s * 2);
    if (side == PressureSide::Upper && scaled >= 1) return 1;  // a term stays 1 for all d
    mpfr_set_q(lo[i], scaled.get_mpq_t(), MPFR_RNDD);
    mpfr_log(lo[i], lo[i], MPFR_RNDD);
    mpfr_set_q(hi[i], scaled.get_mpq_t(), MPFR_RNDU);
    mpfr_log(hi[i], hi[i], MPFR_RNDU);
  }
  Rational a = 0, b = 1;
  int at_one = pressure_sign(lo, hi, b, bits);
  if (at_one > 0) return 1;
  if (at_one == 0 && side == PressureSide::Upper) return 1;
  while (b - a > options.tolerance) {
    Rational mid = (a + b) / 2;
    int s = pressure_sign(lo, hi, mid, bits);
    if (s > 0) {
      a = mid;
    } else if (s < 0) {
      b = mid;
    } else {
      break;
    }
  }
  return side == PressureSide::Lower ? a : b;
}

Rational pressure_root(const std::vector<Word>& blocks, PressureSide side,
                       const PressureOptions& options) {
  if (blocks.size() < 2) throw DomainError("pressure equation needs at least two blocks");
  require_prefix_free(blocks);
  std::vector<Rational> sizes;
  sizes.reserve(blocks.size());
  for (const Word& w : blocks) sizes.push_back(cylinder_size(w));
  return pressure_root_from_sizes(sizes, side, options);
}

std::vector<Word> word_power(const std::vector<Word>& blocks, unsigned n, std::size_t cap) {
  if (n < 1) throw DomainError("power must be >= 1");
  std::size_t total = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (blocks.size() > 1 && total > cap / blocks.size()) {
      throw ResourceError("block power exceeds the cap of " + std::to_string(cap) + " words");
    }
    total *= blocks.size();
  }
  if (total > cap) throw ResourceError("block power exceeds the cap of " + std::to_string(cap) + " words");
  std::vector<Word> cur{Word()};
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Word> next;
    next.reserve(cur.size() * blocks.size());
    for (const Word& w : cur) {
      for (const Word& b : blocks) next.push_back(w + b);
    }
    cur.swap(next);
  }
  return cur;
}

DimensionBracket cantor_bracket(const std::vector<Word>& blocks, unsigned n,
                                const CantorOptions& options) {
  if (blocks.size() < 2) throw DomainError("Cantor set needs at least two blocks");
  require_prefix_free(blocks);
  std::vector<Word> power_family = word_power(blocks, n, options.cap);
  std::vector<Rational> sizes;
  sizes.reserve(power_family.size());
  for (const Word& w : power_family) sizes.push_back(cylinder_size(w));
  DimensionBracket b;
  b.lo = pressure_root_from_sizes(sizes, PressureSide::Lower, options.pressure);
  b.hi = pressure_root_from_sizes(sizes, PressureSide::Upper, options.pressure);
  b.provenance.method = "pressure bracket on block power, distortion 2";
  b.provenance.depth = n;
  b.provenance.family_size = power_family.size();
  return b;
}

UpperEstimate d_upper(const QuadraticSurd& t, unsigned m, const EnumerationOptions& options) {
  if (m < 1) throw DomainError("d_upper needs m >= 1");
  UpperEstimate est;
  est.alphabet = admissible_alphabet(t);
  est.value = 1;
  est.level = m;
  if (est.alphabet == 0) {
    est.value = 0;
    return est;
  }
  EnumerationOptions opt = options;
  opt.classify = false;
  Integer T2 = Integer(est.alphabet) * est.alphabet;
  for (unsigned k = 1; k <= m; ++k) {
    std::size_t n = enumerate(t, k, FamilyMode::Over, opt).count();
    if (n == 0) {
      est.value = 0;
      est.level = k;
      est.count = 0;
      return est;
    }
    Rational bound = 2 * certified::log_upper(Rational(Integer(T2 * n))) / k;
    if (bound < est.value) {
      est.value = bound;
      est.level = k;
      est.count = n;
    }
    if (k == m && est.count == 0) est.count = n;
  }
  return est;
}

namespace {

class ShiftChecker {
 public:
  ShiftChecker(const std::vector<Word>& pool, const QuadraticSurd& t)
      : t_(t), tenc_(t.enclosure(160)) {
    Digit T = 1;
    for (const Word& w : pool) T = std::max(T, w.max_digit());
    RationalInterval hull{1, Rational(T + 1)};
    blocks_.reserve(pool.size());
    for (const Word& w : pool) {
      if (w.empty()) throw DomainError("empty block");
      Block b;
      b.word = w;
      std::size_t n = w.size();
      for (std::size_t i = 0; i < n; ++i) {
        b.suffix.push_back(leading_map(w.digits().subspan(i)));
        std::vector<Digit> left(w.digits().begin(),
                                w.digits().begin() + static_cast<std::ptrdiff_t>(i));
        std::reverse(left.begin(), left.end());
        b.prefix.push_back(leading_map(left));
      }
      b.right = leading_map(w.digits()).image(hull);
      b.left = leading_map(transpose(w).digits()).image(hull);
      blocks_.push_back(std::move(b));
    }
  }

  const Word& word(std::size_t i) const { return blocks_[i].word; }

  // Upper bound of alpha_i + beta_i inside block b when the following block
  // starts a value in `right` and the preceding blocks, read backwards, a
  // value in `left`. Both maps are monotone on [1, inf), so endpoints suffice.
  Rational bound(std::size_t b, std::size_t i, const RationalInterval& right,
                 const RationalInterval& left) const {
    const MobiusMap& s = blocks_[b].suffix[i];
    const MobiusMap& p = blocks_[b].prefix[i];
    Rational a1 = s(right.lo), a2 = s(right.hi);
    Rational b1 = 1 / p(left.lo), b2 = 1 / p(left.hi);
    return (a1 < a2 ? a2 : a1) + (b1 < b2 ? b2 : b1);
  }

  bool within(const Rational& v) const {
    if (v <= tenc_.lo) return true;
    if (v > tenc_.hi) return false;
    return QuadraticSurd(v) <= t_;
  }

  bool block_ok(std::size_t b, const RationalInterval& right, const RationalInterval& left) const {
    for (std::size_t i = 0; i < word(b).size(); ++i) {
      if (!within(bound(b, i, right, left))) return false;
    }
    return true;
  }

  std::vector<std::size_t> greedy() const {
    std::vector<std::size_t> chosen;
    RationalInterval right, left;
    for (std::size_t c = 0; c < blocks_.size(); ++c) {
      bool clash = false;
      for (std::size_t s : chosen) {
        if (word(s).is_prefix_of(word(c)) || word(c).is_prefix_of(word(s))) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      RationalInterval r2 = blocks_[c].right, l2 = blocks_[c].left;
      if (!chosen.empty()) {
        r2 = join(right, r2);
        l2 = join(left, l2);
      }
      if (!block_ok(c, r2, l2)) continue;
      bool grown = chosen.empty() || r2.lo != right.lo || r2.hi != right.hi ||
                   l2.lo != left.lo || l2.hi != left.hi;
      bool ok = true;
      if (grown) {
        for (std::size_t k = 0; k < chosen.size() && ok; ++k) ok = block_ok(chosen[k], r2, l2);
      }
      if (!ok) continue;
      chosen.push_back(c);
      right = r2;
      left = l2;
    }
    return chosen;
  }

  ShiftCertificate check_all() const {
    ShiftCertificate cert;
    RationalInterval right = blocks_[0].right, left = blocks_[0].left;
    for (const Block& b : blocks_) {
      right = join(right, b.right);
      left = join(left, b.left);
    }
    bool first = true;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
      for (std::size_t i = 0; i < word(b).size(); ++i) {
        Rational v = bound(b, i, right, left);
        if (first || v > cert.max_bound) {
          cert.max_bound = v;
          cert.block = b;
          cert.position = i + 1;
          first = false;
        }
      }
    }
    cert.certified = !first && within(cert.max_bound);
    return cert;
  }

 private:
  struct Block {
    Word word;
    std::vector<MobiusMap> suffix;  // x -> [b_i; ..., b_n, x]
    std::vector<MobiusMap> prefix;  // x -> [b_{i-1}; ..., b_1, x]
    RationalInterval right;         // [b_1; ..., b_n, Y], Y in [1, T + 1]
    RationalInterval left;          // [b_n; ..., b_1, Y], Y in [1, T + 1]
  };

  static RationalInterval join(const RationalInterval& x, const RationalInterval& y) {
    return {x.lo < y.lo ? x.lo : y.lo, x.hi < y.hi ? y.hi : x.hi};
  }

  QuadraticSurd t_;
  RationalInterval tenc_;
  std::vector<Block> blocks_;
};

}  // namespace

ShiftCertificate certify_shift(const std::vector<Word>& blocks, const QuadraticSurd& t) {
  if (blocks.empty()) throw DomainError("empty block family");
  return ShiftChecker(blocks, t).check_all();
}

std::vector<Word> free_subfamily(const std::vector<Word>& pool, const QuadraticSurd& t) {
  if (pool.empty()) return {};
  ShiftChecker checker(pool, t);
  std::vector<Word> out;
  for (std::size_t i : checker.greedy()) out.push_back(pool[i]);
  return out;
}

std::vector<Word> witness_seeds(const QuadraticSurd& t) {
  std::vector<Word> seeds;
  unsigned k0 = 0;
  for (unsigned k = 1; k <= 60; ++k) {
    if (QuadraticSurd(3 + Rational(1, Integer(1) << k)) <= t) {
      k0 = k;
      break;
    }
  }
  if (k0 == 0) return seeds;
  for (unsigned k = k0; k <= k0 + 4; ++k) {
    Word w{2};
    w += Word::repeat(1, 2 * k);
    w += Word{2};
    seeds.push_back(std::move(w));
  }
  return seeds;
}

namespace {

LowerEstimate lower_at(const QuadraticSurd& t, unsigned r, const LowerOptions& options) {
  LowerEstimate est;
  Digit T = admissible_alphabet(t);
  bool full = T > 0 && full_shift_markov_bound(T) <= t;
  EnumerationOptions opt = options.enumeration;
  opt.classify = false;
  AdmissibleFamily under = enumerate(t, r, FamilyMode::Under, opt);
  if (full) {
    est.witness = std::move(under.words);
    est.pool_size = est.witness.size();
    est.certificate = "full shift on digits 1.." + std::to_string(T);
  } else {
    std::vector<Word> pool = witness_seeds(t);
    pool.insert(pool.end(), under.words.begin(), under.words.end());
    std::vector<std::pair<Integer, Word>> keyed;
    keyed.reserve(pool.size());
    for (Word& w : pool) keyed.emplace_back(inverse_cylinder_size(w), std::move(w));
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first < y.first;
      return x.second < y.second;
    });
    keyed.erase(std::unique(keyed.begin(), keyed.end(),
                            [](const auto& x, const auto& y) { return x.second == y.second; }),
                keyed.end());
    if (keyed.size() > options.pool_cap) keyed.resize(options.pool_cap);
    pool.clear();
    for (auto& kw : keyed) pool.push_back(std::move(kw.second));
    est.pool_size = pool.size();
    est.witness = free_subfamily(pool, t);
    est.certificate = "free shift certified with neighbour hulls";
  }
  if (est.witness.size() < 2) {
    est.value = 0;
    est.pressure = 0;
    return est;
  }
  est.pressure = pressure_root(est.witness, PressureSide::Lower, options.pressure);
  est.value = std::min(Rational(1), Rational(2 * est.pressure));
  return est;
}

}  // namespace

LowerEstimate d_lower(const QuadraticSurd& t, unsigned r, const LowerOptions& options) {
  if (t <= QuadraticSurd(3)) throw DomainError("d_lower needs t > 3");
  LowerEstimate best = lower_at(t, r, options);
  best.certified_at = t;
  // d is nondecreasing, so a witness certified at t' <= t also bounds d(t).
  std::vector<Rational> rungs;
  for (unsigned k = 1; k <= options.ladder_steps; ++k) rungs.push_back(3 + Rational(1, Integer(1) << k));
  for (unsigned j = 1; j < options.grid_steps; ++j) rungs.push_back(3 + Rational(j, options.grid_steps));
  std::sort(rungs.begin(), rungs.end(), [](const Rational& a, const Rational& b) { return a > b; });
  rungs.erase(std::unique(rungs.begin(), rungs.end()), rungs.end());
  for (const Rational& x : rungs) {
    if (best.value >= 1) break;
    QuadraticSurd rung(x);
    if (rung >= t) continue;
    LowerEstimate est = lower_at(rung, r, options);
    if (est.value > best.value) {
      best = std::move(est);
      best.certified_at = rung;
    }
  }
  return best;
}

DimensionBracket spectrum_dimension(const QuadraticSurd& t, unsigned effort,
                                    const LowerOptions& options) {
  if (t <= QuadraticSurd(3)) throw DomainError("spectrum dimension needs t > 3");
  if (effort < 1) throw DomainError("effort must be >= 1");
  LowerEstimate lower = d_lower(t, effort, options);
  UpperEstimate upper = d_upper(t, effort, options.enumeration);
  if (lower.value > upper.value) {
    throw InconsistencyError("dimension bracket crossed at t = " + t.to_string() + ": lo " +
                             to_string(lower.value) + " > hi " + to_string(upper.value));
  }
  DimensionBracket b;
  b.lo = lower.value;
  b.hi = upper.value;
  b.provenance.method = "lower: " + lower.certificate + " at " +
                        lower.certified_at.to_string() + "; upper: over-count at level " +
                        std::to_string(upper.level);
  b.provenance.depth = effort;
  b.provenance.slack = options.enumeration.slack;
  b.provenance.family_size = lower.witness.size();
  return b;
}

}  // namespace mlspec
