#include "mlspec/symbolic.hpp"

#include <algorithm>

#include "mlspec/errors.hpp"

namespace mlspec {

PeriodicWord::PeriodicWord(const Word& block) {
  if (block.empty()) throw DomainError("periodic word needs a nonempty period");
  std::size_t n = block.size();
  for (std::size_t len = 1; len <= n; ++len) {
    if (n % len != 0) continue;
    bool ok = true;
    for (std::size_t i = len; i < n && ok; ++i) ok = block[i] == block[i % len];
    if (ok) {
      period_ = block.prefix(len);
      return;
    }
  }
}

Word PeriodicWord::rotation(std::size_t i) const {
  std::size_t n = period_.size();
  std::vector<Digit> d(n);
  for (std::size_t k = 0; k < n; ++k) d[k] = period_[(i + k) % n];
  return Word(std::move(d));
}

std::array<Integer, 3> fixed_point_quadratic(const Word& w) {
  if (w.empty()) throw DomainError("fixed point of the empty word");
  ConvergentMatrix m = continuant(w);
  return {m.q_prev, Integer(m.q - m.p_prev), Integer(-m.p)};
}

QuadraticSurd periodic_value(const PeriodicWord& p) {
  auto [A, B, C] = fixed_point_quadratic(p.period());
  return surd_from_quadratic(A, B, C);
}

std::vector<QuadraticSurd> periodic_profile(const PeriodicWord& p) {
  std::size_t n = p.length();
  std::vector<QuadraticSurd> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    QuadraticSurd alpha = QuadraticSurd(Rational(p.period()[i])) +
                          periodic_value(PeriodicWord(p.rotation(i + 1)));
    QuadraticSurd beta = periodic_value(PeriodicWord(transpose(p.rotation(i))));
    out.push_back(alpha + beta);
  }
  return out;
}

QuadraticSurd markov_value_periodic(const PeriodicWord& p) {
  std::vector<QuadraticSurd> profile = periodic_profile(p);
  return *std::max_element(profile.begin(), profile.end());
}

QuadraticSurd lagrange_value_eventually_periodic(const Word& /*head*/,
                                                 const PeriodicWord& /*tail_left*/,
                                                 const PeriodicWord& tail_right) {
  // Along the right tail beta_n converges to the reversed periodic value, so
  // the limsup is the periodic Markov value of the right tail.
  return markov_value_periodic(tail_right);
}

ExtremalTails extremal_tails(Digit cap) {
  if (cap == 0) throw DomainError("digit cap must be positive");
  Integer T = cap;
  Integer disc = T * T + 4 * T;
  return {cap, QuadraticSurd(T, 1, Integer(2 * T), disc), QuadraticSurd(T, 1, 2, disc)};
}

QuadraticSurd full_shift_markov_bound(Digit cap) {
  if (cap == 0) throw DomainError("digit cap must be positive");
  Integer T = cap;
  return QuadraticSurd(0, 1, 1, Integer(T * T + 4 * T));
}

std::vector<WindowBound> window_bounds_all(const Word& word, Digit cap) {
  ExtremalTails tails = extremal_tails(cap);
  std::size_t n = word.size();
  std::vector<QuadraticSurd> alo(n + 1), ahi(n + 1), blo(n), bhi(n);
  alo[n] = tails.min_tail;
  ahi[n] = tails.max_tail;
  for (std::size_t p = n; p-- > 0;) {
    QuadraticSurd a(Rational(word[p]));
    alo[p] = a + ahi[p + 1].reciprocal();
    ahi[p] = a + alo[p + 1].reciprocal();
  }
  std::vector<WindowBound> out;
  out.reserve(n);
  for (std::size_t p = 0; p < n; ++p) {
    if (p == 0) {
      blo[0] = tails.max_tail.reciprocal();
      bhi[0] = tails.min_tail.reciprocal();
    } else {
      QuadraticSurd a(Rational(word[p - 1]));
      blo[p] = (a + bhi[p - 1]).reciprocal();
      bhi[p] = (a + blo[p - 1]).reciprocal();
    }
    out.push_back({p + 1, alo[p] + blo[p], ahi[p] + bhi[p]});
  }
  return out;
}

WindowBound window_bounds(const Word& word, std::size_t j, Digit cap) {
  if (j < 1 || j > word.size()) throw DomainError("window position out of range");
  return window_bounds_all(word, cap)[j - 1];
}

void require_prefix_free(const std::vector<Word>& blocks) {
  std::vector<Word> sorted = blocks;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].empty()) throw DomainError("block family contains the empty word");
    if (i + 1 < sorted.size() && sorted[i].is_prefix_of(sorted[i + 1])) {
      throw DomainError("block " + sorted[i].to_string() + " is a prefix of " +
                        sorted[i + 1].to_string());
    }
  }
}

AffinityCertificate nonessentially_affine_certificate(const std::vector<Word>& blocks) {
  if (blocks.size() < 2) throw DomainError("need at least two blocks");
  require_prefix_free(blocks);
  std::vector<std::array<Integer, 3>> quads;
  quads.reserve(blocks.size());
  for (const Word& w : blocks) quads.push_back(fixed_point_quadratic(w));
  AffinityCertificate cert;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      const auto& x = quads[i];
      const auto& y = quads[j];
      bool proportional = x[0] * y[1] == x[1] * y[0] && x[0] * y[2] == x[2] * y[0] &&
                          x[1] * y[2] == x[2] * y[1];
      if (!proportional) {
        cert.non_essentially_affine = true;
        cert.first = i;
        cert.second = j;
        cert.first_quadratic = x;
        cert.second_quadratic = y;
        return cert;
      }
    }
  }
  return cert;
}

Digit digit_cap(const QuadraticSurd& t) {
  if (t < QuadraticSurd(3)) throw DomainError("digit cap needs t >= 3");
  return static_cast<Digit>(t.floor().get_ui());
}

}  // namespace mlspec
