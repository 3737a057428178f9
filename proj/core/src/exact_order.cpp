#include "mlspec/exact_order.hpp"

#include <algorithm>

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

std::size_t factorial(unsigned r) {
  std::size_t f = 1;
  for (unsigned k = 2; k <= r; ++k) f *= k;
  return f;
}

}  // namespace

const char* variant_name(InsertionVariant v) {
  return v == InsertionVariant::Tilde ? "tilde" : "hat";
}

Word insertion_block(const ExactOrderPlan& plan, unsigned r) {
  std::size_t k = plan.variant == InsertionVariant::Tilde ? 2 * r - 1 : 2 * r;
  if (plan.alpha.size() < k || plan.beta.size() < k) {
    throw DomainError("plan digits too short for block " + std::to_string(r));
  }
  std::vector<Digit> d{plan.m + 1};
  for (std::size_t i = k; i > 0; --i) d.push_back(plan.beta[i - 1]);
  d.push_back(plan.n);
  for (std::size_t i = 0; i < k; ++i) d.push_back(plan.alpha[i]);
  d.push_back(plan.m + 1);
  return Word(std::move(d));
}

ExactOrderWord exact_order_word(const Rational& t, unsigned insertions,
                                const ExactOrderOptions& options) {
  if (t < 7) throw DomainError("exact_order_word requires t >= 7");
  if (insertions < 1) throw DomainError("insertions must be at least 1");
  if (insertions > max_insertions) {
    throw ResourceError("insertions above " + std::to_string(max_insertions));
  }
  ExactOrderPlan plan;
  plan.t = t;
  plan.m = static_cast<unsigned>(floor(t).get_ui()) - 3;
  plan.n = plan.m + 3;
  if (!in_hall_interval(QuadraticSurd(t - plan.n))) plan.n = plan.m + 2;
  plan.s = t - plan.n;
  plan.variant = options.variant;
  plan.insertions = insertions;
  plan.z = options.z.empty() ? Word{1} : options.z;
  if (!plan.z.bounded_by(plan.m)) throw DomainError("base digits must lie in [1, m]");

  unsigned depth = 2 * insertions;
  HallSplit split = hall_decompose(QuadraticSurd(plan.s), depth);
  plan.alpha = split.alpha;
  plan.beta = split.beta;

  ExactOrderWord out;
  std::vector<Digit> d;
  std::size_t c_index = 0;
  auto emit_base = [&](std::size_t upto) {
    for (; c_index < upto; ++c_index) d.push_back(plan.z[c_index % plan.z.size()]);
  };
  for (unsigned r = 1; r <= insertions; ++r) {
    emit_base(factorial(r));
    Word block = insertion_block(plan, r);
    std::size_t k = plan.variant == InsertionVariant::Tilde ? 2 * r - 1 : 2 * r;
    out.blocks.push_back({r, d.size(), d.size() + 1 + k, block.size()});
    d.insert(d.end(), block.vector().begin(), block.vector().end());
  }
  emit_base(factorial(insertions + 1));
  out.word = Word(std::move(d));
  out.plan = std::move(plan);
  return out;
}

ExactOrderReport exact_order_verify(const ExactOrderWord& w, const Rational& tol) {
  const ExactOrderPlan& plan = w.plan;
  if (w.blocks.empty() || w.word.empty()) throw DomainError("malformed exact-order word");
  for (const InsertedBlock& b : w.blocks) {
    if (b.center >= w.word.size() || w.word[b.center] != plan.n) {
      throw DomainError("block metadata does not match the word");
    }
  }
  const std::size_t len = w.word.size();
  const RationalInterval tail{1, Rational(plan.n + 1)};
  std::span<const Digit> digits = w.word.digits();

  ExactOrderReport report;
  bool first_other = true;
  // beta_j = [0; d_{j-1}, ..., d_1] = p / q, and beta_{j+1} = 1 / (d_j + beta_j).
  Integer p = 0, q = 1;
  std::size_t next_block = 0;
  for (std::size_t j = 0; j < len; ++j) {
    Rational beta = make_rational(p, q);
    RationalInterval alpha = leading_map(digits.subspan(j)).image(tail);
    RationalInterval value{alpha.lo + beta, alpha.hi + beta};
    if (next_block < w.blocks.size() && w.blocks[next_block].center == j) {
      Rational d1 = abs(value.lo - plan.t), d2 = abs(value.hi - plan.t);
      report.rows.push_back({w.blocks[next_block].r, value, d1 < d2 ? d2 : d1});
      ++next_block;
    } else if (first_other || value.hi > report.others_max_upper) {
      report.others_max_upper = value.hi;
      first_other = false;
    }
    Integer next_q = digits[j] * q + p;
    p = q;
    q = next_q;
  }
  report.others_below = report.others_max_upper < plan.t;
  report.pass = report.others_below && report.rows.back().distance <= tol;
  return report;
}

}  // namespace mlspec
