#include "mlspec/word.hpp"

#include <algorithm>

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

void check_digits(const std::vector<Digit>& digits) {
  for (Digit d : digits) {
    if (d == 0) throw DomainError("partial quotients must be positive");
  }
}

}  // namespace

Word::Word(std::vector<Digit> digits) : digits_(std::move(digits)) { check_digits(digits_); }

Word::Word(std::initializer_list<Digit> digits) : digits_(digits) { check_digits(digits_); }

Word Word::repeat(Digit d, std::size_t count) { return Word(std::vector<Digit>(count, d)); }

Digit Word::max_digit() const {
  return digits_.empty() ? 0 : *std::max_element(digits_.begin(), digits_.end());
}

Word Word::prefix(std::size_t n) const {
  n = std::min(n, digits_.size());
  Word w;
  w.digits_.assign(digits_.begin(), digits_.begin() + static_cast<std::ptrdiff_t>(n));
  return w;
}

Word Word::suffix_from(std::size_t i) const {
  i = std::min(i, digits_.size());
  Word w;
  w.digits_.assign(digits_.begin() + static_cast<std::ptrdiff_t>(i), digits_.end());
  return w;
}

Word Word::appended(Digit d) const {
  if (d == 0) throw DomainError("partial quotients must be positive");
  Word w = *this;
  w.digits_.push_back(d);
  return w;
}

bool Word::is_prefix_of(const Word& other) const {
  return digits_.size() <= other.digits_.size() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

Word& Word::operator+=(const Word& other) {
  digits_.insert(digits_.end(), other.digits_.begin(), other.digits_.end());
  return *this;
}

std::string Word::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(digits_[i]);
  }
  return s + ")";
}

Word concat(const Word& x, const Word& y) { return x + y; }

Word transpose(const Word& w) {
  std::vector<Digit> d(w.digits().rbegin(), w.digits().rend());
  return Word(std::move(d));
}

Word power(const Word& w, std::size_t n) {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out += w;
  return out;
}

void ConvergentMatrix::push(Digit a) {
  Integer np = a * p + p_prev;
  Integer nq = a * q + q_prev;
  p_prev.swap(p);
  q_prev.swap(q);
  p.swap(np);
  q.swap(nq);
  ++n;
}

std::vector<ConvergentMatrix> convergents(const Word& w) {
  if (w.empty()) throw DomainError("convergents of the empty word");
  std::vector<ConvergentMatrix> out;
  out.reserve(w.size());
  ConvergentMatrix m;
  for (Digit a : w.digits()) {
    m.push(a);
    out.push_back(m);
  }
  return out;
}

ConvergentMatrix continuant(std::span<const Digit> digits) {
  ConvergentMatrix m;
  for (Digit a : digits) m.push(a);
  return m;
}

CylinderInterval cylinder(const Word& w) {
  ConvergentMatrix m = continuant(w);
  Rational x = make_rational(m.p, m.q);
  Rational y = make_rational(Integer(m.p + m.p_prev), Integer(m.q + m.q_prev));
  CylinderInterval c;
  c.left = x < y ? x : y;
  c.right = x < y ? y : x;
  c.word = w;
  c.size = make_rational(1, Integer(m.q * (m.q + m.q_prev)));
  return c;
}

Rational cylinder_size(const Word& w) { return make_rational(1, inverse_cylinder_size(w)); }

Integer inverse_cylinder_size(const Word& w) {
  ConvergentMatrix m = continuant(w);
  return m.q * (m.q + m.q_prev);
}

unsigned r_floor(const ConvergentMatrix& m) {
  return certified::floor_log(Integer(m.q * (m.q + m.q_prev)));
}

unsigned r_floor(const Word& w) { return r_floor(continuant(w)); }

bool in_layer(const Word& w, unsigned r) {
  if (w.empty()) return r == 0;
  if (r_floor(w) < r) return false;
  return r_floor(w.prefix(w.size() - 1)) < r;
}

Rational MobiusMap::operator()(const Rational& x) const {
  Rational den = c * x + d;
  if (den == 0) throw DomainError("Mobius map evaluated at its pole");
  return (a * x + b) / den;
}

QuadraticSurd MobiusMap::operator()(const QuadraticSurd& x) const {
  QuadraticSurd den = QuadraticSurd(Rational(c)) * x + QuadraticSurd(Rational(d));
  if (den.sign() == 0) throw DomainError("Mobius map evaluated at its pole");
  return (QuadraticSurd(Rational(a)) * x + QuadraticSurd(Rational(b))) / den;
}

RationalInterval MobiusMap::image(const RationalInterval& x) const {
  Rational u = (*this)(x.lo);
  Rational v = (*this)(x.hi);
  return u <= v ? RationalInterval{u, v} : RationalInterval{v, u};
}

MobiusMap MobiusMap::compose(const MobiusMap& inner) const {
  return {a * inner.a + b * inner.c, a * inner.b + b * inner.d, c * inner.a + d * inner.c,
          c * inner.b + d * inner.d};
}

MobiusMap leading_map(std::span<const Digit> digits) {
  // product of [[d,1],[1,0]]; columns track (p_k, p_{k-1}) with shifted seeds
  MobiusMap m;
  for (Digit dgt : digits) {
    Integer na = m.a * dgt + m.b;
    Integer nc = m.c * dgt + m.d;
    m.b.swap(m.a);
    m.d.swap(m.c);
    m.a.swap(na);
    m.c.swap(nc);
  }
  return m;
}

MobiusMap fraction_map(std::span<const Digit> digits) {
  MobiusMap m = leading_map(digits);
  return {m.c, m.d, m.a, m.b};
}

MobiusMap mobius_branch(const Word& w) {
  if (w.empty()) throw DomainError("Gauss branch of the empty word");
  ConvergentMatrix m = continuant(w);
  return {m.q, Integer(-m.p), Integer(-m.q_prev), m.p_prev};
}

RationalInterval derivative_range(const Word& w) {
  if (w.empty()) throw DomainError("derivative range of the empty word");
  ConvergentMatrix m = continuant(w);
  Integer q2 = m.q * m.q;
  return {Rational(q2), Rational(Integer(4 * q2))};
}

}  // namespace mlspec
