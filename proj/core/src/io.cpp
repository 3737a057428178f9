#include "mlspec/io.hpp"

#include <cctype>
#include <limits>

#include "mlspec/errors.hpp"

namespace mlspec {

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string_view s) : s_(s) {}

  QuadraticSurd parse() {
    QuadraticSurd v = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("bad literal \"" + std::string(s_) + "\": " + what);
  }

  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  QuadraticSurd expr() {
    QuadraticSurd v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  QuadraticSurd term() {
    QuadraticSurd v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        QuadraticSurd d = unary();
        if (d.sign() == 0) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  QuadraticSurd unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  QuadraticSurd power() {
    QuadraticSurd base = primary();
    if (!eat('^')) return base;
    bool negative = eat('-');
    skip();
    std::size_t start = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (start == i_) fail("expected integer exponent");
    long e = std::stol(std::string(s_.substr(start, i_ - start)));
    if (e > 4096) fail("exponent too large");
    QuadraticSurd v(1);
    for (long k = 0; k < e; ++k) v *= base;
    if (negative) {
      if (v.sign() == 0) fail("division by zero");
      v = v.reciprocal();
    }
    return v;
  }

  QuadraticSurd primary() {
    skip();
    if (eat('(')) {
      QuadraticSurd v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (s_.substr(i_, 5) == "sqrt(") {
      i_ += 5;
      QuadraticSurd v = expr();
      if (!eat(')')) fail("expected ')'");
      if (!v.is_rational() || v.sign() < 0) fail("sqrt needs a nonnegative rational");
      return QuadraticSurd::sqrt(v.rational_part());
    }
    std::size_t start = i_;
    while (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '.')) {
      ++i_;
    }
    if (start == i_) fail("expected a number");
    if (i_ < s_.size() && (s_[i_] == 'e' || s_[i_] == 'E')) {
      std::size_t save = i_++;
      if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
      std::size_t digits = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (digits == i_) i_ = save;
    }
    return QuadraticSurd(parse_rational(s_.substr(start, i_ - start)));
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

nlohmann::json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(static_cast<long>(j.get<std::int64_t>()));
}

}  // namespace

QuadraticSurd parse_surd(std::string_view text) { return SurdParser(text).parse(); }

Word parse_word(std::string_view text) {
  std::vector<Digit> digits;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string item(text.substr(i, j - i));
    std::size_t used = 0;
    unsigned long d = 0;
    try {
      d = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw DomainError("bad digit \"" + item + "\"");
    }
    if (used != item.size() || d < 1 || d > std::numeric_limits<Digit>::max()) {
      throw DomainError("bad digit \"" + item + "\"");
    }
    digits.push_back(static_cast<Digit>(d));
    i = j + 1;
  }
  if (digits.empty()) throw DomainError("empty word");
  return Word(std::move(digits));
}

std::vector<Word> parse_words(std::string_view text) {
  std::vector<Word> out;
  std::size_t i = 0;
  while (i <= text.size()) {
    std::size_t j = text.find(';', i);
    if (j == std::string_view::npos) j = text.size();
    out.push_back(parse_word(text.substr(i, j - i)));
    i = j + 1;
  }
  return out;
}

nlohmann::json to_json(const Word& w) { return w.vector(); }

Word word_from_json(const nlohmann::json& j) { return Word(j.get<std::vector<Digit>>()); }

nlohmann::json to_json(const QuadraticSurd& x) {
  return {{"a", integer_json(x.a())},
          {"b", integer_json(x.b())},
          {"c", integer_json(x.c())},
          {"d", integer_json(x.d())}};
}

QuadraticSurd surd_from_json(const nlohmann::json& j) {
  return QuadraticSurd(integer_from_json(j.at("a")), integer_from_json(j.at("b")),
                       integer_from_json(j.at("c")), integer_from_json(j.at("d")));
}

nlohmann::json to_json(const Rational& x) { return to_string(x); }

nlohmann::json tagged(const Rational& x, Rounding r, int digits) {
  return {{"decimal", to_decimal(x, digits, r)}, {"exact", to_string(x)}, {"rounding", rounding_name(r)}};
}

nlohmann::json tagged(const QuadraticSurd& x, int digits) {
  return {{"decimal", x.to_decimal(digits)},
          {"exact", x.to_string()},
          {"rounding", rounding_name(Rounding::Exact)}};
}

}  // namespace mlspec
