#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "mlspec/numeric.hpp"
#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

// Literals such as "3.05", "7/2", "sqrt(12)", "2*sqrt(2)+1e-9", "(1+sqrt(5))/2",
// "3+2^-4". Throws DomainError on malformed input or mixed quadratic fields.
QuadraticSurd parse_surd(std::string_view text);

// "1,2,2" -> (1, 2, 2)
Word parse_word(std::string_view text);
// "1;2" or "2,1,1,2;2,1,1,1,1,2"
std::vector<Word> parse_words(std::string_view text);

nlohmann::json to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// {"a", "b", "c", "d"} of (a + b sqrt(d)) / c; integers outside int64 are strings.
nlohmann::json to_json(const QuadraticSurd& x);
QuadraticSurd surd_from_json(const nlohmann::json& j);

// "p/q"
nlohmann::json to_json(const Rational& x);

// {"decimal", "exact", "rounding"}; the decimal is rounded in the tagged
// direction.
nlohmann::json tagged(const Rational& x, Rounding r, int digits = 12);
// Surds are exact; the decimal is rounded to nearest.
nlohmann::json tagged(const QuadraticSurd& x, int digits = 12);

}  // namespace mlspec
