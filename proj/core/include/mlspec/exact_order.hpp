#pragma once

#include <cstddef>
#include <vector>

#include "mlspec/spectra_facts.hpp"
#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

enum class InsertionVariant { Tilde, Hat };

const char* variant_name(InsertionVariant v);

// t = n + alpha + beta with alpha = [0; a_1, ...], beta = [0; b_1, ...] in C_4.
struct ExactOrderPlan {
  Rational t;
  unsigned m = 0;  // floor(t) - 3
  unsigned n = 0;  // m + 3 when t - (m + 3) is in the Hall interval, else m + 2
  Rational s;      // t - n
  Word alpha;
  Word beta;
  Word z;          // base digits c_1, c_2, ..., cycled when shorter than needed
  InsertionVariant variant = InsertionVariant::Tilde;
  unsigned insertions = 0;
};

inline constexpr unsigned max_insertions = 6;

// Tilde: (m+1, b_{2r-1}, ..., b_1, n, a_1, ..., a_{2r-1}, m+1).
// Hat uses 2r digits on each side.
Word insertion_block(const ExactOrderPlan& plan, unsigned r);

struct InsertedBlock {
  unsigned r = 0;
  std::size_t start = 0;     // 0-based index of the block's first digit
  std::size_t center = 0;    // 0-based index of the digit n
  std::size_t length = 0;
};

struct ExactOrderWord {
  Word word;
  ExactOrderPlan plan;
  std::vector<InsertedBlock> blocks;
};

struct ExactOrderOptions {
  InsertionVariant variant = InsertionVariant::Tilde;
  Word z;  // empty means all ones
};

// Digits c_1..c_{1!}, block 1, c_{1!+1}..c_{2!}, block 2, ..., block
// `insertions`, then c_{insertions!+1}..c_{(insertions+1)!}. Requires t >= 7.
ExactOrderWord exact_order_word(const Rational& t, unsigned insertions,
                                const ExactOrderOptions& options = {});

struct ExactOrderRow {
  unsigned r = 0;
  RationalInterval value;  // alpha_j + beta_j at the digit n of block r
  Rational distance;       // max |value - t|
};

struct ExactOrderReport {
  std::vector<ExactOrderRow> rows;
  Rational others_max_upper;  // max over all other positions
  bool others_below = false;  // others_max_upper < t
  bool pass = false;          // last distance <= tol and others_below
};

// alpha_j uses the digits of the word followed by any continuation in
// [1, n + 1]; beta_j is exact since the word is one-sided.
ExactOrderReport exact_order_verify(const ExactOrderWord& w, const Rational& tol);

}  // namespace mlspec
