#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mlspec/surd.hpp"
#include "mlspec/word.hpp"

namespace mlspec {

enum class Verdict { CertainlyAdmissible, CertainlyPruned, Unknown };
enum class FamilyMode { Over, Under };

const char* verdict_name(Verdict v);
const char* mode_name(FamilyMode m);
FamilyMode parse_mode(const std::string& s);

struct PruneVerdict {
  Verdict status = Verdict::Unknown;
  // 1-based position in the word that decided the verdict; 0 when none.
  // Certificates over an embedding report positions relative to the word,
  // so tail positions may be <= 0 or > n.
  long position = 0;
  std::optional<QuadraticSurd> bound;
  std::string reason;
};

Rational default_slack();

// Largest digit that can occur in a sequence with m <= t: start from
// floor(t) (2 below 3) and drop T while T + 2 / [T; 1, T, 1, ...] > t.
// Returns 0 when no sequence qualifies.
Digit admissible_alphabet(const QuadraticSurd& t);

// Certainly-pruned iff some position of the word has alpha_j + beta_j > t for
// every extension with digits up to admissible_alphabet(t).
PruneVerdict prune_over(const Word& word, const QuadraticSurd& t);

// Certainly-admissible when an explicit extension c^inf word c^inf has
// m < t + slack, checked exactly at finitely many positions plus a tail bound.
PruneVerdict certify_under(const Word& word, const QuadraticSurd& t,
                           const Rational& slack = default_slack());

struct EnumerationOptions {
  unsigned workers = 1;
  std::uint64_t node_cap = 20'000'000;
  Rational slack = default_slack();
  // Prefix length at which work is split into tasks.
  unsigned split_depth = 4;
  // In over mode, also attempt certify_under on each emitted word.
  bool classify = true;
};

struct AdmissibleFamily {
  QuadraticSurd t;
  unsigned r = 0;
  FamilyMode mode = FamilyMode::Over;
  Rational slack;
  Digit alphabet = 0;
  std::vector<Word> words;
  std::vector<Verdict> verdicts;
  std::uint64_t nodes = 0;

  std::size_t count() const { return words.size(); }
};

// Words of P_r (r >= 1) that survive prune_over (over) or pass
// certify_under (under), in lexicographic order. Output is identical for any
// worker count.
AdmissibleFamily enumerate(const QuadraticSurd& t, unsigned r, FamilyMode mode,
                           const EnumerationOptions& options = {});

struct CountRow {
  unsigned r = 0;
  std::size_t over = 0;
  std::size_t under = 0;
};

std::vector<CountRow> count_table(const QuadraticSurd& t, unsigned r_max,
                                  const EnumerationOptions& options = {});

}  // namespace mlspec
