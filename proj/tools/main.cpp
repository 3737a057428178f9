#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mlspec/admissible.hpp"
#include "mlspec/dimension.hpp"
#include "mlspec/errors.hpp"
#include "mlspec/exact_order.hpp"
#include "mlspec/io.hpp"
#include "mlspec/spectra_facts.hpp"
#include "mlspec/tower.hpp"

using namespace mlspec;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kUsage = 1, kDomain = 2, kResource = 3, kInconsistent = 4 };

struct Common {
  std::string format;
  std::string output;
  unsigned workers = 1;
  bool timing = false;
};

class Clock {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (f == a) return;
  }
  throw CLI::ValidationError("--format", "unsupported format " + f);
}

json bracket_record(const QuadraticSurd& t, const DimensionBracket& b) {
  json j{{"t", tagged(t)},
         {"lo", tagged(b.lo, Rounding::Down)},
         {"hi", tagged(b.hi, Rounding::Up)},
         {"method", b.provenance.method},
         {"depth", b.provenance.depth},
         {"family_size", b.provenance.family_size}};
  if (b.provenance.slack) j["slack"] = to_json(*b.provenance.slack);
  return j;
}

json interval_record(const SurdInterval& iv) { return {tagged(iv.lo), tagged(iv.hi)}; }

LowerOptions lower_options(const Common& c) {
  LowerOptions o;
  o.enumeration.workers = c.workers;
  return o;
}

std::string csv_decimal(const Rational& x, Rounding r) { return to_decimal(x, 12, r); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified brackets for Markov and Lagrange spectrum dimensions"};
  app.require_subcommand(1);
  app.fallthrough();
  Common common;
  app.add_option("--output,-o", common.output, "Write to this file instead of stdout");
  app.add_option("--workers,-j", common.workers, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", common.timing, "Include elapsed seconds in records");

  std::string t_text = "sqrt(12)";
  unsigned effort = 12;
  std::string dim_format = "json";
  auto* dim = app.add_subcommand("dim", "Bracket d(t) = HD(L below t)");
  dim->add_option("--t", t_text, "Threshold literal, e.g. 3.05 or sqrt(12)")->required();
  dim->add_option("--effort", effort, "Enumeration level")->check(CLI::Range(1u, 40u));
  dim->add_option("--format", dim_format, "json|jsonl");

  std::string from_text, to_text;
  unsigned steps = 20;
  std::string sweep_format = "csv";
  auto* sweep = app.add_subcommand("sweep", "Monotone bracket sweep over a t range");
  sweep->add_option("--from", from_text)->required();
  sweep->add_option("--to", to_text)->required();
  sweep->add_option("--steps", steps)->check(CLI::Range(1u, 10000u));
  sweep->add_option("--effort", effort)->check(CLI::Range(1u, 40u));
  sweep->add_option("--format", sweep_format, "csv|jsonl|json");

  unsigned level = 6;
  std::string mode_text = "over";
  std::string slack_text;
  std::string en_format = "jsonl";
  auto* en = app.add_subcommand("enum", "Enumerate the admissible family at level r");
  en->add_option("--t", t_text)->required();
  en->add_option("--r", level)->check(CLI::Range(1u, 60u));
  en->add_option("--mode", mode_text, "over|under");
  en->add_option("--slack", slack_text, "Under-certificate slack");
  en->add_option("--format", en_format, "jsonl|json|csv");
  bool table = false;
  en->add_flag("--table", table, "Emit the count table r,N_over,N_under for levels 1..r as CSV");

  std::string blocks_text;
  unsigned power_n = 12;
  std::string cantor_format = "json";
  auto* cantor = app.add_subcommand("cantor", "Pressure bracket for HD(K(B))");
  cantor->add_option("--blocks", blocks_text, "Words, e.g. \"1;2\" or \"2,1,1,2;2,1,1,1,1,2\"")
      ->required();
  cantor->add_option("--n", power_n, "Concatenation power")->check(CLI::Range(1u, 64u));
  cantor->add_option("--format", cantor_format, "json|jsonl");

  std::string max_z = "1000";
  std::string tree_format = "csv";
  auto* tree = app.add_subcommand("markov-tree", "Markov triples and values below 3");
  tree->add_option("--max-z", max_z);
  tree->add_option("--format", tree_format, "csv|jsonl|json");

  unsigned depth = 4;
  std::string split_text;
  std::string hall_format = "json";
  auto* hall = app.add_subcommand("hall", "Coverage of [sqrt(2)-1, 4(sqrt(2)-1)] by C4 + C4");
  hall->add_option("--depth", depth)->check(CLI::Range(1u, 64u));
  hall->add_option("--split", split_text, "Decompose this value as alpha + beta in C4");
  hall->add_option("--format", hall_format, "json|jsonl");

  unsigned insertions = 4;
  std::string variant_text = "tilde";
  std::string tol_text = "1e-4";
  std::string z_text;
  std::string exact_format = "jsonl";
  auto* exact = app.add_subcommand("exact-order", "Exact-approximation-order digit stream");
  exact->add_option("--t", t_text)->required();
  exact->add_option("--insertions", insertions)->check(CLI::Range(1u, max_insertions));
  exact->add_option("--variant", variant_text, "tilde|hat");
  exact->add_option("--tol", tol_text);
  exact->add_option("--z", z_text, "Base digits, cycled, e.g. \"1,2\"");
  exact->add_option("--format", exact_format, "jsonl|json");

  std::string eps_text = "1/10";
  std::string modulus_format = "json";
  auto* modulus = app.add_subcommand("modulus", "Explicit modulus-of-continuity bound");
  modulus->add_option("--epsilon", eps_text);
  modulus->add_option("--t", t_text);
  modulus->add_option("--format", modulus_format, "json|jsonl");

  std::string facts_format = "json";
  auto* facts = app.add_subcommand("facts", "Classical constants");
  facts->add_option("--format", facts_format, "json|jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream out;
  auto emit = [&](const json& j) {
    out << (common.format == "json" ? j.dump(2) : j.dump()) << '\n';
  };
  Clock clock;

  try {
    if (dim->parsed()) {
      common.format = dim_format;
      require_format(common.format, {"json", "jsonl"});
      QuadraticSurd t = parse_surd(t_text);
      DimensionBracket b = spectrum_dimension(t, effort, lower_options(common));
      json j = bracket_record(t, b);
      if (common.timing) j["elapsed"] = clock.seconds();
      emit(j);
    } else if (sweep->parsed()) {
      common.format = sweep_format;
      require_format(common.format, {"csv", "jsonl", "json"});
      QuadraticSurd lo_t = parse_surd(from_text), hi_t = parse_surd(to_text);
      if (hi_t < lo_t) {
        std::cerr << "sweep: --from must not exceed --to\n";
        return kUsage;
      }
      std::vector<QuadraticSurd> ts;
      for (unsigned i = 0; i < steps; ++i) {
        ts.push_back(steps == 1 ? lo_t
                                : lo_t + (hi_t - lo_t) * QuadraticSurd(Rational(i, steps - 1)));
      }
      std::vector<DimensionBracket> rows;
      for (const QuadraticSurd& t : ts) rows.push_back(spectrum_dimension(t, effort, lower_options(common)));
      // d is nondecreasing: a lower bound at t carries to every larger t and an
      // upper bound to every smaller t.
      for (std::size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].lo < rows[i - 1].lo) rows[i].lo = rows[i - 1].lo;
      }
      for (std::size_t i = rows.size(); i-- > 1;) {
        if (rows[i - 1].hi > rows[i].hi) rows[i - 1].hi = rows[i].hi;
      }
      if (common.format == "csv") {
        out << "t,lo,hi,t_exact,lo_rounding,hi_rounding\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
          out << ts[i].to_decimal(12) << ',' << csv_decimal(rows[i].lo, Rounding::Down) << ','
              << csv_decimal(rows[i].hi, Rounding::Up) << ',' << ts[i].to_string() << ",lower,upper\n";
        }
      } else {
        json all = json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
          json j = bracket_record(ts[i], rows[i]);
          j["envelope"] = true;
          if (common.format == "jsonl") {
            emit(j);
          } else {
            all.push_back(j);
          }
        }
        if (common.format == "json") emit(all);
      }
      if (common.timing) std::cerr << "elapsed " << clock.seconds() << " s\n";
    } else if (en->parsed()) {
      common.format = en_format;
      require_format(common.format, {"jsonl", "json", "csv"});
      QuadraticSurd t = parse_surd(t_text);
      EnumerationOptions o;
      o.workers = common.workers;
      if (!slack_text.empty()) o.slack = parse_rational(slack_text);
      if (table) {
        out << "r,N_over,N_under\n";
        for (const CountRow& row : count_table(t, level, o)) {
          out << row.r << ',' << row.over << ',' << row.under << '\n';
        }
      } else {
        FamilyMode mode = parse_mode(mode_text);
        AdmissibleFamily fam = enumerate(t, level, mode, o);
        json t_json = tagged(t);
        if (common.format == "csv") {
          out << "word,verdict,mode,r,slack\n";
          for (std::size_t i = 0; i < fam.words.size(); ++i) {
            std::string w = fam.words[i].to_string();
            out << '"' << w.substr(1, w.size() - 2) << "\"," << verdict_name(fam.verdicts[i]) << ','
                << mode_name(mode) << ',' << level << ',' << to_string(fam.slack) << '\n';
          }
        } else if (common.format == "jsonl") {
          for (std::size_t i = 0; i < fam.words.size(); ++i) {
            emit({{"word", to_json(fam.words[i])},
                  {"verdict", verdict_name(fam.verdicts[i])},
                  {"mode", mode_name(mode)},
                  {"r", level},
                  {"t", t_json},
                  {"slack", to_json(fam.slack)}});
          }
        } else {
          json words = json::array();
          for (const Word& w : fam.words) words.push_back(to_json(w));
          emit({{"t", t_json},
                {"r", level},
                {"mode", mode_name(mode)},
                {"slack", to_json(fam.slack)},
                {"alphabet", fam.alphabet},
                {"count", fam.count()},
                {"words", words}});
        }
      }
      if (common.timing) std::cerr << "elapsed " << clock.seconds() << " s\n";
    } else if (cantor->parsed()) {
      common.format = cantor_format;
      require_format(common.format, {"json", "jsonl"});
      std::vector<Word> blocks = parse_words(blocks_text);
      DimensionBracket b = cantor_bracket(blocks, power_n);
      json bl = json::array();
      for (const Word& w : blocks) bl.push_back(to_json(w));
      json j{{"blocks", bl},
             {"lo", tagged(b.lo, Rounding::Down)},
             {"hi", tagged(b.hi, Rounding::Up)},
             {"method", b.provenance.method},
             {"depth", b.provenance.depth},
             {"family_size", b.provenance.family_size}};
      if (common.timing) j["elapsed"] = clock.seconds();
      emit(j);
    } else if (tree->parsed()) {
      common.format = tree_format;
      require_format(common.format, {"csv", "jsonl", "json"});
      std::vector<MarkovTriple> triples = markov_triples(Integer(max_z));
      if (common.format == "csv") out << "x,y,z,k_decimal\n";
      json all = json::array();
      for (const MarkovTriple& m : triples) {
        QuadraticSurd k = markov_value_for(m.z);
        if (common.format == "csv") {
          out << m.x << ',' << m.y << ',' << m.z << ',' << k.to_decimal(15) << '\n';
          continue;
        }
        json j{{"x", m.x.get_str()}, {"y", m.y.get_str()}, {"z", m.z.get_str()}, {"k", tagged(k, 15)}};
        if (common.format == "jsonl") {
          emit(j);
        } else {
          all.push_back(j);
        }
      }
      if (common.format == "json") emit(all);
    } else if (hall->parsed()) {
      common.format = hall_format;
      require_format(common.format, {"json", "jsonl"});
      if (!split_text.empty()) {
        QuadraticSurd s = parse_surd(split_text);
        HallSplit h = hall_decompose(s, depth);
        emit({{"s", tagged(s)},
              {"depth", depth},
              {"alpha", to_json(h.alpha)},
              {"beta", to_json(h.beta)},
              {"sum", interval_record(h.sum)}});
      } else {
        HallCoverage r = hall_coverage(depth);
        json gaps = json::array();
        for (const SurdInterval& g : r.gaps) gaps.push_back(interval_record(g));
        json j{{"covered", r.covered},
               {"depth", r.depth},
               {"cylinders", r.cylinders},
               {"sums", r.sums},
               {"target", interval_record(r.target)},
               {"extent", interval_record(r.extent)},
               {"gaps", gaps}};
        if (common.timing) j["elapsed"] = clock.seconds();
        emit(j);
      }
    } else if (exact->parsed()) {
      common.format = exact_format;
      require_format(common.format, {"jsonl", "json"});
      ExactOrderOptions o;
      if (variant_text == "tilde") {
        o.variant = InsertionVariant::Tilde;
      } else if (variant_text == "hat") {
        o.variant = InsertionVariant::Hat;
      } else {
        std::cerr << "exact-order: --variant must be tilde or hat\n";
        return kUsage;
      }
      if (!z_text.empty()) o.z = parse_word(z_text);
      QuadraticSurd t = parse_surd(t_text);
      if (!t.is_rational()) throw DomainError("exact-order needs a rational t");
      ExactOrderWord w = exact_order_word(t.rational_part(), insertions, o);
      ExactOrderReport rep = exact_order_verify(w, parse_rational(tol_text));
      const ExactOrderPlan& p = w.plan;
      json header{{"record", "plan"},
                  {"t", tagged(p.t, Rounding::Exact)},
                  {"m", p.m},
                  {"n", p.n},
                  {"s", tagged(p.s, Rounding::Exact)},
                  {"alpha", to_json(p.alpha)},
                  {"beta", to_json(p.beta)},
                  {"z", to_json(p.z)},
                  {"variant", variant_name(p.variant)},
                  {"insertions", p.insertions}};
      json blocks = json::array();
      std::size_t cursor = 0;
      for (std::size_t i = 0; i < w.blocks.size(); ++i) {
        const InsertedBlock& b = w.blocks[i];
        const ExactOrderRow& row = rep.rows[i];
        std::vector<Digit> base(w.word.vector().begin() + static_cast<std::ptrdiff_t>(cursor),
                                w.word.vector().begin() + static_cast<std::ptrdiff_t>(b.start));
        blocks.push_back({{"record", "base"}, {"start", cursor}, {"digits", base}});
        blocks.push_back({{"record", "block"},
                          {"r", b.r},
                          {"start", b.start},
                          {"center", b.center},
                          {"digits", to_json(insertion_block(p, b.r))},
                          {"value_lo", tagged(row.value.lo, Rounding::Down)},
                          {"value_hi", tagged(row.value.hi, Rounding::Up)},
                          {"distance", tagged(row.distance, Rounding::Up)}});
        cursor = b.start + b.length;
      }
      std::vector<Digit> rest(w.word.vector().begin() + static_cast<std::ptrdiff_t>(cursor),
                              w.word.vector().end());
      blocks.push_back({{"record", "base"}, {"start", cursor}, {"digits", rest}});
      json summary{{"record", "summary"},
                   {"length", w.word.size()},
                   {"tol", tagged(parse_rational(tol_text), Rounding::Exact)},
                   {"others_max", tagged(rep.others_max_upper, Rounding::Up)},
                   {"others_below", rep.others_below},
                   {"pass", rep.pass}};
      if (common.format == "jsonl") {
        emit(header);
        for (const json& b : blocks) emit(b);
        emit(summary);
      } else {
        emit({{"plan", header}, {"stream", blocks}, {"summary", summary}});
      }
    } else if (modulus->parsed()) {
      common.format = modulus_format;
      require_format(common.format, {"json", "jsonl"});
      ModulusBound m = modulus_delta_lower(parse_rational(eps_text), Rational(parse_surd(t_text).floor()));
      emit({{"epsilon", tagged(m.epsilon, Rounding::Exact)},
            {"tau", tagged(m.tau, Rounding::Exact)},
            {"c0", m.c0.get_str()},
            {"two_over_tau", m.two_over_tau.get_str()},
            {"s0_limit", m.s0_limit.get_str()},
            {"log_c1_upper", tagged(m.log_c1_upper, Rounding::Up)},
            {"index_bound", m.index_bound},
            {"height", m.height},
            {"small_t", m.small_t},
            {"chain_verified", m.chain_verified()},
            {"delta_lower", "1/" + m.denominator.to_string()}});
    } else if (facts->parsed()) {
      common.format = facts_format;
      require_format(common.format, {"json", "jsonl"});
      json markov = json::array();
      std::vector<QuadraticSurd> ks = markov_spectrum_below_3(Integer(5));
      for (const QuadraticSurd& k : ks) markov.push_back(tagged(k, 15));
      emit({{"freiman_constant", tagged(freiman_constant(), 15)},
            {"hall_interval", {tagged(hall_lo(), 15), tagged(hall_hi(), 15)}},
            {"markov_values", markov}});
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistent result: " << e.what() << '\n';
    return kInconsistent;
  }

  if (common.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(common.output, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open " << common.output << '\n';
      return kUsage;
    }
    f << out.str();
  }
  return kOk;
}
