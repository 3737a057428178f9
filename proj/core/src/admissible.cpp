#include "mlspec/admissible.hpp"

#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "mlspec/errors.hpp"
#include "mlspec/symbolic.hpp"

namespace mlspec {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CertainlyAdmissible:
      return "certainly-admissible";
    case Verdict::CertainlyPruned:
      return "certainly-pruned";
    case Verdict::Unknown:
      break;
  }
  return "unknown";
}

const char* mode_name(FamilyMode m) { return m == FamilyMode::Over ? "over" : "under"; }

FamilyMode parse_mode(const std::string& s) {
  if (s == "over") return FamilyMode::Over;
  if (s == "under") return FamilyMode::Under;
  throw DomainError("unknown mode: " + s);
}

Rational default_slack() { return Rational(1, 1000000000); }

Digit admissible_alphabet(const QuadraticSurd& t) {
  if (t > QuadraticSurd(1L << 30)) throw DomainError("t too large for the digit alphabet");
  Digit T = 2;
  if (t >= QuadraticSurd(3)) T = static_cast<Digit>(t.floor().get_ui());
  for (; T >= 1; --T) {
    QuadraticSurd least = QuadraticSurd(Rational(T)) + 2 * extremal_tails(T).max_tail.reciprocal();
    if (least <= t) break;
  }
  return T;
}

namespace {

struct ConstantTail {
  Digit c = 1;
  QuadraticSurd value;  // [c; c, c, ...]
  unsigned explicit_len = 0;
  QuadraticSurd far_bound;  // bounds every position beyond the explicit digits
};

class Engine {
 public:
  Engine(const QuadraticSurd& t, const Rational& slack)
      : t_(t), slack_(slack), threshold_(t + QuadraticSurd(slack)) {
    alphabet_ = admissible_alphabet(t);
    if (alphabet_ > 0) {
      tails_ = extremal_tails(alphabet_);
      full_shift_ = full_shift_markov_bound(alphabet_) <= t;
    }
    for (Digit c = 1; c <= alphabet_ && !full_shift_; ++c) {
      Integer disc = Integer(c) * c + 4;
      if (QuadraticSurd(0, 1, 1, disc) >= threshold_) break;
      ConstantTail tail{c, QuadraticSurd(Integer(c), 1, 2, disc), 0};
      for (unsigned k = 2; k <= 128; k *= 2) {
        Rational far = cylinder(Word::repeat(c, k)).right;
        if (tail.value + QuadraticSurd(far) < threshold_) {
          tail.explicit_len = k;
          tail.far_bound = tail.value + QuadraticSurd(far);
          break;
        }
      }
      if (tail.explicit_len > 0) constant_tails_.push_back(tail);
    }
  }

  Digit alphabet() const { return alphabet_; }
  bool full_shift() const { return full_shift_; }
  const ExtremalTails& tails() const { return tails_; }
  const QuadraticSurd& t() const { return t_; }

  PruneVerdict prune(const Word& w) const {
    PruneVerdict v;
    if (alphabet_ == 0) {
      v.status = Verdict::CertainlyPruned;
      v.position = w.empty() ? 0 : 1;
      v.reason = "no sequence has m <= t";
      return v;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] > alphabet_) {
        v.status = Verdict::CertainlyPruned;
        v.position = static_cast<long>(i + 1);
        v.bound = QuadraticSurd(Rational(w[i])) + 2 * tails_.max_tail.reciprocal();
        v.reason = "digit exceeds effective alphabet " + std::to_string(alphabet_);
        return v;
      }
    }
    if (full_shift_ || w.empty()) return v;
    for (const WindowBound& b : window_bounds_all(w, alphabet_)) {
      if (b.lower > t_) {
        v.status = Verdict::CertainlyPruned;
        v.position = static_cast<long>(b.j);
        v.bound = b.lower;
        v.reason = "window lower bound exceeds t";
        return v;
      }
    }
    return v;
  }

  // Assumes prune(w) did not prune.
  PruneVerdict certify_unpruned(const Word& w) const {
    PruneVerdict v;
    if (alphabet_ == 0 || w.max_digit() > alphabet_) {
      v.reason = "digit exceeds effective alphabet";
      return v;
    }
    if (full_shift_) {
      v.status = Verdict::CertainlyAdmissible;
      v.bound = full_shift_markov_bound(alphabet_);
      v.reason = "full shift on digits 1.." + std::to_string(alphabet_);
      return v;
    }
    v.reason = "no constant-tail embedding stays below t + slack";
    for (const ConstantTail& tail : constant_tails_) {
      long bad = 0;
      std::optional<QuadraticSurd> bad_value;
      QuadraticSurd top;
      if (check_embedding(w, tail, bad, bad_value, top)) {
        PruneVerdict ok;
        ok.status = Verdict::CertainlyAdmissible;
        ok.bound = max(top, tail.far_bound);
        ok.reason = "embedding with constant tails " + std::to_string(tail.c);
        return ok;
      }
      v.position = bad;
      v.bound = bad_value;
    }
    return v;
  }

  PruneVerdict certify(const Word& w) const {
    PruneVerdict p = prune(w);
    if (p.status == Verdict::CertainlyPruned) {
      PruneVerdict v;
      v.reason = "word is pruned at t";
      v.position = p.position;
      return v;
    }
    return certify_unpruned(w);
  }

 private:
  // theta = c^inf w c^inf; positions of c^K w c^K are checked exactly, the
  // rest is covered by the tail bound established in the constructor.
  bool check_embedding(const Word& w, const ConstantTail& tail, long& bad,
                       std::optional<QuadraticSurd>& bad_value, QuadraticSurd& top) const {
    std::size_t K = tail.explicit_len;
    std::vector<Digit> theta(K, tail.c);
    theta.insert(theta.end(), w.digits().begin(), w.digits().end());
    theta.insert(theta.end(), K, tail.c);
    std::size_t n = theta.size();
    std::vector<QuadraticSurd> alpha(n + 1);
    alpha[n] = tail.value;
    for (std::size_t p = n; p-- > 0;) alpha[p] = QuadraticSurd(Rational(theta[p])) + alpha[p + 1].reciprocal();
    QuadraticSurd beta = tail.value.reciprocal();
    for (std::size_t p = 0; p < n; ++p) {
      if (p > 0) beta = (QuadraticSurd(Rational(theta[p - 1])) + beta).reciprocal();
      QuadraticSurd s = alpha[p] + beta;
      if (p == 0 || s > top) top = s;
      if (s >= threshold_) {
        bad = static_cast<long>(p) - static_cast<long>(K) + 1;
        bad_value = s;
        return false;
      }
    }
    return true;
  }

  QuadraticSurd t_;
  Rational slack_;
  QuadraticSurd threshold_;
  Digit alphabet_ = 0;
  bool full_shift_ = false;
  ExtremalTails tails_;
  std::vector<ConstantTail> constant_tails_;
};

// DFS state with incremental continuants and left-side (beta) bounds; the
// beta range of a position depends only on digits to its left.
class SearchState {
 public:
  explicit SearchState(const Engine& e) : engine_(e) { cont_.emplace_back(); }

  void push(Digit d) {
    std::size_t p = digits_.size();
    if (!engine_.full_shift()) {
      if (p == 0) {
        blo_.push_back(engine_.tails().max_tail.reciprocal());
        bhi_.push_back(engine_.tails().min_tail.reciprocal());
      } else {
        QuadraticSurd a(Rational(digits_[p - 1]));
        blo_.push_back((a + bhi_[p - 1]).reciprocal());
        bhi_.push_back((a + blo_[p - 1]).reciprocal());
      }
    }
    digits_.push_back(d);
    ConvergentMatrix m = cont_.back();
    m.push(d);
    cont_.push_back(std::move(m));
  }

  void pop() {
    digits_.pop_back();
    cont_.pop_back();
    if (!engine_.full_shift()) {
      blo_.pop_back();
      bhi_.pop_back();
    }
  }

  bool pruned() const {
    if (engine_.full_shift() || digits_.empty()) return false;
    QuadraticSurd lo = engine_.tails().min_tail;
    QuadraticSurd hi = engine_.tails().max_tail;
    for (std::size_t p = digits_.size(); p-- > 0;) {
      QuadraticSurd a(Rational(digits_[p]));
      QuadraticSurd nlo = a + hi.reciprocal();
      QuadraticSurd nhi = a + lo.reciprocal();
      if (nlo + blo_[p] > engine_.t()) return true;
      lo = std::move(nlo);
      hi = std::move(nhi);
    }
    return false;
  }

  unsigned level() const { return digits_.empty() ? 0 : r_floor(cont_.back()); }
  Word word() const { return Word(digits_); }
  std::size_t size() const { return digits_.size(); }

 private:
  const Engine& engine_;
  std::vector<Digit> digits_;
  std::vector<QuadraticSurd> blo_, bhi_;
  std::vector<ConvergentMatrix> cont_;
};

struct TaskResult {
  std::vector<Word> words;
  std::vector<Verdict> verdicts;
  std::uint64_t nodes = 0;
};

class Enumerator {
 public:
  Enumerator(const Engine& e, unsigned r, FamilyMode mode, const EnumerationOptions& opt,
             std::atomic<std::uint64_t>& nodes, std::atomic<bool>& abort)
      : engine_(e), r_(r), mode_(mode), opt_(opt), nodes_(nodes), abort_(abort) {}

  void collect_tasks(SearchState& s, std::vector<Word>& tasks) const {
    if (s.pruned()) return;
    if (s.size() > 0 && (s.level() >= r_ || s.size() >= opt_.split_depth)) {
      tasks.push_back(s.word());
      return;
    }
    for (Digit d = 1; d <= engine_.alphabet(); ++d) {
      s.push(d);
      collect_tasks(s, tasks);
      s.pop();
    }
  }

  TaskResult run(const Word& prefix) {
    SearchState s(engine_);
    for (Digit d : prefix.digits()) s.push(d);
    TaskResult out;
    dfs(s, out);
    return out;
  }

 private:
  void dfs(SearchState& s, TaskResult& out) {
    if (abort_.load(std::memory_order_relaxed)) return;
    ++out.nodes;
    if (nodes_.fetch_add(1, std::memory_order_relaxed) + 1 > opt_.node_cap) {
      abort_.store(true);
      return;
    }
    if (s.pruned()) return;
    if (s.level() >= r_) {
      emit(s.word(), out);
      return;
    }
    for (Digit d = 1; d <= engine_.alphabet(); ++d) {
      s.push(d);
      dfs(s, out);
      s.pop();
    }
  }

  void emit(Word w, TaskResult& out) const {
    if (mode_ == FamilyMode::Under) {
      PruneVerdict v = engine_.certify_unpruned(w);
      if (v.status != Verdict::CertainlyAdmissible) return;
      out.words.push_back(std::move(w));
      out.verdicts.push_back(Verdict::CertainlyAdmissible);
      return;
    }
    Verdict v = Verdict::Unknown;
    if (opt_.classify) v = engine_.certify_unpruned(w).status;
    out.words.push_back(std::move(w));
    out.verdicts.push_back(v);
  }

  const Engine& engine_;
  unsigned r_;
  FamilyMode mode_;
  const EnumerationOptions& opt_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& abort_;
};

}  // namespace

PruneVerdict prune_over(const Word& word, const QuadraticSurd& t) {
  return Engine(t, default_slack()).prune(word);
}

PruneVerdict certify_under(const Word& word, const QuadraticSurd& t, const Rational& slack) {
  if (slack < 0) throw DomainError("slack must be nonnegative");
  return Engine(t, slack).certify(word);
}

AdmissibleFamily enumerate(const QuadraticSurd& t, unsigned r, FamilyMode mode,
                           const EnumerationOptions& options) {
  if (r < 1) throw DomainError("enumeration level must be >= 1");
  if (options.slack < 0) throw DomainError("slack must be nonnegative");
  Engine engine(t, options.slack);
  AdmissibleFamily family;
  family.t = t;
  family.r = r;
  family.mode = mode;
  family.slack = options.slack;
  family.alphabet = engine.alphabet();

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  Enumerator en(engine, r, mode, options, nodes, abort);

  std::vector<Word> tasks;
  {
    SearchState root(engine);
    en.collect_tasks(root, tasks);
  }
  std::vector<TaskResult> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    Enumerator local(engine, r, mode, options, nodes, abort);
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      try {
        results[i] = local.run(tasks[i]);
      } catch (...) {
        errors[i] = std::current_exception();
        abort.store(true);
      }
    }
  };
  unsigned workers = std::max(1u, options.workers);
  if (workers == 1 || tasks.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  if (abort.load()) {
    throw ResourceError("enumeration exceeded the node cap of " +
                        std::to_string(options.node_cap));
  }
  for (TaskResult& res : results) {
    family.nodes += res.nodes;
    for (std::size_t i = 0; i < res.words.size(); ++i) {
      family.words.push_back(std::move(res.words[i]));
      family.verdicts.push_back(res.verdicts[i]);
    }
  }
  return family;
}

std::vector<CountRow> count_table(const QuadraticSurd& t, unsigned r_max,
                                  const EnumerationOptions& options) {
  EnumerationOptions opt = options;
  opt.classify = false;
  std::vector<CountRow> rows;
  for (unsigned r = 1; r <= r_max; ++r) {
    CountRow row;
    row.r = r;
    row.over = enumerate(t, r, FamilyMode::Over, opt).count();
    row.under = enumerate(t, r, FamilyMode::Under, opt).count();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace mlspec
