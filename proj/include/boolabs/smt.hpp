// smt.hpp -- the solver gateway: drives an external SMT-LIB2 solver process
// over stdin/stdout, renders validity queries for quasi-reactions, caches
// verdicts, and offers an incremental Boolean (QF) session for the
// SAT-guided searches.

#pragma once

#include <fcntl.h>
#include <poll.h>
#include <sys/prctl.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boolabs/choice_set.hpp>
#include <boolabs/literals.hpp>

namespace boolabs {

struct SolverConfig {
  std::string cmd;
  int timeout_ms = 60000;
  std::uint64_t seed = 0;
};

inline std::string default_solver_cmd() {
  if (const char* env = std::getenv("BOOLABS_SOLVER"); env && *env) return env;
  return "z3 -in";
}

enum class Verdict { Valid, Invalid };
enum class QueryTag { Outer, Inner };

struct GatewayStats {
  std::uint64_t outer_queries = 0;
  std::uint64_t inner_queries = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t sat_checks = 0;  // Boolean-session check-sat calls (not reported)
  double smt_ms = 0.0;

  GatewayStats& operator+=(const GatewayStats& o) {
    outer_queries += o.outer_queries;
    inner_queries += o.inner_queries;
    cache_hits += o.cache_hits;
    sat_checks += o.sat_checks;
    smt_ms += o.smt_ms;
    return *this;
  }
};

namespace detail {

inline void ignore_sigpipe_once() {
  static std::once_flag flag;
  std::call_once(flag, [] { std::signal(SIGPIPE, SIG_IGN); });
}

inline std::vector<std::string> split_command(const std::string& cmd) {
  std::vector<std::string> argv;
  std::string cur;
  for (char c : cmd) {
    if (c == ' ' || c == '\t') {
      if (!cur.empty()) argv.push_back(std::move(cur)), cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) argv.push_back(std::move(cur));
  return argv;
}

// Child process with piped stdin/stdout.  stderr is inherited so solver
// diagnostics stay visible.
class Subprocess {
 public:
  explicit Subprocess(const std::string& cmdline) {
    ignore_sigpipe_once();
    auto args = split_command(cmdline);
    if (args.empty()) throw SolverError("empty solver command");
    int to_child[2], from_child[2];
    if (pipe(to_child) != 0 || pipe(from_child) != 0)
      throw SolverError("pipe: " + std::string(std::strerror(errno)));
    pid_ = fork();
    if (pid_ < 0) throw SolverError("fork: " + std::string(std::strerror(errno)));
    if (pid_ == 0) {
      prctl(PR_SET_PDEATHSIG, SIGKILL);
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      close(to_child[0]);
      close(to_child[1]);
      close(from_child[0]);
      close(from_child[1]);
      std::vector<char*> argv;
      for (auto& a : args) argv.push_back(a.data());
      argv.push_back(nullptr);
      execvp(argv[0], argv.data());
      std::fprintf(stderr, "exec '%s' failed: %s\n", argv[0], std::strerror(errno));
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];
  }

  ~Subprocess() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    if (pid_ > 0) {
      int status = 0;
      for (int i = 0; i < 50 && waitpid(pid_, &status, WNOHANG) == 0; ++i) usleep(10000);
      if (waitpid(pid_, &status, WNOHANG) == 0) {
        kill(pid_, SIGKILL);
        waitpid(pid_, &status, 0);
      }
    }
  }

  Subprocess(const Subprocess&) = delete;
  Subprocess& operator=(const Subprocess&) = delete;

  void write_text(const std::string& text) {
    size_t off = 0;
    while (off < text.size()) {
      ssize_t n = ::write(in_fd_, text.data() + off, text.size() - off);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw SolverError("write to solver failed: " + std::string(std::strerror(errno)));
      }
      off += static_cast<size_t>(n);
    }
  }

  // One line (without the newline); false on EOF.  Throws on timeout.
  bool read_line(std::string& out, int timeout_ms) {
    auto deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
    for (;;) {
      if (auto nl = buf_.find('\n'); nl != std::string::npos) {
        out = buf_.substr(0, nl);
        buf_.erase(0, nl + 1);
        return true;
      }
      auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
                           deadline - std::chrono::steady_clock::now())
                           .count();
      if (remaining <= 0) throw SolverError("solver response timeout");
      pollfd pfd{out_fd_, POLLIN, 0};
      int pr = poll(&pfd, 1, static_cast<int>(remaining));
      if (pr < 0) {
        if (errno == EINTR) continue;
        throw SolverError("poll: " + std::string(std::strerror(errno)));
      }
      if (pr == 0) throw SolverError("solver response timeout");
      char chunk[4096];
      ssize_t n = ::read(out_fd_, chunk, sizeof chunk);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw SolverError("read from solver failed: " + std::string(std::strerror(errno)));
      }
      if (n == 0) {
        if (!buf_.empty()) {
          out = std::move(buf_);
          buf_.clear();
          return true;
        }
        return false;
      }
      buf_.append(chunk, static_cast<size_t>(n));
    }
  }

 private:
  pid_t pid_ = -1;
  int in_fd_ = -1, out_fd_ = -1;
  std::string buf_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// A marker-synchronized SMT-LIB2 conversation.  Commands are buffered; a
// request flushes the buffer followed by an echo marker and returns every
// line the solver produced before the marker.
// ---------------------------------------------------------------------------

class SolverProcess {
 public:
  explicit SolverProcess(SolverConfig cfg) : cfg_(std::move(cfg)), proc_(cfg_.cmd) {}

  ~SolverProcess() {
    try {
      proc_.write_text("(exit)\n");
    } catch (...) {
    }
  }

  const SolverConfig& config() const { return cfg_; }
  void set_config(const SolverConfig& cfg) { cfg_ = cfg; }  // same cmd, new timeout/seed
  bool healthy() const { return healthy_; }

  void queue(const std::string& commands) {
    pending_ += commands;
    if (pending_.empty() || pending_.back() != '\n') pending_ += '\n';
  }

  std::vector<std::string> request() {
    static const char* marker = "@@boolabs-sync@@";
    pending_ += "(echo \"";
    pending_ += marker;
    pending_ += "\")\n";
    try {
      proc_.write_text(pending_);
      pending_.clear();
      std::vector<std::string> lines;
      std::string line;
      for (;;) {
        if (!proc_.read_line(line, cfg_.timeout_ms))
          throw SolverError("solver process terminated unexpectedly");
        if (line == marker) return lines;
        if (!line.empty()) lines.push_back(line);
      }
    } catch (...) {
      healthy_ = false;  // stale output may be buffered; do not recycle
      throw;
    }
  }

  // Reset solver state; a recycled process behaves like a fresh one.
  void reset() {
    queue("(reset)");
    if (cfg_.timeout_ms > 0) queue("(set-option :timeout " + std::to_string(cfg_.timeout_ms) + ")");
    queue("(set-option :smt.random_seed " + std::to_string(cfg_.seed) + ")");
    queue("(set-option :sat.random_seed " + std::to_string(cfg_.seed) + ")");
    for (const auto& l : request())
      if (l.rfind("(error", 0) == 0 && l.find("unknown option") == std::string::npos &&
          l.find("unsupported") == std::string::npos)
        throw SolverError("solver rejected session setup: " + l);
  }

 private:
  SolverConfig cfg_;
  detail::Subprocess proc_;
  std::string pending_;
  bool healthy_ = true;
};

// Idle solver processes are recycled between sessions: WASM-based solvers pay
// a noticeable startup cost, and a (reset) is equivalent to a fresh process.
class SolverPool {
 public:
  static SolverPool& instance() {
    static SolverPool pool;
    return pool;
  }

  std::unique_ptr<SolverProcess> acquire(const SolverConfig& cfg) {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto& idle = idle_[cfg.cmd];
      if (!idle.empty()) {
        auto proc = std::move(idle.back());
        idle.pop_back();
        proc->set_config(cfg);
        return proc;
      }
    }
    return std::make_unique<SolverProcess>(cfg);
  }

  void release(std::unique_ptr<SolverProcess> proc) {
    if (!proc || !proc->healthy()) return;
    std::lock_guard<std::mutex> lock(mu_);
    idle_[proc->config().cmd].push_back(std::move(proc));
  }

 private:
  std::mutex mu_;
  std::unordered_map<std::string, std::vector<std::unique_ptr<SolverProcess>>> idle_;
};

// ---------------------------------------------------------------------------
// Query script rendering.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string smt_sort(const Variable& v, Theory theory) {
  if (theory != Theory::LIA) return "Real";  // Int declarations promote to Real
  return v.sort == VarSort::Int ? "Int" : "Real";
}

inline std::string smt_rat(const Rat& r, Theory theory) {
  bool negative = r < Rat(0);
  Rat a = negative ? -r : r;
  std::string body;
  if (theory == Theory::LIA) {
    body = std::to_string(a.numerator());  // integrality checked at parse time
  } else if (a.denominator() == 1) {
    body = std::to_string(a.numerator()) + ".0";
  } else {
    body = "(/ " + std::to_string(a.numerator()) + ".0 " + std::to_string(a.denominator()) +
           ".0)";
  }
  return negative ? "(- " + body + ")" : body;
}

using Renaming = std::unordered_map<std::string, std::string>;

inline std::string smt_term(const TermPtr& t, Theory theory, const Renaming& ren) {
  switch (t->kind) {
    case Term::Kind::Const: return smt_rat(t->value, theory);
    case Term::Kind::Var: {
      auto it = ren.find(t->var);
      return it == ren.end() ? t->var : it->second;
    }
    case Term::Kind::Neg: return "(- " + smt_term(t->lhs, theory, ren) + ")";
    case Term::Kind::Add:
      return "(+ " + smt_term(t->lhs, theory, ren) + " " + smt_term(t->rhs, theory, ren) + ")";
    case Term::Kind::Sub:
      return "(- " + smt_term(t->lhs, theory, ren) + " " + smt_term(t->rhs, theory, ren) + ")";
    case Term::Kind::Mul:
      return "(* " + smt_term(t->lhs, theory, ren) + " " + smt_term(t->rhs, theory, ren) + ")";
    case Term::Kind::Div: {
      const char* op = theory == Theory::LIA ? "div" : "/";
      return "(" + std::string(op) + " " + smt_term(t->lhs, theory, ren) + " " +
             smt_term(t->rhs, theory, ren) + ")";
    }
  }
  throw InternalError("unreachable term kind");
}

inline std::string smt_comparison(const Comparison& c, Theory theory, const Renaming& ren) {
  std::string l = smt_term(c.lhs, theory, ren);
  std::string r = smt_term(c.rhs, theory, ren);
  switch (c.op) {
    case Relop::Lt: return "(< " + l + " " + r + ")";
    case Relop::Le: return "(<= " + l + " " + r + ")";
    case Relop::Gt: return "(> " + l + " " + r + ")";
    case Relop::Ge: return "(>= " + l + " " + r + ")";
    case Relop::Eq: return "(= " + l + " " + r + ")";
    case Relop::Ne: return "(not (= " + l + " " + r + "))";
  }
  throw InternalError("unreachable relop");
}

// A literal, positively or negated.  Negation flips every comparison and
// disjoins them (the entry is a conjunction of comparisons).
inline std::string smt_literal(const Literal& lit, bool positive, Theory theory,
                               const Renaming& ren) {
  std::vector<std::string> parts;
  for (const auto& c : lit.atom.conjuncts) {
    Comparison cc = c;
    if (!positive) cc.op = flip(cc.op);
    parts.push_back(smt_comparison(cc, theory, ren));
  }
  if (parts.size() == 1) return parts[0];
  std::string joined = positive ? "(and" : "(or";
  for (const auto& p : parts) joined += " " + p;
  return joined + ")";
}

// The choice formula f_c: every cluster literal, positive when the choice
// selects it and negated otherwise.
inline std::string smt_choice(const ClusterView& view, uint32_t choice, Theory theory,
                              const Renaming& ren) {
  std::string out = "(and";
  bool any = false;
  for (int i = 0; i < view.size(); ++i) {
    out += " " + smt_literal(view.lits[i], (choice >> i) & 1, theory, ren);
    any = true;
  }
  if (!any) return "true";
  return out + ")";
}

}  // namespace detail

// Renders the satisfiability script for a quasi-reaction (P, A): the
// environment variables are free, each potential choice gets its own copies
// of the system variables (a skolemized exists-block), and each antipotential
// contributes a universally quantified negation.
inline std::string build_react_query(const ClusterView& view, const QuasiReaction& q) {
  const Theory theory = view.theory;
  std::string s;
  for (const auto& v : view.env_vars)
    s += "(declare-const " + v.name + " " + detail::smt_sort(v, theory) + ")\n";
  int copy = 0;
  for (uint32_t c : q.P.bits()) {
    detail::Renaming ren;
    for (const auto& v : view.sys_vars) {
      std::string fresh = v.name + "!p" + std::to_string(copy);
      ren[v.name] = fresh;
      s += "(declare-const " + fresh + " " + detail::smt_sort(v, theory) + ")\n";
    }
    s += "(assert " + detail::smt_choice(view, c, theory, ren) + ")\n";
    ++copy;
  }
  for (uint32_t c : q.A.bits()) {
    detail::Renaming ren;
    std::string body = detail::smt_choice(view, c, theory, ren);
    if (view.sys_vars.empty()) {
      s += "(assert (not " + body + "))\n";
    } else {
      std::string binder;
      for (const auto& v : view.sys_vars)
        binder += "(" + v.name + " " + detail::smt_sort(v, theory) + ")";
      s += "(assert (forall (" + binder + ") (not " + body + ")))\n";
    }
  }
  s += "(check-sat)\n";
  return s;
}

// ---------------------------------------------------------------------------
// The gateway proper.
// ---------------------------------------------------------------------------

struct LoggedQuery {
  QuasiReaction q;
  QueryTag tag;
  Verdict verdict;
};

class SmtGateway {
 public:
  explicit SmtGateway(SolverConfig cfg) : cfg_(std::move(cfg)) {
    proc_ = SolverPool::instance().acquire(cfg_);
  }

  ~SmtGateway() { SolverPool::instance().release(std::move(proc_)); }

  SmtGateway(const SmtGateway&) = delete;
  SmtGateway& operator=(const SmtGateway&) = delete;

  // Binds the gateway to one cluster and pings the process so a broken
  // solver command fails here rather than mid-search.
  void open(const ClusterView& view) {
    view_ = &view;
    cache_.clear();
    proc_->reset();
  }

  Verdict check(const QuasiReaction& q, QueryTag tag) {
    if (!view_) throw InternalError("gateway used before open()");
    Key key{q.P, q.A};
    if (auto it = cache_.find(key); it != cache_.end()) {
      ++stats_.cache_hits;
      if (log_queries) log.push_back({q, tag, it->second});
      return it->second;
    }
    Verdict v = run_script(build_react_query(*view_, q), tag);
    cache_.emplace(std::move(key), v);
    if (log_queries) log.push_back({q, tag, v});
    return v;
  }

  // Uncached satisfiability of a caller-built script (used by diagnostics
  // and tests, e.g. pointwise reactions under a pinned environment).
  Verdict check_script(const std::string& script, QueryTag tag = QueryTag::Outer) {
    if (!view_) throw InternalError("gateway used before open()");
    return run_script(script, tag);
  }

  const GatewayStats& stats() const { return stats_; }
  GatewayStats& stats() { return stats_; }

  bool log_queries = false;
  std::vector<LoggedQuery> log;

 private:
  struct Key {
    ChoiceSet P, A;
    bool operator==(const Key& o) const { return P == o.P && A == o.A; }
  };
  struct KeyHash {
    size_t operator()(const Key& k) const { return k.P.hash() * 31 + k.A.hash(); }
  };

  void check_errors(const std::vector<std::string>& lines) {
    for (const auto& l : lines) {
      if (l.rfind("(error", 0) != 0) continue;
      if (l.find("unknown option") != std::string::npos) continue;
      if (l.find("unsupported") != std::string::npos) continue;
      throw SolverError("solver error: " + l);
    }
  }

  // Every theory query runs in a fresh one-shot session.  Incremental mode
  // (push/pop) keeps the backend in its generic quantifier core, which times
  // out on exists-forall arithmetic that the one-shot engines decide
  // instantly; a (reset) per query costs microseconds by comparison.
  std::string preamble() const {
    std::string s = "(reset)\n";
    if (cfg_.timeout_ms > 0)
      s += "(set-option :timeout " + std::to_string(cfg_.timeout_ms) + ")\n";
    s += "(set-option :smt.random_seed " + std::to_string(cfg_.seed) + ")\n";
    s += "(set-option :sat.random_seed " + std::to_string(cfg_.seed) + ")\n";
    s += "(set-logic " + to_string(view_->theory) + ")\n";
    return s;
  }

  Verdict run_script(const std::string& script, QueryTag tag) {
    proc_->queue(preamble());
    proc_->queue(script);
    auto t0 = std::chrono::steady_clock::now();
    auto lines = proc_->request();
    stats_.smt_ms += std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    (tag == QueryTag::Outer ? stats_.outer_queries : stats_.inner_queries)++;
    check_errors(lines);
    for (const auto& l : lines) {
      if (l == "sat") return Verdict::Valid;
      if (l == "unsat") return Verdict::Invalid;
      if (l == "unknown") throw SolverError("solver returned unknown");
    }
    throw SolverError("no verdict in solver reply");
  }

  SolverConfig cfg_;
  std::unique_ptr<SolverProcess> proc_;
  const ClusterView* view_ = nullptr;
  std::unordered_map<Key, Verdict, KeyHash> cache_;
  GatewayStats stats_;
};

// ---------------------------------------------------------------------------
// Incremental Boolean session for the SAT-guided searches.  Same solver
// executable, separate process, quantifier-free logic.  Variables are
// addressed by index; clause literals are (index+1) with sign.
// ---------------------------------------------------------------------------

class BoolSession {
 public:
  explicit BoolSession(SolverConfig cfg) : cfg_(std::move(cfg)) {
    proc_ = SolverPool::instance().acquire(cfg_);
  }

  ~BoolSession() { SolverPool::instance().release(std::move(proc_)); }

  BoolSession(const BoolSession&) = delete;
  BoolSession& operator=(const BoolSession&) = delete;

  void open(int num_vars, const std::string& prefix, GatewayStats* stats = nullptr) {
    stats_ = stats;
    proc_->reset();
    proc_->queue("(set-logic QF_UF)");
    declare(prefix, 0, num_vars);
    names_.clear();
    for (int i = 0; i < num_vars; ++i) names_.push_back(prefix + std::to_string(i));
  }

  // Auxiliary block of variables inside a fresh scope (see push/pop).
  std::vector<std::string> declare_block(const std::string& prefix, int count) {
    declare(prefix, 0, count);
    std::vector<std::string> names;
    for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
    return names;
  }

  void push() { proc_->queue("(push 1)"); }
  void pop() { proc_->queue("(pop 1)"); }

  void add_clause(const std::vector<int>& lits, const std::vector<std::string>& names) {
    if (lits.empty()) {
      proc_->queue("(assert false)");
      return;
    }
    std::string s = lits.size() == 1 ? "(assert " : "(assert (or";
    for (int l : lits) {
      const std::string& name = names[static_cast<size_t>(std::abs(l)) - 1];
      s += l > 0 ? " " + name : " (not " + name + ")";
    }
    s += lits.size() == 1 ? ")" : "))";
    proc_->queue(s);
  }

  void add_unit(int lit, const std::vector<std::string>& names) {
    add_clause({lit}, names);
  }

  const std::vector<std::string>& names() const { return names_; }

  bool check_sat() {
    proc_->queue("(check-sat)");
    return read_verdict();
  }

  // Satisfiability under temporary polarity assumptions; used to steer which
  // model the solver reports.
  bool check_sat_assuming(const std::vector<int>& lits, const std::vector<std::string>& names) {
    std::string s = "(check-sat-assuming (";
    for (size_t i = 0; i < lits.size(); ++i) {
      const std::string& name = names[static_cast<size_t>(std::abs(lits[i])) - 1];
      if (i) s += " ";
      s += lits[i] > 0 ? name : "(not " + name + ")";
    }
    s += "))";
    proc_->queue(s);
    return read_verdict();
  }

  // One round-trip for the common loop step: check satisfiability and, when
  // satisfiable, read the named values from the model in the same request.
  // Optional assumption literals (1-based, sign = polarity) restrict the
  // check without asserting anything.
  std::optional<std::vector<bool>> check_model(const std::vector<std::string>& names,
                                               const std::vector<int>& assuming = {}) {
    std::string q;
    if (assuming.empty()) {
      q = "(check-sat)";
    } else {
      q = "(check-sat-assuming (";
      for (size_t i = 0; i < assuming.size(); ++i) {
        const std::string& name = names[static_cast<size_t>(std::abs(assuming[i])) - 1];
        if (i) q += " ";
        q += assuming[i] > 0 ? name : "(not " + name + ")";
      }
      q += "))";
    }
    q += "\n(get-value (";
    for (size_t i = 0; i < names.size(); ++i) q += (i ? " " : "") + names[i];
    q += "))";
    proc_->queue(q);
    auto lines = proc_->request();
    if (stats_) ++stats_->sat_checks;
    bool sat = false;
    std::vector<std::string> rest;
    for (size_t i = 0; i < lines.size(); ++i) {
      if (lines[i] == "sat") {
        sat = true;
        rest.assign(lines.begin() + static_cast<long>(i) + 1, lines.end());
        break;
      }
      if (lines[i] == "unsat") return std::nullopt;
      if (benign_error(lines[i])) continue;
      if (lines[i] == "unknown" || lines[i].rfind("(error", 0) == 0)
        throw SolverError("Boolean session failed: " + lines[i]);
    }
    if (!sat) throw SolverError("no verdict from Boolean session");
    return parse_values(rest, names);
  }

  std::vector<bool> model(const std::vector<std::string>& names) {
    std::string q = "(get-value (";
    for (size_t i = 0; i < names.size(); ++i) q += (i ? " " : "") + names[i];
    q += "))";
    proc_->queue(q);
    auto lines = proc_->request();
    return parse_values(lines, names);
  }

 private:
  static std::vector<bool> parse_values(const std::vector<std::string>& lines,
                                        const std::vector<std::string>& names) {
    std::string all;
    for (const auto& l : lines) {
      if (l.rfind("(error", 0) == 0) throw SolverError("get-value failed: " + l);
      all += l + " ";
    }
    // Reply shape: ((name true) (name false) ...). Scan name/value pairs.
    std::unordered_map<std::string, bool> values;
    size_t i = 0;
    while (i < all.size()) {
      size_t t = all.find("true", i);
      size_t f = all.find("false", i);
      size_t hit = std::min(t, f);
      if (hit == std::string::npos) break;
      size_t name_end = all.find_last_not_of(" \t", hit - 1);
      size_t name_start = all.find_last_of("( \t", name_end);
      values[all.substr(name_start + 1, name_end - name_start)] = (hit == t);
      i = hit + (hit == t ? 4 : 5);
    }
    std::vector<bool> out;
    for (const auto& n : names) {
      auto it = values.find(n);
      if (it == values.end()) throw SolverError("model missing value for " + n);
      out.push_back(it->second);
    }
    return out;
  }

  // Unknown-option complaints from backends that lack a tuning knob are
  // harmless; everything else coming back as an error is fatal.
  static bool benign_error(const std::string& line) {
    return line.rfind("(error", 0) == 0 &&
           (line.find("unknown option") != std::string::npos ||
            line.find("unsupported") != std::string::npos);
  }

  bool read_verdict() {
    auto lines = proc_->request();
    if (stats_) ++stats_->sat_checks;
    for (const auto& l : lines) {
      if (l == "sat") return true;
      if (l == "unsat") return false;
      if (benign_error(l)) continue;
      if (l == "unknown" || l.rfind("(error", 0) == 0)
        throw SolverError("Boolean session failed: " + l);
    }
    throw SolverError("no verdict from Boolean session");
  }

  void declare(const std::string& prefix, int from, int to) {
    std::string s;
    for (int i = from; i < to; ++i)
      s += "(declare-const " + prefix + std::to_string(i) + " Bool)\n";
    if (!s.empty()) proc_->queue(s);
  }

  SolverConfig cfg_;
  std::unique_ptr<SolverProcess> proc_;
  std::vector<std::string> names_;
  GatewayStats* stats_ = nullptr;
};

}  // namespace boolabs
