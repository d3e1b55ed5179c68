// literals.hpp -- the specification document model: declared variables, the
// canonical literal table, theory sort checking, substitution into the
// propositional skeleton, and variable-sharing clusters.

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include <boolabs/ltl.hpp>

namespace boolabs {

struct Literal {
  Atom atom;
  std::vector<std::string> vars;  // distinct, in order of first occurrence
  bool has_env = false;
  bool has_sys = false;
};

struct LiteralTable {
  std::vector<Literal> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// Occurrence of an atom relative to the table: entry index plus polarity.
// `(x >= 2)` against a table containing `(x < 2)` resolves to that entry
// with `negated` set.
struct CanonLit {
  int index = -1;
  bool negated = false;
};

// A theory specification: declarations plus a formula whose leaves are atoms.
struct TheorySpec {
  Theory theory = Theory::LIA;
  std::vector<Variable> vars;
  FormulaPtr formula;

  const Variable* find_var(const std::string& name) const {
    for (const auto& v : vars)
      if (v.name == name) return &v;
    return nullptr;
  }
};

namespace detail {

inline void collect_term_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case Term::Kind::Const: return;
    case Term::Kind::Var:
      if (std::find(out.begin(), out.end(), t->var) == out.end()) out.push_back(t->var);
      return;
    case Term::Kind::Neg: collect_term_vars(t->lhs, out); return;
    default:
      collect_term_vars(t->lhs, out);
      collect_term_vars(t->rhs, out);
      return;
  }
}

// Sort of a term under the given theory.  Under LRA/NRA every integer
// variable and constant is promoted to Real, so everything checks as Real;
// under LIA any Real ingredient is a sort error.  Returns true when the term
// contains a variable (needed for the linearity check on products).
inline bool check_term_sorts(const TermPtr& t, const TheorySpec& spec) {
  switch (t->kind) {
    case Term::Kind::Const:
      if (spec.theory == Theory::LIA && t->value.denominator() != 1)
        throw ParseError("non-integer constant '" + to_string(t->value) + "' under LIA");
      return false;
    case Term::Kind::Var: {
      const Variable* v = spec.find_var(t->var);
      if (!v) throw ParseError("undeclared variable '" + t->var + "'");
      if (spec.theory == Theory::LIA && v->sort == VarSort::Real)
        throw ParseError("real variable '" + t->var + "' under LIA");
      return true;
    }
    case Term::Kind::Neg: return check_term_sorts(t->lhs, spec);
    case Term::Kind::Mul: {
      bool lv = check_term_sorts(t->lhs, spec);
      bool rv = check_term_sorts(t->rhs, spec);
      if (lv && rv && spec.theory != Theory::NRA)
        throw ParseError("nonlinear product requires theory NRA");
      return lv || rv;
    }
    case Term::Kind::Div: {
      bool lv = check_term_sorts(t->lhs, spec);
      bool rv = check_term_sorts(t->rhs, spec);
      if (rv) {
        // Variable divisors are nonlinear; the solver treats x/0 as an
        // unconstrained total function, same as the source material relies on.
        if (spec.theory != Theory::NRA)
          throw ParseError("variable divisor requires theory NRA");
        return true;
      }
      if (!is_const(t->rhs)) throw ParseError("divisor must be a constant");
      if (t->rhs->value == Rat(0)) throw ParseError("division by zero");
      if (spec.theory == Theory::LIA &&
          (t->rhs->value.denominator() != 1 || t->rhs->value.numerator() <= 0))
        throw ParseError("integer division requires a positive integer divisor");
      return lv;
    }
    default: {
      bool lv = check_term_sorts(t->lhs, spec);
      bool rv = check_term_sorts(t->rhs, spec);
      return lv || rv;
    }
  }
}

}  // namespace detail

inline void check_atom_sorts(const Atom& a, const TheorySpec& spec) {
  for (const auto& c : a.conjuncts) {
    detail::check_term_sorts(c.lhs, spec);
    detail::check_term_sorts(c.rhs, spec);
  }
}

// The relop-flipped complement of a single-comparison atom; conjunction
// atoms have no atom-shaped complement (their negation is a disjunction).
inline bool atom_complement(const Atom& a, Atom& out) {
  if (a.conjuncts.size() != 1) return false;
  out = a;
  out.conjuncts[0].op = flip(a.conjuncts[0].op);
  return true;
}

inline Literal make_literal(const Atom& a, const TheorySpec& spec) {
  Literal lit;
  lit.atom = a;
  for (const auto& c : a.conjuncts) {
    detail::collect_term_vars(c.lhs, lit.vars);
    detail::collect_term_vars(c.rhs, lit.vars);
  }
  for (const auto& name : lit.vars) {
    const Variable* v = spec.find_var(name);
    if (!v) throw ParseError("undeclared variable '" + name + "'");
    (v->owner == Owner::Env ? lit.has_env : lit.has_sys) = true;
  }
  return lit;
}

// Canonicalize an atom against a table: reuse an existing entry (same atom,
// or the relop-flipped complement of one), otherwise append.  Matching is
// purely syntactic on the folded term trees; the deterministic printer is
// the comparison key.
class LiteralIndex {
 public:
  explicit LiteralIndex(const TheorySpec& spec) : spec_(spec) {}

  CanonLit canonicalize(const Atom& a, LiteralTable& table) {
    check_atom_sorts(a, spec_);
    std::string key = to_string(a);
    if (auto it = by_key_.find(key); it != by_key_.end()) return {it->second, false};
    Atom comp;
    if (atom_complement(a, comp)) {
      if (auto it = by_key_.find(to_string(comp)); it != by_key_.end())
        return {it->second, true};
    }
    int idx = table.size();
    table.entries.push_back(make_literal(a, spec_));
    by_key_.emplace(std::move(key), idx);
    return {idx, false};
  }

 private:
  const TheorySpec& spec_;
  std::unordered_map<std::string, int> by_key_;
};

namespace detail {

inline FormulaPtr substitute_walk(const FormulaPtr& f, LiteralIndex& index, LiteralTable& table) {
  switch (f->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False:
    case Formula::Kind::Prop: return f;
    case Formula::Kind::Atom: {
      CanonLit c = index.canonicalize(f->atom, table);
      FormulaPtr p = mk_prop("s" + std::to_string(c.index));
      return c.negated ? mk_not(p) : p;
    }
    case Formula::Kind::Not:
    case Formula::Kind::Next:
    case Formula::Kind::Always:
    case Formula::Kind::Eventually: {
      FormulaPtr sub = substitute_walk(f->lhs, index, table);
      if (sub == f->lhs) return f;
      return mk_unary(f->kind, sub);
    }
    default: {
      FormulaPtr a = substitute_walk(f->lhs, index, table);
      FormulaPtr b = substitute_walk(f->rhs, index, table);
      if (a == f->lhs && b == f->rhs) return f;
      return mk_binary(f->kind, a, b);
    }
  }
}

}  // namespace detail

// One left-to-right walk builds the table and the substituted skeleton
// together: atom occurrences map to s<i> (negated occurrences to !s<i>),
// everything else is preserved.  A second run over an already-propositional
// formula returns it unchanged.
inline FormulaPtr substitute(const TheorySpec& spec, LiteralTable& table) {
  LiteralIndex index(spec);
  return detail::substitute_walk(spec.formula, index, table);
}

inline LiteralTable collect_literals(const TheorySpec& spec) {
  LiteralTable table;
  substitute(spec, table);
  return table;
}

// ---------------------------------------------------------------------------
// Clusters: connected components of the literal graph whose edges join
// literals sharing a theory variable.  Ordered by smallest member index.
// ---------------------------------------------------------------------------

struct Cluster {
  std::vector<int> lits;              // ascending table indices
  std::vector<std::string> vars;      // distinct, order of first occurrence
  std::vector<std::string> env_vars;  // subsets of `vars` split by owner
  std::vector<std::string> sys_vars;
};

inline std::vector<Cluster> cluster_literals(const LiteralTable& table, const TheorySpec& spec,
                                             bool enabled = true) {
  int n = table.size();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  if (!enabled) {
    for (int i = 1; i < n; ++i) unite(0, i);
  } else {
    std::unordered_map<std::string, int> first_use;
    for (int i = 0; i < n; ++i)
      for (const auto& v : table.entries[i].vars) {
        auto [it, fresh] = first_use.emplace(v, i);
        if (!fresh) unite(it->second, i);
      }
  }

  std::map<int, Cluster> by_root;
  for (int i = 0; i < n; ++i) {
    Cluster& c = by_root[find(i)];
    c.lits.push_back(i);
    for (const auto& v : table.entries[i].vars)
      if (std::find(c.vars.begin(), c.vars.end(), v) == c.vars.end()) c.vars.push_back(v);
  }

  std::vector<Cluster> out;
  for (auto& [root, c] : by_root) out.push_back(std::move(c));
  std::sort(out.begin(), out.end(),
            [](const Cluster& a, const Cluster& b) { return a.lits.front() < b.lits.front(); });
  for (auto& c : out)
    for (const auto& name : c.vars) {
      const Variable* v = spec.find_var(name);
      (v->owner == Owner::Env ? c.env_vars : c.sys_vars).push_back(name);
    }
  return out;
}

// Everything a solver query needs to know about one cluster: its literals
// (cluster-local index order) and the variables they range over.
struct ClusterView {
  Theory theory = Theory::LIA;
  std::vector<Literal> lits;
  std::vector<Variable> env_vars;
  std::vector<Variable> sys_vars;

  int size() const { return static_cast<int>(lits.size()); }
};

inline ClusterView make_cluster_view(const TheorySpec& spec, const LiteralTable& table,
                                     const Cluster& cluster) {
  ClusterView view;
  view.theory = spec.theory;
  for (int idx : cluster.lits) view.lits.push_back(table.entries[idx]);
  for (const auto& name : cluster.env_vars) view.env_vars.push_back(*spec.find_var(name));
  for (const auto& name : cluster.sys_vars) view.sys_vars.push_back(*spec.find_var(name));
  return view;
}

// Single-cluster view over the whole table (clustering disabled or tests).
inline ClusterView make_full_view(const TheorySpec& spec, const LiteralTable& table) {
  auto clusters = cluster_literals(table, spec, /*enabled=*/false);
  if (clusters.empty()) return ClusterView{spec.theory, {}, {}, {}};
  return make_cluster_view(spec, table, clusters[0]);
}

}  // namespace boolabs
