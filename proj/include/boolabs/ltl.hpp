// ltl.hpp -- abstract syntax for LTL specifications whose atoms are
// arithmetic comparisons over a first-order theory, plus the purely
// propositional fragment produced by the abstraction.

#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <boolabs/errors.hpp>

namespace boolabs {

enum class Theory { LIA, LRA, NRA };

inline std::string to_string(Theory t) {
  switch (t) {
    case Theory::LIA: return "LIA";
    case Theory::LRA: return "LRA";
    case Theory::NRA: return "NRA";
  }
  return "?";
}

enum class VarSort { Int, Real };
enum class Owner { Env, Sys };

struct Variable {
  std::string name;
  VarSort sort = VarSort::Int;
  Owner owner = Owner::Env;
};

// Exact rational arithmetic for constants.  Desk-scale inputs keep the
// numerators/denominators tiny, so a 64-bit rational is plenty.
using Rat = boost::rational<long long>;

inline std::string to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ---------------------------------------------------------------------------
// Terms.
// ---------------------------------------------------------------------------

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
  enum class Kind { Const, Var, Add, Sub, Neg, Mul, Div };
  Kind kind;
  Rat value;           // Const
  std::string var;     // Var
  TermPtr lhs, rhs;    // binary nodes; Neg uses lhs only
};

inline TermPtr mk_const(const Rat& v) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Const;
  t->value = v;
  return t;
}

inline TermPtr mk_var(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Var;
  t->var = std::move(name);
  return t;
}

inline bool is_const(const TermPtr& t) { return t->kind == Term::Kind::Const; }

// Builders fold constant operands eagerly, so structural equality of built
// terms is "equality after constant folding".  Division keeps its node when
// the dividend is non-constant: under integer semantics `b / 10` is Euclidean
// division and must not be rewritten into a rational multiple.
inline TermPtr mk_binary(Term::Kind k, TermPtr a, TermPtr b) {
  if (is_const(a) && is_const(b)) {
    switch (k) {
      case Term::Kind::Add: return mk_const(a->value + b->value);
      case Term::Kind::Sub: return mk_const(a->value - b->value);
      case Term::Kind::Mul: return mk_const(a->value * b->value);
      case Term::Kind::Div:
        if (b->value == Rat(0)) throw ParseError("division by zero in constant term");
        return mk_const(a->value / b->value);
      default: break;
    }
  }
  auto t = std::make_shared<Term>();
  t->kind = k;
  t->lhs = std::move(a);
  t->rhs = std::move(b);
  return t;
}

inline TermPtr mk_neg(TermPtr a) {
  if (is_const(a)) return mk_const(-a->value);
  auto t = std::make_shared<Term>();
  t->kind = Term::Kind::Neg;
  t->lhs = std::move(a);
  return t;
}

inline bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Term::Kind::Const: return a->value == b->value;
    case Term::Kind::Var: return a->var == b->var;
    case Term::Kind::Neg: return term_equal(a->lhs, b->lhs);
    default: return term_equal(a->lhs, b->lhs) && term_equal(a->rhs, b->rhs);
  }
}

namespace detail {

inline int term_prec(Term::Kind k) {
  switch (k) {
    case Term::Kind::Add:
    case Term::Kind::Sub: return 1;
    case Term::Kind::Mul:
    case Term::Kind::Div: return 2;
    case Term::Kind::Neg: return 3;
    default: return 4;
  }
}

inline void term_print(const TermPtr& t, std::string& out) {
  auto child = [&](const TermPtr& c, bool needs_paren) {
    if (needs_paren) {
      out += '(';
      term_print(c, out);
      out += ')';
    } else {
      term_print(c, out);
    }
  };
  int p = term_prec(t->kind);
  switch (t->kind) {
    case Term::Kind::Const: out += to_string(t->value); return;
    case Term::Kind::Var: out += t->var; return;
    case Term::Kind::Neg:
      out += '-';
      child(t->lhs, term_prec(t->lhs->kind) < p);
      return;
    case Term::Kind::Add:
    case Term::Kind::Sub:
    case Term::Kind::Mul:
    case Term::Kind::Div: {
      const char* op = t->kind == Term::Kind::Add   ? " + "
                       : t->kind == Term::Kind::Sub ? " - "
                       : t->kind == Term::Kind::Mul ? " * "
                                                    : " / ";
      child(t->lhs, term_prec(t->lhs->kind) < p);
      out += op;
      // Left-associative: equal precedence on the right needs parentheses.
      child(t->rhs, term_prec(t->rhs->kind) <= p && term_prec(t->rhs->kind) < 4);
      return;
    }
  }
}

}  // namespace detail

inline std::string to_string(const TermPtr& t) {
  std::string out;
  detail::term_print(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Atoms: comparisons, optionally a conjunction of several comparisons when a
// benchmark literal bundles a range constraint into one entry.
// ---------------------------------------------------------------------------

enum class Relop { Lt, Le, Gt, Ge, Eq, Ne };

inline Relop flip(Relop op) {
  switch (op) {
    case Relop::Lt: return Relop::Ge;
    case Relop::Le: return Relop::Gt;
    case Relop::Gt: return Relop::Le;
    case Relop::Ge: return Relop::Lt;
    case Relop::Eq: return Relop::Ne;
    case Relop::Ne: return Relop::Eq;
  }
  return Relop::Eq;
}

inline std::string to_string(Relop op) {
  switch (op) {
    case Relop::Lt: return "<";
    case Relop::Le: return "<=";
    case Relop::Gt: return ">";
    case Relop::Ge: return ">=";
    case Relop::Eq: return "=";
    case Relop::Ne: return "!=";
  }
  return "?";
}

struct Comparison {
  TermPtr lhs;
  Relop op = Relop::Lt;
  TermPtr rhs;
};

struct Atom {
  std::vector<Comparison> conjuncts;  // nonempty; usually a single comparison
};

inline bool atom_equal(const Atom& a, const Atom& b) {
  if (a.conjuncts.size() != b.conjuncts.size()) return false;
  for (size_t i = 0; i < a.conjuncts.size(); ++i) {
    const auto& x = a.conjuncts[i];
    const auto& y = b.conjuncts[i];
    if (x.op != y.op || !term_equal(x.lhs, y.lhs) || !term_equal(x.rhs, y.rhs)) return false;
  }
  return true;
}

inline std::string to_string(const Atom& a) {
  std::string out;
  bool wrap = a.conjuncts.size() > 1;
  for (size_t i = 0; i < a.conjuncts.size(); ++i) {
    if (i > 0) out += " & ";
    if (wrap) out += '(';
    out += to_string(a.conjuncts[i].lhs);
    out += ' ';
    out += to_string(a.conjuncts[i].op);
    out += ' ';
    out += to_string(a.conjuncts[i].rhs);
    if (wrap) out += ')';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Formulas.  Theory specifications use Atom leaves and never Prop leaves;
// abstracted (Boolean) specifications are the other way around.
// ---------------------------------------------------------------------------

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind {
    True, False, Atom, Prop,
    Not, And, Or, Imp, Iff,
    Next, Always, Eventually, Until, Release
  };
  Kind kind;
  Atom atom;         // Atom
  std::string prop;  // Prop
  FormulaPtr lhs, rhs;
};

inline FormulaPtr mk_bool(bool v) {
  auto f = std::make_shared<Formula>();
  f->kind = v ? Formula::Kind::True : Formula::Kind::False;
  return f;
}

inline FormulaPtr mk_atom(Atom a) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Atom;
  f->atom = std::move(a);
  return f;
}

inline FormulaPtr mk_prop(std::string name) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Prop;
  f->prop = std::move(name);
  return f;
}

inline FormulaPtr mk_unary(Formula::Kind k, FormulaPtr sub) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(sub);
  return f;
}

inline FormulaPtr mk_binary(Formula::Kind k, FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->lhs = std::move(a);
  f->rhs = std::move(b);
  return f;
}

inline FormulaPtr mk_not(FormulaPtr a) { return mk_unary(Formula::Kind::Not, std::move(a)); }
inline FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::And, std::move(a), std::move(b));
}
inline FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::Or, std::move(a), std::move(b));
}
inline FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) {
  return mk_binary(Formula::Kind::Imp, std::move(a), std::move(b));
}
inline FormulaPtr mk_always(FormulaPtr a) { return mk_unary(Formula::Kind::Always, std::move(a)); }
inline FormulaPtr mk_next(FormulaPtr a) { return mk_unary(Formula::Kind::Next, std::move(a)); }

// Conjunction of a list, left-associated; empty list is `true`.
inline FormulaPtr mk_conj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_bool(true);
  FormulaPtr acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_and(acc, fs[i]);
  return acc;
}

inline FormulaPtr mk_disj(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return mk_bool(false);
  FormulaPtr acc = fs[0];
  for (size_t i = 1; i < fs.size(); ++i) acc = mk_or(acc, fs[i]);
  return acc;
}

inline bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Atom: return atom_equal(a->atom, b->atom);
    case Formula::Kind::Prop: return a->prop == b->prop;
    case Formula::Kind::Not:
    case Formula::Kind::Next:
    case Formula::Kind::Always:
    case Formula::Kind::Eventually: return formula_equal(a->lhs, b->lhs);
    default: return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

namespace detail {

// Printing precedence; higher binds tighter.  Unary operators (! X G F) sit
// above U/R, which sit above & | -> <->.
inline int formula_prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Iff: return 1;
    case Formula::Kind::Imp: return 2;
    case Formula::Kind::Or: return 3;
    case Formula::Kind::And: return 4;
    case Formula::Kind::Until:
    case Formula::Kind::Release: return 5;
    case Formula::Kind::Not:
    case Formula::Kind::Next:
    case Formula::Kind::Always:
    case Formula::Kind::Eventually: return 6;
    default: return 7;
  }
}

inline void formula_print(const FormulaPtr& f, std::string& out) {
  auto child = [&](const FormulaPtr& c, bool needs_paren) {
    if (needs_paren) {
      out += '(';
      formula_print(c, out);
      out += ')';
    } else {
      formula_print(c, out);
    }
  };
  int p = formula_prec(f->kind);
  switch (f->kind) {
    case Formula::Kind::True: out += "true"; return;
    case Formula::Kind::False: out += "false"; return;
    case Formula::Kind::Atom: out += to_string(f->atom); return;
    case Formula::Kind::Prop: out += f->prop; return;
    case Formula::Kind::Not:
      out += '!';
      child(f->lhs, formula_prec(f->lhs->kind) < p);
      return;
    case Formula::Kind::Next:
    case Formula::Kind::Always:
    case Formula::Kind::Eventually: {
      out += f->kind == Formula::Kind::Next     ? 'X'
             : f->kind == Formula::Kind::Always ? 'G'
                                                : 'F';
      out += ' ';
      child(f->lhs, formula_prec(f->lhs->kind) < p);
      return;
    }
    default: {
      const char* op = nullptr;
      bool right_assoc = false;
      switch (f->kind) {
        case Formula::Kind::And: op = " & "; break;
        case Formula::Kind::Or: op = " | "; break;
        case Formula::Kind::Imp: op = " -> "; right_assoc = true; break;
        case Formula::Kind::Iff: op = " <-> "; right_assoc = true; break;
        case Formula::Kind::Until: op = " U "; right_assoc = true; break;
        case Formula::Kind::Release: op = " R "; right_assoc = true; break;
        default: throw InternalError("unprintable formula node");
      }
      int lp = formula_prec(f->lhs->kind);
      int rp = formula_prec(f->rhs->kind);
      child(f->lhs, right_assoc ? lp <= p : lp < p);
      out += op;
      child(f->rhs, right_assoc ? rp < p : rp <= p);
      return;
    }
  }
}

}  // namespace detail

inline std::string to_string(const FormulaPtr& f) {
  std::string out;
  detail::formula_print(f, out);
  return out;
}

}  // namespace boolabs
