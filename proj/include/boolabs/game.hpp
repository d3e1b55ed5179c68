// game.hpp -- desk-scale realizability checking for Boolean documents in the
// always-of-(current, next) fragment, by explicit safety-game fixpoint.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <boolabs/io.hpp>
#include <boolabs/ltl.hpp>

namespace boolabs {

// Propositional predicate over a state pair, with variables resolved to bit
// positions: `primed` reads from the successor state.
struct GameExpr;
using GameExprPtr = std::shared_ptr<const GameExpr>;

struct GameExpr {
  enum class Kind { Const, Var, Not, And, Or, Imp, Iff };
  Kind kind;
  bool value = false;  // Const
  int var = -1;        // Var: bit index
  bool primed = false;
  GameExprPtr lhs, rhs;
};

inline GameExprPtr mk_game_const(bool v) {
  auto e = std::make_shared<GameExpr>();
  e->kind = GameExpr::Kind::Const;
  e->value = v;
  return e;
}

inline GameExprPtr mk_game_var(int var, bool primed) {
  auto e = std::make_shared<GameExpr>();
  e->kind = GameExpr::Kind::Var;
  e->var = var;
  e->primed = primed;
  return e;
}

inline GameExprPtr mk_game_node(GameExpr::Kind k, GameExprPtr a, GameExprPtr b = nullptr) {
  auto e = std::make_shared<GameExpr>();
  e->kind = k;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

inline bool eval(const GameExprPtr& e, uint32_t cur, uint32_t nxt) {
  switch (e->kind) {
    case GameExpr::Kind::Const: return e->value;
    case GameExpr::Kind::Var: return (((e->primed ? nxt : cur) >> e->var) & 1) != 0;
    case GameExpr::Kind::Not: return !eval(e->lhs, cur, nxt);
    case GameExpr::Kind::And: return eval(e->lhs, cur, nxt) && eval(e->rhs, cur, nxt);
    case GameExpr::Kind::Or: return eval(e->lhs, cur, nxt) || eval(e->rhs, cur, nxt);
    case GameExpr::Kind::Imp: return !eval(e->lhs, cur, nxt) || eval(e->rhs, cur, nxt);
    case GameExpr::Kind::Iff: return eval(e->lhs, cur, nxt) == eval(e->rhs, cur, nxt);
  }
  throw InternalError("unreachable game expression kind");
}

// State layout: environment inputs occupy the low bits, system outputs the
// high bits, each in declaration order.
struct PairConstraint {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  GameExprPtr body;

  int num_vars() const { return static_cast<int>(inputs.size() + outputs.size()); }
};

namespace detail {

inline GameExprPtr pair_body(const FormulaPtr& f,
                             const std::unordered_map<std::string, int>& var_bits,
                             bool primed) {
  switch (f->kind) {
    case Formula::Kind::True: return mk_game_const(true);
    case Formula::Kind::False: return mk_game_const(false);
    case Formula::Kind::Prop: {
      auto it = var_bits.find(f->prop);
      if (it == var_bits.end())
        throw FragmentError("proposition '" + f->prop + "' is not declared");
      return mk_game_var(it->second, primed);
    }
    case Formula::Kind::Atom:
      throw FragmentError("theory atom in a Boolean document: " + to_string(f->atom));
    case Formula::Kind::Not:
      return mk_game_node(GameExpr::Kind::Not, pair_body(f->lhs, var_bits, primed));
    case Formula::Kind::And:
      return mk_game_node(GameExpr::Kind::And, pair_body(f->lhs, var_bits, primed),
                          pair_body(f->rhs, var_bits, primed));
    case Formula::Kind::Or:
      return mk_game_node(GameExpr::Kind::Or, pair_body(f->lhs, var_bits, primed),
                          pair_body(f->rhs, var_bits, primed));
    case Formula::Kind::Imp:
      return mk_game_node(GameExpr::Kind::Imp, pair_body(f->lhs, var_bits, primed),
                          pair_body(f->rhs, var_bits, primed));
    case Formula::Kind::Iff:
      return mk_game_node(GameExpr::Kind::Iff, pair_body(f->lhs, var_bits, primed),
                          pair_body(f->rhs, var_bits, primed));
    case Formula::Kind::Next:
      if (primed) throw FragmentError("nested next operator outside the supported fragment");
      return pair_body(f->lhs, var_bits, true);
    case Formula::Kind::Always:
      throw FragmentError("always operator below the top level");
    case Formula::Kind::Eventually:
      throw FragmentError("eventually operator outside the supported fragment");
    case Formula::Kind::Until:
      throw FragmentError("until operator outside the supported fragment");
    case Formula::Kind::Release:
      throw FragmentError("release operator outside the supported fragment");
  }
  throw InternalError("unreachable formula kind");
}

inline void collect_guarded(const FormulaPtr& f,
                            const std::unordered_map<std::string, int>& var_bits,
                            std::vector<GameExprPtr>& bodies) {
  switch (f->kind) {
    case Formula::Kind::And:
      collect_guarded(f->lhs, var_bits, bodies);
      collect_guarded(f->rhs, var_bits, bodies);
      return;
    case Formula::Kind::True: return;
    case Formula::Kind::Always:
      bodies.push_back(pair_body(f->lhs, var_bits, false));
      return;
    default:
      throw FragmentError(
          "top-level conjunct is not an always-guarded propositional formula");
  }
}

}  // namespace detail

inline PairConstraint to_pair_form(const BooleanSpecDocument& doc) {
  PairConstraint pc;
  pc.inputs = doc.inputs;
  pc.outputs = doc.outputs;
  std::unordered_map<std::string, int> var_bits;
  int bit = 0;
  for (const auto& n : pc.inputs) var_bits[n] = bit++;
  for (const auto& n : pc.outputs) var_bits[n] = bit++;

  std::vector<GameExprPtr> bodies;
  detail::collect_guarded(doc.formula, var_bits, bodies);
  if (bodies.empty()) {
    pc.body = mk_game_const(true);
  } else {
    GameExprPtr acc = bodies[0];
    for (size_t i = 1; i < bodies.size(); ++i)
      acc = mk_game_node(GameExpr::Kind::And, acc, bodies[i]);
    pc.body = acc;
  }
  return pc;
}

// ---------------------------------------------------------------------------
// Safety game.
// ---------------------------------------------------------------------------

struct GameVerdict {
  bool realizable = false;
  int num_inputs = 0;
  int num_outputs = 0;
  std::vector<bool> winning;  // indexed by state valuation
  GameExprPtr body;

  uint32_t state(uint32_t input_bits, uint32_t output_bits) const {
    return input_bits | (output_bits << num_inputs);
  }

  // Lowest winning output response to `input_bits` from state `cur`, if any.
  std::optional<uint32_t> respond(uint32_t cur, uint32_t input_bits) const {
    for (uint32_t o = 0; o < (uint32_t{1} << num_outputs); ++o) {
      uint32_t nxt = state(input_bits, o);
      if (winning[nxt] && eval(body, cur, nxt)) return o;
    }
    return std::nullopt;
  }

  // Lowest winning opening move against the environment's first letter.
  std::optional<uint32_t> initial_output(uint32_t input_bits) const {
    for (uint32_t o = 0; o < (uint32_t{1} << num_outputs); ++o)
      if (winning[state(input_bits, o)]) return o;
    return std::nullopt;
  }
};

inline GameVerdict solve(const PairConstraint& pc, int state_cap_bits = 24) {
  int nv = pc.num_vars();
  if (nv > state_cap_bits)
    throw CapacityError("game over " + std::to_string(nv) + " propositions exceeds the " +
                        std::to_string(state_cap_bits) + "-bit state cap");
  GameVerdict gv;
  gv.num_inputs = static_cast<int>(pc.inputs.size());
  gv.num_outputs = static_cast<int>(pc.outputs.size());
  gv.body = pc.body;
  uint64_t num_states = uint64_t{1} << nv;
  uint32_t num_in = uint32_t{1} << gv.num_inputs;
  uint32_t num_out = uint32_t{1} << gv.num_outputs;
  gv.winning.assign(num_states, true);

  // Greatest fixpoint: repeatedly drop states from which some environment
  // input has no surviving response.
  bool changed = true;
  while (changed) {
    changed = false;
    for (uint64_t v = 0; v < num_states; ++v) {
      if (!gv.winning[v]) continue;
      bool ok = true;
      for (uint32_t i = 0; i < num_in && ok; ++i) {
        bool exists = false;
        for (uint32_t o = 0; o < num_out && !exists; ++o) {
          uint32_t nxt = i | (o << gv.num_inputs);
          if (gv.winning[nxt] && eval(pc.body, static_cast<uint32_t>(v), nxt)) exists = true;
        }
        ok = exists;
      }
      if (!ok) {
        gv.winning[v] = false;
        changed = true;
      }
    }
  }

  gv.realizable = true;
  for (uint32_t i = 0; i < num_in && gv.realizable; ++i) {
    bool exists = false;
    for (uint32_t o = 0; o < num_out && !exists; ++o)
      if (gv.winning[i | (o << gv.num_inputs)]) exists = true;
    gv.realizable = exists;
  }
  return gv;
}

inline GameVerdict check_document(const BooleanSpecDocument& doc, int state_cap_bits = 24) {
  return solve(to_pair_form(doc), state_cap_bits);
}

}  // namespace boolabs
