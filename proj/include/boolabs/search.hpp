// search.hpp -- SAT-guided discovery of valid reactions: the model loop, the
// nested search with its inner invalid-core exploration, and the heuristics
// that meter how much inner work each invalid reaction deserves.

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <boolabs/choice_set.hpp>
#include <boolabs/io.hpp>
#include <boolabs/literals.hpp>
#include <boolabs/reactions.hpp>
#include <boolabs/smt.hpp>

namespace boolabs {

// Remaining inner budget after `entries` previous inner-loop entries: the
// decay period dc removes one query from the allowance per dc entries.
inline int current_fatigue(const HeuristicSetup& h, int entries) {
  if (h.dc > 0) return std::max(0, h.mxi - entries / h.dc);
  return h.mxi;
}

// Monotone verdict ledger.  Validity propagates down the quasi-reaction
// order and invalidity up, so any verdict the solver has produced settles
// every candidate on the right side of a recorded one for free; only
// candidates incomparable to everything seen so far reach the solver.  The
// derived verdicts equal what the solver would have answered, so the search
// trajectory is unchanged -- this only removes redundant queries.
class ValidityLedger {
 public:
  Verdict check(const QuasiReaction& q, QueryTag tag, SmtGateway& gateway) {
    for (const auto& v : valid_)
      if (leq(q, v)) return Verdict::Valid;
    for (const auto& i : invalid_)
      if (leq(i, q)) return Verdict::Invalid;
    Verdict v = gateway.check(q, tag);
    (v == Verdict::Valid ? valid_ : invalid_).push_back(q);
    return v;
  }

 private:
  std::vector<QuasiReaction> valid_, invalid_;
};

namespace detail {

inline void guard_sat_width(const ClusterView& view, int lit_cap) {
  if (view.size() > lit_cap)
    throw CapacityError("SAT-guided search over " + std::to_string(view.size()) +
                        " literals exceeds the cap of " + std::to_string(lit_cap) +
                        " (choice variable count 2^" + std::to_string(view.size()) + ")");
}

inline QuasiReaction reaction_of_model(const std::vector<bool>& model) {
  uint32_t nc = static_cast<uint32_t>(model.size());
  ChoiceSet p(nc), a(nc);
  for (uint32_t c = 0; c < nc; ++c) (model[c] ? p : a).set(c);
  return make_quasi(std::move(p), std::move(a));
}

// Clause forms used by both loops; literals are 1-based with sign.
inline std::vector<int> negate_potentials(const QuasiReaction& q) {
  std::vector<int> cl;
  for (uint32_t c : q.P.bits()) cl.push_back(-static_cast<int>(c) - 1);
  return cl;
}

inline std::vector<int> require_some_antipotential(const QuasiReaction& q) {
  std::vector<int> cl;
  for (uint32_t c : q.A.bits()) cl.push_back(static_cast<int>(c) + 1);
  return cl;
}

inline std::vector<int> negate_assignment(const QuasiReaction& q) {
  std::vector<int> cl = negate_potentials(q);
  for (uint32_t c : q.A.bits()) cl.push_back(static_cast<int>(c) + 1);
  return cl;
}

// Shared invalid-branch fallback: prune by the all-antipotential core when it
// is itself invalid, otherwise settle for blocking this one assignment.
inline void prune_after_invalid(const QuasiReaction& q, SmtGateway& gateway,
                                ValidityLedger& ledger, BoolSession& sess) {
  QuasiReaction anti = make_quasi(ChoiceSet(q.P.universe()), q.A);
  if (ledger.check(anti, QueryTag::Outer, gateway) == Verdict::Invalid)
    sess.add_clause(require_some_antipotential(q), sess.names());
  else
    sess.add_clause(negate_assignment(q), sess.names());
}

// Draws the next model from the clause set, or nothing once it closes.
// Left to itself the backend hands back models hugging one end of the choice
// lattice, and the enumeration crawls: reactions with few potentials are
// almost all invalid and each one buys only a weak clause.  Spread draws out
// instead with reproducible random polarity preferences, offered as
// assumptions and relaxed (halving the enforced prefix) until satisfiable.
// Mid-lattice reactions make both pruning directions bite: a valid reaction
// excludes its whole up-set, an invalid antipotential core its whole
// down-set, and the clause set closes after few iterations.
inline std::optional<std::vector<bool>> next_model(BoolSession& sess, std::mt19937& rng) {
  const auto& names = sess.names();
  size_t n = names.size();
  std::vector<int> prefs(n);
  for (size_t i = 0; i < n; ++i)
    prefs[i] = (rng() & 1u) ? static_cast<int>(i) + 1 : -static_cast<int>(i) - 1;
  for (size_t k = n; k > 0; k /= 2) {
    auto m = sess.check_model(names, {prefs.begin(), prefs.begin() + static_cast<long>(k)});
    if (m) return m;
  }
  return sess.check_model(names);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Inner loop: explore quasi-reactions under an invalid reaction r, collecting
// smaller reactions that are themselves invalid.  Mask variable m_i decides
// whether choice i is dropped from the candidate; a model is read as "mask
// where true".  The session clauses record what is classified already: a
// valid candidate forces later models to unmask something it masked (its
// whole down-set is valid), an invalid one forces masking something it kept
// (its whole up-set is invalid).  Every model is therefore an unexplored
// seed.  Candidates between seeds are shrunk by binary halving, which lands
// on small invalid cores in logarithmically many validity checks; the
// smaller the core, the larger the slice of the outer search it excludes.
// ---------------------------------------------------------------------------

inline std::vector<QuasiReaction> inner_loop(const QuasiReaction& r, int fatigue,
                                             SmtGateway& gateway, ValidityLedger& ledger,
                                             BoolSession& sess) {
  std::vector<QuasiReaction> found;
  uint32_t nc = r.P.universe();
  if (fatigue > 0 && nc > 1) {
    sess.push();
    auto m = sess.declare_block("m", static_cast<int>(nc));
    std::vector<int> some_masked, some_kept;
    for (uint32_t i = 0; i < nc; ++i) {
      some_masked.push_back(static_cast<int>(i) + 1);
      some_kept.push_back(-static_cast<int>(i) - 1);
    }
    sess.add_clause(some_masked, m);
    sess.add_clause(some_kept, m);

    auto record = [&](const ChoiceSet& kept, const QuasiReaction& q, Verdict v) {
      std::vector<int> clause;
      if (v == Verdict::Valid) {
        for (uint32_t i : kept.complement().bits()) clause.push_back(-static_cast<int>(i) - 1);
      } else {
        found.push_back(q);
        for (uint32_t i : kept.bits()) clause.push_back(static_cast<int>(i) + 1);
      }
      sess.add_clause(clause, m);
    };
    auto classify = [&](const ChoiceSet& kept) {
      QuasiReaction q = make_quasi(r.P & kept, r.A & kept);
      Verdict v = ledger.check(q, QueryTag::Inner, gateway);
      --fatigue;
      record(kept, q, v);
      return v;
    };

    // The reaction under investigation is invalid by assumption, so halving
    // starts from its full support without spending a query on it.
    ChoiceSet cur = r.P | r.A;
    while (fatigue > 0) {
      if (cur.count() <= 1) {
        // Shrunk as far as halving goes: fetch a fresh unexplored seed.
        auto model = sess.check_model(m);
        if (!model) break;
        ChoiceSet kept(nc);
        for (uint32_t i = 0; i < nc; ++i)
          if (!(*model)[i]) kept.set(i);
        if (classify(kept) == Verdict::Invalid) cur = kept;
        continue;
      }
      // Try to drop either half of the current invalid kept-set.
      auto bits = cur.bits();
      ChoiceSet lo(nc), hi(nc);
      for (size_t i = 0; i < bits.size(); ++i)
        (i < (bits.size() + 1) / 2 ? lo : hi).set(bits[i]);
      if (classify(hi) == Verdict::Invalid) {
        cur = hi;
        continue;
      }
      if (fatigue <= 0) break;
      if (classify(lo) == Verdict::Invalid) {
        cur = lo;
        continue;
      }
      // Neither half alone is invalid; cur is as small as halving gets.
      cur = ChoiceSet(nc);
    }
    sess.pop();
  }
  if (found.empty()) return {r};

  // Keep only the minimal elements: anything above another collected
  // quasi-reaction prunes strictly less.
  std::vector<QuasiReaction> minimal;
  for (size_t i = 0; i < found.size(); ++i) {
    bool dominated = false;
    for (size_t j = 0; j < found.size() && !dominated; ++j)
      if (j != i && leq(found[j], found[i]) && !(found[j].P == found[i].P && found[j].A == found[i].A))
        dominated = true;
    if (!dominated) minimal.push_back(found[i]);
  }
  return minimal;
}

// ---------------------------------------------------------------------------
// Outer loops.
// ---------------------------------------------------------------------------

// Model loop: enumerate reactions through a SAT solver over one variable per
// choice, prune after every verdict, stop when the clause set closes.
inline ValidReactionSet model_loop(const ClusterView& view, SmtGateway& gateway,
                                   const SolverConfig& sat_cfg, int lit_cap = 12) {
  detail::guard_sat_width(view, lit_cap);
  uint32_t nc = enumerate_choices(view.size());
  BoolSession sess(sat_cfg);
  sess.open(static_cast<int>(nc), "z", &gateway.stats());
  std::vector<int> some_potential;
  for (uint32_t i = 0; i < nc; ++i) some_potential.push_back(static_cast<int>(i) + 1);
  sess.add_clause(some_potential, sess.names());

  ValidReactionSet vr;
  ValidityLedger ledger;
  std::mt19937 rng(sat_cfg.seed);
  while (auto model = detail::next_model(sess, rng)) {
    QuasiReaction q = detail::reaction_of_model(*model);
    if (ledger.check(q, QueryTag::Outer, gateway) == Verdict::Valid) {
      sess.add_clause(detail::negate_potentials(q), sess.names());
      vr.push_back(std::move(q));
    } else {
      detail::prune_after_invalid(q, gateway, ledger, sess);
    }
  }
  return vr;
}

// Nested search: the model loop, but an invalid reaction may trigger the
// inner exploration, whose cores prune far more of the outer space.
inline ValidReactionSet nested_loop(const ClusterView& view, SmtGateway& gateway,
                                    const SolverConfig& sat_cfg, const HeuristicSetup& h,
                                    int lit_cap = 12) {
  detail::guard_sat_width(view, lit_cap);
  uint32_t nc = enumerate_choices(view.size());
  BoolSession sess(sat_cfg);
  sess.open(static_cast<int>(nc), "z", &gateway.stats());
  std::vector<int> some_potential;
  for (uint32_t i = 0; i < nc; ++i) some_potential.push_back(static_cast<int>(i) + 1);
  sess.add_clause(some_potential, sess.names());

  ValidReactionSet vr;
  ValidityLedger ledger;
  std::mt19937 rng(sat_cfg.seed);
  int invalid_count = 0;
  int entries = 0;
  while (auto model = detail::next_model(sess, rng)) {
    QuasiReaction q = detail::reaction_of_model(*model);
    if (ledger.check(q, QueryTag::Outer, gateway) == Verdict::Valid) {
      sess.add_clause(detail::negate_potentials(q), sess.names());
      vr.push_back(std::move(q));
      continue;
    }
    int fatigue = current_fatigue(h, entries);
    bool enter = fatigue > 0 && invalid_count % h.md == 0;
    if (enter && h.acore) {
      QuasiReaction anti = make_quasi(ChoiceSet(nc), q.A);
      enter = ledger.check(anti, QueryTag::Outer, gateway) == Verdict::Invalid;
      if (enter) {
        // The gate just certified the all-antipotential core; its clause is
        // free and never weaker than what the inner cores contribute.
        sess.add_clause(detail::require_some_antipotential(q), sess.names());
      }
    }
    ++invalid_count;
    if (!enter) {
      // Closed gate: behave exactly like the model loop (the antipotential
      // query above, if any, costs nothing the second time around).
      detail::prune_after_invalid(q, gateway, ledger, sess);
      continue;
    }
    ++entries;
    for (const auto& core : inner_loop(q, fatigue, gateway, ledger, sess))
      sess.add_clause(detail::negate_assignment(core), sess.names());
  }
  return vr;
}

}  // namespace boolabs
