// reactions.hpp -- exhaustive reaction search and assembly of the Boolean
// specification: decision-variable encodings, the extra requirement, and the
// guarded output formula.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boolabs/choice_set.hpp>
#include <boolabs/io.hpp>
#include <boolabs/literals.hpp>
#include <boolabs/smt.hpp>

namespace boolabs {

using ValidReactionSet = std::vector<QuasiReaction>;

// All 2^n choice bitmasks, ascending.  The result is only a count guard in
// practice; choices are iterated as plain integers elsewhere.
inline uint32_t enumerate_choices(int num_literals, int max_literals = 16) {
  if (num_literals < 0) throw InternalError("negative literal count");
  if (num_literals > max_literals)
    throw CapacityError("choice universe 2^" + std::to_string(num_literals) +
                        " exceeds the configured limit of 2^" + std::to_string(max_literals) +
                        " (" + std::to_string(num_literals) + " literals)");
  return uint32_t{1} << num_literals;
}

// Exhaustive search: every total reaction (P, complement) in ascending
// numeric order of P, one validity query each.
inline ValidReactionSet brute_force(const ClusterView& view, SmtGateway& gateway,
                                    uint64_t query_cap = 4096, bool force = false) {
  uint32_t num_choices = enumerate_choices(view.size());
  if (num_choices > 20) {
    // 2^num_choices reactions would not fit the enumeration counter, let
    // alone a workday; describe the count symbolically.
    throw CapacityError("exhaustive search over 2^" + std::to_string(num_choices) +
                        " reactions is not supported");
  }
  uint64_t total = uint64_t{1} << num_choices;
  if (total > query_cap && !force)
    throw CapacityError("exhaustive search needs " + std::to_string(total) +
                        " validity queries, above the cap of " + std::to_string(query_cap) +
                        "; raise the cap or use a model-guided algorithm");
  ValidReactionSet vr;
  for (uint64_t mask = 0; mask < total; ++mask) {
    ChoiceSet p(num_choices), a(num_choices);
    for (uint32_t c = 0; c < num_choices; ++c)
      ((mask >> c) & 1 ? p : a).set(c);
    QuasiReaction q = make_quasi(std::move(p), std::move(a));
    if (gateway.check(q, QueryTag::Outer) == Verdict::Valid) {
      if (q.P.empty())
        throw InternalError("reaction with no potentials reported valid");
      vr.push_back(std::move(q));
    }
  }
  return vr;
}

// ---------------------------------------------------------------------------
// Boolean assembly.
// ---------------------------------------------------------------------------

enum class Encoding { OneHot, Binary };

inline Encoding parse_encoding(const std::string& s) {
  if (s == "onehot") return Encoding::OneHot;
  if (s == "binary") return Encoding::Binary;
  throw ParseError("unknown encoding '" + s + "' (expected onehot or binary)");
}

// Reactions with identical potential-sets grant the system identical power,
// so they share one decision.  First occurrence wins the slot.
inline std::vector<ChoiceSet> dedupe_potentials(const ValidReactionSet& vr) {
  std::vector<ChoiceSet> out;
  for (const auto& q : vr) {
    bool seen = false;
    for (const auto& p : out)
      if (p == q.P) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(q.P);
  }
  return out;
}

// Minterm of one choice over the cluster's output propositions: bit i of the
// choice selects s_{lits[i]} positive or negated.
inline FormulaPtr choice_minterm(uint32_t choice, const std::vector<int>& lits) {
  std::vector<FormulaPtr> parts;
  for (size_t i = 0; i < lits.size(); ++i) {
    FormulaPtr s = mk_prop("s" + std::to_string(lits[i]));
    parts.push_back((choice >> i) & 1 ? s : mk_not(s));
  }
  return mk_conj(parts);
}

// Disjunction of the potential minterms, ascending choice order.
inline FormulaPtr reaction_body(const ChoiceSet& p, const std::vector<int>& lits) {
  std::vector<FormulaPtr> terms;
  for (uint32_t c : p.bits()) terms.push_back(choice_minterm(c, lits));
  return mk_disj(terms);
}

// One abstracted cluster: fresh environment decisions, the assumption over
// them, and the implications from decisions to reaction bodies.
struct ClusterAbstraction {
  std::vector<std::string> inputs;
  FormulaPtr assumption;  // A_B; `true` when every code is in use
  FormulaPtr extra;       // conjunction of trigger -> body implications
};

namespace detail {

inline FormulaPtr exactly_one(const std::vector<std::string>& names) {
  if (names.size() == 1) return mk_prop(names[0]);
  if (names.size() == 2) {
    FormulaPtr d0 = mk_prop(names[0]), d1 = mk_prop(names[1]);
    return mk_and(mk_binary(Formula::Kind::Iff, d0, mk_not(d1)),
                  mk_or(mk_prop(names[0]), mk_prop(names[1])));
  }
  std::vector<FormulaPtr> parts;
  std::vector<FormulaPtr> any;
  for (const auto& n : names) any.push_back(mk_prop(n));
  parts.push_back(mk_disj(any));
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      parts.push_back(mk_not(mk_and(mk_prop(names[i]), mk_prop(names[j]))));
  return mk_conj(parts);
}

inline FormulaPtr code_minterm(uint64_t code, const std::vector<std::string>& bits) {
  std::vector<FormulaPtr> parts;
  for (size_t b = 0; b < bits.size(); ++b) {
    FormulaPtr v = mk_prop(bits[b]);
    parts.push_back((code >> b) & 1 ? v : mk_not(v));
  }
  return mk_conj(parts);
}

}  // namespace detail

// `name_counter` numbers decision propositions globally, in cluster order,
// so multi-cluster documents never collide.
inline ClusterAbstraction encode_cluster(const ValidReactionSet& vr,
                                         const std::vector<int>& lits, Encoding encoding,
                                         int& name_counter) {
  auto potentials = dedupe_potentials(vr);
  if (potentials.empty())
    throw InternalError("cluster has no valid reactions; nothing to encode");
  for (const auto& p : potentials)
    if (p.empty()) throw InternalError("valid reaction with empty potential-set");
  size_t k = potentials.size();
  ClusterAbstraction out;

  std::vector<FormulaPtr> triggers;
  if (encoding == Encoding::OneHot) {
    for (size_t i = 0; i < k; ++i)
      out.inputs.push_back("d" + std::to_string(name_counter++));
    for (const auto& n : out.inputs) triggers.push_back(mk_prop(n));
    out.assumption = detail::exactly_one(out.inputs);
  } else {
    size_t m = 0;
    while ((size_t{1} << m) < k) ++m;
    for (size_t b = 0; b < m; ++b)
      out.inputs.push_back("b" + std::to_string(name_counter++));
    for (size_t i = 0; i < k; ++i)
      triggers.push_back(detail::code_minterm(i, out.inputs));
    if (k == (size_t{1} << m)) {
      out.assumption = mk_bool(true);  // every code names a reaction
    } else {
      std::vector<FormulaPtr> used;
      for (size_t i = 0; i < k; ++i)
        used.push_back(detail::code_minterm(i, out.inputs));
      out.assumption = mk_disj(used);
    }
  }

  std::vector<FormulaPtr> conjuncts;
  for (size_t i = 0; i < k; ++i) {
    FormulaPtr body = reaction_body(potentials[i], lits);
    if (triggers[i]->kind == Formula::Kind::True)
      conjuncts.push_back(body);  // single binary reaction: no bits to test
    else
      conjuncts.push_back(mk_imp(triggers[i], body));
  }
  out.extra = mk_conj(conjuncts);
  return out;
}

// The complete Boolean document: skeleton conjoined with one guarded
// always-block per cluster.
inline BooleanSpecDocument assemble(const FormulaPtr& skeleton, const LiteralTable& table,
                                    const std::vector<Cluster>& clusters,
                                    const std::vector<ValidReactionSet>& vrs,
                                    Encoding encoding) {
  if (clusters.size() != vrs.size())
    throw InternalError("cluster/reaction-set count mismatch");
  BooleanSpecDocument doc;
  for (int i = 0; i < table.size(); ++i)
    doc.outputs.push_back("s" + std::to_string(i));
  for (int i = 0; i < table.size(); ++i)
    doc.literal_map.emplace_back("s" + std::to_string(i), to_string(table.entries[i].atom));

  FormulaPtr formula = skeleton;
  int name_counter = 0;
  for (size_t j = 0; j < clusters.size(); ++j) {
    ClusterAbstraction enc = encode_cluster(vrs[j], clusters[j].lits, encoding, name_counter);
    doc.inputs.insert(doc.inputs.end(), enc.inputs.begin(), enc.inputs.end());
    FormulaPtr guarded = enc.assumption->kind == Formula::Kind::True
                             ? enc.extra
                             : mk_imp(enc.assumption, enc.extra);
    formula = mk_and(formula, mk_always(guarded));
  }
  doc.formula = formula;
  return doc;
}

}  // namespace boolabs
