// choice_set.hpp -- sets of choices (literal valuations) and the
// quasi-reaction lattice built on top of them.
//
// A choice over n literals is the bitmask of the literals it makes true, so
// choice indices run over [0, 2^n).  Reactions and quasi-reactions carry two
// disjoint sets of choices: potentials P and antipotentials A.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boolabs/errors.hpp>

namespace boolabs {

class ChoiceSet {
 public:
  ChoiceSet() = default;
  explicit ChoiceSet(uint32_t universe)
      : n_(universe), words_((universe + 63) / 64, 0) {}

  static ChoiceSet full(uint32_t universe) {
    ChoiceSet s(universe);
    for (uint32_t i = 0; i < universe; ++i) s.set(i);
    return s;
  }

  uint32_t universe() const { return n_; }

  bool test(uint32_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(uint32_t i, bool v = true) {
    if (v)
      words_[i >> 6] |= uint64_t(1) << (i & 63);
    else
      words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
  }

  uint32_t count() const {
    uint32_t c = 0;
    for (uint64_t w : words_) c += static_cast<uint32_t>(__builtin_popcountll(w));
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool subset_of(const ChoiceSet& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  ChoiceSet operator&(const ChoiceSet& o) const {
    ChoiceSet r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  ChoiceSet operator|(const ChoiceSet& o) const {
    ChoiceSet r(n_);
    for (size_t i = 0; i < words_.size(); ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  ChoiceSet complement() const {
    ChoiceSet r(n_);
    for (uint32_t i = 0; i < n_; ++i)
      if (!test(i)) r.set(i);
    return r;
  }

  bool operator==(const ChoiceSet& o) const { return n_ == o.n_ && words_ == o.words_; }
  bool operator!=(const ChoiceSet& o) const { return !(*this == o); }

  // Orders sets by their value as a base-2 numeral (bit i = choice i), which
  // is the enumeration order of the brute-force search.
  bool numeral_less(const ChoiceSet& o) const {
    for (size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] < o.words_[i];
    return false;
  }

  std::vector<uint32_t> bits() const {
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  size_t hash() const {
    size_t h = std::hash<uint32_t>{}(n_);
    for (uint64_t w : words_) h = h * 1099511628211ULL + std::hash<uint64_t>{}(w);
    return h;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (uint32_t i : bits()) {
      if (!first) out += ",";
      out += "c" + std::to_string(i);
      first = false;
    }
    return out + "}";
  }

 private:
  uint32_t n_ = 0;
  std::vector<uint64_t> words_;
};

struct QuasiReaction {
  ChoiceSet P, A;

  bool total() const { return (P | A) == ChoiceSet::full(P.universe()); }
};

inline QuasiReaction make_quasi(ChoiceSet p, ChoiceSet a) {
  if (!(p & a).empty()) throw InternalError("quasi-reaction with overlapping P and A");
  return {std::move(p), std::move(a)};
}

// Componentwise subset order: q below r means r constrains at least as much.
inline bool leq(const QuasiReaction& a, const QuasiReaction& b) {
  return a.P.subset_of(b.P) && a.A.subset_of(b.A);
}

// Meets always exist (the structure is a lower semi-lattice); joins only
// below a common reaction, where disjointness is inherited.
inline QuasiReaction meet(const QuasiReaction& a, const QuasiReaction& b) {
  return {a.P & b.P, a.A & b.A};
}

inline QuasiReaction join(const QuasiReaction& a, const QuasiReaction& b) {
  return make_quasi(a.P | b.P, a.A | b.A);
}

}  // namespace boolabs
