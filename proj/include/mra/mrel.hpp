#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mra/universe.hpp"

namespace mra {

/// Subset of a universe, one bit per element index.
using StateSet = std::uint32_t;

/// One pair (source element, target set) of a multirelation.
struct MPair {
  std::uint16_t src;
  std::uint16_t targets;

  friend auto operator<=>(const MPair&, const MPair&) = default;
};

/// A finite binary multirelation: a set of (element, state set) pairs over
/// a fixed universe. Pairs are kept sorted by (source, numeric target set),
/// without duplicates, so structural equality coincides with set equality.
class Mrel {
 public:
  /// Canonicalizes (sorts, deduplicates) and validates against the universe.
  Mrel(UniversePtr universe, std::vector<MPair> pairs);

  static Mrel empty(UniversePtr universe) { return Mrel(std::move(universe), {}); }

  const UniversePtr& universe() const { return universe_; }
  const std::vector<MPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool is_empty() const { return pairs_.empty(); }

  bool contains(int src, StateSet targets) const;

  /// Value equality: same universe contents and the same pair set.
  friend bool operator==(const Mrel& a, const Mrel& b) {
    return (a.universe_ == b.universe_ || *a.universe_ == *b.universe_) &&
           a.pairs_ == b.pairs_;
  }

 private:
  UniversePtr universe_;
  std::vector<MPair> pairs_;
};

enum class ConstKind { Zero, OneSigma, OnePi, Univ, CoOnePi };

/// The constants 0, 1s, 1p, U and n1p over a universe.
Mrel constant(const UniversePtr& u, ConstKind kind);

Mrel mrel_zero(const UniversePtr& u);
Mrel one_sigma(const UniversePtr& u);
Mrel one_pi(const UniversePtr& u);
Mrel univ(const UniversePtr& u);
Mrel co_one_pi(const UniversePtr& u);

/// Builds a multirelation from labelled pairs; unknown labels throw.
Mrel from_pairs(const UniversePtr& u,
                const std::vector<std::pair<std::string, std::vector<std::string>>>& pairs);

// Lattice operations (complement is relative to the universal multirelation).
Mrel join(const Mrel& a, const Mrel& b);
Mrel meet(const Mrel& a, const Mrel& b);
Mrel complement(const Mrel& a);
bool is_subset(const Mrel& a, const Mrel& b);

/// Sequential composition: (a,A) is in seq(r,s) iff some (a,B) in r admits a
/// choice function f with (b,f(b)) in s for every b in B and A the union of
/// the chosen sets. Computed by folding over the elements of B with a
/// deduplicated working set of achievable unions, which stays below 2^n
/// regardless of how many choice functions exist. A pair (a,{}) contributes
/// exactly (a,{}): the empty choice function.
Mrel seq(const Mrel& r, const Mrel& s);

/// Parallel composition: unions of target sets of pairs with a common source.
Mrel par(const Mrel& r, const Mrel& s);

/// Sequential composition in the sense used for up-closed multirelations:
/// (a,A) is in parikh(r,s) iff some (a,B) in r has (b,A) in s for every b
/// in B. A pair (a,{}) admits every target set A.
Mrel parikh(const Mrel& r, const Mrel& s);

inline Mrel operator+(const Mrel& a, const Mrel& b) { return join(a, b); }
inline Mrel operator&(const Mrel& a, const Mrel& b) { return meet(a, b); }
inline Mrel operator*(const Mrel& a, const Mrel& b) { return seq(a, b); }

/// Renders as {(a,{b,c}), (b,{})} in canonical order.
std::string to_string(const Mrel& r);

/// Throws std::invalid_argument unless both arguments live over equal universes.
void require_same_universe(const Mrel& a, const Mrel& b);

}  // namespace mra
