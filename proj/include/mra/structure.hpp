#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mra/mrel.hpp"

namespace mra {

/// Domain of a multirelation: the sequential subidentity {(a,{a}) | a related
/// to some target set}. Agrees with the composite (x . 1p) || 1s.
Mrel domain(const Mrel& r);

/// Terminal projection: keeps exactly the pairs with empty target set.
/// Agrees with x . 0.
Mrel tau(const Mrel& r);

/// Nonterminal projection: keeps exactly the pairs with nonempty target set.
/// Agrees with x & n1p.
Mrel nu(const Mrel& r);

/// Smallest up-closed superset: {(a,A) | some (a,B) in r has B subseteq A}.
/// Agrees with x || U.
Mrel up_closure(const Mrel& r);

/// Overwrites every target set with the empty set. Agrees with x . 1p.
Mrel to_terminal(const Mrel& r);

/// The vector with the same domain: every related source becomes related to
/// every target set. Agrees with (x . 1p) || U.
Mrel vectorize(const Mrel& r);

enum class ClassTag { SeqSubid, Terminal, Vector, UpClosed, Nonterminal, General };

/// Class membership, decided by the defining fixpoint equation of each class
/// (x & 1s = x, x . 1p = x, (x . 1p) || U = x, x || U = x, x & n1p = x).
bool is_in_class(const Mrel& r, ClassTag tag);

const char* class_name(ClassTag tag);

/// Modal diamond <x>p = d(x . p). The second argument must be a sequential
/// subidentity; anything else throws rather than being coerced.
Mrel diamond(const Mrel& x, const Mrel& p);

// Preorders and equivalences induced by the terminal/nonterminal projections.
bool leq_tau(const Mrel& a, const Mrel& b);
bool leq_nu(const Mrel& a, const Mrel& b);
bool eqv_tau(const Mrel& a, const Mrel& b);
bool eqv_nu(const Mrel& a, const Mrel& b);

struct RoundTripItem {
  std::string identity;
  bool holds = true;
  std::optional<Mrel> witness;
};

struct RoundTripReport {
  std::vector<RoundTripItem> items;
  std::uint64_t checked = 0;
  bool exhaustive = false;

  bool all_hold() const {
    for (const auto& it : items)
      if (!it.holds) return false;
    return true;
  }
};

/// Verifies the round-trip identities of the subidentity/terminal/vector
/// triangle (and its nonterminal variant): exhaustively for universes of
/// size <= 2, on seeded random samples otherwise.
RoundTripReport check_iso_roundtrips(const UniversePtr& u,
                                     std::uint64_t samples = 100000,
                                     std::uint64_t seed = 42);

}  // namespace mra
