#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "mra/mrel.hpp"

namespace mra {

/// A monotone map on the lattice of multirelations over a fixed universe.
struct MonotoneFn {
  std::function<Mrel(const Mrel&)> fn;
  std::string description;
};

struct FixpointResult {
  Mrel value;
  int iterations = 0;
  bool converged = false;
};

struct FixpointError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Least/greatest fixpoint by plain iteration from bottom/top. The lattice
/// is finite with height n*2^n, so iteration reaches the extremal fixpoint
/// of any isotone map without a continuity assumption; the iteration cap is
/// n*2^n + 1 and every step asserts that the chain stays monotone. Both
/// violations throw FixpointError.
FixpointResult lfp(const MonotoneFn& f, const UniversePtr& u);
FixpointResult gfp(const MonotoneFn& f, const UniversePtr& u);

/// Least fixpoints of y + x . X: star(x) = lfp(1s + x . X),
/// star_binary(x,y) = lfp(y + x . X).
Mrel star(const Mrel& x);
Mrel star_binary(const Mrel& x, const Mrel& y);

/// Greatest fixpoints: omega(x) = gfp(x . X), omega_binary(x,y) =
/// gfp(y + x . X), infinity(x) = gfp(1s + x . X).
Mrel omega(const Mrel& x);
Mrel omega_binary(const Mrel& x, const Mrel& y);
Mrel infinity(const Mrel& x);

/// Indexed iterates: power_paren(x,0) = 0, power_paren(x,i+1) = 1s + x .
/// power_paren(x,i); power_bracket starts from 1s instead.
Mrel power_paren(const Mrel& x, int i);
Mrel power_bracket(const Mrel& x, int i);

/// Right-nested powers x^0 = 1s, x^(k+1) = x . x^k.
Mrel power_right(const Mrel& x, int k);

/// Stabilized unions of the indexed iterates. The chains ascend, so the
/// union is the first repeated iterate.
Mrel iter_star_paren(const Mrel& x);
Mrel iter_star_bracket(const Mrel& x);

/// Largest sequential subidentity p with p = d(x . p), iterated downward
/// from 1s on the subidentity lattice.
Mrel nabla(const Mrel& x);

/// Quantifier regime for the termination predicates: exhaustive only for
/// universes of size <= 2, seeded sampling otherwise.
struct QuantMode {
  enum Kind { Exhaustive, Sampled } kind = Exhaustive;
  std::uint64_t samples = 100000;
  std::uint64_t seed = 42;

  static QuantMode exhaustive() { return {Exhaustive, 0, 0}; }
  static QuantMode sampled(std::uint64_t k, std::uint64_t s = 42) { return {Sampled, k, s}; }
};

bool is_omega_trivial(const Mrel& x);
bool is_deflationary(const Mrel& x, const QuantMode& mode);
bool is_wellfounded(const Mrel& x, const QuantMode& mode);

}  // namespace mra
