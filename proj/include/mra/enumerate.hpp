#pragma once

#include <cstdint>
#include <random>

#include "mra/structure.hpp"

namespace mra {

/// Number of possible pairs over an n-element universe: n * 2^n.
std::uint64_t pair_slots(int n);

/// Number of multirelations over an n-element universe: 2^(n*2^n).
/// Throws std::overflow_error once the count leaves 64 bits (n >= 4).
std::uint64_t mrel_space(int n);

/// The idx-th multirelation in canonical order. Bit i of idx decides the
/// pair (i / 2^n, i mod 2^n), so numeric index order equals the canonical
/// (source, target set) enumeration order.
Mrel mrel_from_index(const UniversePtr& u, std::uint64_t idx);

std::uint64_t mrel_index(const Mrel& r);

Mrel random_mrel(const UniversePtr& u, std::mt19937_64& rng);

/// Number of members of a class over u. Throws std::overflow_error when the
/// count leaves 64 bits and std::invalid_argument when the class cannot be
/// enumerated (up-closed universes beyond size 4).
std::uint64_t class_count(const UniversePtr& u, ClassTag tag);

/// The idx-th member of a class in a fixed canonical order.
Mrel class_member(const UniversePtr& u, ClassTag tag, std::uint64_t idx);

/// A random member of a class. Uniform for every class except UpClosed,
/// which closes a uniformly random multirelation upward.
Mrel random_class_member(const UniversePtr& u, ClassTag tag, std::mt19937_64& rng);

}  // namespace mra
