#pragma once

#include <vector>

#include "mra/law.hpp"

namespace mra {

/// The full law catalog: every equation and inequation the library treats
/// as established (expected to hold on all finite multirelations) or as
/// refutable (expected to have a finite counterexample, over multirelations
/// or over the builtin four-element algebra). Entries are parsed and
/// validated once, on first use.
const std::vector<Law>& catalog();

/// Catalog entry by name; throws std::invalid_argument if absent.
const Law& catalog_law(const std::string& name);

/// All entries of one group, in catalog order.
std::vector<const Law*> catalog_group(const std::string& group);

}  // namespace mra
