#pragma once

#include <string>
#include <string_view>
#include <utility>

#include <json.hpp>

#include "mra/mrel.hpp"

namespace mra {

/// Canonical JSON form:
///   {"universe": ["a","b"], "pairs": [["a", ["a"]], ["b", []]]}
/// Reading is order-insensitive; writing emits the canonical pair order.
nlohmann::json mrel_to_json(const Mrel& r);

/// Reads a multirelation against a given universe (the document's universe
/// must agree) or together with its own universe.
Mrel mrel_from_json(const UniversePtr& u, const nlohmann::json& j);
std::pair<UniversePtr, Mrel> mrel_from_json(const nlohmann::json& j);

/// Inline literal syntax used by the CLI for one-liners:
///   {(a,{b,c}), (b,{})}
/// optionally wrapped in angle brackets.
Mrel parse_mrel_literal(const UniversePtr& u, std::string_view text);

}  // namespace mra
