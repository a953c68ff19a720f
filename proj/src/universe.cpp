#include "mra/universe.hpp"

#include <stdexcept>
#include <unordered_set>

namespace mra {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxSize)) {
    throw std::invalid_argument("universe size exceeds " + std::to_string(kMaxSize));
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) {
      throw std::invalid_argument("duplicate element label: " + n);
    }
  }
}

std::optional<int> Universe::find(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if (names_[static_cast<std::size_t>(i)] == label) return i;
  }
  return std::nullopt;
}

int Universe::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw std::invalid_argument("unknown element label: " + std::string(label));
}

UniversePtr make_universe(std::vector<std::string> names) {
  return std::make_shared<const Universe>(std::move(names));
}

UniversePtr make_universe(int n) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return make_universe(std::move(names));
}

}  // namespace mra
