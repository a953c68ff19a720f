#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mra {

/// Carrier set of a multirelation: an ordered list of distinct element
/// labels. The listing order fixes the index of each element and is part
/// of the value. At most 16 elements, so any subset fits in one word.
class Universe {
 public:
  static constexpr int kMaxSize = 16;

  explicit Universe(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }

  std::optional<int> find(std::string_view label) const;

  /// Index of a label; throws std::invalid_argument on unknown labels.
  int index_of(std::string_view label) const;

  /// Bit mask with one bit per element.
  std::uint32_t full_set() const {
    return size() == 0 ? 0u : ((1u << size()) - 1u);
  }

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

UniversePtr make_universe(std::vector<std::string> names);

/// Convenience: universe with the first n letters a, b, c, ...
UniversePtr make_universe(int n);

}  // namespace mra
