#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cuspdens/linkmodel.hpp"

namespace cusp {

/// A named datum of the registry. Links measured in full carry a geometry;
/// some published results are only available as a single reported number
/// (for example a limiting cusp crossing density), kept in `reported`.
struct RegistryEntry {
  std::string name;
  std::optional<LinkGeometry> geometry;
  std::map<std::string, double> reported;
  std::string provenance;
};

/// Read-only collection of known link data.
class Registry {
 public:
  Registry() = default;
  explicit Registry(std::vector<RegistryEntry> entries);

  /// The registry shipped with the library (core/data/registry.json).
  static const Registry& bundled();
  static Registry from_file(const std::filesystem::path& path);
  static Registry from_text(std::string_view json_text);

  bool contains(std::string_view name) const;
  /// Throws ValidationError for unknown names.
  const RegistryEntry& at(std::string_view name) const;
  /// Shorthand for at(name).geometry; throws ValidationError when the entry has none.
  const LinkGeometry& geometry(std::string_view name) const;
  /// A reported datum; throws ValidationError when absent.
  double reported(std::string_view name, std::string_view key) const;

  std::vector<std::string> names() const;
  const std::map<std::string, RegistryEntry, std::less<>>& entries() const noexcept {
    return entries_;
  }

 private:
  std::map<std::string, RegistryEntry, std::less<>> entries_;
};

}  // namespace cusp
