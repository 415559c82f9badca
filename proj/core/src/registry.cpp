#include "cuspdens/registry.hpp"

#include <fstream>
#include <sstream>

#include "cuspdens/errors.hpp"
#include "cuspdens/io.hpp"

namespace cusp {

namespace detail {
std::string_view bundled_registry_text();
}

Registry::Registry(std::vector<RegistryEntry> entries) {
  for (auto& e : entries) {
    if (e.name.empty()) throw ValidationError("registry entry without a name");
    if (!e.geometry && e.reported.empty()) {
      throw ValidationError("registry entry '" + e.name + "' has neither geometry nor reported data");
    }
    if (e.provenance.empty()) {
      throw ValidationError("registry entry '" + e.name + "' has no provenance");
    }
    const std::string key = e.name;
    if (!entries_.emplace(key, std::move(e)).second) {
      throw ValidationError("duplicate registry entry '" + key + "'");
    }
  }
}

const Registry& Registry::bundled() {
  static const Registry registry = from_text(detail::bundled_registry_text());
  return registry;
}

Registry Registry::from_file(const std::filesystem::path& path) {
  return from_text(read_text_file(path));
}

Registry Registry::from_text(std::string_view json_text) { return parse_registry(json_text); }

bool Registry::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

const RegistryEntry& Registry::at(std::string_view name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) {
    throw ValidationError("no registry entry named '" + std::string(name) + "'");
  }
  return it->second;
}

const LinkGeometry& Registry::geometry(std::string_view name) const {
  const RegistryEntry& e = at(name);
  if (!e.geometry) {
    throw ValidationError("registry entry '" + e.name + "' carries only reported data");
  }
  return *e.geometry;
}

double Registry::reported(std::string_view name, std::string_view key) const {
  const RegistryEntry& e = at(name);
  auto it = e.reported.find(std::string(key));
  if (it == e.reported.end()) {
    throw ValidationError("registry entry '" + e.name + "' has no reported '" +
                          std::string(key) + "'");
  }
  return it->second;
}

std::vector<std::string> Registry::names() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& [name, _] : entries_) out.push_back(name);
  return out;
}

}  // namespace cusp
