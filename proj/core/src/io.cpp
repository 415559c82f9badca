#include "cuspdens/io.hpp"

#include <fstream>
#include <sstream>

#include "cuspdens/errors.hpp"
#include "json.hpp"

namespace cusp {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("malformed JSON document: ") + e.what());
  }
}

template <typename T>
T field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(where + ": missing field '" + key + "'");
  try {
    return it->get<T>();
  } catch (const json::exception& e) {
    throw ValidationError(where + ": field '" + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return field<T>(obj, key, where);
}

void require_object(const json& j, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected a JSON object");
}

LinkGeometry link_from_json(const json& j, const std::string& name) {
  require_object(j, name);
  std::vector<CuspRecord> cusps;
  if (auto it = j.find("cusps"); it != j.end()) {
    if (!it->is_array()) throw ValidationError(name + ": 'cusps' must be an array");
    for (const json& c : *it) {
      require_object(c, name + " cusp");
      CuspRecord r;
      r.cusp_volume = field<double>(c, "cusp_volume", name);
      r.meridian = optional_field<double>(c, "meridian", name);
      r.maximization_index = optional_field<int>(c, "maximization_index", name).value_or(0);
      r.role = parse_cusp_role(optional_field<std::string>(c, "role", name).value_or("plain"));
      cusps.push_back(r);
    }
  }
  std::set<LinkFlag> flags;
  if (auto it = j.find("flags"); it != j.end()) {
    for (const json& f : *it) flags.insert(parse_link_flag(f.get<std::string>()));
  }
  return LinkGeometry(name, field<double>(j, "volume", name), std::move(cusps),
                      optional_field<long long>(j, "crossing_number", name), std::move(flags));
}

json link_to_json(const LinkGeometry& g) {
  json j;
  j["volume"] = g.volume();
  json cusps = json::array();
  for (const CuspRecord& c : g.cusps()) {
    json cj{{"cusp_volume", c.cusp_volume},
            {"maximization_index", c.maximization_index},
            {"role", std::string(to_string(c.role))}};
    if (c.meridian) cj["meridian"] = *c.meridian;
    cusps.push_back(std::move(cj));
  }
  j["cusps"] = std::move(cusps);
  if (g.crossing_number()) j["crossing_number"] = *g.crossing_number();
  json flags = json::array();
  for (LinkFlag f : g.flags()) flags.push_back(std::string(to_string(f)));
  j["flags"] = std::move(flags);
  return j;
}

RegistryEntry entry_from_json(const std::string& name, const json& j) {
  require_object(j, name);
  RegistryEntry e;
  e.name = name;
  e.provenance = field<std::string>(j, "provenance", name);
  if (j.contains("volume")) e.geometry = link_from_json(j, name);
  if (auto it = j.find("reported"); it != j.end()) {
    require_object(*it, name + " reported");
    for (const auto& [key, value] : it->items()) {
      if (!value.is_number()) throw ValidationError(name + ": reported '" + key + "' is not a number");
      e.reported[key] = value.get<double>();
    }
  }
  return e;
}

}  // namespace

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Registry parse_registry(std::string_view text) {
  const json doc = parse(text);
  require_object(doc, "registry");
  std::vector<RegistryEntry> entries;
  for (const auto& [name, value] : doc.items()) entries.push_back(entry_from_json(name, value));
  return Registry(std::move(entries));
}

std::string dump_registry(const Registry& registry) {
  json doc = json::object();
  for (const auto& [name, e] : registry.entries()) {
    json j = e.geometry ? link_to_json(*e.geometry) : json::object();
    if (!e.reported.empty()) j["reported"] = e.reported;
    j["provenance"] = e.provenance;
    doc[name] = std::move(j);
  }
  return doc.dump(2);
}

LinkGeometry parse_link(std::string_view text, const std::string& fallback_name) {
  const json doc = parse(text);
  require_object(doc, fallback_name);
  if (doc.contains("volume")) return link_from_json(doc, fallback_name);
  if (doc.size() != 1) {
    throw ValidationError(fallback_name + ": expected a link record or a single-entry registry");
  }
  const auto& [name, value] = *doc.items().begin();
  return link_from_json(value, name);
}

TangleLinkData parse_tangle_data(std::string_view text, const std::string& fallback_name) {
  const json doc = parse(text);
  require_object(doc, fallback_name);
  if (!doc.contains("tangle_cusp_volume")) return tangle_data(parse_link(text, fallback_name));
  TangleLinkData d;
  d.volume = field<double>(doc, "volume", fallback_name);
  d.tangle_cusp_volume = field<double>(doc, "tangle_cusp_volume", fallback_name);
  d.meridian = field<double>(doc, "meridian", fallback_name);
  d.belt_cusp_volume = optional_field<double>(doc, "belt_cusp_volume", fallback_name).value_or(0.0);
  d.no_poking = optional_field<bool>(doc, "no_poking", fallback_name).value_or(false);
  validate(d);
  return d;
}

ChainGraph parse_chain_graph(std::string_view text) {
  const json doc = parse(text);
  require_object(doc, "chain graph");
  ChainGraph g;
  for (const json& v : field<json>(doc, "vertices", "chain graph")) {
    require_object(v, "chain vertex");
    ChainVertex cv;
    cv.name = field<std::string>(v, "name", "chain vertex");
    cv.coefficient = field<long long>(v, "p", cv.name);
    cv.trivial = optional_field<bool>(v, "trivial", cv.name).value_or(true);
    cv.strands = optional_field<int>(v, "strands", cv.name);
    g.add_vertex(std::move(cv));
  }
  for (const json& e : optional_field<json>(doc, "edges", "chain graph").value_or(json::array())) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("chain edge must be a pair of names");
    const auto a = g.find(e[0].get<std::string>());
    const auto b = g.find(e[1].get<std::string>());
    if (!a || !b) throw ValidationError("chain edge references a missing vertex");
    g.add_edge(*a, *b);
  }
  return g;
}

OctahedronConfig parse_octahedron_config(std::string_view text) {
  const json doc = parse(text);
  require_object(doc, "octahedron config");
  const json sizes = field<json>(doc, "sizes", "octahedron config");
  require_object(sizes, "octahedron sizes");
  OctahedronConfig cfg;
  for (OctVertex v : kOctVertices) {
    cfg.size(v) = field<double>(sizes, std::string(to_string(v)).c_str(), "octahedron sizes");
  }
  for (const auto& [key, _] : sizes.items()) parse_oct_vertex(key);
  validate(cfg);
  return cfg;
}

CoverSeed parse_cover_seed(std::string_view text) {
  const json doc = parse(text);
  require_object(doc, "cover seed");
  CoverSeed s;
  s.tangle_cusp_volume = field<double>(doc, "V1", "cover seed");
  s.belt_cusp_volume = field<double>(doc, "V2", "cover seed");
  s.crossings = field<long long>(doc, "c", "cover seed");
  validate(s);
  return s;
}

}  // namespace cusp
