#pragma once

// Readers and writers for the JSON documents used by the registry and the
// command line tool. Malformed documents raise ValidationError.

#include <filesystem>
#include <string>
#include <string_view>

#include "cuspdens/beltsum.hpp"
#include "cuspdens/chain.hpp"
#include "cuspdens/families.hpp"
#include "cuspdens/horoball.hpp"
#include "cuspdens/linkmodel.hpp"
#include "cuspdens/registry.hpp"

namespace cusp {

std::string read_text_file(const std::filesystem::path& path);

/// {"name": {"volume": …, "cusps": [{"cusp_volume", "meridian"?, "maximization_index",
/// "role"}], "crossing_number"?, "flags": […], "reported"?: {…}, "provenance": …}, …}
Registry parse_registry(std::string_view text);
std::string dump_registry(const Registry& registry);

/// A single link record, or a registry document holding exactly one entry.
LinkGeometry parse_link(std::string_view text, const std::string& fallback_name);

/// Either a link record (converted with tangle_data) or a direct record
/// {"volume", "tangle_cusp_volume", "meridian", "belt_cusp_volume"?, "no_poking"}.
TangleLinkData parse_tangle_data(std::string_view text, const std::string& fallback_name);

/// {"vertices": [{"name", "p", "trivial"?, "strands"?}], "edges": [["a", "b"], …]}
ChainGraph parse_chain_graph(std::string_view text);

/// {"sizes": {"inf": h, "zero": d, "ne": d, "nw": d, "sw": d, "se": d}}
OctahedronConfig parse_octahedron_config(std::string_view text);

/// {"V1": …, "V2": …, "c": …}
CoverSeed parse_cover_seed(std::string_view text);

}  // namespace cusp
