#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "cuspdens/beltsum.hpp"
#include "cuspdens/chain.hpp"
#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"
#include "cuspdens/families.hpp"
#include "cuspdens/horoball.hpp"
#include "cuspdens/io.hpp"
#include "cuspdens/linkmodel.hpp"
#include "cuspdens/registry.hpp"

namespace cusp::cli {
namespace {

using nlohmann::json;

// Outcome of a handler: payload plus provenance lines.
struct Output {
  json payload;
  std::vector<std::string> provenance;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep)) parts.push_back(cur);
  return parts;
}

template <typename T>
T parse_number(const std::string& s, const char* what) {
  T value{};
  const char* first = s.data();
  const char* last = s.data() + s.size();
  while (first < last && *first == ' ') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ValidationError(std::string("cannot parse ") + what + " from '" + s + "'");
  }
  return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& text, const char* what) {
  std::vector<T> out;
  for (const auto& part : split(text, ',')) out.push_back(parse_number<T>(part, what));
  return out;
}

struct Context {
  std::string registry_path;
  const Registry* registry = nullptr;
  std::optional<Registry> owned;

  const Registry& reg() {
    if (!registry) {
      if (registry_path.empty()) {
        registry = &Registry::bundled();
      } else {
        owned = Registry::from_file(registry_path);
        registry = &*owned;
      }
    }
    return *registry;
  }
};

// A registry name, or otherwise a path to a JSON document.
struct Resolved {
  std::optional<std::string> text;  // file contents when not a registry name
  const RegistryEntry* entry = nullptr;
};

Resolved resolve(Context& ctx, const std::string& name_or_file) {
  if (ctx.reg().contains(name_or_file)) return {std::nullopt, &ctx.reg().at(name_or_file)};
  if (std::filesystem::exists(name_or_file)) return {read_text_file(name_or_file), nullptr};
  throw ValidationError("'" + name_or_file + "' is neither a registry entry nor a readable file");
}

LinkGeometry resolve_link(Context& ctx, const std::string& target, Output& out) {
  Resolved r = resolve(ctx, target);
  if (r.entry) {
    out.provenance.push_back(r.entry->name + ": " + r.entry->provenance);
    return ctx.reg().geometry(target);
  }
  return parse_link(*r.text, std::filesystem::path(target).stem().string());
}

TangleLinkData resolve_tangle(Context& ctx, const std::string& target, Output& out) {
  Resolved r = resolve(ctx, target);
  if (r.entry) {
    out.provenance.push_back(r.entry->name + ": " + r.entry->provenance);
    return tangle_data(ctx.reg().geometry(target));
  }
  return parse_tangle_data(*r.text, std::filesystem::path(target).stem().string());
}

CoverSeed resolve_seed(Context& ctx, const std::string& target, Output& out) {
  Resolved r = resolve(ctx, target);
  if (r.entry) {
    out.provenance.push_back(r.entry->name + ": " + r.entry->provenance);
    return cover_seed(ctx.reg().geometry(target));
  }
  return parse_cover_seed(*r.text);
}

json tangle_json(const TangleLinkData& d) {
  return {{"volume", d.volume},
          {"tangle_cusp_volume", d.tangle_cusp_volume},
          {"meridian", d.meridian},
          {"belt_cusp_volume", d.belt_cusp_volume},
          {"no_poking", d.no_poking},
          {"tangle_density", d.tangle_density()}};
}

json point_json(const FamilyPoint& p) {
  json j{{"crossing_number", p.crossing_number}, {"dcc", p.dcc}};
  if (p.volume) j["volume"] = *p.volume;
  if (p.cusp_volume) j["cusp_volume"] = *p.cusp_volume;
  return j;
}

json config_json(const OctahedronConfig& cfg) {
  json sizes, volumes;
  for (OctVertex v : kOctVertices) {
    sizes[std::string(to_string(v))] = cfg.size(v);
    volumes[std::string(to_string(v))] = vertex_volume(cfg, v);
  }
  return {{"sizes", sizes}, {"vertex_volumes", volumes}, {"total", total_volume(cfg)}};
}

Horoball parse_ball(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() == 2 && (parts[0] == "inf" || parts[0] == "infinity")) {
    return Horoball::at_infinity(parse_number<double>(parts[1], "horoball height"));
  }
  if (parts.size() == 3) {
    return Horoball::at({parse_number<double>(parts[0], "center x"),
                         parse_number<double>(parts[1], "center y")},
                        parse_number<double>(parts[2], "horoball diameter"));
  }
  throw ValidationError("--ball expects 'inf,HEIGHT' or 'X,Y,DIAMETER'");
}

GeodesicPlane parse_plane(const std::string& text) {
  const auto parts = split(text, ',');
  if (!parts.empty() && parts[0] == "hemisphere" && parts.size() == 4) {
    return GeodesicPlane::hemisphere({parse_number<double>(parts[1], "center x"),
                                      parse_number<double>(parts[2], "center y")},
                                     parse_number<double>(parts[3], "radius"));
  }
  if (!parts.empty() && parts[0] == "vertical" && parts.size() == 5) {
    return GeodesicPlane::vertical({parse_number<double>(parts[1], "point x"),
                                    parse_number<double>(parts[2], "point y")},
                                   {parse_number<double>(parts[3], "direction x"),
                                    parse_number<double>(parts[4], "direction y")});
  }
  throw ValidationError("--plane expects 'hemisphere,CX,CY,R' or 'vertical,PX,PY,DX,DY'");
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::validation_error: return "validation_error";
    case Status::domain_error: return "domain_error";
    case Status::cycle_error: return "cycle_error";
    case Status::range_error: return "range_error";
  }
  return "validation_error";
}

int CommandResult::exit_code() const {
  switch (status) {
    case Status::ok: return 0;
    case Status::cycle_error: return 2;
    default: return 1;
  }
}

json round_numbers(const json& doc, int digits) {
  if (doc.is_number_float()) {
    const double x = doc.get<double>();
    if (!std::isfinite(x)) return doc;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return std::strtod(buf, nullptr);
  }
  if (doc.is_array() || doc.is_object()) {
    json out = doc;
    for (auto it = out.begin(); it != out.end(); ++it) *it = round_numbers(*it, digits);
    return out;
  }
  return doc;
}

std::string CommandResult::render() const {
  if (status == Status::ok && !payload) return message;
  json doc;
  doc["status"] = std::string(to_string(status));
  if (!command.empty()) doc["command"] = command;
  if (payload) {
    doc["payload"] = round_numbers(*payload, digits);
    doc["provenance"] = provenance;
  } else {
    doc["error"] = message;
  }
  return doc.dump(2);
}

CommandResult dispatch(std::span<const std::string> args) {
  CLI::App app{"Cusp density invariants of hyperbolic links", "cuspdens"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Context ctx;
  int digits = 12;
  app.add_option("--registry", ctx.registry_path, "Registry document (default: bundled data)");
  app.add_option("--digits", digits, "Significant digits in printed numbers")
      ->check(CLI::Range(1, 17));

  std::string command;
  std::function<Output()> handler;
  auto bind = [&](CLI::App* sub, std::string name, std::function<Output()> fn) {
    sub->callback([&, name = std::move(name), fn = std::move(fn)] {
      command = name;
      handler = fn;
    });
  };

  // constants
  auto* constants = app.add_subcommand("constants", "Polyhedron volumes and density bounds");
  bind(constants, "constants", [] {
    const BoundSet& b = bounds();
    return Output{{{"v_tet", b.v_tet},
                   {"v_oct", b.v_oct},
                   {"boroczky", b.boroczky},
                   {"dcc_upper", b.dcc_upper},
                   {"volume_density_upper", b.volume_density_upper}},
                  {"v_tet = 2 Lambda(pi/6), v_oct = 8 Lambda(pi/4), Clausen series"}};
  });

  // density
  std::string density_target, subset_text, kind = "cd";
  auto* density = app.add_subcommand("density", "Density invariants of a registry link or link file");
  density->add_option("target", density_target, "Registry name or JSON file")->required();
  density->add_option("--subset", subset_text, "Comma-separated cusp indices (implies cdr)");
  density->add_option("--kind", kind, "cd | cdr | dcc | dvol")
      ->check(CLI::IsMember({"cd", "cdr", "dcc", "dvol"}));
  bind(density, "density", [&] {
    Output out;
    if (kind == "dcc" && ctx.reg().contains(density_target) &&
        !ctx.reg().at(density_target).geometry) {
      const RegistryEntry& e = ctx.reg().at(density_target);
      out.provenance.push_back(e.name + ": " + e.provenance);
      out.payload = {{"name", e.name}, {"kind", "dcc"}, {"value", ctx.reg().reported(e.name, "limit_dcc")},
                     {"reported", true}};
      return out;
    }
    const LinkGeometry link = resolve_link(ctx, density_target, out);
    std::string k = kind;
    if (!subset_text.empty()) k = "cdr";
    double value = 0.0;
    json extra = json::object();
    if (k == "cd") {
      value = cusp_density(link);
    } else if (k == "cdr") {
      std::vector<std::size_t> subset;
      if (subset_text.empty()) {
        for (std::size_t i = 0; i < link.cusps().size(); ++i) subset.push_back(i);
      } else {
        subset = parse_list<std::size_t>(subset_text, "cusp index");
      }
      value = restricted_cusp_density(link, subset);
      extra["subset"] = subset;
    } else if (k == "dcc") {
      value = cusp_crossing_density(link);
    } else {
      value = volume_density(link);
    }
    out.payload = {{"name", link.name()}, {"kind", k}, {"value", value},
                   {"volume", link.volume()}, {"cusp_volume", link.cusp_volume()}};
    if (link.crossing_number()) out.payload["crossing_number"] = *link.crossing_number();
    out.payload.update(extra);
    return out;
  });

  // chain
  std::string graph_path, order = "lowest";
  auto* chain = app.add_subcommand("chain", "Chain graphs and simultaneous (1,p) fillings");
  chain->require_subcommand(1);
  auto* chain_check = chain->add_subcommand("check", "Report whether the chain graph is a forest");
  auto* chain_fill = chain->add_subcommand("fill", "Leaf-by-leaf filling plan");
  for (auto* sub : {chain_check, chain_fill}) {
    sub->add_option("--graph", graph_path, "Chain graph JSON file")->required();
  }
  chain_fill->add_option("--order", order, "Leaf order: lowest | highest")
      ->check(CLI::IsMember({"lowest", "highest"}));
  auto names_of = [](const ChainGraph& g, const std::vector<VertexId>& ids) {
    json arr = json::array();
    for (VertexId v : ids) arr.push_back(g.vertex(v).name);
    return arr;
  };
  bind(chain_check, "chain check", [&] {
    const ChainGraph g = parse_chain_graph(read_text_file(graph_path));
    const ChainCheck c = check_chain(g);
    json trees = json::array();
    for (const auto& t : c.trees) trees.push_back(names_of(g, t));
    Output out;
    out.payload = {{"acyclic", c.acyclic}, {"components", trees}};
    if (!c.acyclic) out.payload["cycle"] = names_of(g, c.cycle);
    return out;
  });
  bind(chain_fill, "chain fill", [&] {
    const ChainGraph g = parse_chain_graph(read_text_file(graph_path));
    const FillingPlan plan =
        fill_chain(g, order == "highest" ? LeafOrder::highest_first : LeafOrder::lowest_first);
    json steps = json::array();
    for (const FillingStep& s : plan.steps) {
      json j{{"component", g.vertex(s.vertex).name}, {"twists", s.twist_count}};
      j["strands"] = s.strand_count ? json(*s.strand_count) : json(nullptr);
      steps.push_back(j);
    }
    json residual = json::object();
    for (VertexId v = 0; v < g.size(); ++v) residual[g.vertex(v).name] = plan.residual_coefficients[v];
    Output out;
    out.payload = {{"steps", steps}, {"residual_coefficients", residual}, {"link_complement", true}};
    return out;
  });

  // beltsum
  std::string a_name, b_name;
  long long k_copies = 1, p_copies = 1;
  double target = 0.0, eps = 1e-6;
  auto* beltsum = app.add_subcommand("beltsum", "Belted sums of augmented cross tangle links");
  beltsum->require_subcommand(1);
  auto* bs_combine = beltsum->add_subcommand("combine", "Cusp data of the (iterated) belted sum");
  auto* bs_interval = beltsum->add_subcommand("interval", "Interval of knot cusp densities reached");
  auto* bs_sample = beltsum->add_subcommand("sample", "Copies (k, p) with k + p odd hitting a target");
  for (auto* sub : {bs_combine, bs_interval, bs_sample}) {
    sub->add_option("--a", a_name, "Registry name or JSON file")->required();
    sub->add_option("--b", b_name, "Registry name or JSON file")->required();
  }
  bs_combine->add_option("--k", k_copies, "Copies of the shorter-meridian summand");
  bs_combine->add_option("--p", p_copies, "Copies of the other summand");
  bs_sample->add_option("--target", target, "Target cusp density")->required();
  bs_sample->add_option("--eps", eps, "Tolerance");
  bind(bs_combine, "beltsum combine", [&] {
    Output out;
    const TangleLinkData a = resolve_tangle(ctx, a_name, out);
    const TangleLinkData b = resolve_tangle(ctx, b_name, out);
    const BeltSumResult r = iterated_belt_sum(a, b, k_copies, p_copies);
    out.payload = {{"k", r.k}, {"p", r.p}, {"volume", r.volume},
                   {"tangle_cusp_volume", r.tangle_cusp_volume}, {"meridian", r.meridian},
                   {"tangle_density", r.tangle_density()}};
    return out;
  });
  bind(bs_interval, "beltsum interval", [&] {
    Output out;
    const TangleLinkData a = resolve_tangle(ctx, a_name, out);
    const TangleLinkData b = resolve_tangle(ctx, b_name, out);
    const DensityInterval iv = knot_density_interval(a, b);
    out.payload = {{"lower", iv.lower}, {"upper", iv.upper},
                   {"lower_source", iv.lower_source}, {"upper_source", iv.upper_source},
                   {"a", tangle_json(a)}, {"b", tangle_json(b)}};
    return out;
  });
  bind(bs_sample, "beltsum sample", [&] {
    Output out;
    const TangleLinkData a = resolve_tangle(ctx, a_name, out);
    const TangleLinkData b = resolve_tangle(ctx, b_name, out);
    const BeltParameters kp = sample_parameters(a, b, target, eps);
    const double t = static_cast<double>(kp.p) / static_cast<double>(kp.k);
    out.payload = {{"k", kp.k}, {"p", kp.p}, {"t", t}, {"density", density_function(a, b, t)},
                   {"target", target}, {"eps", eps}};
    return out;
  });

  // family
  std::string family_tag, params_text, seed_name;
  auto* family = app.add_subcommand("family", "Parametric link families");
  family->require_subcommand(1);
  auto* fam_eval = family->add_subcommand("eval", "Evaluate one family member");
  fam_eval->add_option("--family", family_tag, "twist | octahedral | octahedral_prime | cover_twist")
      ->required()
      ->check(CLI::IsMember({"twist", "octahedral", "octahedral_prime", "cover_twist"}));
  fam_eval->add_option("--params", params_text, "q | n,k | n,m")->required();
  fam_eval->add_option("--seed", seed_name, "Cover seed for cover_twist (registry name or file)");
  auto* fam_sample = family->add_subcommand("sample", "Cover-and-twist member near a target density");
  fam_sample->add_option("--family", family_tag, "cover_twist")
      ->required()
      ->check(CLI::IsMember({"cover_twist"}));
  fam_sample->add_option("--seed", seed_name, "Registry name or file")->required();
  fam_sample->add_option("--target", target, "Target cusp crossing density")->required();
  fam_sample->add_option("--eps", eps, "Tolerance");
  auto* fam_intervals = family->add_subcommand("intervals", "Density intervals with their sources");
  bind(fam_eval, "family eval", [&] {
    Output out;
    const auto params = parse_list<long long>(params_text, "family parameter");
    auto expect = [&](std::size_t n) {
      if (params.size() != n) {
        throw ValidationError("--params for " + family_tag + " expects " + std::to_string(n) +
                              " value(s)");
      }
    };
    FamilyPoint pt;
    if (family_tag == "twist") {
      expect(1);
      pt = twist_knot(params[0], ctx.reg());
      out.provenance.push_back("whitehead_link: " + ctx.reg().at("whitehead_link").provenance);
    } else if (family_tag == "cover_twist") {
      expect(2);
      if (seed_name.empty()) throw ValidationError("cover_twist needs --seed");
      pt = cover_twist(resolve_seed(ctx, seed_name, out), params[0], params[1]);
    } else {
      expect(2);
      pt = octahedral_link(params[0], params[1], family_tag == "octahedral_prime");
    }
    out.payload = point_json(pt);
    out.payload["family"] = family_tag;
    out.payload["params"] = params;
    return out;
  });
  bind(fam_sample, "family sample", [&] {
    Output out;
    const CoverSeed seed = resolve_seed(ctx, seed_name, out);
    const CoverParameters nm = cover_twist_sample(seed, target, eps);
    const FamilyPoint pt = cover_twist(seed, nm.n, nm.m);
    out.payload = {{"n", nm.n}, {"m", nm.m}, {"dcc", pt.dcc}, {"crossing_number", pt.crossing_number},
                   {"limit_density", seed.limit_density()}, {"target", target}, {"eps", eps}};
    return out;
  });
  bind(fam_intervals, "family intervals", [&] {
    Output out;
    out.payload = json::array();
    for (const NamedInterval& iv : interval_endpoints(ctx.reg())) {
      out.payload.push_back({{"name", iv.name}, {"lower", iv.lower}, {"upper", iv.upper},
                             {"citation", iv.citation}});
      out.provenance.push_back(iv.name + ": " + iv.citation);
    }
    return out;
  });

  // horoball
  std::string config_name = "standard", ball_text, plane_text;
  std::uint64_t search_seed = 1;
  long long iters = 10000;
  bool no_edge = false;
  auto* horoball = app.add_subcommand("horoball", "Horoball geometry in the regular ideal octahedron");
  horoball->require_subcommand(1);
  auto* hb_pack = horoball->add_subcommand("pack", "Vertex volumes of a horoball configuration");
  hb_pack->add_option("--config", config_name, "standard | opposite | edge | JSON file");
  auto* hb_search = horoball->add_subcommand("search", "Search for the largest feasible total volume");
  hb_search->add_option("--seed", search_seed, "Random seed");
  hb_search->add_option("--iters", iters, "Iterations")->check(CLI::PositiveNumber);
  hb_search->add_flag("--no-edge-constraint", no_edge, "Only require pairwise disjointness");
  auto* hb_pokes = horoball->add_subcommand("pokes", "Does a horoball poke a geodesic plane");
  hb_pokes->add_option("--ball", ball_text, "inf,HEIGHT or X,Y,DIAMETER")->required();
  hb_pokes->add_option("--plane", plane_text, "hemisphere,CX,CY,R or vertical,PX,PY,DX,DY")
      ->required();
  bind(hb_pack, "horoball pack", [&] {
    OctahedronConfig cfg;
    if (config_name == "standard") {
      cfg = OctahedronConfig::standard();
    } else if (config_name == "opposite") {
      cfg = OctahedronConfig::opposite_expansion();
    } else if (config_name == "edge") {
      cfg = OctahedronConfig::edge_tangent();
    } else {
      cfg = parse_octahedron_config(read_text_file(config_name));
    }
    Output out;
    out.payload = config_json(cfg);
    out.payload["feasible"] = feasible(cfg);
    return out;
  });
  bind(hb_search, "horoball search", [&] {
    SearchOptions opts;
    opts.rules.edge_constraint = !no_edge;
    const SearchResult r = search_packing_max(search_seed, iters, opts);
    Output out;
    out.payload = {{"best_total", r.best_total},
                   {"best_config", config_json(r.best_config)},
                   {"iterations", iters},
                   {"seed", search_seed},
                   {"edge_constraint", !no_edge}};
    return out;
  });
  bind(hb_pokes, "horoball pokes", [&] {
    const Horoball h = parse_ball(ball_text);
    const GeodesicPlane p = parse_plane(plane_text);
    Output out;
    out.payload = {{"pokes", pokes(h, p)},
                   {"center_on_boundary",
                    p.on_boundary(h.is_at_infinity() ? std::nullopt : std::optional<Point>(h.center()))}};
    return out;
  });

  CommandResult result;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.message = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.message = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.status = Status::validation_error;
    result.message = std::string(e.what()) + "\n" + app.help();
    return result;
  }

  result.command = command;
  result.digits = digits;
  if (!handler) {
    result.status = Status::validation_error;
    result.message = "no command given\n" + app.help();
    return result;
  }
  try {
    Output out = handler();
    result.payload = std::move(out.payload);
    result.provenance = std::move(out.provenance);
  } catch (const ChainCycleError& e) {
    result.status = Status::cycle_error;
    result.message = e.what();
  } catch (const RangeError& e) {
    result.status = Status::range_error;
    result.message = e.what();
  } catch (const DomainError& e) {
    result.status = Status::domain_error;
    result.message = e.what();
  } catch (const std::exception& e) {
    result.status = Status::validation_error;
    result.message = e.what();
  }
  return result;
}

}  // namespace cusp::cli
