#include "cuspdens/horoball.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "cuspdens/errors.hpp"

namespace cusp {
namespace {

bool close_relative(double x, double y) {
  return std::abs(x - y) <= kGeometryTolerance * std::max(std::abs(x), std::abs(y));
}

std::size_t index(OctVertex v) { return static_cast<std::size_t>(v); }

bool same_point(std::optional<Point> a, std::optional<Point> b) {
  if (!a || !b) return !a && !b;
  return std::abs(*a - *b) < 1e-9;
}

std::array<Mobius, 6> make_symmetries() {
  std::array<Mobius, 6> out{};
  out[index(OctVertex::infinity)] = Mobius{};
  // z ↦ 1/(2z) swaps 0 and ∞ and rotates the equator.
  out[index(OctVertex::origin)] = Mobius::normalized(0.0, 1.0, 2.0, 0.0);

  auto preserves = [](const Mobius& g) {
    for (OctVertex u : kOctVertices) {
      const auto img = g.apply(position(u));
      const bool hit = std::any_of(kOctVertices.begin(), kOctVertices.end(),
                                   [&](OctVertex w) { return same_point(img, position(w)); });
      if (!hit) return false;
    }
    return true;
  };
  for (OctVertex v : {OctVertex::ne, OctVertex::nw, OctVertex::sw, OctVertex::se}) {
    // z ↦ s(z + v)/(z − v) sends v to ∞ and −v to 0; choose s among the
    // equatorial vertices so the vertex set is preserved.
    const Point p = *position(v);
    bool found = false;
    for (OctVertex s : {OctVertex::ne, OctVertex::nw, OctVertex::sw, OctVertex::se}) {
      const Point sp = *position(s);
      const Mobius g = Mobius::normalized(sp, sp * p, 1.0, -p);
      if (preserves(g)) {
        out[index(v)] = g;
        found = true;
        break;
      }
    }
    if (!found) throw Error("no octahedral symmetry found for an equatorial vertex");
  }
  return out;
}

}  // namespace

Horoball Horoball::at_infinity(double height) {
  if (!std::isfinite(height) || height <= 0.0) {
    throw ValidationError("horoball height must be finite and > 0");
  }
  return Horoball(std::nullopt, height);
}

Horoball Horoball::at(Point center, double diameter) {
  if (!std::isfinite(center.real()) || !std::isfinite(center.imag())) {
    throw ValidationError("horoball center must be finite");
  }
  if (!std::isfinite(diameter) || diameter <= 0.0) {
    throw ValidationError("horoball diameter must be finite and > 0");
  }
  return Horoball(center, diameter);
}

Mobius Mobius::normalized(std::complex<double> a, std::complex<double> b, std::complex<double> c,
                          std::complex<double> d) {
  const std::complex<double> det = a * d - b * c;
  if (std::abs(det) == 0.0) throw DomainError("singular Mobius transformation");
  const std::complex<double> s = std::sqrt(det);
  return Mobius{a / s, b / s, c / s, d / s};
}

std::optional<Point> Mobius::apply(std::optional<Point> z) const {
  if (!z) {
    if (c == 0.0) return std::nullopt;
    return a / c;
  }
  const std::complex<double> den = c * *z + d;
  if (std::abs(den) == 0.0) return std::nullopt;
  return (a * *z + b) / den;
}

Horoball Mobius::apply(const Horoball& h) const {
  if (h.is_at_infinity()) {
    if (c == 0.0) return Horoball::at_infinity(h.size() * std::abs(a / d));
    return Horoball::at(a / c, 1.0 / (std::norm(c) * h.size()));
  }
  const Point p = h.center();
  const std::complex<double> den = c * p + d;
  if (std::abs(den) == 0.0) return Horoball::at_infinity(1.0 / (std::norm(c) * h.size()));
  return Horoball::at((a * p + b) / den, h.size() / std::norm(den));
}

double half_space_volume(double cross_section_area, double height) {
  if (!(cross_section_area > 0.0) || !(height > 0.0) || !std::isfinite(cross_section_area) ||
      !std::isfinite(height)) {
    throw DomainError("half_space_volume: area and height must be finite and > 0");
  }
  return cross_section_area / (2.0 * height * height);
}

std::string_view to_string(Contact c) {
  switch (c) {
    case Contact::disjoint: return "disjoint";
    case Contact::tangent: return "tangent";
    case Contact::overlapping: return "overlapping";
  }
  return "disjoint";
}

Contact tangency(const Horoball& a, const Horoball& b) {
  if (a.is_at_infinity() && b.is_at_infinity()) {
    throw DomainError("tangency: both horoballs are centered at infinity");
  }
  double reach, gap;  // overlapping when reach > gap
  if (a.is_at_infinity() || b.is_at_infinity()) {
    const Horoball& top = a.is_at_infinity() ? a : b;
    const Horoball& low = a.is_at_infinity() ? b : a;
    reach = low.size();
    gap = top.size();
  } else {
    gap = std::norm(a.center() - b.center());
    if (gap == 0.0) throw DomainError("tangency: horoballs share a center");
    reach = a.size() * b.size();
  }
  if (close_relative(reach, gap)) return Contact::tangent;
  return reach > gap ? Contact::overlapping : Contact::disjoint;
}

GeodesicPlane GeodesicPlane::vertical(Point through, Point direction) {
  if (std::abs(direction) == 0.0 || !std::isfinite(std::abs(direction)) ||
      !std::isfinite(std::abs(through))) {
    throw ValidationError("vertical plane needs a finite point and a nonzero direction");
  }
  GeodesicPlane p;
  p.vertical_ = true;
  p.anchor_ = through;
  p.direction_ = direction / std::abs(direction);
  return p;
}

GeodesicPlane GeodesicPlane::hemisphere(Point center, double radius) {
  if (!std::isfinite(radius) || radius <= 0.0 || !std::isfinite(std::abs(center))) {
    throw ValidationError("hemisphere needs a finite center and radius > 0");
  }
  GeodesicPlane p;
  p.vertical_ = false;
  p.anchor_ = center;
  p.radius_ = radius;
  return p;
}

bool GeodesicPlane::on_boundary(std::optional<Point> z) const {
  if (!z) return vertical_;
  if (vertical_) {
    // Distance to the line is the component of z − anchor normal to direction.
    return std::abs((std::conj(direction_) * (*z - anchor_)).imag()) <= kGeometryTolerance;
  }
  return std::abs(std::abs(*z - anchor_) - radius_) <= kGeometryTolerance;
}

bool pokes(const Horoball& h, const GeodesicPlane& p) {
  if (h.is_at_infinity()) {
    if (p.on_boundary(std::nullopt)) return false;
    return h.size() <= p.radius();
  }
  const Point c = h.center();
  if (p.on_boundary(c)) return false;
  const double r = 0.5 * h.size();
  if (p.is_vertical()) {
    const double dist = std::abs((std::conj(p.direction()) * (c - p.anchor())).imag());
    return dist <= r;
  }
  // Ball centered at (c, r) meets the sphere about (anchor, 0) iff its center
  // is within r of it; the ball's only boundary point is c, off ∂P.
  const double to_center = std::hypot(std::abs(c - p.anchor()), r);
  return std::abs(to_center - p.radius()) <= r;
}

std::string_view to_string(OctVertex v) {
  switch (v) {
    case OctVertex::infinity: return "inf";
    case OctVertex::origin: return "zero";
    case OctVertex::ne: return "ne";
    case OctVertex::nw: return "nw";
    case OctVertex::sw: return "sw";
    case OctVertex::se: return "se";
  }
  return "inf";
}

OctVertex parse_oct_vertex(std::string_view name) {
  for (OctVertex v : kOctVertices) {
    if (to_string(v) == name) return v;
  }
  throw ValidationError("unknown octahedron vertex '" + std::string(name) + "'");
}

std::optional<Point> position(OctVertex v) {
  switch (v) {
    case OctVertex::infinity: return std::nullopt;
    case OctVertex::origin: return Point{0.0, 0.0};
    case OctVertex::ne: return Point{0.5, 0.5};
    case OctVertex::nw: return Point{-0.5, 0.5};
    case OctVertex::sw: return Point{-0.5, -0.5};
    case OctVertex::se: return Point{0.5, -0.5};
  }
  return std::nullopt;
}

OctVertex opposite(OctVertex v) {
  switch (v) {
    case OctVertex::infinity: return OctVertex::origin;
    case OctVertex::origin: return OctVertex::infinity;
    case OctVertex::ne: return OctVertex::sw;
    case OctVertex::nw: return OctVertex::se;
    case OctVertex::sw: return OctVertex::ne;
    case OctVertex::se: return OctVertex::nw;
  }
  return v;
}

const Mobius& symmetry_to_infinity(OctVertex v) {
  static const std::array<Mobius, 6> table = make_symmetries();
  return table[index(v)];
}

Horoball OctahedronConfig::horoball(OctVertex v) const {
  const auto p = position(v);
  return p ? Horoball::at(*p, size(v)) : Horoball::at_infinity(size(v));
}

OctahedronConfig OctahedronConfig::standard() {
  return OctahedronConfig{{1.0, 0.5, 1.0, 1.0, 1.0, 1.0}};
}

OctahedronConfig OctahedronConfig::opposite_expansion() {
  const double s = std::sqrt(0.5);
  return OctahedronConfig{{s, s, s, s, s, s}};
}

OctahedronConfig OctahedronConfig::edge_tangent() {
  return OctahedronConfig{{0.5, 0.5, 0.5, 0.5, 0.5, 0.5}};
}

void validate(const OctahedronConfig& cfg) {
  for (OctVertex v : kOctVertices) {
    const double s = cfg.size(v);
    if (!std::isfinite(s) || s <= 0.0) {
      throw ValidationError("horoball size at vertex '" + std::string(to_string(v)) +
                            "' must be finite and > 0");
    }
  }
}

double normalized_height(const OctahedronConfig& cfg, OctVertex v) {
  const Horoball h = symmetry_to_infinity(v).apply(cfg.horoball(v));
  return h.size();
}

double vertex_volume(const OctahedronConfig& cfg, OctVertex v) {
  return half_space_volume(1.0, normalized_height(cfg, v));
}

double total_volume(const OctahedronConfig& cfg) {
  double total = 0.0;
  for (OctVertex v : kOctVertices) total += vertex_volume(cfg, v);
  return total;
}

bool feasible(const OctahedronConfig& cfg, FeasibilityRules rules) {
  validate(cfg);
  for (std::size_t i = 0; i < kOctVertices.size(); ++i) {
    for (std::size_t j = i + 1; j < kOctVertices.size(); ++j) {
      if (tangency(cfg.horoball(kOctVertices[i]), cfg.horoball(kOctVertices[j])) ==
          Contact::overlapping) {
        return false;
      }
    }
  }
  if (rules.edge_constraint) {
    for (OctVertex v : kOctVertices) {
      if (normalized_height(cfg, v) < 0.5 * (1.0 - kGeometryTolerance)) return false;
    }
  }
  return true;
}

double max_feasible_size(const OctahedronConfig& cfg, OctVertex v, FeasibilityRules rules) {
  const auto pv = position(v);
  if (!pv) {
    double lowest = rules.edge_constraint ? 0.5 : 0.0;
    for (OctVertex w : kOctVertices) {
      if (w != v) lowest = std::max(lowest, cfg.size(w));
    }
    return lowest;
  }
  double largest = std::numeric_limits<double>::infinity();
  for (OctVertex w : kOctVertices) {
    if (w == v) continue;
    const auto pw = position(w);
    largest = std::min(largest, pw ? std::norm(*pv - *pw) / cfg.size(w) : cfg.size(w));
  }
  if (rules.edge_constraint) {
    // normalized height is (height at unit diameter)/diameter; keep it >= 1/2.
    const double unit_height = symmetry_to_infinity(v).apply(Horoball::at(*pv, 1.0)).size();
    largest = std::min(largest, 2.0 * unit_height);
  }
  return largest;
}

SearchResult search_packing_max(std::uint64_t seed, long long iterations, SearchOptions options) {
  if (iterations < 1) throw DomainError("search_packing_max: iterations must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick_vertex(0, 5);
  const FeasibilityRules rules = options.rules;
  constexpr double kMinSize = 1e-6;

  // Larger horoball means larger diameter, or lower height at infinity.
  auto scale = [](OctahedronConfig& cfg, OctVertex v, double factor) {
    if (v == OctVertex::infinity) {
      cfg.size(v) /= factor;
    } else {
      cfg.size(v) *= factor;
    }
  };
  auto grow_to_max = [&](OctahedronConfig& cfg, OctVertex v, double fraction) {
    const double limit = max_feasible_size(cfg, v, rules);
    if (v == OctVertex::infinity) {
      cfg.size(v) = std::max(limit, kMinSize) / fraction;
    } else {
      cfg.size(v) = std::max(std::min(limit, 1.0 / kMinSize) * fraction, kMinSize);
    }
  };
  auto shuffled = [&]() {
    std::array<OctVertex, 6> order = kOctVertices;
    std::shuffle(order.begin(), order.end(), rng);
    return order;
  };
  auto random_start = [&]() {
    OctahedronConfig cfg{{1.0 / kMinSize, kMinSize, kMinSize, kMinSize, kMinSize, kMinSize}};
    for (OctVertex v : shuffled()) grow_to_max(cfg, v, 0.2 + 0.8 * unit(rng));
    return cfg;
  };

  std::vector<OctahedronConfig> starts;
  if (options.include_reference_starts) {
    starts = {OctahedronConfig::standard(), OctahedronConfig::opposite_expansion(),
              OctahedronConfig::edge_tangent()};
  }

  SearchResult result;
  result.best_total = -1.0;
  auto consider = [&](const OctahedronConfig& cfg) {
    ++result.evaluations;
    if (!feasible(cfg, rules)) return -1.0;
    const double total = total_volume(cfg);
    if (total > result.best_total) {
      result.best_total = total;
      result.best_config = cfg;
    }
    return total;
  };

  constexpr long long kRestartEvery = 256;
  std::size_t next_start = 0;
  OctahedronConfig current{};
  double current_total = -1.0;
  for (long long it = 0; it < iterations; ++it) {
    if (it % kRestartEvery == 0) {
      current = next_start < starts.size() ? starts[next_start++] : random_start();
      current_total = consider(current);
      if (current_total < 0.0) {
        current = random_start();
        current_total = consider(current);
      }
      continue;
    }
    // Shrink one or two horoballs, then let the others expand into the room.
    OctahedronConfig trial = current;
    const int shrinks = 1 + static_cast<int>(unit(rng) < 0.3);
    for (int s = 0; s < shrinks; ++s) {
      scale(trial, kOctVertices[pick_vertex(rng)], 0.3 + 0.7 * unit(rng));
    }
    for (OctVertex v : shuffled()) {
      grow_to_max(trial, v, unit(rng) < 0.8 ? 1.0 : 0.5 + 0.5 * unit(rng));
    }
    const double total = consider(trial);
    if (total < 0.0) continue;
    // Annealed acceptance keeps the walk moving across the flat optimum set.
    const double temperature = 0.05 * (1.0 - static_cast<double>(it % kRestartEvery) / kRestartEvery);
    if (total >= current_total || unit(rng) < std::exp((total - current_total) / (temperature + 1e-12))) {
      current = trial;
      current_total = total;
    }
  }
  if (result.best_total < 0.0) throw Error("search_packing_max: no feasible configuration found");
  return result;
}

}  // namespace cusp
