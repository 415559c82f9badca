#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cusp {

/// A point of the boundary plane of upper half-space.
using Point = std::complex<double>;

/// Absolute tolerance of the geometric predicates.
inline constexpr double kGeometryTolerance = 1e-12;

/// A horoball in the upper half-space model: a Euclidean ball tangent to the
/// boundary at a finite center (size = diameter), or the half-space above a
/// horizontal plane when centered at infinity (size = height).
class Horoball {
 public:
  static Horoball at_infinity(double height);
  static Horoball at(Point center, double diameter);

  bool is_at_infinity() const noexcept { return !center_; }
  /// Finite center; precondition: !is_at_infinity().
  Point center() const { return *center_; }
  double size() const noexcept { return size_; }

 private:
  Horoball(std::optional<Point> c, double s) : center_(c), size_(s) {}
  std::optional<Point> center_;
  double size_;
};

/// Orientation-preserving isometry of upper half-space, z ↦ (az + b)/(cz + d),
/// normalized to ad − bc = 1.
struct Mobius {
  std::complex<double> a{1}, b{0}, c{0}, d{1};

  static Mobius normalized(std::complex<double> a, std::complex<double> b,
                           std::complex<double> c, std::complex<double> d);
  /// Image of a boundary point; nullopt stands for infinity (in and out).
  std::optional<Point> apply(std::optional<Point> z) const;
  Horoball apply(const Horoball& h) const;
};

/// Euclidean area / (2 height²): hyperbolic volume of the part of a horoball
/// centered at infinity lying above height `height` over a footprint of the
/// given Euclidean area.
double half_space_volume(double cross_section_area, double height);

enum class Contact { disjoint, tangent, overlapping };

std::string_view to_string(Contact c);

/// Finite centers p, q are tangent when d_p·d_q = |p − q|²; a finite horoball
/// meets the one at infinity when its diameter reaches the height. Compared
/// with relative tolerance kGeometryTolerance. Throws DomainError when the
/// centers coincide.
Contact tangency(const Horoball& a, const Horoball& b);

/// Geodesic plane: a vertical half-plane over a boundary line, or a
/// hemisphere over a boundary circle.
class GeodesicPlane {
 public:
  static GeodesicPlane vertical(Point through, Point direction);
  static GeodesicPlane hemisphere(Point center, double radius);

  bool is_vertical() const noexcept { return vertical_; }
  Point anchor() const noexcept { return anchor_; }      ///< line point or circle center
  Point direction() const noexcept { return direction_; }  ///< unit, vertical planes only
  double radius() const noexcept { return radius_; }

  /// True when the boundary point lies on ∂P, within kGeometryTolerance.
  /// Infinity is on ∂P exactly for vertical planes.
  bool on_boundary(std::optional<Point> z) const;

 private:
  bool vertical_ = true;
  Point anchor_{};
  Point direction_{1.0, 0.0};
  double radius_ = 0.0;
};

/// A horoball pokes a plane when its center is off ∂P yet the closed horoball
/// meets P.
bool pokes(const Horoball& h, const GeodesicPlane& p);

/// Ideal vertices of the regular octahedron normalized to ∞, 0 and
/// (±1 ± i)/2. Its equatorial edges are semicircles of height 1/2.
enum class OctVertex : std::uint8_t { infinity, origin, ne, nw, sw, se };

inline constexpr std::array<OctVertex, 6> kOctVertices = {
    OctVertex::infinity, OctVertex::origin, OctVertex::ne,
    OctVertex::nw,       OctVertex::sw,     OctVertex::se};

std::string_view to_string(OctVertex v);
/// Throws ValidationError for unknown names.
OctVertex parse_oct_vertex(std::string_view name);
/// Boundary position; nullopt for the vertex at infinity.
std::optional<Point> position(OctVertex v);
/// The vertex opposite v (not joined to it by an edge).
OctVertex opposite(OctVertex v);
/// A symmetry of the octahedron carrying v to infinity.
const Mobius& symmetry_to_infinity(OctVertex v);

/// Horoball sizes at the six vertices (height at ∞, diameters elsewhere).
struct OctahedronConfig {
  std::array<double, 6> sizes{};

  double size(OctVertex v) const { return sizes[static_cast<std::size_t>(v)]; }
  double& size(OctVertex v) { return sizes[static_cast<std::size_t>(v)]; }
  Horoball horoball(OctVertex v) const;

  /// Faces pairwise tangent: h = 1, equatorial diameters 1, origin 1/2.
  static OctahedronConfig standard();
  /// ∞ and 0 expanded until tangent at the center of the octahedron.
  static OctahedronConfig opposite_expansion();
  /// Horosphere at ∞ lowered to the equatorial edges, neighbours shrunk.
  static OctahedronConfig edge_tangent();
};

/// Validates positivity and finiteness; throws ValidationError.
void validate(const OctahedronConfig& cfg);

/// Height of the vertex's horoball after carrying the vertex to infinity by
/// a symmetry of the octahedron.
double normalized_height(const OctahedronConfig& cfg, OctVertex v);

/// Volume of the horoball piece inside the octahedron at v. From infinity the
/// octahedron projects onto a unit square, so this is
/// half_space_volume(1, normalized_height).
double vertex_volume(const OctahedronConfig& cfg, OctVertex v);

double total_volume(const OctahedronConfig& cfg);

struct FeasibilityRules {
  /// Keep each horoball above the edges not incident to its vertex, i.e.
  /// normalized height >= 1/2.
  bool edge_constraint = true;
};

/// All 15 pairs disjoint or tangent, and the edge constraint when enabled.
bool feasible(const OctahedronConfig& cfg, FeasibilityRules rules = {});

/// Largest size the horoball at v may take with all others fixed (smallest
/// height when v is infinity) under the given rules.
double max_feasible_size(const OctahedronConfig& cfg, OctVertex v, FeasibilityRules rules = {});

struct SearchOptions {
  FeasibilityRules rules{};
  /// Seed the search with the three extremal configurations.
  bool include_reference_starts = true;
};

struct SearchResult {
  OctahedronConfig best_config;
  double best_total = 0.0;
  long long evaluations = 0;
};

/// Seeded stochastic local search for the largest total horoball volume over
/// feasible configurations. Deterministic for a given seed.
SearchResult search_packing_max(std::uint64_t seed, long long iterations, SearchOptions options = {});

}  // namespace cusp
