#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cuspdens/linkmodel.hpp"
#include "cuspdens/registry.hpp"

namespace cusp {

/// One member of a parametric link family.
struct FamilyPoint {
  long long crossing_number = 0;
  std::optional<double> volume;
  std::optional<double> cusp_volume;
  double dcc = 0.0;
};

/// Twist knot Tw_q, the (1, q) filling of one Whitehead link component.
/// Crossing number 2q + 2. The cusp volume is not measured: it is modelled by
/// the fixed surrogate `cusp_volume_surrogate` (the Whitehead cusp data it
/// converges to), so only the crossing count and the limit dcc → 0 carry
/// meaning. Requires q >= 1.
FamilyPoint twist_knot(long long q, double cusp_volume_surrogate);

/// Twist knot using the whitehead_link entry of the given registry.
FamilyPoint twist_knot(long long q, const Registry& registry = Registry::bundled());

/// The links L(n, k) (prime = false) and L'(n, k) (prime = true) built from
/// 2n(k − 1) regular ideal octahedra with the standard horoball packing:
/// volume 2n(k−1)·v_oct, cusp volume 6n(k−1), crossings 2nk + 2k (+2 for L').
/// Requires n, k >= 2.
FamilyPoint octahedral_link(long long n, long long k, bool prime);

/// Seed of the cover-and-twist construction: an augmented knot whose tangle
/// cusp (maximized first) has volume V1, whose belt cusp has volume V2, and
/// whose diagram has c crossings including the 4 around the belt.
struct CoverSeed {
  double tangle_cusp_volume = 0.0;
  double belt_cusp_volume = 0.0;
  long long crossings = 0;

  /// d = (V1 + V2)/(c − 4), the supremum of the family.
  double limit_density() const;
};

/// Throws DomainError for c <= 4 or non-positive total volume.
void validate(const CoverSeed& seed);

/// Seed from a registry geometry flagged augmented_cross_tangle. Its
/// crossing_number counts the tangle component only, so the belt's 4
/// crossings are added; cusps with role belt form V2, all others V1.
CoverSeed cover_seed(const LinkGeometry& link);

/// J(n, m): n-fold cyclic cover about the belt (n odd keeps a knot) followed by
/// m full twists along the twice-punctured disk. Cusp volume n(V1 + V2),
/// crossings n(c − 4) + 4 + 2m.
FamilyPoint cover_twist(const CoverSeed& seed, long long n, long long m);

struct CoverParameters {
  long long n = 0;
  long long m = 0;
};

/// Odd n >= 1 and m >= 0 with |dcc(J(n, m)) − y| < eps, smallest n first.
/// y must lie in the open interval (0, d).
CoverParameters cover_twist_sample(const CoverSeed& seed, double y, double eps);

struct NamedInterval {
  std::string name;
  double lower = 0.0;
  double upper = 0.0;
  std::string citation;
};

/// The four density intervals established from the registry data:
/// links_cd, knots_cd, two_component_dcc, links_dcc.
std::vector<NamedInterval> interval_endpoints(const Registry& registry = Registry::bundled());

}  // namespace cusp
