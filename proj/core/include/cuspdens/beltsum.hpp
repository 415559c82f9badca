#pragma once

#include <string>

#include "cuspdens/linkmodel.hpp"

namespace cusp {

/// Measured data of an augmented cross tangle link: its volume and the
/// tangle component's cusp, maximized first.
struct TangleLinkData {
  double volume = 0.0;
  double tangle_cusp_volume = 0.0;
  double meridian = 0.0;
  double belt_cusp_volume = 0.0;
  bool no_poking = false;

  double tangle_density() const { return tangle_cusp_volume / volume; }
};

/// Throws ValidationError when a field is out of range or the tangle cusp
/// density exceeds the packing bound.
void validate(const TangleLinkData& d);

/// Tangle data read off a registry geometry: the tangle-role cusps give the
/// volume and meridian, belt-role cusps the belt volume. The link must carry
/// the augmented_cross_tangle flag and a meridian on its tangle cusp.
TangleLinkData tangle_data(const LinkGeometry& link);

/// Stand-in for a member of the daisy-chain tangle family whose tangle cusp
/// has converged to the Borromean cusp (volume 4, meridian 2) while the
/// complement volume grows without bound.
TangleLinkData daisy_chain_proxy(double volume);

struct BeltSumResult {
  double volume = 0.0;
  double tangle_cusp_volume = 0.0;
  double meridian = 0.0;
  long long k = 0;  ///< copies of the smaller-meridian summand
  long long p = 0;  ///< copies of the other summand

  double tangle_density() const { return tangle_cusp_volume / volume; }
};

/// Belted sum of two links without poking. The summand with the shorter
/// meridian keeps its cusp; the other is shrunk until the meridians agree,
/// scaling its cusp volume by the squared meridian ratio. Volumes add.
/// Throws PokingUnverifiedError if either input lacks the no-poking flag.
BeltSumResult belted_sum(const TangleLinkData& a, const TangleLinkData& b);

/// k copies of the smaller-meridian summand and p copies of the other
/// (ties keep the argument order). Throws DomainError when k = p = 0 or
/// either is negative.
BeltSumResult iterated_belt_sum(const TangleLinkData& a, const TangleLinkData& b, long long k,
                                long long p);

/// f(t) = (V₁ + t r² V₂)/(vol₁ + t vol₂), with r = m₁/m₂ ≤ 1 after ordering
/// and t the ratio of second-summand to first-summand copies.
double density_function(const TangleLinkData& a, const TangleLinkData& b, double t);

/// lim f(t) as t → ∞, r² V₂/vol₂.
double density_limit(const TangleLinkData& a, const TangleLinkData& b);

/// Solves f(t) = y in closed form. y must lie strictly between f(0) and the
/// limit; otherwise RangeError.
double invert_density(const TangleLinkData& a, const TangleLinkData& b, double y);

struct BeltParameters {
  long long k = 0;
  long long p = 0;
};

/// Positive k, p with k + p odd and |f(p/k) − y| < eps, so that the iterated
/// sum is a two-component link whose belt filling yields knots. Candidates
/// are the Stern–Brocot ancestors of the exact solution (continued fraction
/// convergents and intermediate fractions); the first admissible one has the
/// smallest k + p among them.
BeltParameters sample_parameters(const TangleLinkData& a, const TangleLinkData& b, double y,
                                 double eps);

struct DensityInterval {
  double lower = 0.0;
  double upper = 0.0;
  std::string lower_source;
  std::string upper_source;
};

/// Closed interval between the tangle density of the smaller-meridian summand
/// and r² times that of the other, in increasing order.
DensityInterval knot_density_interval(const TangleLinkData& a, const TangleLinkData& b);

}  // namespace cusp
