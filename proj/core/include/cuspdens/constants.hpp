#pragma once

namespace cusp {

/// Lobachevsky function, Λ(θ) = −∫₀^θ ln|2 sin u| du.
///
/// Odd and π-periodic. Evaluated through the Clausen function,
/// Λ(θ) = Cl₂(2θ)/2, with absolute error below 1e-14 for any finite θ.
/// Throws DomainError on non-finite input.
double lobachevsky(double theta);

/// Clausen function Cl₂(x) = Σ sin(kx)/k².
double clausen2(double x);

/// Volumes of the regular ideal polyhedra and the global density bounds
/// derived from them.
struct BoundSet {
  double v_tet;                 ///< regular ideal tetrahedron, 2Λ(π/6)
  double v_oct;                 ///< regular ideal octahedron, 8Λ(π/4)
  double boroczky;              ///< horoball packing density √3/(2 v_tet)
  double dcc_upper;             ///< cusp volume per crossing, boroczky · v_oct
  double volume_density_upper;  ///< volume per crossing, v_oct
};

/// Computed once and cached; safe to call concurrently.
const BoundSet& bounds();

/// Upper bound (9c/2)(1 − 1/c)² on the cusp volume of a knot with c crossings.
/// Requires c ≥ 3.
double acfgk_cusp_volume_bound(long long crossings);

}  // namespace cusp
