#include "cuspdens/constants.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "cuspdens/errors.hpp"

namespace cusp {
namespace {

constexpr int kZetaTerms = 40;

// ζ(2n)/(n(2n+1)(2π)^{2n}) for n = 1..kZetaTerms.
std::array<double, kZetaTerms> make_clausen_coefficients() {
  std::array<double, kZetaTerms> c{};
  const double two_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  double scale = 1.0;
  for (int n = 1; n <= kZetaTerms; ++n) {
    scale /= two_pi_sq;
    const double zeta = std::riemann_zeta(2.0 * n);
    c[n - 1] = zeta * scale / (n * (2.0 * n + 1.0));
  }
  return c;
}

// Reduce x into (−π, π].
double reduce_two_pi(double x) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::remainder(x, two_pi);
  if (r <= -std::numbers::pi) r += two_pi;
  return r;
}

}  // namespace

double clausen2(double x) {
  if (!std::isfinite(x)) throw DomainError("clausen2: argument must be finite");
  static const std::array<double, kZetaTerms> coeff = make_clausen_coefficients();

  const double r = reduce_two_pi(x);
  if (r == 0.0) return 0.0;

  // Cl₂(x) = x − x ln|x| + Σ ζ(2n) x^{2n+1} / (n(2n+1)(2π)^{2n}),  |x| < 2π.
  // With |x| ≤ π the ratio of successive terms is at most 1/4.
  const double r2 = r * r;
  double power = r;
  double series = 0.0;
  for (int n = 0; n < kZetaTerms; ++n) {
    power *= r2;
    const double term = coeff[n] * power;
    series += term;
    if (std::abs(term) < 1e-18) break;
  }
  return r - r * std::log(std::abs(r)) + series;
}

double lobachevsky(double theta) {
  if (!std::isfinite(theta)) throw DomainError("lobachevsky: argument must be finite");
  return 0.5 * clausen2(2.0 * theta);
}

const BoundSet& bounds() {
  static const BoundSet set = [] {
    BoundSet b{};
    b.v_tet = 2.0 * lobachevsky(std::numbers::pi / 6.0);
    b.v_oct = 8.0 * lobachevsky(std::numbers::pi / 4.0);
    b.boroczky = std::numbers::sqrt3 / (2.0 * b.v_tet);
    b.dcc_upper = b.boroczky * b.v_oct;
    b.volume_density_upper = b.v_oct;
    return b;
  }();
  return set;
}

double acfgk_cusp_volume_bound(long long crossings) {
  if (crossings < 3) {
    throw DomainError("acfgk_cusp_volume_bound: no hyperbolic knot has fewer than 3 crossings");
  }
  const double c = static_cast<double>(crossings);
  const double shrink = 1.0 - 1.0 / c;
  return 4.5 * c * shrink * shrink;
}

}  // namespace cusp
