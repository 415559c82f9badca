#include "cuspdens/families.hpp"

#include <cmath>
#include <limits>

#include "cuspdens/beltsum.hpp"
#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"

namespace cusp {

FamilyPoint twist_knot(long long q, double cusp_volume_surrogate) {
  if (q < 1) throw DomainError("twist_knot: q must be >= 1");
  if (!(cusp_volume_surrogate > 0.0) || !std::isfinite(cusp_volume_surrogate)) {
    throw ValidationError("twist_knot: cusp volume surrogate must be finite and > 0");
  }
  FamilyPoint pt;
  pt.crossing_number = 2 * q + 2;
  pt.cusp_volume = cusp_volume_surrogate;
  pt.dcc = cusp_volume_surrogate / static_cast<double>(pt.crossing_number);
  return pt;
}

FamilyPoint twist_knot(long long q, const Registry& registry) {
  return twist_knot(q, registry.geometry("whitehead_link").cusp_volume());
}

FamilyPoint octahedral_link(long long n, long long k, bool prime) {
  if (n < 2 || k < 2) throw DomainError("octahedral_link: n and k must be >= 2");
  const long long octahedra = 2 * n * (k - 1);
  FamilyPoint pt;
  pt.crossing_number = 2 * n * k + 2 * k + (prime ? 2 : 0);
  pt.volume = static_cast<double>(octahedra) * bounds().v_oct;
  // Standard packing: 1/2 from each of the six vertices of every octahedron.
  pt.cusp_volume = 3.0 * static_cast<double>(octahedra);
  pt.dcc = *pt.cusp_volume / static_cast<double>(pt.crossing_number);
  return pt;
}

double CoverSeed::limit_density() const {
  return (tangle_cusp_volume + belt_cusp_volume) / static_cast<double>(crossings - 4);
}

void validate(const CoverSeed& seed) {
  if (seed.crossings <= 4) throw DomainError("cover seed needs more than 4 crossings");
  if (!std::isfinite(seed.tangle_cusp_volume) || seed.tangle_cusp_volume <= 0.0) {
    throw DomainError("cover seed tangle cusp volume must be finite and > 0");
  }
  if (!std::isfinite(seed.belt_cusp_volume) || seed.belt_cusp_volume < 0.0) {
    throw DomainError("cover seed belt cusp volume must be finite and >= 0");
  }
}

CoverSeed cover_seed(const LinkGeometry& link) {
  if (!link.has_flag(LinkFlag::augmented_cross_tangle)) {
    throw ValidationError("'" + link.name() + "' is not flagged as an augmented link");
  }
  if (!link.crossing_number()) {
    throw ValidationError("'" + link.name() + "' has no crossing number");
  }
  CoverSeed seed;
  for (const CuspRecord& c : link.cusps()) {
    (c.role == CuspRole::belt ? seed.belt_cusp_volume : seed.tangle_cusp_volume) += c.cusp_volume;
  }
  seed.crossings = *link.crossing_number() + 4;
  validate(seed);
  return seed;
}

FamilyPoint cover_twist(const CoverSeed& seed, long long n, long long m) {
  validate(seed);
  if (n < 1) throw DomainError("cover_twist: n must be >= 1");
  if (n % 2 == 0) throw DomainError("cover_twist: n must be odd for the cover to stay a knot");
  if (m < 0) throw DomainError("cover_twist: m must be >= 0");
  FamilyPoint pt;
  pt.cusp_volume = static_cast<double>(n) * (seed.tangle_cusp_volume + seed.belt_cusp_volume);
  pt.crossing_number = n * (seed.crossings - 4) + 4 + 2 * m;
  pt.dcc = *pt.cusp_volume / static_cast<double>(pt.crossing_number);
  return pt;
}

CoverParameters cover_twist_sample(const CoverSeed& seed, double y, double eps) {
  validate(seed);
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("cover_twist_sample: eps must be > 0");
  const double d = seed.limit_density();
  if (!(y > 0.0 && y < d)) {
    throw RangeError("cover_twist_sample: target must lie strictly between 0 and " +
                     std::to_string(d));
  }
  const double total = seed.tangle_cusp_volume + seed.belt_cusp_volume;
  const double base = static_cast<double>(seed.crossings - 4);

  // For fixed n the density is decreasing in m; solving for real m and trying
  // the two neighbouring integers covers the closest members. Consecutive m
  // differ by about 2y²/(n·total) in density, so n beyond that bound always works.
  auto try_n = [&](long long n) -> std::optional<CoverParameters> {
    const double nn = static_cast<double>(n);
    const double m_real = (nn * total / y - nn * base - 4.0) / 2.0;
    const double m_floor = std::floor(m_real);
    for (double m : {m_floor, m_floor + 1.0}) {
      if (m < 0.0 || m > 9e15) continue;
      const auto mm = static_cast<long long>(m);
      if (std::abs(cover_twist(seed, n, mm).dcc - y) < eps) return CoverParameters{n, mm};
    }
    return std::nullopt;
  };

  const double guaranteed = 4.0 * y * y / (total * eps) + 1.0;
  const long long scan_limit = 2'000'001;
  long long n = 1;
  for (; n <= scan_limit && n <= guaranteed + 2; n += 2) {
    if (auto hit = try_n(n)) return *hit;
  }
  // Past the scan window, jump to the size where the m-grid is fine enough and
  // walk up until m >= 0 also holds.
  n = std::max<long long>(n, static_cast<long long>(std::ceil(guaranteed)) | 1LL);
  for (int attempt = 0; attempt < 64; ++attempt, n = 2 * n + 1) {
    if (auto hit = try_n(n)) return *hit;
  }
  throw RangeError("cover_twist_sample: no admissible (n, m) found within eps");
}

std::vector<NamedInterval> interval_endpoints(const Registry& registry) {
  const BoundSet& b = bounds();
  std::vector<NamedInterval> out;

  out.push_back({"links_cd", 0.0, b.boroczky,
                 "cusp densities of hyperbolic links: horoball packing bound sqrt(3)/(2 v_tet), "
                 "approached by Dehn fillings of daisy-chain covers that remain link complements"});

  // Lower end: daisy-chain tangles whose volume diverges.
  const TangleLinkData high = tangle_data(registry.geometry("F2_limit"));
  const TangleLinkData low = daisy_chain_proxy(std::numeric_limits<double>::max() / 16);
  const DensityInterval knots = knot_density_interval(low, high);
  out.push_back({"knots_cd", 0.0, knots.upper,
                 "cusp densities of knots: belted sums of daisy-chain tangles with the "
                 "half-twisted maximally twisted four chain, 4 sqrt(3)/(10 v_tet)"});

  out.push_back({"two_component_dcc", 0.0, registry.reported("W10_11_augmented", "limit_dcc"),
                 "cusp crossing densities of two-component links: covers and twists of the "
                 "augmented weaving knot W(10,11), d = (V1+V2)/(c-4) = 1.6923"});

  const CoverSeed seed = cover_seed(registry.geometry("L_7_8_augmented"));
  out.push_back({"links_dcc", 0.0, seed.limit_density(),
                 "cusp crossing densities of links: covers and twists of augmented L(7,8), "
                 "cusp volume 267.1551 over 126 crossings"});
  return out;
}

}  // namespace cusp
