#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cuspdens/beltsum.hpp"
#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"
#include "cuspdens/registry.hpp"
#include "oracles.hpp"

using namespace cusp;

namespace {

TangleLinkData random_tangle(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> vol(1.0, 60.0), dens(0.02, 0.85), mer(1.0, 4.0);
  TangleLinkData d;
  d.volume = vol(rng);
  d.tangle_cusp_volume = dens(rng) * d.volume;
  d.meridian = mer(rng);
  d.belt_cusp_volume = 0.5;
  d.no_poking = true;
  return d;
}

const TangleLinkData& f2() {
  static const TangleLinkData d = tangle_data(Registry::bundled().geometry("F2_limit"));
  return d;
}

}  // namespace

TEST(BeltedSum, MeridianScaling) {
  const TangleLinkData a{10.0, 4.0, 1.0, 0.0, true};
  const TangleLinkData b{20.0, 8.0, 2.0, 0.0, true};
  const BeltSumResult r = belted_sum(a, b);
  EXPECT_DOUBLE_EQ(r.volume, 30.0);
  EXPECT_DOUBLE_EQ(r.meridian, 1.0);
  EXPECT_DOUBLE_EQ(r.tangle_cusp_volume, 4.0 + 0.25 * 8.0);
  // argument order does not matter
  const BeltSumResult s = belted_sum(b, a);
  EXPECT_DOUBLE_EQ(s.tangle_cusp_volume, r.tangle_cusp_volume);
  EXPECT_DOUBLE_EQ(s.volume, r.volume);
}

TEST(BeltedSum, RequiresNoPoking) {
  TangleLinkData a{10.0, 4.0, 1.0, 0.0, true};
  TangleLinkData b{20.0, 8.0, 2.0, 0.0, false};
  EXPECT_THROW(belted_sum(a, b), PokingUnverifiedError);
  EXPECT_THROW(belted_sum(a, b), ValidationError);
}

TEST(IteratedBeltSum, Domain) {
  const TangleLinkData a{10.0, 4.0, 1.0, 0.0, true};
  EXPECT_THROW(iterated_belt_sum(a, a, 0, 0), DomainError);
  EXPECT_THROW(iterated_belt_sum(a, a, -1, 2), DomainError);
  const BeltSumResult only_second = iterated_belt_sum(a, TangleLinkData{20.0, 8.0, 2.0, 0, true}, 0, 3);
  EXPECT_DOUBLE_EQ(only_second.meridian, 2.0);
  EXPECT_DOUBLE_EQ(only_second.tangle_cusp_volume, 24.0);
}

TEST(IteratedBeltSum, MatchesDensityFunction) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<long long> copies(1, 1000);
  for (int i = 0; i < 1000; ++i) {
    const TangleLinkData a = random_tangle(rng), b = random_tangle(rng);
    const long long k = copies(rng), p = copies(rng);
    const double direct = iterated_belt_sum(a, b, k, p).tangle_density();
    const double t = static_cast<double>(p) / static_cast<double>(k);
    EXPECT_NEAR(direct, density_function(a, b, t), 1e-12 * direct);
    const bool a_first = a.meridian <= b.meridian;
    const TangleLinkData& s = a_first ? a : b;
    const TangleLinkData& o = a_first ? b : a;
    EXPECT_NEAR(direct,
                oracle::belt_density(s.volume, s.tangle_cusp_volume, s.meridian, o.volume,
                                     o.tangle_cusp_volume, o.meridian, t),
                1e-12 * direct);
  }
}

TEST(DensityFunction, MonotoneWithEndpoints) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const TangleLinkData a = random_tangle(rng), b = random_tangle(rng);
    const TangleLinkData& s = a.meridian <= b.meridian ? a : b;
    const TangleLinkData& o = a.meridian <= b.meridian ? b : a;
    const double r = s.meridian / o.meridian;
    EXPECT_NEAR(density_function(a, b, 0.0), s.tangle_density(), 1e-15);
    EXPECT_NEAR(density_limit(a, b), r * r * o.tangle_density(), 1e-15);
    EXPECT_NEAR(density_function(a, b, 1e12), density_limit(a, b), 1e-9);
    const double sign = density_limit(a, b) >= s.tangle_density() ? 1.0 : -1.0;
    double prev = density_function(a, b, 0.0);
    for (double t = 0.01; t < 1e4; t *= 1.3) {
      const double cur = density_function(a, b, t);
      EXPECT_GE(sign * (cur - prev), -1e-15);
      prev = cur;
    }
  }
  EXPECT_THROW(density_function(f2(), f2(), -1.0), DomainError);
}

TEST(InvertDensity, AgreesWithBisection) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  int checked = 0;
  while (checked < 300) {
    const TangleLinkData a = random_tangle(rng), b = random_tangle(rng);
    const double y0 = density_function(a, b, 0.0), y1 = density_limit(a, b);
    if (std::abs(y1 - y0) < 1e-3) continue;
    const double y = y0 + u(rng) * (y1 - y0);
    const bool a_first = a.meridian <= b.meridian;
    const double t = invert_density(a, b, y);
    const double t_ref = oracle::bisect_density(a_first ? a : b, a_first ? b : a, y);
    EXPECT_NEAR(t, t_ref, 1e-9 * std::max(1.0, t_ref));
    EXPECT_NEAR(density_function(a, b, t), y, 1e-12);
    ++checked;
  }
  EXPECT_THROW(invert_density(f2(), f2(), 0.5), RangeError);
}

TEST(SampleParameters, HitsTargetsWithOddSum) {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.001, 0.999);
  const TangleLinkData proxy = daisy_chain_proxy(1e4);
  const TangleLinkData& hi = f2();
  for (int i = 0; i < 200; ++i) {
    const double lo_y = density_function(hi, proxy, 0.0);
    const double hi_y = density_limit(hi, proxy);
    const double y = std::min(lo_y, hi_y) + u(rng) * std::abs(hi_y - lo_y);
    for (double eps : {1e-3, 1e-6, 1e-9}) {
      const BeltParameters kp = sample_parameters(hi, proxy, y, eps);
      EXPECT_GE(kp.k, 1);
      EXPECT_GE(kp.p, 1);
      EXPECT_EQ((kp.k + kp.p) % 2, 1);
      EXPECT_LT(std::abs(iterated_belt_sum(hi, proxy, kp.k, kp.p).tangle_density() - y), eps * (1 + 1e-9));
    }
  }
}

TEST(SampleParameters, SmallestCandidateFirst) {
  // Target exactly f(1/2): (k, p) = (2, 1) is the first odd-sum node on the path.
  const TangleLinkData a{10.0, 8.0, 1.0, 0.0, true};
  const TangleLinkData b{10.0, 4.0, 1.0, 0.0, true};
  const BeltParameters kp = sample_parameters(a, b, density_function(a, b, 0.5), 1e-12);
  EXPECT_EQ(kp.k, 2);
  EXPECT_EQ(kp.p, 1);
}

TEST(SampleParameters, EvenSumTargetUsesDescendants) {
  // f(1) sits on the even node 1/1; the answer must still have k + p odd.
  const TangleLinkData a{10.0, 8.0, 1.0, 0.0, true};
  const TangleLinkData b{10.0, 4.0, 1.0, 0.0, true};
  const double y = density_function(a, b, 1.0);
  for (double eps : {1e-2, 1e-5, 1e-8}) {
    const BeltParameters kp = sample_parameters(a, b, y, eps);
    EXPECT_EQ((kp.k + kp.p) % 2, 1);
    EXPECT_LT(std::abs(density_function(a, b, double(kp.p) / double(kp.k)) - y), eps);
  }
}

TEST(SampleParameters, OutOfRange) {
  const TangleLinkData proxy = daisy_chain_proxy(1e4);
  EXPECT_THROW(sample_parameters(f2(), proxy, 0.9, 1e-6), RangeError);
  EXPECT_THROW(sample_parameters(f2(), proxy, 0.3, 0.0), DomainError);
}

TEST(KnotInterval, DaisyProxyAgainstHighDensityTangle) {
  // As the proxy volume grows the interval opens to (0, cd(F2)].
  const double top = 4 * std::sqrt(3.0) / (10 * bounds().v_tet);
  for (double vol : {1e2, 1e4, 1e6}) {
    const DensityInterval iv = knot_density_interval(f2(), daisy_chain_proxy(vol));
    EXPECT_NEAR(iv.upper, top, 1e-14);
    EXPECT_NEAR(iv.lower, 4.0 / vol, 1e-15);
    EXPECT_FALSE(iv.lower_source.empty());
  }
}

TEST(TangleData, FromRegistry) {
  EXPECT_NEAR(f2().tangle_density(), 0.682620870651264644, 1e-14);
  EXPECT_EQ(f2().meridian, 2.0);
  EXPECT_TRUE(f2().no_poking);
  EXPECT_THROW(tangle_data(Registry::bundled().geometry("figure_eight")), ValidationError);
}

TEST(TangleData, Validation) {
  EXPECT_THROW(validate(TangleLinkData{1.0, 0.9, 1.0, 0.0, true}), ValidationError);
  EXPECT_THROW(validate(TangleLinkData{1.0, 0.5, 0.0, 0.0, true}), ValidationError);
  EXPECT_THROW(validate(TangleLinkData{1.0, 0.5, 1.0, -1.0, true}), ValidationError);
}
