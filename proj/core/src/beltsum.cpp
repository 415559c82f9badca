#include "cuspdens/beltsum.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>

#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"

namespace cusp {
namespace {

struct Ordered {
  const TangleLinkData& first;   // shorter meridian
  const TangleLinkData& second;
  double ratio_sq;                // (m₁/m₂)²
};

Ordered order(const TangleLinkData& a, const TangleLinkData& b) {
  validate(a);
  validate(b);
  if (b.meridian < a.meridian) {
    const double r = b.meridian / a.meridian;
    return {b, a, r * r};
  }
  const double r = a.meridian / b.meridian;
  return {a, b, r * r};
}

void require_no_poking(const TangleLinkData& a, const TangleLinkData& b) {
  if (!a.no_poking || !b.no_poking) {
    throw PokingUnverifiedError(
        "belted sum cusp formula needs both summands free of poking; absence is not established");
  }
}

double evaluate(const Ordered& o, double t) {
  return (o.first.tangle_cusp_volume + t * o.ratio_sq * o.second.tangle_cusp_volume) /
         (o.first.volume + t * o.second.volume);
}

double limit(const Ordered& o) {
  return o.ratio_sq * o.second.tangle_cusp_volume / o.second.volume;
}

// A node of the Stern–Brocot tree, p/k with k ≥ 1.
struct Fraction {
  std::int64_t p;
  std::int64_t k;
};

Fraction mediant(Fraction a, Fraction b, std::int64_t j = 1) {
  return {a.p + j * b.p, a.k + j * b.k};
}

bool odd_sum(Fraction f) { return ((f.p + f.k) & 1) == 1; }

long double value(Fraction f) {
  return static_cast<long double>(f.p) / static_cast<long double>(f.k);
}

constexpr std::int64_t kMaxTerm = std::int64_t{1} << 52;

}  // namespace

void validate(const TangleLinkData& d) {
  const auto bad = [](double x) { return !std::isfinite(x) || x <= 0.0; };
  if (bad(d.volume)) throw ValidationError("tangle link volume must be finite and > 0");
  if (bad(d.tangle_cusp_volume)) throw ValidationError("tangle cusp volume must be finite and > 0");
  if (bad(d.meridian)) throw ValidationError("tangle meridian must be finite and > 0");
  if (!std::isfinite(d.belt_cusp_volume) || d.belt_cusp_volume < 0.0) {
    throw ValidationError("belt cusp volume must be finite and >= 0");
  }
  if (d.tangle_density() > bounds().boroczky * (1.0 + kValidationTolerance)) {
    throw ValidationError("tangle cusp density exceeds the horoball packing bound");
  }
}

TangleLinkData tangle_data(const LinkGeometry& link) {
  if (!link.has_flag(LinkFlag::augmented_cross_tangle)) {
    throw ValidationError("'" + link.name() + "' is not flagged as an augmented cross tangle link");
  }
  TangleLinkData d;
  d.volume = link.volume();
  d.no_poking = link.has_flag(LinkFlag::no_poking);
  std::optional<double> meridian;
  for (const CuspRecord& c : link.cusps()) {
    if (c.role == CuspRole::tangle) {
      d.tangle_cusp_volume += c.cusp_volume;
      if (c.meridian) meridian = meridian ? std::min(*meridian, *c.meridian) : *c.meridian;
    } else if (c.role == CuspRole::belt) {
      d.belt_cusp_volume += c.cusp_volume;
    }
  }
  if (!meridian) throw ValidationError("'" + link.name() + "' has no tangle cusp meridian");
  d.meridian = *meridian;
  validate(d);
  return d;
}

TangleLinkData daisy_chain_proxy(double volume) {
  TangleLinkData d{volume, 4.0, 2.0, 0.0, true};
  validate(d);
  return d;
}

BeltSumResult belted_sum(const TangleLinkData& a, const TangleLinkData& b) {
  return iterated_belt_sum(a, b, 1, 1);
}

BeltSumResult iterated_belt_sum(const TangleLinkData& a, const TangleLinkData& b, long long k,
                                long long p) {
  if (k < 0 || p < 0 || k + p == 0) {
    throw DomainError("iterated_belt_sum: need k, p >= 0 with k + p >= 1");
  }
  require_no_poking(a, b);
  const Ordered o = order(a, b);
  const double kk = static_cast<double>(k);
  const double pp = static_cast<double>(p);
  BeltSumResult r;
  r.k = k;
  r.p = p;
  r.volume = kk * o.first.volume + pp * o.second.volume;
  if (k >= 1) {
    r.meridian = o.first.meridian;
    r.tangle_cusp_volume = kk * o.first.tangle_cusp_volume + pp * o.ratio_sq * o.second.tangle_cusp_volume;
  } else {
    r.meridian = o.second.meridian;
    r.tangle_cusp_volume = pp * o.second.tangle_cusp_volume;
  }
  return r;
}

double density_function(const TangleLinkData& a, const TangleLinkData& b, double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("density_function: t must be finite and >= 0");
  return evaluate(order(a, b), t);
}

double density_limit(const TangleLinkData& a, const TangleLinkData& b) { return limit(order(a, b)); }

double invert_density(const TangleLinkData& a, const TangleLinkData& b, double y) {
  const Ordered o = order(a, b);
  const double y0 = evaluate(o, 0.0);
  const double y1 = limit(o);
  const double lo = std::min(y0, y1);
  const double hi = std::max(y0, y1);
  if (!(y > lo && y < hi)) {
    throw RangeError("invert_density: target must lie strictly between " + std::to_string(lo) +
                     " and " + std::to_string(hi));
  }
  const double t = (o.first.tangle_cusp_volume - y * o.first.volume) /
                   (y * o.second.volume - o.ratio_sq * o.second.tangle_cusp_volume);
  return t;
}

BeltParameters sample_parameters(const TangleLinkData& a, const TangleLinkData& b, double y,
                                 double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("sample_parameters: eps must be > 0");
  const Ordered o = order(a, b);
  const long double target = invert_density(a, b, y);
  auto admissible = [&](Fraction f) {
    return f.p >= 1 && odd_sum(f) &&
           std::abs(evaluate(o, static_cast<double>(value(f))) - y) < eps;
  };
  // Fractions on a run l + j·r (j = 1..jmax) move monotonically toward the
  // target, so the admissible ones form a suffix of the run.
  auto first_in_run = [&](Fraction l, Fraction r, std::int64_t jmax) -> std::optional<Fraction> {
    if (jmax < 1) return std::nullopt;
    auto close = [&](std::int64_t j) {
      const Fraction f = mediant(l, r, j);
      return std::abs(evaluate(o, static_cast<double>(value(f))) - y) < eps;
    };
    if (!close(jmax)) return std::nullopt;
    std::int64_t lo = 0, hi = jmax;  // close(hi) holds; find the smallest such j
    while (hi - lo > 1) {
      const std::int64_t mid = lo + (hi - lo) / 2;
      (close(mid) ? hi : lo) = mid;
    }
    for (std::int64_t j = hi; j <= std::min(jmax, hi + 1); ++j) {
      const Fraction f = mediant(l, r, j);
      if (admissible(f)) return f;
    }
    return std::nullopt;
  };

  Fraction left{0, 1};
  Fraction right{1, 0};
  for (int depth = 0; depth < 4096; ++depth) {
    const Fraction m = mediant(left, right);
    const long double mv = value(m);
    if (admissible(m)) return {m.k, m.p};
    if (mv == target) {
      // The target itself is an even-sum node; its descendants toward either
      // parent all have odd sum and converge to it.
      std::optional<Fraction> best;
      for (Fraction side : {left, right}) {
        for (std::int64_t j = 1; j < kMaxTerm; j *= 2) {
          if (auto f = first_in_run(side, m, j)) {
            if (!best || f->p + f->k < best->p + best->k) best = f;
            break;
          }
        }
      }
      if (best) return {best->k, best->p};
      break;
    }
    const bool go_right = mv < target;
    // Repeated moves in one direction visit from + j·toward, j = 1, 2, …;
    // jmax is the last of them still on the near side of the target.
    const Fraction from = go_right ? left : right;
    const Fraction toward = go_right ? right : left;
    const long double num = go_right ? target * left.k - left.p : right.p - target * right.k;
    const long double den = go_right ? right.p - target * right.k : target * left.k - left.p;
    long double estimate = std::ceil(num / den) - 1.0L;
    const long double room = std::min(
        static_cast<long double>(kMaxTerm - from.k) / std::max<std::int64_t>(toward.k, 1),
        static_cast<long double>(kMaxTerm - from.p) / std::max<std::int64_t>(toward.p, 1));
    estimate = std::clamp(estimate, 1.0L, std::max(room, 1.0L));
    std::int64_t jmax = static_cast<std::int64_t>(estimate);
    auto on_near_side = [&](std::int64_t j) {
      const long double v = value(mediant(from, toward, j));
      return go_right ? v < target : v > target;
    };
    while (jmax > 1 && !on_near_side(jmax)) --jmax;
    while (jmax < room && on_near_side(jmax + 1)) ++jmax;

    if (auto f = first_in_run(from, toward, jmax)) return {f->k, f->p};
    if (go_right) {
      left = mediant(left, right, jmax);
    } else {
      right = mediant(right, left, jmax);
    }
    if (left.k > kMaxTerm || right.k > kMaxTerm) break;
  }
  throw RangeError("sample_parameters: no admissible (k, p) within eps found");
}

DensityInterval knot_density_interval(const TangleLinkData& a, const TangleLinkData& b) {
  const Ordered o = order(a, b);
  const double d0 = evaluate(o, 0.0);
  const double d1 = limit(o);
  DensityInterval iv;
  if (d0 <= d1) {
    iv = {d0, d1, "tangle cusp density of the shorter-meridian summand",
          "squared meridian ratio times the tangle cusp density of the other summand"};
  } else {
    iv = {d1, d0, "squared meridian ratio times the tangle cusp density of the other summand",
          "tangle cusp density of the shorter-meridian summand"};
  }
  return iv;
}

}  // namespace cusp
