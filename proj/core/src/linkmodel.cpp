#include "cuspdens/linkmodel.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "cuspdens/constants.hpp"
#include "cuspdens/errors.hpp"

namespace cusp {
namespace {

bool exceeds(double value, double bound) {
  return value > bound * (1.0 + kValidationTolerance);
}

std::string join(const std::vector<std::string>& parts) {
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << "; ";
    os << parts[i];
  }
  return os.str();
}

long long require_crossings(const LinkGeometry& link, const char* what) {
  if (!link.crossing_number() || *link.crossing_number() <= 0) {
    throw ValidationError(std::string(what) + ": crossing number of '" + link.name() +
                          "' is unknown");
  }
  return *link.crossing_number();
}

}  // namespace

std::string_view to_string(CuspRole role) {
  switch (role) {
    case CuspRole::tangle: return "tangle";
    case CuspRole::belt: return "belt";
    case CuspRole::plain: return "plain";
  }
  return "plain";
}

std::string_view to_string(LinkFlag flag) {
  switch (flag) {
    case LinkFlag::augmented_cross_tangle: return "augmented_cross_tangle";
    case LinkFlag::no_poking: return "no_poking";
    case LinkFlag::alternating: return "alternating";
  }
  return "alternating";
}

CuspRole parse_cusp_role(std::string_view text) {
  if (text == "tangle") return CuspRole::tangle;
  if (text == "belt") return CuspRole::belt;
  if (text == "plain") return CuspRole::plain;
  throw ValidationError("unknown cusp role '" + std::string(text) + "'");
}

LinkFlag parse_link_flag(std::string_view text) {
  if (text == "augmented_cross_tangle") return LinkFlag::augmented_cross_tangle;
  if (text == "no_poking") return LinkFlag::no_poking;
  if (text == "alternating") return LinkFlag::alternating;
  throw ValidationError("unknown link flag '" + std::string(text) + "'");
}

std::vector<std::string> check_link_data(double volume, std::span<const CuspRecord> cusps,
                                         std::optional<long long> crossing_number) {
  const BoundSet& b = bounds();
  std::vector<std::string> errors;

  if (!std::isfinite(volume) || volume <= 0.0) errors.push_back("volume must be finite and > 0");

  double cv = 0.0;
  bool cusps_ok = true;
  for (std::size_t i = 0; i < cusps.size(); ++i) {
    const CuspRecord& c = cusps[i];
    const std::string tag = "cusp " + std::to_string(i);
    if (!std::isfinite(c.cusp_volume) || c.cusp_volume < 0.0) {
      errors.push_back(tag + ": cusp_volume must be finite and >= 0");
      cusps_ok = false;
    }
    if (c.meridian && !(std::isfinite(*c.meridian) && *c.meridian >= 1.0)) {
      errors.push_back(tag + ": meridian of a maximal cusp must be >= 1");
    }
    if (c.maximization_index < 0) errors.push_back(tag + ": maximization_index must be >= 0");
    cv += c.cusp_volume;
  }

  if (crossing_number && *crossing_number <= 0) {
    errors.push_back("crossing_number, when known, must be > 0");
  }

  if (cusps_ok && std::isfinite(volume) && volume > 0.0) {
    if (exceeds(cv / volume, b.boroczky)) {
      errors.push_back("cusp density " + std::to_string(cv / volume) +
                       " exceeds the horoball packing bound");
    }
    if (crossing_number && *crossing_number > 0) {
      const double c = static_cast<double>(*crossing_number);
      if (exceeds(cv / c, b.dcc_upper)) {
        errors.push_back("cusp crossing density " + std::to_string(cv / c) +
                         " exceeds its upper bound");
      }
      if (exceeds(volume / c, b.v_oct)) {
        errors.push_back("volume density " + std::to_string(volume / c) + " exceeds v_oct");
      }
    }
  }
  return errors;
}

LinkGeometry::LinkGeometry(std::string name, double volume, std::vector<CuspRecord> cusps,
                           std::optional<long long> crossing_number, std::set<LinkFlag> flags)
    : name_(std::move(name)),
      volume_(volume),
      cusps_(std::move(cusps)),
      crossing_number_(crossing_number),
      flags_(std::move(flags)) {
  const auto errors = check_link_data(volume_, cusps_, crossing_number_);
  if (!errors.empty()) {
    throw ValidationError("invalid link geometry '" + name_ + "': " + join(errors));
  }
}

double LinkGeometry::cusp_volume() const noexcept {
  return std::accumulate(cusps_.begin(), cusps_.end(), 0.0,
                         [](double acc, const CuspRecord& c) { return acc + c.cusp_volume; });
}

double cusp_density(const LinkGeometry& link) { return link.cusp_volume() / link.volume(); }

double restricted_cusp_density(const LinkGeometry& link, std::span<const std::size_t> subset) {
  if (subset.empty()) throw ValidationError("restricted_cusp_density: subset is empty");
  std::vector<bool> seen(link.cusps().size(), false);
  double cv = 0.0;
  for (std::size_t i : subset) {
    if (i >= link.cusps().size()) {
      throw ValidationError("restricted_cusp_density: cusp index " + std::to_string(i) +
                            " out of range for '" + link.name() + "'");
    }
    if (seen[i]) {
      throw ValidationError("restricted_cusp_density: cusp index " + std::to_string(i) +
                            " repeated");
    }
    seen[i] = true;
    cv += link.cusps()[i].cusp_volume;
  }
  return cv / link.volume();
}

double cusp_crossing_density(const LinkGeometry& link) {
  const long long c = require_crossings(link, "cusp_crossing_density");
  return link.cusp_volume() / static_cast<double>(c);
}

double volume_density(const LinkGeometry& link) {
  const long long c = require_crossings(link, "volume_density");
  return link.volume() / static_cast<double>(c);
}

}  // namespace cusp
