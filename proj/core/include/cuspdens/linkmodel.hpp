#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cusp {

enum class CuspRole { tangle, belt, plain };

enum class LinkFlag { augmented_cross_tangle, no_poking, alternating };

std::string_view to_string(CuspRole role);
std::string_view to_string(LinkFlag flag);
CuspRole parse_cusp_role(std::string_view text);
LinkFlag parse_link_flag(std::string_view text);

/// One cusp of a link complement, measured when the cusps are maximized in
/// the order given by maximization_index.
struct CuspRecord {
  double cusp_volume = 0.0;
  std::optional<double> meridian;
  int maximization_index = 0;
  CuspRole role = CuspRole::plain;
};

/// Relative slack on every bound check. Inputs are 5-7 digit measurements.
inline constexpr double kValidationTolerance = 1e-9;

/// Measured hyperbolic data for one link. Immutable; the constructor checks
/// every invariant and throws ValidationError listing all violations.
class LinkGeometry {
 public:
  LinkGeometry(std::string name, double volume, std::vector<CuspRecord> cusps,
               std::optional<long long> crossing_number = std::nullopt,
               std::set<LinkFlag> flags = {});

  const std::string& name() const noexcept { return name_; }
  double volume() const noexcept { return volume_; }
  const std::vector<CuspRecord>& cusps() const noexcept { return cusps_; }
  const std::optional<long long>& crossing_number() const noexcept { return crossing_number_; }
  const std::set<LinkFlag>& flags() const noexcept { return flags_; }
  bool has_flag(LinkFlag f) const { return flags_.contains(f); }

  /// cv(L): sum of the recorded maximal cusp volumes.
  double cusp_volume() const noexcept;

 private:
  std::string name_;
  double volume_;
  std::vector<CuspRecord> cusps_;
  std::optional<long long> crossing_number_;
  std::set<LinkFlag> flags_;
};

/// Every invariant the given data would violate; empty when valid.
std::vector<std::string> check_link_data(double volume, std::span<const CuspRecord> cusps,
                                         std::optional<long long> crossing_number);

/// cv(L)/vol(L).
double cusp_density(const LinkGeometry& link);

/// Cusp volume of the chosen cusps over vol(L). Indices refer to cusps().
/// Throws ValidationError on an empty subset, a repeated or out-of-range index.
double restricted_cusp_density(const LinkGeometry& link, std::span<const std::size_t> subset);

/// cv(L)/c(L). Throws ValidationError when the crossing number is unknown.
double cusp_crossing_density(const LinkGeometry& link);

/// vol(L)/c(L). Throws ValidationError when the crossing number is unknown.
double volume_density(const LinkGeometry& link);

}  // namespace cusp
