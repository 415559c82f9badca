#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace cusp::cli {

enum class Status { ok, validation_error, domain_error, cycle_error, range_error };

std::string_view to_string(Status s);

struct CommandResult {
  Status status = Status::ok;
  std::string command;
  /// Present exactly when status is ok.
  std::optional<nlohmann::json> payload;
  std::vector<std::string> provenance;
  /// Error message, or help/usage text.
  std::string message;
  /// Significant digits used when rendering floating-point values.
  int digits = 12;

  /// 0 on ok, 2 on a chain cycle, 1 otherwise.
  int exit_code() const;
  /// JSON document; help requests render as plain text.
  std::string render() const;
};

/// Runs one command line (without the program name).
CommandResult dispatch(std::span<const std::string> args);

/// Rounds every floating-point value in the document to `digits` significant digits.
nlohmann::json round_numbers(const nlohmann::json& doc, int digits);

}  // namespace cusp::cli
