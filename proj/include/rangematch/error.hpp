#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

namespace rangematch {

/// Closed set of error codes. The string forms are part of the CLI and HTTP contracts.
enum class ErrorCode {
  UnknownAttribute,
  UnknownValue,
  DuplicateRow,
  WeightOutOfRange,
  ScoreOutOfRange,
  MalformedCsv,
  IncompleteCoverage,
  MissingRow,
  SchemaMismatch,
  DuplicateAttribute,
  EmptyMatrix,
  InvalidSchema,
  InvalidCatalog,
  InvalidProfile,
  MalformedJson,
  UnknownDataset,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Engine error. `location` is free-form ("dataset.csv:12", "selections.budget"),
/// `details` carries structured payload such as the list of missing pairs.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string location = {},
        nlohmann::json details = nullptr);

  ErrorCode code() const noexcept { return code_; }
  const std::string& location() const noexcept { return location_; }
  const nlohmann::json& details() const noexcept { return details_; }

  /// {"code", "message", "location"?, "details"?}
  nlohmann::json to_json() const;

 private:
  ErrorCode code_;
  std::string location_;
  nlohmann::json details_;
};

}  // namespace rangematch
