#include "rangematch/error.hpp"

namespace rangematch {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownAttribute: return "UnknownAttribute";
    case ErrorCode::UnknownValue: return "UnknownValue";
    case ErrorCode::DuplicateRow: return "DuplicateRow";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::MalformedCsv: return "MalformedCsv";
    case ErrorCode::IncompleteCoverage: return "IncompleteCoverage";
    case ErrorCode::MissingRow: return "MissingRow";
    case ErrorCode::SchemaMismatch: return "SchemaMismatch";
    case ErrorCode::DuplicateAttribute: return "DuplicateAttribute";
    case ErrorCode::EmptyMatrix: return "EmptyMatrix";
    case ErrorCode::InvalidSchema: return "InvalidSchema";
    case ErrorCode::InvalidCatalog: return "InvalidCatalog";
    case ErrorCode::InvalidProfile: return "InvalidProfile";
    case ErrorCode::MalformedJson: return "MalformedJson";
    case ErrorCode::UnknownDataset: return "UnknownDataset";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string location, nlohmann::json details)
    : std::runtime_error(std::move(message)),
      code_(code),
      location_(std::move(location)),
      details_(std::move(details)) {}

nlohmann::json Error::to_json() const {
  nlohmann::json out{{"code", to_string(code_)}, {"message", what()}};
  if (!location_.empty()) out["location"] = location_;
  if (!details_.is_null()) out["details"] = details_;
  return out;
}

}  // namespace rangematch
