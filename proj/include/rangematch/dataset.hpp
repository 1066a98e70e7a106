#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rangematch/architecture.hpp"
#include "rangematch/error.hpp"
#include "rangematch/taxonomy.hpp"

namespace rangematch {

inline constexpr std::string_view kDatasetHeader =
    "attribute_name,attribute_value,attribute_weight,pure_physical,centrally_virtualized,"
    "on_premise_cloud,public_cloud,distributed_virtualization,hybrid";

inline constexpr double kMinScore = 0.0;
inline constexpr double kMaxScore = 5.0;

/// One (attribute, value) entry: its significance weight and the supportability
/// score of each architecture.
struct MatchingRow {
  std::string attribute;
  std::string value;
  double weight = 0.0;
  ArchVectord scores = ArchVectord::Zero();

  /// Canonical position of the attribute and of the value within its domain.
  std::size_t attribute_rank = 0;
  std::size_t value_rank = 0;
  /// Source line (1-based), 0 when built in memory.
  std::size_t line = 0;

  double score(ArchitectureId id) const { return scores[static_cast<Eigen::Index>(index_of(id))]; }

  /// Compares content only; ranks and line are derived.
  friend bool operator==(const MatchingRow& a, const MatchingRow& b) {
    return a.attribute == b.attribute && a.value == b.value && a.weight == b.weight &&
           a.scores == b.scores;
  }
};

enum class Severity { Warning, Error };

struct Diagnostic {
  ErrorCode code = ErrorCode::MalformedCsv;
  Severity severity = Severity::Error;
  std::string message;
  /// Lines involved (several for DuplicateRow, none for IncompleteCoverage).
  std::vector<std::size_t> lines;
  std::string attribute;
  std::string value;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

class MatchingDataset {
 public:
  /// Validates rows against `taxonomy`; throws DatasetError when any row is invalid
  /// or duplicated. Missing coverage is not an error here.
  MatchingDataset(const Taxonomy& taxonomy, std::vector<MatchingRow> rows, std::string source);

  const std::vector<MatchingRow>& rows() const noexcept { return rows_; }
  const std::string& source() const noexcept { return source_; }
  const std::string& schema_version() const noexcept { return schema_version_; }
  std::size_t size() const noexcept { return rows_.size(); }

  /// Row for a normalised (attribute, value) key, or nullptr.
  const MatchingRow* find(std::string_view attribute, std::string_view value) const;

 private:
  std::vector<MatchingRow> rows_;
  std::string source_;
  std::string schema_version_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Thrown when a dataset has at least one error-severity diagnostic. code() is the
/// code of the first diagnostic; details() lists all of them.
class DatasetError : public Error {
 public:
  explicit DatasetError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// Full validation report. `dataset` is present when there are no error diagnostics.
struct DatasetReport {
  std::optional<MatchingDataset> dataset;
  std::vector<Diagnostic> diagnostics;

  bool has_errors() const;
  bool complete() const;
};

/// Validates every record and collects all diagnostics. Coverage gaps produce one
/// IncompleteCoverage warning listing the missing pairs in canonical order.
DatasetReport check_dataset(std::string_view text, const Taxonomy& taxonomy, std::string source);

/// Like check_dataset but throws DatasetError on any error; warnings are returned
/// through `warnings` when non-null.
MatchingDataset parse_dataset(std::string_view text, const Taxonomy& taxonomy, std::string source,
                              std::vector<Diagnostic>* warnings = nullptr);

/// Canonical CSV: the fixed header, rows in registry order then value ordinal,
/// numbers in shortest round-trip form, LF endings.
std::string serialize_dataset(const MatchingDataset& dataset);

/// Bundled dataset, validated against Taxonomy::bundled(); source "bundled-default".
const MatchingDataset& default_dataset();

/// (attribute, value) pairs of `taxonomy` with no row in `dataset`, canonical order.
std::vector<std::pair<std::string, std::string>> missing_pairs(const MatchingDataset& dataset,
                                                               const Taxonomy& taxonomy);

/// Shortest decimal string that parses back to `value`.
std::string format_number(double value);

}  // namespace rangematch
