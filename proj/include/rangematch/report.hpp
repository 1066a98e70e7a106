#pragma once

#include <string>

#include <json.hpp>

#include "rangematch/matcher.hpp"

namespace rangematch {

/// {totals, ranking, matrix, profile_echo, dataset_source}
nlohmann::json to_json(const MatchResult& result);

/// to_json(result) plus "heatmap": the global_linear normalised matrix, or null when
/// nothing was selected. Shared by the CLI `match` output and POST /api/v1/match.
nlohmann::json match_response(const MatchResult& result);

/// Totals with 6 significant digits, the form used by the console table.
std::string format_total(double total);

/// Human-readable ranked totals table. Tied architectures share a rank number.
std::string totals_table(const MatchResult& result);

/// rank,architecture,total rows with the dataset CSV quoting rules.
std::string totals_csv(const MatchResult& result);

}  // namespace rangematch
