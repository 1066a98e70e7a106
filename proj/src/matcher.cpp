#include "rangematch/matcher.hpp"

#include <algorithm>

namespace rangematch {

std::vector<MatchingRow> score_lookup(const RequirementProfile& profile,
                                      const MatchingDataset& dataset) {
  if (profile.schema_version != dataset.schema_version()) {
    throw Error(ErrorCode::SchemaMismatch,
                "profile schema_version '" + profile.schema_version +
                    "' does not match dataset schema_version '" + dataset.schema_version() + "'",
                "schema_version",
                nlohmann::json{{"profile", profile.schema_version},
                               {"dataset", dataset.schema_version()}});
  }

  std::vector<MatchingRow> rows;
  rows.reserve(profile.selections.size());
  for (const auto& [attribute, value] : profile.selections) {
    const auto* row = dataset.find(attribute, value);
    if (row == nullptr) {
      throw Error(ErrorCode::MissingRow,
                  "dataset '" + dataset.source() + "' has no row for (" + attribute + ", " +
                      value + ")",
                  "selections." + attribute,
                  nlohmann::json{{"attribute", attribute}, {"value", value}});
    }
    rows.push_back(*row);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const MatchingRow& a, const MatchingRow& b) {
    return a.attribute_rank < b.attribute_rank;
  });
  return rows;
}

MatchResult match(const RequirementProfile& profile, const MatchingDataset& dataset) {
  const auto rows = score_lookup(profile, dataset);
  auto result = score_calculation<double>(rows);
  result.profile_echo = profile;
  result.dataset_source = dataset.source();
  return result;
}

std::vector<CompareOutcome> compare(std::span<const RequirementProfile> profiles,
                                    const MatchingDataset& dataset) {
  std::vector<CompareOutcome> outcomes;
  outcomes.reserve(profiles.size());
  for (const auto& profile : profiles) {
    try {
      outcomes.emplace_back(match(profile, dataset));
    } catch (const Error& e) {
      outcomes.emplace_back(e);
    }
  }
  return outcomes;
}

}  // namespace rangematch
