#include "rangematch/report.hpp"

#include <cstdio>

#include "rangematch/csv.hpp"
#include "rangematch/explain.hpp"

namespace rangematch {

nlohmann::json to_json(const MatchResult& result) {
  nlohmann::json totals = nlohmann::json::object();
  for (const auto id : kArchitectures) totals[std::string(to_key(id))] = result.total(id);

  nlohmann::json ranking = nlohmann::json::array();
  for (const auto& group : result.ranking) {
    nlohmann::json ids = nlohmann::json::array();
    for (const auto id : group) ids.push_back(to_key(id));
    ranking.push_back(std::move(ids));
  }

  nlohmann::json matrix = nlohmann::json::object();
  for (std::size_t i = 0; i < result.matrix.attributes.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto id : kArchitectures) row[std::string(to_key(id))] = result.matrix.entry(i, id);
    matrix[result.matrix.attributes[i]] = std::move(row);
  }

  return {{"totals", std::move(totals)},
          {"ranking", std::move(ranking)},
          {"matrix", std::move(matrix)},
          {"profile_echo", result.profile_echo.to_json()},
          {"dataset_source", result.dataset_source}};
}

nlohmann::json match_response(const MatchResult& result) {
  auto out = to_json(result);
  out["heatmap"] = result.matrix.empty()
                       ? nlohmann::json(nullptr)
                       : normalized_json(result.matrix, Normalization::GlobalLinear);
  return out;
}

std::string format_total(double total) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", total);
  return buf;
}

std::string totals_table(const MatchResult& result) {
  std::string out;
  char buf[128];
  std::snprintf(buf, sizeof buf, "%-5s %-28s %12s\n", "rank", "architecture", "total");
  out += buf;
  std::size_t rank = 1;
  for (const auto& group : result.ranking) {
    const std::string label = std::to_string(rank) + (group.size() > 1 ? "=" : "");
    for (const auto id : group) {
      std::snprintf(buf, sizeof buf, "%-5s %-28s %12s\n", label.c_str(),
                    std::string(to_key(id)).c_str(), format_total(result.total(id)).c_str());
      out += buf;
    }
    rank += group.size();
  }
  return out;
}

std::string totals_csv(const MatchResult& result) {
  std::string out = "rank,architecture,total\n";
  std::size_t rank = 1;
  for (const auto& group : result.ranking) {
    for (const auto id : group) {
      out += std::to_string(rank);
      out.push_back(',');
      csv::append_field(out, to_key(id));
      out.push_back(',');
      out += format_number(result.total(id));
      out.push_back('\n');
    }
    rank += group.size();
  }
  return out;
}

}  // namespace rangematch
