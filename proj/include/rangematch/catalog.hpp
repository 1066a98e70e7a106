#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rangematch/architecture.hpp"

namespace rangematch {

enum class MetricCategory { Scope, Performance, Cost, Security };

enum class MetricName { Extensibility, Capacity, BuildSpeed, Latency, Budget, Staff, Security };

inline constexpr std::array<MetricName, 7> kMetricNames{
    MetricName::Extensibility, MetricName::Capacity, MetricName::BuildSpeed, MetricName::Latency,
    MetricName::Budget,        MetricName::Staff,    MetricName::Security,
};

std::string_view to_key(MetricName metric);
std::optional<MetricName> metric_from_key(std::string_view key);
MetricCategory category_of(MetricName metric);
std::string_view to_string(MetricCategory category);

/// Ordinal 1..5 rating; construction outside the range throws Error(InvalidCatalog).
class LikertRating {
 public:
  explicit LikertRating(int value);
  int value() const noexcept { return value_; }
  bool operator==(const LikertRating&) const = default;

 private:
  int value_;
};

/// Sub-scores for the individual security properties folded into MetricName::Security.
struct SecurityDetail {
  std::optional<LikertRating> confidentiality, integrity, availability, non_repudiation,
      authenticity, privacy;
};

struct ArchitectureProfile {
  ArchitectureId id = ArchitectureId::PurePhysical;
  std::string display_name;
  std::string summary;
  std::map<MetricName, LikertRating> metric_ratings;
  std::map<MetricName, std::string> rationale;
  SecurityDetail security_detail;
  std::vector<std::string> strengths;
  std::vector<std::string> weaknesses;
};

class Catalog {
 public:
  /// Parses `{catalog_version, architectures: [...]}`. Every architecture must appear
  /// exactly once and rate every metric. Throws Error(InvalidCatalog).
  static Catalog from_json(std::string_view text);
  static const Catalog& bundled();

  const std::string& catalog_version() const noexcept { return version_; }

  /// Profiles in canonical architecture order.
  const std::array<ArchitectureProfile, kArchitectureCount>& architectures() const noexcept {
    return profiles_;
  }
  const ArchitectureProfile& profile(ArchitectureId id) const noexcept {
    return profiles_[index_of(id)];
  }

  nlohmann::json to_json() const;

 private:
  std::string version_;
  std::array<ArchitectureProfile, kArchitectureCount> profiles_;
};

}  // namespace rangematch
