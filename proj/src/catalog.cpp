#include "rangematch/catalog.hpp"

#include "rangematch/embedded.hpp"
#include "rangematch/error.hpp"

namespace rangematch {

namespace {

constexpr std::array<std::string_view, kMetricNames.size()> kMetricKeys{
    "extensibility", "capacity", "build_speed", "latency", "budget", "staff", "security",
};

[[noreturn]] void catalog_error(const std::string& message, const std::string& location = {}) {
  throw Error(ErrorCode::InvalidCatalog, message, location);
}

LikertRating rating_from(const nlohmann::json& value, const std::string& where) {
  if (!value.is_number_integer()) catalog_error("rating must be an integer in [1, 5]", where);
  const auto raw = value.get<long long>();
  if (raw < 1 || raw > 5) catalog_error("rating must be an integer in [1, 5]", where);
  return LikertRating(static_cast<int>(raw));
}

std::vector<std::string> string_list(const nlohmann::json& entry, const char* field,
                                     const std::string& where) {
  std::vector<std::string> out;
  if (!entry.contains(field)) return out;
  if (!entry[field].is_array()) catalog_error(std::string(field) + " must be an array", where);
  for (const auto& item : entry[field]) {
    if (!item.is_string()) catalog_error(std::string(field) + " entries must be strings", where);
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string required_string(const nlohmann::json& entry, const char* field,
                            const std::string& where) {
  if (!entry.contains(field) || !entry[field].is_string()) {
    catalog_error(std::string("missing string field '") + field + "'", where);
  }
  return entry[field].get<std::string>();
}

}  // namespace

LikertRating::LikertRating(int value) : value_(value) {
  if (value < 1 || value > 5) {
    throw Error(ErrorCode::InvalidCatalog,
                "Likert rating " + std::to_string(value) + " outside [1, 5]");
  }
}

std::string_view to_key(MetricName metric) { return kMetricKeys[static_cast<std::size_t>(metric)]; }

std::optional<MetricName> metric_from_key(std::string_view key) {
  for (std::size_t i = 0; i < kMetricKeys.size(); ++i) {
    if (kMetricKeys[i] == key) return kMetricNames[i];
  }
  return std::nullopt;
}

MetricCategory category_of(MetricName metric) {
  switch (metric) {
    case MetricName::Extensibility:
    case MetricName::Capacity: return MetricCategory::Scope;
    case MetricName::BuildSpeed:
    case MetricName::Latency: return MetricCategory::Performance;
    case MetricName::Budget:
    case MetricName::Staff: return MetricCategory::Cost;
    case MetricName::Security: return MetricCategory::Security;
  }
  return MetricCategory::Security;
}

std::string_view to_string(MetricCategory category) {
  switch (category) {
    case MetricCategory::Scope: return "scope";
    case MetricCategory::Performance: return "performance";
    case MetricCategory::Cost: return "cost";
    case MetricCategory::Security: return "security";
  }
  return "security";
}

Catalog Catalog::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    catalog_error(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) catalog_error("catalog document must be a JSON object");

  Catalog catalog;
  catalog.version_ = required_string(doc, "catalog_version", "catalog_version");
  if (!doc.contains("architectures") || !doc["architectures"].is_array()) {
    catalog_error("missing array field 'architectures'", "architectures");
  }

  std::array<bool, kArchitectureCount> seen{};
  std::size_t position = 0;
  for (const auto& entry : doc["architectures"]) {
    const std::string where = "architectures[" + std::to_string(position++) + "]";
    if (!entry.is_object()) catalog_error("architecture entry must be an object", where);
    const auto key = required_string(entry, "id", where);
    const auto id = architecture_from_key(key);
    if (!id) catalog_error("unknown architecture id '" + key + "'", where);
    if (seen[index_of(*id)]) catalog_error("architecture '" + key + "' listed twice", where);
    seen[index_of(*id)] = true;

    ArchitectureProfile profile;
    profile.id = *id;
    profile.display_name = required_string(entry, "display_name", where);
    profile.summary = required_string(entry, "summary", where);
    profile.strengths = string_list(entry, "strengths", where);
    profile.weaknesses = string_list(entry, "weaknesses", where);

    if (!entry.contains("metric_ratings") || !entry["metric_ratings"].is_object()) {
      catalog_error("missing object 'metric_ratings'", where);
    }
    for (const auto& [name, value] : entry["metric_ratings"].items()) {
      const auto metric = metric_from_key(name);
      if (!metric) catalog_error("unknown metric '" + name + "'", where + ".metric_ratings");
      profile.metric_ratings.emplace(*metric, rating_from(value, where + ".metric_ratings." + name));
    }
    for (const auto metric : kMetricNames) {
      if (!profile.metric_ratings.contains(metric)) {
        catalog_error("metric '" + std::string(to_key(metric)) + "' not rated", where);
      }
    }

    if (entry.contains("rationale")) {
      for (const auto& [name, value] : entry["rationale"].items()) {
        const auto metric = metric_from_key(name);
        if (!metric || !value.is_string()) {
          catalog_error("invalid rationale entry '" + name + "'", where + ".rationale");
        }
        profile.rationale.emplace(*metric, value.get<std::string>());
      }
    }

    if (entry.contains("security_detail")) {
      const auto& detail = entry["security_detail"];
      const std::string dwhere = where + ".security_detail";
      if (!detail.is_object()) catalog_error("security_detail must be an object", dwhere);
      auto& sd = profile.security_detail;
      const std::array<std::pair<const char*, std::optional<LikertRating>*>, 6> fields{{
          {"confidentiality", &sd.confidentiality},
          {"integrity", &sd.integrity},
          {"availability", &sd.availability},
          {"non_repudiation", &sd.non_repudiation},
          {"authenticity", &sd.authenticity},
          {"privacy", &sd.privacy},
      }};
      for (const auto& [name, value] : detail.items()) {
        bool known = false;
        for (const auto& [field, slot] : fields) {
          if (name == field) {
            *slot = rating_from(value, dwhere + "." + name);
            known = true;
          }
        }
        if (!known) catalog_error("unknown security property '" + name + "'", dwhere);
      }
    }
    catalog.profiles_[index_of(*id)] = std::move(profile);
  }

  for (const auto id : kArchitectures) {
    if (!seen[index_of(id)]) {
      catalog_error("architecture '" + std::string(to_key(id)) + "' is missing");
    }
  }
  return catalog;
}

const Catalog& Catalog::bundled() {
  static const Catalog instance = from_json(embedded::catalog_json());
  return instance;
}

nlohmann::json Catalog::to_json() const {
  nlohmann::json archs = nlohmann::json::array();
  for (const auto& p : profiles_) {
    nlohmann::json ratings = nlohmann::json::object();
    nlohmann::json categories = nlohmann::json::object();
    for (const auto& [metric, rating] : p.metric_ratings) {
      ratings[std::string(to_key(metric))] = rating.value();
      categories[std::string(to_key(metric))] = to_string(category_of(metric));
    }
    nlohmann::json rationale = nlohmann::json::object();
    for (const auto& [metric, note] : p.rationale) rationale[std::string(to_key(metric))] = note;

    nlohmann::json detail = nlohmann::json::object();
    const auto put = [&](const char* name, const std::optional<LikertRating>& r) {
      if (r) detail[name] = r->value();
    };
    put("confidentiality", p.security_detail.confidentiality);
    put("integrity", p.security_detail.integrity);
    put("availability", p.security_detail.availability);
    put("non_repudiation", p.security_detail.non_repudiation);
    put("authenticity", p.security_detail.authenticity);
    put("privacy", p.security_detail.privacy);

    archs.push_back({{"id", to_key(p.id)},
                     {"display_name", p.display_name},
                     {"summary", p.summary},
                     {"metric_ratings", std::move(ratings)},
                     {"metric_categories", std::move(categories)},
                     {"security_detail", std::move(detail)},
                     {"rationale", std::move(rationale)},
                     {"strengths", p.strengths},
                     {"weaknesses", p.weaknesses}});
  }
  return {{"catalog_version", version_}, {"architectures", std::move(archs)}};
}

}  // namespace rangematch
