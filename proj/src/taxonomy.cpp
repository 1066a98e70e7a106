#include "rangematch/taxonomy.hpp"

#include <array>
#include <unordered_set>

#include "rangematch/embedded.hpp"
#include "rangematch/error.hpp"
#include "rangematch/identifier.hpp"

namespace rangematch {

namespace {

struct CanonicalAttribute {
  std::string_view name;
  RequirementSet set;
};

constexpr std::array<CanonicalAttribute, Taxonomy::kAttributeCount> kCanonical{{
    {"employment", RequirementSet::Purpose},
    {"sector", RequirementSet::Purpose},
    {"teaming", RequirementSet::Purpose},
    {"scoring", RequirementSet::Purpose},
    {"tutoring", RequirementSet::Purpose},
    {"domain", RequirementSet::Scope},
    {"federation", RequirementSet::Scope},
    {"concurrency", RequirementSet::Scope},
    {"connectivity", RequirementSet::Scope},
    {"fidelity", RequirementSet::Scope},
    {"duration", RequirementSet::Scope},
    {"availability", RequirementSet::Scope},
    {"retention", RequirementSet::Scope},
    {"integration", RequirementSet::Scope},
    {"updateability", RequirementSet::Scope},
    {"scalability", RequirementSet::Scope},
    {"budget", RequirementSet::Constraints},
    {"build_speed", RequirementSet::Constraints},
    {"latency", RequirementSet::Constraints},
    {"staff", RequirementSet::Constraints},
    {"physical", RequirementSet::Constraints},
    {"security", RequirementSet::Constraints},
}};

constexpr std::array<std::string_view, 1> kSupportedVersions{"1"};

[[noreturn]] void schema_error(const std::string& message, const std::string& location = {}) {
  throw Error(ErrorCode::InvalidSchema, message, location);
}

std::optional<RequirementSet> set_from_key(std::string_view key) {
  if (key == "purpose") return RequirementSet::Purpose;
  if (key == "scope") return RequirementSet::Scope;
  if (key == "constraints") return RequirementSet::Constraints;
  return std::nullopt;
}

std::string lowercase_set_key(RequirementSet set) {
  return normalize_identifier(to_string(set));
}

}  // namespace

std::string_view to_string(RequirementSet set) {
  switch (set) {
    case RequirementSet::Purpose: return "Purpose";
    case RequirementSet::Scope: return "Scope";
    case RequirementSet::Constraints: return "Constraints";
  }
  return "Purpose";
}

std::span<const std::string_view> supported_schema_versions() { return kSupportedVersions; }

Taxonomy Taxonomy::from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    schema_error(std::string("schema is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_error("schema document must be a JSON object");

  const auto version_it = doc.find("schema_version");
  if (version_it == doc.end() || !version_it->is_string()) {
    schema_error("missing string field 'schema_version'", "schema_version");
  }
  Taxonomy taxonomy;
  taxonomy.schema_version_ = version_it->get<std::string>();
  bool supported = false;
  for (const auto v : kSupportedVersions) supported = supported || v == taxonomy.schema_version_;
  if (!supported) {
    schema_error("unsupported schema_version '" + taxonomy.schema_version_ + "'", "schema_version");
  }

  const auto attrs_it = doc.find("attributes");
  if (attrs_it == doc.end() || !attrs_it->is_array()) {
    schema_error("missing array field 'attributes'", "attributes");
  }

  std::vector<std::optional<AttributeDefinition>> slots(kAttributeCount);
  std::size_t position = 0;
  for (const auto& entry : *attrs_it) {
    const std::string where = "attributes[" + std::to_string(position++) + "]";
    if (!entry.is_object()) schema_error("attribute entry must be an object", where);
    if (!entry.contains("name") || !entry["name"].is_string()) {
      schema_error("attribute entry needs a string 'name'", where);
    }
    AttributeDefinition def;
    def.name = normalize_identifier(entry["name"].get<std::string>());

    std::size_t slot = kAttributeCount;
    for (std::size_t i = 0; i < kCanonical.size(); ++i) {
      if (kCanonical[i].name == def.name) slot = i;
    }
    if (slot == kAttributeCount) schema_error("unknown attribute '" + def.name + "'", where);
    if (slots[slot]) schema_error("attribute '" + def.name + "' defined twice", where);

    if (!entry.contains("set") || !entry["set"].is_string()) {
      schema_error("attribute '" + def.name + "' needs a string 'set'", where);
    }
    const auto set = set_from_key(normalize_identifier(entry["set"].get<std::string>()));
    if (!set || *set != kCanonical[slot].set) {
      schema_error("attribute '" + def.name + "' must belong to set '" +
                       lowercase_set_key(kCanonical[slot].set) + "'",
                   where);
    }
    def.set = *set;

    if (!entry.contains("values") || !entry["values"].is_array()) {
      schema_error("attribute '" + def.name + "' needs a 'values' array", where);
    }
    std::unordered_set<std::string> labels;
    for (const auto& value : entry["values"]) {
      if (!value.is_string()) schema_error("values of '" + def.name + "' must be strings", where);
      auto label = normalize_identifier(value.get<std::string>());
      if (label.empty()) schema_error("empty value label in '" + def.name + "'", where);
      if (!labels.insert(label).second) {
        schema_error("value '" + label + "' repeated in '" + def.name + "'", where);
      }
      def.value_domain.push_back(std::move(label));
    }
    if (def.value_domain.size() < 2) {
      schema_error("attribute '" + def.name + "' needs at least two values", where);
    }
    if (entry.contains("description")) {
      if (!entry["description"].is_string()) schema_error("description must be a string", where);
      def.description = entry["description"].get<std::string>();
    }
    slots[slot] = std::move(def);
  }

  for (std::size_t i = 0; i < kCanonical.size(); ++i) {
    if (!slots[i]) schema_error("attribute '" + std::string(kCanonical[i].name) + "' is missing");
  }

  taxonomy.attributes_.reserve(kAttributeCount);
  taxonomy.ordinal_by_label_.resize(kAttributeCount);
  for (std::size_t i = 0; i < kAttributeCount; ++i) {
    taxonomy.attributes_.push_back(std::move(*slots[i]));
    const auto& def = taxonomy.attributes_.back();
    taxonomy.index_by_name_.emplace(def.name, i);
    for (std::size_t k = 0; k < def.value_domain.size(); ++k) {
      taxonomy.ordinal_by_label_[i].emplace(def.value_domain[k], k);
    }
  }
  return taxonomy;
}

const Taxonomy& Taxonomy::bundled() {
  static const Taxonomy instance = from_json(embedded::schema_json());
  return instance;
}

std::size_t Taxonomy::attribute_index(std::string_view name) const {
  const auto key = normalize_identifier(name);
  const auto it = index_by_name_.find(key);
  if (it == index_by_name_.end()) {
    throw Error(ErrorCode::UnknownAttribute, "unknown attribute '" + std::string(name) + "'",
                std::string(name));
  }
  return it->second;
}

const AttributeDefinition& Taxonomy::lookup_attribute(std::string_view name) const {
  return attributes_[attribute_index(name)];
}

ValueLabel Taxonomy::validate_value(std::string_view attribute, std::string_view value) const {
  const auto index = attribute_index(attribute);
  const auto& labels = ordinal_by_label_[index];
  const auto it = labels.find(normalize_identifier(value));
  if (it == labels.end()) {
    const auto& def = attributes_[index];
    throw Error(ErrorCode::UnknownValue,
                "value '" + std::string(value) + "' is not in the domain of '" + def.name + "'",
                def.name,
                nlohmann::json{{"attribute", def.name},
                               {"value", std::string(value)},
                               {"allowed", def.value_domain}});
  }
  return ValueLabel{it->first, it->second};
}

std::size_t Taxonomy::pair_count() const noexcept {
  std::size_t total = 0;
  for (const auto& def : attributes_) total += def.value_domain.size();
  return total;
}

nlohmann::json Taxonomy::to_json() const {
  nlohmann::json attrs = nlohmann::json::array();
  for (const auto& def : attributes_) {
    attrs.push_back({{"name", def.name},
                     {"set", lowercase_set_key(def.set)},
                     {"values", def.value_domain},
                     {"description", def.description}});
  }
  return {{"schema_version", schema_version_}, {"attributes", std::move(attrs)}};
}

}  // namespace rangematch
