#include "rangematch/profile.hpp"

#include "rangematch/embedded.hpp"
#include "rangematch/error.hpp"
#include "rangematch/identifier.hpp"

namespace rangematch {

namespace {

[[noreturn]] void profile_error(const std::string& message, const std::string& location = {}) {
  throw Error(ErrorCode::InvalidProfile, message, location);
}

}  // namespace

RequirementProfile RequirementProfile::from_json(const nlohmann::json& doc,
                                                 const Taxonomy& taxonomy) {
  if (!doc.is_object()) profile_error("profile must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "schema_version" && key != "label" && key != "selections") {
      profile_error("unknown field '" + key + "'", key);
    }
  }

  RequirementProfile profile;
  const auto version = doc.find("schema_version");
  if (version == doc.end() || !version->is_string()) {
    profile_error("missing string field 'schema_version'", "schema_version");
  }
  profile.schema_version = version->get<std::string>();

  if (const auto label = doc.find("label"); label != doc.end() && !label->is_null()) {
    if (!label->is_string()) profile_error("'label' must be a string", "label");
    profile.label = label->get<std::string>();
  }

  const auto selections = doc.find("selections");
  if (selections == doc.end() || !selections->is_object()) {
    profile_error("missing object field 'selections'", "selections");
  }
  for (const auto& [key, value] : selections->items()) {
    const std::string where = "selections." + key;
    if (!value.is_string()) profile_error("selection for '" + key + "' must be a string", where);
    const auto& def = taxonomy.lookup_attribute(key);
    const auto label = taxonomy.validate_value(def.name, value.get<std::string>());
    if (!profile.selections.emplace(def.name, label.label).second) {
      throw Error(ErrorCode::DuplicateAttribute,
                  "attribute '" + def.name + "' selected more than once", where);
    }
  }
  return profile;
}

RequirementProfile RequirementProfile::parse(std::string_view text, const Taxonomy& taxonomy) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::MalformedJson, std::string("profile is not valid JSON: ") + e.what());
  }
  return from_json(doc, taxonomy);
}

void RequirementProfile::validate(const Taxonomy& taxonomy) const {
  for (const auto& [attribute, value] : selections) {
    const auto& def = taxonomy.lookup_attribute(attribute);
    if (def.name != attribute) {
      throw Error(ErrorCode::InvalidProfile,
                  "selection key '" + attribute + "' is not in normalised form", attribute);
    }
    taxonomy.validate_value(attribute, value);
  }
}

nlohmann::json RequirementProfile::to_json() const {
  nlohmann::json out{{"schema_version", schema_version}};
  if (label) out["label"] = *label;
  out["selections"] = nlohmann::json(selections);
  return out;
}

const RequirementProfile& example_profile() {
  static const RequirementProfile instance =
      RequirementProfile::parse(embedded::example_profile_json(), Taxonomy::bundled());
  return instance;
}

}  // namespace rangematch
