#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "rangematch/taxonomy.hpp"

namespace rangematch {

/// A partial selection of one value per requirement attribute.
struct RequirementProfile {
  std::string schema_version;
  std::optional<std::string> label;
  /// Normalised attribute name -> normalised value.
  std::map<std::string, std::string> selections;

  bool operator==(const RequirementProfile&) const = default;

  /// Strict parse of `{schema_version, label?, selections: {attribute: value}}`.
  /// Unknown top-level fields and non-string values raise InvalidProfile; two keys
  /// naming the same attribute raise DuplicateAttribute.
  static RequirementProfile from_json(const nlohmann::json& doc, const Taxonomy& taxonomy);
  /// As above from text; unparsable JSON raises MalformedJson.
  static RequirementProfile parse(std::string_view text, const Taxonomy& taxonomy);

  /// Re-checks every selection against `taxonomy`.
  void validate(const Taxonomy& taxonomy) const;

  nlohmann::json to_json() const;
};

/// Bundled "high-fidelity mixed-domain" example, validated against the bundled schema.
const RequirementProfile& example_profile();

}  // namespace rangematch
