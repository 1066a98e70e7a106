#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

namespace rangematch {

enum class RequirementSet { Purpose, Scope, Constraints };

std::string_view to_string(RequirementSet set);

struct ValueLabel {
  std::string label;
  std::size_t ordinal = 0;

  bool operator==(const ValueLabel&) const = default;
};

struct AttributeDefinition {
  std::string name;
  RequirementSet set = RequirementSet::Purpose;
  /// Ordered lowest rank first; the position of a label is its ordinal.
  std::vector<std::string> value_domain;
  std::string description;

  bool operator==(const AttributeDefinition&) const = default;
};

/// Registry of the 22 requirement attributes and their value domains.
///
/// The attribute names and their requirement sets are fixed; the value domains
/// come from a versioned schema document. Attributes are always held in
/// canonical order: purpose, then scope, then constraints.
class Taxonomy {
 public:
  static constexpr std::size_t kAttributeCount = 22;

  /// Parses a schema document `{schema_version, attributes: [{name, set, values, description}]}`.
  /// Throws Error(InvalidSchema) on an unsupported version, a missing or extra
  /// attribute, a wrong set, or a domain with fewer than two or repeated labels.
  static Taxonomy from_json(std::string_view text);

  /// Schema compiled into the library.
  static const Taxonomy& bundled();

  const std::string& schema_version() const noexcept { return schema_version_; }

  std::span<const AttributeDefinition> registry() const noexcept { return attributes_; }

  /// Case-insensitive; throws Error(UnknownAttribute).
  const AttributeDefinition& lookup_attribute(std::string_view name) const;

  /// Canonical position of the attribute in registry().
  std::size_t attribute_index(std::string_view name) const;

  /// Throws Error(UnknownAttribute) or Error(UnknownValue) with the allowed domain in details.
  ValueLabel validate_value(std::string_view attribute, std::string_view value) const;

  /// Total number of (attribute, value) pairs across all domains.
  std::size_t pair_count() const noexcept;

  nlohmann::json to_json() const;

 private:
  Taxonomy() = default;

  std::string schema_version_;
  std::vector<AttributeDefinition> attributes_;
  std::unordered_map<std::string, std::size_t> index_by_name_;
  std::vector<std::unordered_map<std::string, std::size_t>> ordinal_by_label_;
};

/// Schema versions this build understands.
std::span<const std::string_view> supported_schema_versions();

}  // namespace rangematch
