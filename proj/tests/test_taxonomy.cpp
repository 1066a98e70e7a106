#include <doctest.h>

#include <array>
#include <string>

#include "rangematch/embedded.hpp"
#include "rangematch/error.hpp"
#include "rangematch/identifier.hpp"
#include "rangematch/taxonomy.hpp"

using namespace rangematch;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::IoError;
}

}  // namespace

TEST_CASE("registry holds 22 attributes in canonical order") {
  const auto& tax = Taxonomy::bundled();
  const auto reg = tax.registry();
  REQUIRE(reg.size() == 22);
  CHECK(reg.front().name == "employment");
  CHECK(reg.front().set == RequirementSet::Purpose);
  CHECK(tax.lookup_attribute("budget").set == RequirementSet::Constraints);

  const std::array<const char*, 22> expected{
      "employment", "sector",      "teaming",      "scoring",     "tutoring",  "domain",
      "federation", "concurrency", "connectivity", "fidelity",    "duration",  "availability",
      "retention",  "integration", "updateability", "scalability", "budget",   "build_speed",
      "latency",    "staff",       "physical",     "security"};
  for (std::size_t i = 0; i < reg.size(); ++i) CHECK(reg[i].name == expected[i]);

  std::array<int, 3> partition{};
  for (const auto& def : reg) ++partition[static_cast<std::size_t>(def.set)];
  CHECK(partition == std::array<int, 3>{5, 11, 6});
}

TEST_CASE("lookup_attribute is case-insensitive and round-trips") {
  const auto& tax = Taxonomy::bundled();
  CHECK(tax.lookup_attribute("fidelity").set == RequirementSet::Scope);
  CHECK(&tax.lookup_attribute("FIDELITY") == &tax.lookup_attribute("fidelity"));
  CHECK(tax.lookup_attribute("Build Speed").name == "build_speed");
  for (const auto& def : tax.registry()) CHECK(tax.lookup_attribute(def.name) == def);
  CHECK(code_of([&] { tax.lookup_attribute("color"); }) == ErrorCode::UnknownAttribute);
}

TEST_CASE("validate_value") {
  const auto& tax = Taxonomy::bundled();
  CHECK(tax.validate_value("budget", "low") == ValueLabel{"low", 0});
  CHECK(tax.validate_value("budget", "Very High") == ValueLabel{"very_high", 3});
  const auto& teaming = tax.lookup_attribute("teaming");
  CHECK(tax.validate_value("teaming", teaming.value_domain.front()).ordinal == 0);

  try {
    tax.validate_value("budget", "infinite");
    FAIL("expected UnknownValue");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownValue);
    CHECK(e.details()["allowed"].size() == 4);
  }
  CHECK(code_of([&] { tax.validate_value("colour", "red"); }) == ErrorCode::UnknownAttribute);
}

TEST_CASE("every domain label validates with its ordinal; outsiders do not") {
  const auto& tax = Taxonomy::bundled();
  for (const auto& def : tax.registry()) {
    CHECK(def.value_domain.size() >= 2);
    for (std::size_t k = 0; k < def.value_domain.size(); ++k) {
      CHECK(tax.validate_value(def.name, def.value_domain[k]).ordinal == k);
    }
    CHECK(code_of([&] { tax.validate_value(def.name, "not_a_level"); }) == ErrorCode::UnknownValue);
  }
}

TEST_CASE("identifier normalisation") {
  CHECK(normalize_identifier("Build Speed") == "build_speed");
  CHECK(normalize_identifier("  On-Premise   Cloud ") == "on_premise_cloud");
  CHECK(normalize_identifier("budget") == "budget");
}

TEST_CASE("schema documents are validated") {
  auto doc = nlohmann::json::parse(embedded::schema_json());

  SUBCASE("unknown version is rejected") {
    doc["schema_version"] = "42";
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("missing attribute") {
    doc["attributes"].erase(doc["attributes"].begin());
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("wrong set") {
    doc["attributes"][0]["set"] = "scope";
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("domain with a single value") {
    doc["attributes"][0]["values"] = {"only"};
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("repeated label") {
    doc["attributes"][0]["values"] = {"a", "b", "A"};
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("extra attribute") {
    doc["attributes"].push_back({{"name", "color"}, {"set", "scope"}, {"values", {"a", "b"}}});
    CHECK(code_of([&] { Taxonomy::from_json(doc.dump()); }) == ErrorCode::InvalidSchema);
  }
  SUBCASE("file order does not change registry order") {
    std::reverse(doc["attributes"].begin(), doc["attributes"].end());
    const auto tax = Taxonomy::from_json(doc.dump());
    CHECK(tax.registry().front().name == "employment");
    CHECK(tax.registry().back().name == "security");
  }
  SUBCASE("not JSON") {
    CHECK(code_of([&] { Taxonomy::from_json("{nope"); }) == ErrorCode::InvalidSchema);
  }
}

TEST_CASE("to_json reloads to an identical registry") {
  const auto& tax = Taxonomy::bundled();
  const auto again = Taxonomy::from_json(tax.to_json().dump());
  REQUIRE(again.registry().size() == tax.registry().size());
  for (std::size_t i = 0; i < tax.registry().size(); ++i) {
    CHECK(again.registry()[i] == tax.registry()[i]);
  }
  CHECK(again.schema_version() == "1");
  CHECK(tax.pair_count() == 86);
}
