#include <doctest.h>

#include <set>

#include "rangematch/catalog.hpp"
#include "rangematch/embedded.hpp"
#include "rangematch/error.hpp"

using namespace rangematch;

TEST_CASE("six architectures in canonical order") {
  const auto& archs = Catalog::bundled().architectures();
  REQUIRE(archs.size() == 6);
  CHECK(archs.front().id == ArchitectureId::PurePhysical);
  CHECK(archs.back().id == ArchitectureId::Hybrid);
  std::set<ArchitectureId> ids;
  for (const auto& p : archs) ids.insert(p.id);
  CHECK(ids.size() == 6);
}

TEST_CASE("profiles rate every metric within [1, 5]") {
  for (const auto& p : Catalog::bundled().architectures()) {
    CHECK(p.metric_ratings.size() == kMetricNames.size());
    for (const auto metric : kMetricNames) {
      REQUIRE(p.metric_ratings.contains(metric));
      const int v = p.metric_ratings.at(metric).value();
      CHECK(v >= 1);
      CHECK(v <= 5);
    }
    CHECK_FALSE(p.display_name.empty());
    CHECK_FALSE(p.summary.empty());
  }
}

TEST_CASE("profile text reflects defining traits") {
  const auto& cat = Catalog::bundled();
  CHECK(cat.profile(ArchitectureId::PublicCloud).summary.find("third part") != std::string::npos);
  bool complexity = false;
  for (const auto& w : cat.profile(ArchitectureId::Hybrid).weaknesses) {
    complexity = complexity || w.find("complexity") != std::string::npos;
  }
  CHECK(complexity);
  CHECK(cat.profile(ArchitectureId::PurePhysical).metric_ratings.at(MetricName::BuildSpeed).value() <=
        2);
}

TEST_CASE("metric categories are fixed") {
  CHECK(category_of(MetricName::Extensibility) == MetricCategory::Scope);
  CHECK(category_of(MetricName::Capacity) == MetricCategory::Scope);
  CHECK(category_of(MetricName::BuildSpeed) == MetricCategory::Performance);
  CHECK(category_of(MetricName::Latency) == MetricCategory::Performance);
  CHECK(category_of(MetricName::Budget) == MetricCategory::Cost);
  CHECK(category_of(MetricName::Staff) == MetricCategory::Cost);
  CHECK(category_of(MetricName::Security) == MetricCategory::Security);
}

TEST_CASE("architecture keys round-trip") {
  for (const auto id : kArchitectures) CHECK(architecture_from_key(to_key(id)) == id);
  CHECK_FALSE(architecture_from_key("mainframe").has_value());
}

TEST_CASE("Likert ratings reject out-of-range values") {
  CHECK_THROWS_AS(LikertRating(0), Error);
  CHECK_THROWS_AS(LikertRating(6), Error);
  CHECK(LikertRating(3).value() == 3);
}

TEST_CASE("catalog documents are validated") {
  auto doc = nlohmann::json::parse(embedded::catalog_json());
  const auto rejects = [](const nlohmann::json& d) {
    try {
      Catalog::from_json(d.dump());
    } catch (const Error& e) {
      return e.code() == ErrorCode::InvalidCatalog;
    }
    return false;
  };
  SUBCASE("missing metric") {
    doc["architectures"][0]["metric_ratings"].erase("latency");
    CHECK(rejects(doc));
  }
  SUBCASE("rating out of range") {
    doc["architectures"][0]["metric_ratings"]["latency"] = 7;
    CHECK(rejects(doc));
  }
  SUBCASE("duplicate architecture") {
    doc["architectures"][1]["id"] = "pure_physical";
    CHECK(rejects(doc));
  }
  SUBCASE("missing architecture") {
    doc["architectures"].erase(5);
    CHECK(rejects(doc));
  }
  SUBCASE("bad security detail") {
    doc["architectures"][0]["security_detail"]["stealth"] = 3;
    CHECK(rejects(doc));
  }
}

TEST_CASE("catalog JSON keeps ids aligned with dataset columns") {
  const auto doc = Catalog::bundled().to_json();
  REQUIRE(doc["architectures"].size() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(doc["architectures"][i]["id"] == to_key(kArchitectures[i]));
    CHECK(doc["architectures"][i]["metric_ratings"].size() == kMetricNames.size());
  }
  const auto& detail = Catalog::bundled().profile(ArchitectureId::PublicCloud).security_detail;
  REQUIRE(detail.privacy.has_value());
}
