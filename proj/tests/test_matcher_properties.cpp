#include <doctest.h>

#include "support/properties.hpp"

namespace {
gen::Rng seeded(std::uint64_t salt) { return gen::Rng{0x5eed0000u + salt}; }
}  // namespace

TEST_CASE("totals agree with brute force") {
  auto rng = seeded(1);
  CHECK(props::oracle_equivalence(rng, 200) == "");
}

TEST_CASE("disjoint profiles add") {
  auto rng = seeded(2);
  CHECK(props::additivity(rng, 100) == "");
}

TEST_CASE("zero weight removes a row's contribution only") {
  auto rng = seeded(3);
  CHECK(props::zero_weight_neutrality(rng, 100) == "");
}

TEST_CASE("raising one score raises exactly one total") {
  auto rng = seeded(4);
  CHECK(props::monotonicity(rng, 100) == "");
}

TEST_CASE("row order is irrelevant") {
  auto rng = seeded(5);
  CHECK(props::permutation_invariance(rng, 100) == "");
}

TEST_CASE("uniform weight scaling keeps rank groups") {
  for (const double c : {0.5, 2.0, 10.0}) {
    CAPTURE(c);
    auto rng = seeded(6);
    CHECK(props::scale_invariance(rng, 100, c) == "");
  }
}

TEST_CASE("matrix columns sum to totals") {
  auto rng = seeded(7);
  CHECK(props::matrix_consistency(rng, 100) == "");
}

TEST_CASE("tie-heavy data ranks like the oracle") {
  // Narrow grid forces many exact ties.
  auto rng = seeded(8);
  for (int t = 0; t < 200; ++t) {
    auto c = props::random_case(rng, true, 10, 30);
    for (auto& r : c.rows) {
      r.weight = 1;
      for (auto& s : r.scores) s = static_cast<double>(static_cast<int>(s) % 2);
    }
    const auto r = props::run(c);
    CHECK(props::groups_of(r) == oracle::groups(oracle::totals(c.selections, c.rows)));
  }
}
