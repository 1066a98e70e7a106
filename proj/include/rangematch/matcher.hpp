#pragma once

#include <algorithm>
#include <numeric>
#include <span>
#include <string>
#include <unordered_set>
#include <variant>
#include <vector>

#include "rangematch/architecture.hpp"
#include "rangematch/dataset.hpp"
#include "rangematch/error.hpp"
#include "rangematch/profile.hpp"

namespace rangematch {

/// Per-attribute, per-architecture contributions (weight x supportability).
/// Row i belongs to attributes[i].
template <typename Scalar>
struct ContributionMatrixT {
  std::vector<std::string> attributes;
  ArchMatrix<Scalar> values;

  Eigen::Index rows() const { return values.rows(); }
  bool empty() const { return attributes.empty(); }
  Scalar entry(std::size_t attribute, ArchitectureId id) const {
    return values(static_cast<Eigen::Index>(attribute), static_cast<Eigen::Index>(index_of(id)));
  }
};

using RankGroup = std::vector<ArchitectureId>;

template <typename Scalar>
struct MatchResultT {
  ArchVector<Scalar> totals = ArchVector<Scalar>::Zero();
  /// Descending by total; ties share a group, listed in canonical order.
  std::vector<RankGroup> ranking;
  ContributionMatrixT<Scalar> matrix;
  RequirementProfile profile_echo;
  std::string dataset_source;

  Scalar total(ArchitectureId id) const { return totals[static_cast<Eigen::Index>(index_of(id))]; }
  const RankGroup& top() const { return ranking.front(); }
};

using ContributionMatrix = ContributionMatrixT<double>;
using MatchResult = MatchResultT<double>;

/// Groups architectures by exactly equal total, highest first.
template <typename Derived>
std::vector<RankGroup> rank_groups(const Eigen::MatrixBase<Derived>& totals) {
  std::array<std::size_t, kArchitectureCount> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return totals(static_cast<Eigen::Index>(a)) > totals(static_cast<Eigen::Index>(b));
  });
  std::vector<RankGroup> groups;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto id = kArchitectures[order[k]];
    if (k > 0 && totals(static_cast<Eigen::Index>(order[k])) ==
                     totals(static_cast<Eigen::Index>(order[k - 1]))) {
      groups.back().push_back(id);
    } else {
      groups.push_back({id});
    }
  }
  return groups;
}

/// Dataset rows selected by the profile, one per selection, in registry order.
/// Throws SchemaMismatch when the profile and dataset schema versions differ and
/// MissingRow for a selected pair the dataset lacks.
std::vector<MatchingRow> score_lookup(const RequirementProfile& profile,
                                      const MatchingDataset& dataset);

/// Weighted totals per architecture: totals = sum over rows of weight * scores.
/// Rows are accumulated in the given order. Throws DuplicateAttribute when two rows
/// share an attribute.
template <typename Scalar = double>
MatchResultT<Scalar> score_calculation(std::span<const MatchingRow> rows) {
  std::unordered_set<std::string> seen;
  for (const auto& row : rows) {
    if (!seen.insert(row.attribute).second) {
      throw Error(ErrorCode::DuplicateAttribute,
                  "attribute '" + row.attribute + "' appears in more than one selected row",
                  row.attribute);
    }
  }

  const auto n = static_cast<Eigen::Index>(rows.size());
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights(n);
  ArchMatrix<Scalar> scores(n, static_cast<Eigen::Index>(kArchitectureCount));
  MatchResultT<Scalar> result;
  result.matrix.attributes.reserve(rows.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    weights(i) = static_cast<Scalar>(row.weight);
    scores.row(i) = row.scores.template cast<Scalar>();
    result.matrix.attributes.push_back(row.attribute);
  }

  result.matrix.values = weights.asDiagonal() * scores;
  for (Eigen::Index i = 0; i < n; ++i) result.totals += result.matrix.values.row(i);
  result.ranking = rank_groups(result.totals);
  return result;
}

/// score_calculation(score_lookup(profile, dataset)) plus provenance.
MatchResult match(const RequirementProfile& profile, const MatchingDataset& dataset);

using CompareOutcome = std::variant<MatchResult, Error>;

/// One outcome per profile, in input order; an error in one profile does not
/// affect the others.
std::vector<CompareOutcome> compare(std::span<const RequirementProfile> profiles,
                                    const MatchingDataset& dataset);

}  // namespace rangematch
