#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include <Eigen/Core>

namespace rangematch {

/// The six reference architectures, in their canonical numbering order.
enum class ArchitectureId : std::size_t {
  PurePhysical = 0,
  CentrallyVirtualized,
  OnPremiseCloud,
  PublicCloud,
  DistributedVirtualization,
  Hybrid,
};

inline constexpr std::size_t kArchitectureCount = 6;

inline constexpr std::array<ArchitectureId, kArchitectureCount> kArchitectures{
    ArchitectureId::PurePhysical,   ArchitectureId::CentrallyVirtualized,
    ArchitectureId::OnPremiseCloud, ArchitectureId::PublicCloud,
    ArchitectureId::DistributedVirtualization, ArchitectureId::Hybrid,
};

/// Stable snake_case key, used as CSV column name and JSON key.
std::string_view to_key(ArchitectureId id);
std::optional<ArchitectureId> architecture_from_key(std::string_view key);
/// Title-case name for tables and figures ("On-Premise Cloud").
std::string_view display_name(ArchitectureId id);

constexpr std::size_t index_of(ArchitectureId id) { return static_cast<std::size_t>(id); }

/// One value per architecture, indexed by index_of(ArchitectureId).
template <typename Scalar>
using ArchVector = Eigen::Matrix<Scalar, 1, static_cast<int>(kArchitectureCount)>;

/// Rows are attributes, columns are architectures.
template <typename Scalar>
using ArchMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, static_cast<int>(kArchitectureCount), Eigen::RowMajor>;

using ArchVectord = ArchVector<double>;
using ArchMatrixd = ArchMatrix<double>;

}  // namespace rangematch
