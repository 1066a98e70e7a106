#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <Eigen/Core>
#include <json.hpp>

#include "rangematch/error.hpp"
#include "rangematch/matcher.hpp"

namespace rangematch {

enum class Normalization { GlobalLinear, PerAttributeLinear };

std::string_view to_key(Normalization mode);
std::optional<Normalization> normalization_from_key(std::string_view key);

/// Value used for every cell of a constant range.
inline constexpr double kDegenerateLevel = 0.5;

namespace detail {

template <typename Derived>
void rescale_in_place(Eigen::MatrixBase<Derived>&& block) {
  using Scalar = typename Derived::Scalar;
  const Scalar lo = block.minCoeff();
  const Scalar hi = block.maxCoeff();
  if (!(hi > lo)) {
    block.setConstant(static_cast<Scalar>(kDegenerateLevel));
  } else {
    block = (block.array() - lo) / (hi - lo);
  }
}

}  // namespace detail

/// Linear min-max rescale into [0, 1]. Rows are attributes, columns architectures.
/// GlobalLinear uses the extremes of the whole matrix; PerAttributeLinear rescales
/// each attribute row on its own. A constant range maps to 0.5.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> normalize(
    const Eigen::MatrixBase<Derived>& matrix, Normalization mode) {
  if (matrix.size() == 0) throw Error(ErrorCode::EmptyMatrix, "cannot normalize an empty matrix");
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> out =
      matrix;
  if (mode == Normalization::GlobalLinear) {
    detail::rescale_in_place(out.block(0, 0, out.rows(), out.cols()));
  } else {
    for (Eigen::Index r = 0; r < out.rows(); ++r) detail::rescale_in_place(out.row(r));
  }
  return out;
}

/// {"mode", "values": {attribute: {architecture: number}}}
nlohmann::json normalized_json(const ContributionMatrix& matrix, Normalization mode);

struct HeatMapSpec {
  ContributionMatrix matrix;
  Normalization normalization = Normalization::GlobalLinear;
  bool cell_annotations = true;
  std::string title = "Architecture contributions";
};

/// Single-hue ramp, light at 0 and dark at 1; returns "#rrggbb".
std::string ramp_color(double level);
inline constexpr std::array<std::uint8_t, 3> kRampLow{0xf7, 0xfb, 0xff};
inline constexpr std::array<std::uint8_t, 3> kRampHigh{0x08, 0x30, 0x6b};

/// Standalone SVG: architectures on the y-axis, selected attributes on the x-axis,
/// one `rect class="cell"` per pair, plus title, axis labels and a legend.
/// Output depends only on `spec`.
std::string render_svg(const HeatMapSpec& spec);

/// Fixed-width table of normalised values with two decimals: one row per selected
/// attribute, one column per architecture.
std::string render_text(const HeatMapSpec& spec);

}  // namespace rangematch
