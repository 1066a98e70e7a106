#include "rangematch/explain.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace rangematch {

namespace {

constexpr int kCellWidth = 64;
constexpr int kCellHeight = 34;
constexpr int kLeftMargin = 190;
constexpr int kTopMargin = 56;
constexpr int kBottomMargin = 120;
constexpr int kLegendWidth = 110;
constexpr int kLegendSteps = 10;

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string compact(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string xml_escape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

void require_cells(const ContributionMatrix& matrix) {
  if (matrix.empty() || matrix.values.size() == 0) {
    throw Error(ErrorCode::EmptyMatrix, "contribution matrix has no selected attributes");
  }
}

}  // namespace

std::string_view to_key(Normalization mode) {
  return mode == Normalization::GlobalLinear ? "global_linear" : "per_attribute_linear";
}

std::optional<Normalization> normalization_from_key(std::string_view key) {
  if (key == "global_linear") return Normalization::GlobalLinear;
  if (key == "per_attribute_linear") return Normalization::PerAttributeLinear;
  return std::nullopt;
}

std::string ramp_color(double level) {
  const double t = std::clamp(std::isfinite(level) ? level : 0.0, 0.0, 1.0);
  char buf[8];
  std::array<int, 3> rgb{};
  for (std::size_t k = 0; k < 3; ++k) {
    const double c = kRampLow[k] + (static_cast<double>(kRampHigh[k]) - kRampLow[k]) * t;
    rgb[k] = static_cast<int>(std::lround(c));
  }
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", rgb[0], rgb[1], rgb[2]);
  return buf;
}

nlohmann::json normalized_json(const ContributionMatrix& matrix, Normalization mode) {
  require_cells(matrix);
  const auto levels = normalize(matrix.values, mode);
  nlohmann::json values = nlohmann::json::object();
  for (std::size_t i = 0; i < matrix.attributes.size(); ++i) {
    nlohmann::json row = nlohmann::json::object();
    for (const auto id : kArchitectures) {
      row[std::string(to_key(id))] =
          levels(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(index_of(id)));
    }
    values[matrix.attributes[i]] = std::move(row);
  }
  return {{"mode", to_key(mode)}, {"values", std::move(values)}};
}

std::string render_svg(const HeatMapSpec& spec) {
  require_cells(spec.matrix);
  const auto& matrix = spec.matrix;
  const auto levels = normalize(matrix.values, spec.normalization);
  const int columns = static_cast<int>(matrix.attributes.size());
  const int rows = static_cast<int>(kArchitectureCount);
  const int grid_w = columns * kCellWidth;
  const int grid_h = rows * kCellHeight;
  const int width = kLeftMargin + grid_w + kLegendWidth;
  const int height = kTopMargin + grid_h + kBottomMargin;

  std::string svg;
  const auto line = [&svg](const std::string& s) {
    svg += s;
    svg.push_back('\n');
  };
  const auto num = [](int v) { return std::to_string(v); };

  line("<?xml version=\"1.0\" encoding=\"UTF-8\"?>");
  line("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
       num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) +
       "\" font-family=\"sans-serif\" font-size=\"12\">");
  line("<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
       "\" fill=\"#ffffff\"/>");
  line("<text class=\"title\" x=\"" + num(width / 2) +
       "\" y=\"28\" text-anchor=\"middle\" font-size=\"16\" font-weight=\"bold\">" +
       xml_escape(spec.title) + "</text>");

  // y-axis: architectures
  line("<g class=\"y-labels\">");
  for (int r = 0; r < rows; ++r) {
    const auto id = kArchitectures[static_cast<std::size_t>(r)];
    line("<text x=\"" + num(kLeftMargin - 8) + "\" y=\"" +
         num(kTopMargin + r * kCellHeight + kCellHeight / 2 + 4) + "\" text-anchor=\"end\">" +
         xml_escape(display_name(id)) + "</text>");
  }
  line("</g>");

  line("<g class=\"cells\">");
  for (int c = 0; c < columns; ++c) {
    const auto& attribute = matrix.attributes[static_cast<std::size_t>(c)];
    for (int r = 0; r < rows; ++r) {
      const auto id = kArchitectures[static_cast<std::size_t>(r)];
      const double level = levels(c, r);
      const double raw = matrix.entry(static_cast<std::size_t>(c), id);
      const int x = kLeftMargin + c * kCellWidth;
      const int y = kTopMargin + r * kCellHeight;
      line("<rect class=\"cell\" x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
           num(kCellWidth) + "\" height=\"" + num(kCellHeight) + "\" fill=\"" +
           ramp_color(level) + "\" stroke=\"#ffffff\" data-attribute=\"" + xml_escape(attribute) +
           "\" data-architecture=\"" + std::string(to_key(id)) + "\"><title>" +
           xml_escape(attribute) + " / " + xml_escape(display_name(id)) + ": " + compact(raw) +
           " (" + fixed2(level) + ")</title></rect>");
      if (spec.cell_annotations) {
        line("<text class=\"cell-value\" x=\"" + num(x + kCellWidth / 2) + "\" y=\"" +
             num(y + kCellHeight / 2 + 4) + "\" text-anchor=\"middle\" fill=\"" +
             (level > 0.5 ? "#ffffff" : "#1a1a1a") + "\">" + compact(raw) + "</text>");
      }
    }
  }
  line("</g>");

  // x-axis: selected attributes
  line("<g class=\"x-labels\">");
  for (int c = 0; c < columns; ++c) {
    const int x = kLeftMargin + c * kCellWidth + kCellWidth / 2;
    const int y = kTopMargin + grid_h + 12;
    line("<text x=\"" + num(x) + "\" y=\"" + num(y) + "\" text-anchor=\"end\" transform=\"rotate(-45 " +
         num(x) + " " + num(y) + ")\">" + xml_escape(matrix.attributes[static_cast<std::size_t>(c)]) +
         "</text>");
  }
  line("</g>");

  const int legend_x = kLeftMargin + grid_w + 30;
  const int step_h = grid_h / kLegendSteps;
  line("<g class=\"legend\">");
  line("<text x=\"" + num(legend_x) + "\" y=\"" + num(kTopMargin - 8) + "\">" +
       std::string(to_key(spec.normalization)) + "</text>");
  for (int k = 0; k < kLegendSteps; ++k) {
    const double level = 1.0 - (k + 0.5) / kLegendSteps;
    line("<rect class=\"legend-step\" x=\"" + num(legend_x) + "\" y=\"" +
         num(kTopMargin + k * step_h) + "\" width=\"18\" height=\"" + num(step_h) + "\" fill=\"" +
         ramp_color(level) + "\"/>");
  }
  line("<text x=\"" + num(legend_x + 24) + "\" y=\"" + num(kTopMargin + 10) + "\">1.00</text>");
  line("<text x=\"" + num(legend_x + 24) + "\" y=\"" + num(kTopMargin + kLegendSteps * step_h) +
       "\">0.00</text>");
  line("</g>");
  line("</svg>");
  return svg;
}

std::string render_text(const HeatMapSpec& spec) {
  require_cells(spec.matrix);
  const auto& matrix = spec.matrix;
  const auto levels = normalize(matrix.values, spec.normalization);

  std::size_t name_width = std::string_view("attribute").size();
  for (const auto& a : matrix.attributes) name_width = std::max(name_width, a.size());

  std::string out;
  const auto pad_right = [&out](std::string_view s, std::size_t w) {
    out += s;
    out.append(w > s.size() ? w - s.size() : 0, ' ');
  };
  const auto pad_left = [&out](std::string_view s, std::size_t w) {
    out.append(w > s.size() ? w - s.size() : 0, ' ');
    out += s;
  };

  pad_right("attribute", name_width);
  for (const auto id : kArchitectures) {
    out += "  ";
    pad_left(to_key(id), to_key(id).size());
  }
  out.push_back('\n');
  for (std::size_t i = 0; i < matrix.attributes.size(); ++i) {
    pad_right(matrix.attributes[i], name_width);
    for (const auto id : kArchitectures) {
      out += "  ";
      pad_left(fixed2(levels(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(index_of(id)))),
               to_key(id).size());
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace rangematch
