#include <doctest.h>

#include <random>
#include <regex>
#include <sstream>

#include "rangematch/explain.hpp"

using namespace rangematch;

namespace {

ContributionMatrix matrix_of(std::vector<std::string> attributes, std::vector<double> values) {
  ContributionMatrix m;
  m.attributes = std::move(attributes);
  m.values.resize(static_cast<Eigen::Index>(m.attributes.size()), 6);
  for (Eigen::Index i = 0; i < m.values.size(); ++i) m.values(i / 6, i % 6) = values[static_cast<std::size_t>(i)];
  return m;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> words_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace

TEST_CASE("normalize endpoints and degenerate range") {
  Eigen::Matrix<double, 1, 2> two{1.0, 3.0};
  const auto n = normalize(two, Normalization::GlobalLinear);
  CHECK(n(0, 0) == 0.0);
  CHECK(n(0, 1) == 1.0);

  const Eigen::MatrixXd flat = Eigen::MatrixXd::Constant(3, 6, 7.25);
  for (const auto mode : {Normalization::GlobalLinear, Normalization::PerAttributeLinear}) {
    CHECK((normalize(flat, mode).array() == 0.5).all());
  }

  CHECK_THROWS_AS(normalize(Eigen::MatrixXd(0, 6), Normalization::GlobalLinear), Error);
  try {
    normalize(Eigen::MatrixXd(0, 6), Normalization::PerAttributeLinear);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyMatrix);
  }
}

TEST_CASE("normalize is bounded and order-preserving on random matrices") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    Eigen::Matrix<double, 3, 6, Eigen::RowMajor> m;
    for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = u(rng);
    if (trial % 5 == 0) m.row(1).setConstant(2.0);

    const auto g = normalize(m, Normalization::GlobalLinear);
    const double lo = m.minCoeff();
    const double hi = m.maxCoeff();
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      const double got = g.data()[i];
      REQUIRE(got >= 0.0);
      REQUIRE(got <= 1.0);
      CHECK(got == doctest::Approx((m.data()[i] - lo) / (hi - lo)));
      for (Eigen::Index j = 0; j < m.size(); ++j) {
        if (m.data()[i] >= m.data()[j]) REQUIRE(g.data()[i] >= g.data()[j]);
      }
    }

    const auto p = normalize(m, Normalization::PerAttributeLinear);
    for (Eigen::Index r = 0; r < 3; ++r) {
      const double rlo = m.row(r).minCoeff();
      const double rhi = m.row(r).maxCoeff();
      for (Eigen::Index c = 0; c < 6; ++c) {
        const double got = p(r, c);
        REQUIRE(got >= 0.0);
        REQUIRE(got <= 1.0);
        if (rhi > rlo) {
          CHECK(got == doctest::Approx((m(r, c) - rlo) / (rhi - rlo)));
        } else {
          CHECK(got == 0.5);
        }
        for (Eigen::Index d = 0; d < 6; ++d) {
          if (m(r, c) >= m(r, d)) REQUIRE(p(r, c) >= p(r, d));
        }
      }
    }
  }
}

TEST_CASE("normalize works for float") {
  Eigen::Matrix<float, 2, 2> m{{0.f, 2.f}, {4.f, 8.f}};
  const auto n = normalize(m, Normalization::PerAttributeLinear);
  CHECK(n(0, 1) == 1.f);
  CHECK(n(1, 0) == 0.f);
}

TEST_CASE("normalization keys") {
  CHECK(to_key(Normalization::GlobalLinear) == "global_linear");
  CHECK(to_key(Normalization::PerAttributeLinear) == "per_attribute_linear");
  CHECK(normalization_from_key("per_attribute_linear") == Normalization::PerAttributeLinear);
  CHECK_FALSE(normalization_from_key("log"));
}

TEST_CASE("normalized_json") {
  const auto m = matrix_of({"budget", "latency"}, {0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 5, 10});
  const auto j = normalized_json(m, Normalization::GlobalLinear);
  CHECK(j["mode"] == "global_linear");
  CHECK(j["values"]["budget"]["pure_physical"] == 0.0);
  CHECK(j["values"]["latency"]["hybrid"] == 1.0);
  CHECK(j["values"]["latency"]["pure_physical"] == 0.5);
  const auto p = normalized_json(m, Normalization::PerAttributeLinear);
  CHECK(p["values"]["latency"]["pure_physical"] == 0.0);
  CHECK(p["values"]["budget"]["hybrid"] == 1.0);
}

TEST_CASE("ramp endpoints") {
  CHECK(ramp_color(0.0) == "#f7fbff");
  CHECK(ramp_color(1.0) == "#08306b");
  CHECK(ramp_color(-3.0) == "#f7fbff");
  CHECK(ramp_color(9.0) == "#08306b");
  CHECK(std::regex_match(ramp_color(0.37), std::regex("#[0-9a-f]{6}")));
}

TEST_CASE("render_svg") {
  SUBCASE("one selection gives six cells") {
    HeatMapSpec spec{matrix_of({"budget"}, {1, 2, 3, 4, 5, 6}), Normalization::GlobalLinear, true, "t"};
    const auto svg = render_svg(spec);
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
    CHECK(count(svg, "class=\"cell\"") == 6);
    CHECK(count(svg, "class=\"cell-value\"") == 6);
    for (const auto id : kArchitectures) CHECK(svg.find(std::string(display_name(id))) != std::string::npos);
    CHECK(svg.find(">budget<") != std::string::npos);
    CHECK(svg.find("#f7fbff") != std::string::npos);
    CHECK(svg.find("#08306b") != std::string::npos);
  }
  SUBCASE("twenty-two selections give 132 cells") {
    std::vector<std::string> attrs;
    std::vector<double> values;
    for (int i = 0; i < 22; ++i) {
      attrs.push_back("a" + std::to_string(i));
      for (int k = 0; k < 6; ++k) values.push_back(i * k);
    }
    HeatMapSpec spec{matrix_of(attrs, values), Normalization::PerAttributeLinear, false, "full"};
    const auto svg = render_svg(spec);
    CHECK(count(svg, "class=\"cell\"") == 132);
    CHECK(count(svg, "class=\"cell-value\"") == 0);
  }
  SUBCASE("byte-identical across renders") {
    HeatMapSpec spec{matrix_of({"x", "y"}, {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 1, 1, 2, 3, 5, 8}),
                     Normalization::GlobalLinear, true, "repeat"};
    const auto first = render_svg(spec);
    const auto copy = spec;
    CHECK(render_svg(copy) == first);
  }
  SUBCASE("markup in labels is escaped") {
    HeatMapSpec spec{matrix_of({"a<b"}, {1, 1, 1, 1, 1, 1}), Normalization::GlobalLinear, true, "x & y"};
    const auto svg = render_svg(spec);
    CHECK(svg.find("a&lt;b") != std::string::npos);
    CHECK(svg.find("x &amp; y") != std::string::npos);
  }
  SUBCASE("empty matrix") {
    HeatMapSpec spec;
    spec.matrix.values.resize(0, 6);
    try {
      render_svg(spec);
      FAIL("expected EmptyMatrix");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::EmptyMatrix);
    }
  }
}

TEST_CASE("render_text") {
  SUBCASE("all equal prints 0.50 everywhere") {
    HeatMapSpec spec{matrix_of({"a", "b"}, std::vector<double>(12, 3.0)), Normalization::GlobalLinear, true, ""};
    const auto lines = lines_of(render_text(spec));
    REQUIRE(lines.size() == 3);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto w = words_of(lines[i]);
      REQUIRE(w.size() == 7);
      for (std::size_t k = 1; k < w.size(); ++k) CHECK(w[k] == "0.50");
    }
  }
  SUBCASE("endpoints and shape") {
    HeatMapSpec spec{matrix_of({"budget", "latency"}, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}),
                     Normalization::GlobalLinear, true, ""};
    const auto text = render_text(spec);
    CHECK(text.find("0.00") != std::string::npos);
    CHECK(text.find("1.00") != std::string::npos);
    const auto lines = lines_of(text);
    REQUIRE(lines.size() == 3);
    const auto header = words_of(lines[0]);
    REQUIRE(header.size() == 7);
    for (std::size_t k = 0; k < 6; ++k) CHECK(header[k + 1] == to_key(kArchitectures[k]));
    CHECK(words_of(lines[1]).front() == "budget");
    CHECK(words_of(lines[2]).front() == "latency");
    CHECK(words_of(lines[1]).size() == 7);
    // Fixed width: every line is the same length.
    CHECK(lines[0].size() == lines[1].size());
    CHECK(lines[1].size() == lines[2].size());
  }
  SUBCASE("empty matrix") {
    HeatMapSpec spec;
    spec.matrix.values.resize(0, 6);
    CHECK_THROWS_AS(render_text(spec), Error);
  }
}
