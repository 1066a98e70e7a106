#include "rangematch/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

#include "rangematch/csv.hpp"
#include "rangematch/embedded.hpp"
#include "rangematch/identifier.hpp"

namespace rangematch {

namespace {

constexpr std::size_t kColumnCount = 3 + kArchitectureCount;

std::string row_key(std::string_view attribute, std::string_view value) {
  std::string key(attribute);
  key.push_back('\x1f');
  key.append(value);
  return key;
}

std::string line_location(std::size_t line) {
  return line == 0 ? std::string{} : "line " + std::to_string(line);
}

enum class NumberStatus { Ok, NotANumber, OutOfRange };

NumberStatus parse_number(std::string_view text, double& out) {
  if (text.empty()) return NumberStatus::NotANumber;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec == std::errc::result_out_of_range) return NumberStatus::OutOfRange;
  if (ec != std::errc{} || ptr != last) return NumberStatus::NotANumber;
  return std::isfinite(out) ? NumberStatus::Ok : NumberStatus::OutOfRange;
}

bool weight_in_range(double w) { return std::isfinite(w) && w >= 0.0; }
bool score_in_range(double s) { return std::isfinite(s) && s >= kMinScore && s <= kMaxScore; }

Diagnostic make_diagnostic(ErrorCode code, std::string message, std::vector<std::size_t> lines,
                           std::string attribute = {}, std::string value = {},
                           nlohmann::json details = nullptr) {
  Diagnostic d;
  d.code = code;
  d.severity = Severity::Error;
  d.message = std::move(message);
  d.lines = std::move(lines);
  d.attribute = std::move(attribute);
  d.value = std::move(value);
  d.details = std::move(details);
  return d;
}

void sort_diagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(), [](const auto& a, const auto& b) {
    const auto first_line = [](const Diagnostic& d) {
      return d.lines.empty() ? std::size_t{0} : d.lines.front();
    };
    const bool a_warn = a.severity == Severity::Warning;
    const bool b_warn = b.severity == Severity::Warning;
    return std::tuple(a_warn, first_line(a), static_cast<int>(a.code)) <
           std::tuple(b_warn, first_line(b), static_cast<int>(b.code));
  });
}

// Checks a normalised row against the taxonomy. Fills ranks on success; appends
// diagnostics and returns false otherwise. Duplicates are handled by the caller.
bool validate_row(MatchingRow& row, const Taxonomy& taxonomy, std::vector<Diagnostic>& out) {
  const auto lines = row.line == 0 ? std::vector<std::size_t>{} : std::vector{row.line};
  try {
    row.attribute_rank = taxonomy.attribute_index(row.attribute);
    row.value_rank = taxonomy.validate_value(row.attribute, row.value).ordinal;
  } catch (const Error& e) {
    out.push_back(make_diagnostic(e.code(), e.what(), lines, row.attribute, row.value, e.details()));
    return false;
  }
  bool ok = true;
  if (!weight_in_range(row.weight)) {
    out.push_back(make_diagnostic(ErrorCode::WeightOutOfRange,
                                  "weight " + format_number(row.weight) + " must be >= 0", lines,
                                  row.attribute, row.value));
    ok = false;
  }
  for (const auto id : kArchitectures) {
    const double s = row.score(id);
    if (!score_in_range(s)) {
      out.push_back(make_diagnostic(ErrorCode::ScoreOutOfRange,
                                    std::string(to_key(id)) + " score " + format_number(s) +
                                        " outside [0, 5]",
                                    lines, row.attribute, row.value,
                                    nlohmann::json{{"architecture", to_key(id)}}));
      ok = false;
    }
  }
  return ok;
}

void add_duplicates(const std::map<std::string, std::vector<const MatchingRow*>>& by_key,
                    std::vector<Diagnostic>& out) {
  for (const auto& [key, rows] : by_key) {
    if (rows.size() < 2) continue;
    std::vector<std::size_t> lines;
    for (const auto* r : rows) lines.push_back(r->line);
    std::sort(lines.begin(), lines.end());
    const auto& first = *rows.front();
    out.push_back(make_diagnostic(ErrorCode::DuplicateRow,
                                  "pair (" + first.attribute + ", " + first.value + ") appears " +
                                      std::to_string(rows.size()) + " times",
                                  lines, first.attribute, first.value,
                                  nlohmann::json{{"lines", lines}}));
  }
}

}  // namespace

nlohmann::json Diagnostic::to_json() const {
  nlohmann::json out{{"code", to_string(code)},
                     {"severity", severity == Severity::Error ? "error" : "warning"},
                     {"message", message},
                     {"lines", lines}};
  if (!attribute.empty()) out["attribute"] = attribute;
  if (!value.empty()) out["value"] = value;
  if (!details.is_null()) out["details"] = details;
  return out;
}

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return ec == std::errc{} ? std::string(buffer, ptr) : std::string("nan");
}

MatchingDataset::MatchingDataset(const Taxonomy& taxonomy, std::vector<MatchingRow> rows,
                                 std::string source)
    : rows_(std::move(rows)), source_(std::move(source)), schema_version_(taxonomy.schema_version()) {
  std::vector<Diagnostic> diagnostics;
  std::map<std::string, std::vector<const MatchingRow*>> by_key;
  for (auto& row : rows_) {
    row.attribute = normalize_identifier(row.attribute);
    row.value = normalize_identifier(row.value);
    if (validate_row(row, taxonomy, diagnostics)) by_key[row_key(row.attribute, row.value)].push_back(&row);
  }
  add_duplicates(by_key, diagnostics);
  if (!diagnostics.empty()) {
    sort_diagnostics(diagnostics);
    throw DatasetError(std::move(diagnostics));
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    index_.emplace(row_key(rows_[i].attribute, rows_[i].value), i);
  }
}

const MatchingRow* MatchingDataset::find(std::string_view attribute, std::string_view value) const {
  const auto it = index_.find(row_key(normalize_identifier(attribute), normalize_identifier(value)));
  return it == index_.end() ? nullptr : &rows_[it->second];
}

DatasetError::DatasetError(std::vector<Diagnostic> diagnostics)
    : Error(diagnostics.empty() ? ErrorCode::MalformedCsv : diagnostics.front().code,
            diagnostics.empty()
                ? std::string("invalid dataset")
                : diagnostics.front().message +
                      (diagnostics.size() > 1
                           ? " (+" + std::to_string(diagnostics.size() - 1) + " more)"
                           : std::string{}),
            diagnostics.empty() || diagnostics.front().lines.empty()
                ? std::string{}
                : line_location(diagnostics.front().lines.front()),
            [&] {
              nlohmann::json list = nlohmann::json::array();
              for (const auto& d : diagnostics) list.push_back(d.to_json());
              return nlohmann::json{{"diagnostics", std::move(list)}};
            }()),
      diagnostics_(std::move(diagnostics)) {}

bool DatasetReport::has_errors() const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::Error; });
}

bool DatasetReport::complete() const {
  return std::none_of(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
    return d.code == ErrorCode::IncompleteCoverage;
  });
}

DatasetReport check_dataset(std::string_view text, const Taxonomy& taxonomy, std::string source) {
  DatasetReport report;
  auto& diagnostics = report.diagnostics;
  const auto records = csv::read_records(text);

  if (records.empty()) {
    diagnostics.push_back(
        make_diagnostic(ErrorCode::MalformedCsv, "missing header row", {1}));
    return report;
  }
  {
    const auto& header = records.front();
    std::string joined;
    for (std::size_t i = 0; i < header.fields.size(); ++i) {
      if (i > 0) joined.push_back(',');
      joined += header.fields[i];
    }
    if (header.error || joined != kDatasetHeader) {
      diagnostics.push_back(make_diagnostic(
          ErrorCode::MalformedCsv,
          header.error ? *header.error : "header must be exactly '" + std::string(kDatasetHeader) + "'",
          {header.line}));
    }
  }

  std::vector<MatchingRow> rows;
  rows.reserve(records.size() - 1);
  std::vector<MatchingRow> keyed;  // rows with a valid key, including ones with bad numbers
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& record = records[r];
    const std::vector<std::size_t> lines{record.line};
    if (record.error) {
      diagnostics.push_back(make_diagnostic(ErrorCode::MalformedCsv, *record.error, lines));
      continue;
    }
    if (record.fields.size() != kColumnCount) {
      diagnostics.push_back(make_diagnostic(
          ErrorCode::MalformedCsv,
          "expected " + std::to_string(kColumnCount) + " fields, found " +
              std::to_string(record.fields.size()),
          lines));
      continue;
    }

    MatchingRow row;
    row.line = record.line;
    row.attribute = normalize_identifier(record.fields[0]);
    row.value = normalize_identifier(record.fields[1]);

    bool numbers_ok = true;
    const auto read = [&](std::size_t column, double& out) {
      switch (parse_number(record.fields[column], out)) {
        case NumberStatus::Ok: return;
        case NumberStatus::OutOfRange:
          out = std::numeric_limits<double>::infinity();
          return;
        case NumberStatus::NotANumber: break;
      }
      const std::string column_name = column == 2 ? "attribute_weight"
                                                  : std::string(to_key(kArchitectures[column - 3]));
      diagnostics.push_back(make_diagnostic(
          ErrorCode::MalformedCsv,
          column_name + " '" + record.fields[column] + "' is not a number", lines, row.attribute,
          row.value));
      numbers_ok = false;
    };
    read(2, row.weight);
    for (std::size_t k = 0; k < kArchitectureCount; ++k) {
      double s = 0.0;
      read(3 + k, s);
      row.scores[static_cast<Eigen::Index>(k)] = s;
    }

    std::vector<Diagnostic> row_diagnostics;
    const bool row_ok = validate_row(row, taxonomy, row_diagnostics);
    const bool key_ok = std::none_of(row_diagnostics.begin(), row_diagnostics.end(), [](auto& d) {
      return d.code == ErrorCode::UnknownAttribute || d.code == ErrorCode::UnknownValue;
    });
    diagnostics.insert(diagnostics.end(), row_diagnostics.begin(), row_diagnostics.end());
    if (key_ok) keyed.push_back(row);
    if (row_ok && numbers_ok) rows.push_back(std::move(row));
  }

  std::map<std::string, std::vector<const MatchingRow*>> by_key;
  for (const auto& row : keyed) by_key[row_key(row.attribute, row.value)].push_back(&row);
  add_duplicates(by_key, diagnostics);

  nlohmann::json missing = nlohmann::json::array();
  for (const auto& def : taxonomy.registry()) {
    for (const auto& value : def.value_domain) {
      if (!by_key.contains(row_key(def.name, value))) missing.push_back({def.name, value});
    }
  }
  if (!missing.empty()) {
    const auto missing_count = missing.size();
    Diagnostic d = make_diagnostic(
        ErrorCode::IncompleteCoverage,
        std::to_string(missing_count) + " of " + std::to_string(taxonomy.pair_count()) +
            " (attribute, value) pairs have no row",
        {}, {}, {}, nlohmann::json{{"missing", std::move(missing)}});
    d.severity = Severity::Warning;
    diagnostics.push_back(std::move(d));
  }

  sort_diagnostics(diagnostics);
  if (!report.has_errors()) report.dataset.emplace(taxonomy, std::move(rows), std::move(source));
  return report;
}

MatchingDataset parse_dataset(std::string_view text, const Taxonomy& taxonomy, std::string source,
                              std::vector<Diagnostic>* warnings) {
  auto report = check_dataset(text, taxonomy, std::move(source));
  if (report.has_errors()) {
    std::vector<Diagnostic> errors;
    for (auto& d : report.diagnostics) {
      if (d.severity == Severity::Error) errors.push_back(std::move(d));
    }
    throw DatasetError(std::move(errors));
  }
  if (warnings) *warnings = std::move(report.diagnostics);
  return std::move(*report.dataset);
}

std::string serialize_dataset(const MatchingDataset& dataset) {
  std::vector<const MatchingRow*> ordered;
  ordered.reserve(dataset.size());
  for (const auto& row : dataset.rows()) ordered.push_back(&row);
  std::sort(ordered.begin(), ordered.end(), [](const MatchingRow* a, const MatchingRow* b) {
    return std::tie(a->attribute_rank, a->value_rank) < std::tie(b->attribute_rank, b->value_rank);
  });

  std::string out(kDatasetHeader);
  out.push_back('\n');
  for (const auto* row : ordered) {
    csv::append_field(out, row->attribute);
    out.push_back(',');
    csv::append_field(out, row->value);
    out.push_back(',');
    out += format_number(row->weight);
    for (const auto id : kArchitectures) {
      out.push_back(',');
      out += format_number(row->score(id));
    }
    out.push_back('\n');
  }
  return out;
}

const MatchingDataset& default_dataset() {
  static const MatchingDataset instance =
      parse_dataset(embedded::default_dataset_csv(), Taxonomy::bundled(), "bundled-default");
  return instance;
}

std::vector<std::pair<std::string, std::string>> missing_pairs(const MatchingDataset& dataset,
                                                               const Taxonomy& taxonomy) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& def : taxonomy.registry()) {
    for (const auto& value : def.value_domain) {
      if (!dataset.find(def.name, value)) out.emplace_back(def.name, value);
    }
  }
  return out;
}

}  // namespace rangematch
