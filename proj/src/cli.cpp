#include "rangematch/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include "rangematch/catalog.hpp"
#include "rangematch/dataset.hpp"
#include "rangematch/embedded.hpp"
#include "rangematch/explain.hpp"
#include "rangematch/matcher.hpp"
#include "rangematch/profile.hpp"
#include "rangematch/report.hpp"
#include "rangematch/service.hpp"
#include "rangematch/taxonomy.hpp"

namespace rangematch::cli {

namespace {

namespace fs = std::filesystem;

constexpr const char* kDefault = "default";
constexpr const char* kDatasetEnv = "RANGEMATCH_DATASET";

enum class Format { Json, Table, Csv };

struct Options {
  std::string dataset;
  std::string schema = kDefault;
  std::string catalog = kDefault;
  std::vector<std::string> profiles;
  std::string heatmap;
  std::string output;
  std::string format;
  std::string normalization = "global_linear";
  bool strict = false;
  std::uint16_t port = 8080;
  std::string bind = "127.0.0.1";
  std::string ui_dir;
  std::string export_dir;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read '" + path + "'", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Collects output files and publishes them only once every write succeeded.
class StagedFiles {
 public:
  ~StagedFiles() {
    for (const auto& [tmp, _] : staged_) {
      std::error_code ec;
      fs::remove(tmp, ec);
    }
  }

  void stage(const std::string& path, std::string_view content) {
    const auto tmp = path + ".tmp." + std::to_string(::getpid());
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write '" + path + "'", path);
    staged_.emplace_back(tmp, path);
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.close();
    if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path + "'", path);
  }

  void commit() {
    for (const auto& [tmp, path] : staged_) {
      std::error_code ec;
      fs::rename(tmp, path, ec);
      if (ec) throw Error(ErrorCode::IoError, "cannot move output into '" + path + "'", path);
    }
    staged_.clear();
  }

 private:
  std::vector<std::pair<std::string, std::string>> staged_;
};

void print_error(std::ostream& err, const nlohmann::json& record) {
  nlohmann::json line{{"code", record.value("code", "Unknown")},
                      {"message", record.value("message", "")}};
  if (record.contains("location")) line["location"] = record["location"];
  if (record.contains("lines") && !record["lines"].empty()) {
    line["location"] = "line " + std::to_string(record["lines"].front().get<std::size_t>());
  }
  err << line.dump() << '\n';
}

void print_error(std::ostream& err, const Error& e) {
  if (const auto* dataset_error = dynamic_cast<const DatasetError*>(&e)) {
    for (const auto& d : dataset_error->diagnostics()) print_error(err, d.to_json());
    return;
  }
  print_error(err, e.to_json());
}

class Runner {
 public:
  Runner(const Options& options, Streams streams) : opt_(options), io_(streams) {}

  Format format() const {
    if (opt_.format == "json") return Format::Json;
    if (opt_.format == "csv") return Format::Csv;
    if (opt_.format == "table") return Format::Table;
    return io_.out_is_terminal ? Format::Table : Format::Json;
  }

  const Taxonomy& taxonomy() {
    if (opt_.schema == kDefault) return Taxonomy::bundled();
    if (!custom_taxonomy_) custom_taxonomy_ = Taxonomy::from_json(read_file(opt_.schema));
    return *custom_taxonomy_;
  }

  const Catalog& catalog() {
    if (opt_.catalog == kDefault) return Catalog::bundled();
    if (!custom_catalog_) custom_catalog_ = Catalog::from_json(read_file(opt_.catalog));
    return *custom_catalog_;
  }

  std::string dataset_path() const {
    if (!opt_.dataset.empty()) return opt_.dataset;
    if (const char* env = std::getenv(kDatasetEnv); env != nullptr && *env != '\0') return env;
    return kDefault;
  }

  DatasetReport dataset_report() {
    const auto path = dataset_path();
    if (path == kDefault) {
      return check_dataset(embedded::default_dataset_csv(), taxonomy(), "bundled-default");
    }
    return check_dataset(read_file(path), taxonomy(), path);
  }

  MatchingDataset dataset() {
    auto report = dataset_report();
    if (report.has_errors()) {
      std::vector<Diagnostic> errors;
      for (auto& d : report.diagnostics) {
        if (d.severity == Severity::Error) errors.push_back(std::move(d));
      }
      throw DatasetError(std::move(errors));
    }
    return std::move(*report.dataset);
  }

  RequirementProfile profile(const std::string& path) {
    return RequirementProfile::parse(read_file(path), taxonomy());
  }

  int list_attributes() {
    const auto& tax = taxonomy();
    switch (format()) {
      case Format::Json: io_.out << tax.to_json().dump(2) << '\n'; break;
      case Format::Csv:
        io_.out << "set,attribute,values\n";
        for (const auto& def : tax.registry()) {
          io_.out << normalize_set(def.set) << ',' << def.name << ',' << join(def.value_domain, '|')
                  << '\n';
        }
        break;
      case Format::Table:
        for (const auto& def : tax.registry()) {
          char buf[64];
          std::snprintf(buf, sizeof buf, "%-12s %-14s ", normalize_set(def.set).c_str(),
                        def.name.c_str());
          io_.out << buf << join(def.value_domain, ' ') << '\n';
        }
        break;
    }
    return kExitOk;
  }

  int list_architectures() {
    const auto& cat = catalog();
    switch (format()) {
      case Format::Json: io_.out << cat.to_json().dump(2) << '\n'; break;
      case Format::Csv:
      case Format::Table: {
        const bool csv = format() == Format::Csv;
        io_.out << (csv ? "id" : "id                         ");
        for (const auto metric : kMetricNames) io_.out << (csv ? "," : " ") << to_key(metric);
        io_.out << '\n';
        for (const auto& p : cat.architectures()) {
          if (csv) {
            io_.out << to_key(p.id);
          } else {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%-26s", std::string(to_key(p.id)).c_str());
            io_.out << buf;
          }
          for (const auto metric : kMetricNames) {
            const auto width = csv ? 0 : to_key(metric).size();
            const auto value = std::to_string(p.metric_ratings.at(metric).value());
            io_.out << (csv ? "," : " ") << std::string(width > value.size() ? width - value.size() : 0, ' ')
                    << value;
          }
          io_.out << '\n';
        }
        break;
      }
    }
    return kExitOk;
  }

  int validate() {
    auto report = dataset_report();
    bool failed = report.has_errors();
    for (const auto& d : report.diagnostics) {
      const bool is_error = d.severity == Severity::Error ||
                            (opt_.strict && d.code == ErrorCode::IncompleteCoverage);
      failed = failed || is_error;
      if (is_error || format() != Format::Json) print_error(io_.err, d.to_json());
    }

    nlohmann::json profiles = nlohmann::json::array();
    for (const auto& path : opt_.profiles) {
      try {
        const auto p = profile(path);
        if (report.dataset) score_lookup(p, *report.dataset);
        profiles.push_back({{"path", path}, {"valid", true}});
      } catch (const Error& e) {
        failed = true;
        auto record = e.to_json();
        record["location"] = path + (e.location().empty() ? "" : ":" + e.location());
        print_error(io_.err, record);
        profiles.push_back({{"path", path}, {"valid", false}, {"error", e.to_json()}});
      }
    }

    if (format() == Format::Json) {
      nlohmann::json diagnostics = nlohmann::json::array();
      for (const auto& d : report.diagnostics) diagnostics.push_back(d.to_json());
      io_.out << nlohmann::json{{"dataset", dataset_path()},
                                {"valid", !failed},
                                {"rows", report.dataset ? report.dataset->size() : 0},
                                {"complete", report.complete()},
                                {"diagnostics", std::move(diagnostics)},
                                {"profiles", std::move(profiles)}}
                     .dump(2)
              << '\n';
    } else {
      io_.out << (failed ? "invalid" : "valid") << ": " << dataset_path();
      if (report.dataset) io_.out << " (" << report.dataset->size() << " rows)";
      io_.out << (report.complete() ? ", coverage complete" : ", coverage incomplete") << '\n';
    }
    return failed ? kExitFailure : kExitOk;
  }

  int match_command() {
    if (opt_.profiles.size() != 1) {
      throw UsageError("match takes exactly one --profile");
    }
    const auto mode = normalization_from_key(opt_.normalization);
    if (!mode) throw UsageError("--normalization must be global_linear or per_attribute_linear");

    const auto data = dataset();
    const auto result = match(profile(opt_.profiles.front()), data);
    const auto response = match_response(result);

    StagedFiles files;
    if (!opt_.output.empty()) files.stage(opt_.output, response.dump(2) + "\n");
    if (!opt_.heatmap.empty()) {
      HeatMapSpec spec{result.matrix, *mode, true,
                       "Architecture contributions: " +
                           result.profile_echo.label.value_or(opt_.profiles.front())};
      files.stage(opt_.heatmap, render_svg(spec));
    }
    files.commit();

    switch (format()) {
      case Format::Json: io_.out << response.dump(2) << '\n'; break;
      case Format::Csv: io_.out << totals_csv(result); break;
      case Format::Table:
        io_.out << totals_table(result);
        if (result.ranking.front().size() > 1) io_.out << "top rank is tied\n";
        break;
    }
    return kExitOk;
  }

  int compare_command() {
    if (opt_.profiles.empty()) throw UsageError("compare needs at least one --profile");
    const auto data = dataset();

    // Unreadable or invalid profile files are reported positionally like match errors.
    std::vector<std::optional<RequirementProfile>> parsed;
    std::vector<CompareOutcome> outcomes;
    for (const auto& path : opt_.profiles) {
      try {
        const auto p = profile(path);
        auto single = compare(std::span(&p, 1), data);
        outcomes.push_back(std::move(single.front()));
      } catch (const Error& e) {
        outcomes.emplace_back(e);
      }
    }

    bool failed = false;
    nlohmann::json items = nlohmann::json::array();
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
      if (const auto* r = std::get_if<MatchResult>(&outcomes[i])) {
        items.push_back(match_response(*r));
      } else {
        failed = true;
        const auto& e = std::get<Error>(outcomes[i]);
        auto record = e.to_json();
        items.push_back(record);
        record["location"] = opt_.profiles[i] + (e.location().empty() ? "" : ":" + e.location());
        print_error(io_.err, record);
      }
    }

    if (format() == Format::Json) {
      io_.out << items.dump(2) << '\n';
    } else {
      const bool csv = format() == Format::Csv;
      io_.out << "architecture";
      for (std::size_t i = 0; i < outcomes.size(); ++i) {
        io_.out << (csv ? "," : "\t") << "profile_" << (i + 1);
      }
      io_.out << '\n';
      for (const auto id : kArchitectures) {
        io_.out << to_key(id);
        for (const auto& outcome : outcomes) {
          io_.out << (csv ? "," : "\t");
          if (const auto* r = std::get_if<MatchResult>(&outcome)) {
            io_.out << (csv ? format_number(r->total(id)) : format_total(r->total(id)));
          } else {
            io_.out << to_string(std::get<Error>(outcome).code());
          }
        }
        io_.out << '\n';
      }
    }
    return failed ? kExitFailure : kExitOk;
  }

  int export_defaults() {
    const fs::path dir(opt_.export_dir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create '" + dir.string() + "'", dir.string());
    StagedFiles files;
    files.stage((dir / "schema.json").string(), embedded::schema_json());
    files.stage((dir / "catalog.json").string(), embedded::catalog_json());
    files.stage((dir / "default_dataset.csv").string(), embedded::default_dataset_csv());
    files.stage((dir / "example_profile.json").string(), embedded::example_profile_json());
    files.commit();
    io_.out << "wrote schema.json, catalog.json, default_dataset.csv, example_profile.json to "
            << dir.string() << '\n';
    return kExitOk;
  }

  int serve() {
    ServiceConfig config;
    const auto& tax = taxonomy();
    config.datasets.emplace(kDefault, dataset());
    config.datasets.emplace("bundled-default",
                            parse_dataset(embedded::default_dataset_csv(), tax, "bundled-default"));
    if (!opt_.ui_dir.empty()) config.static_dir = opt_.ui_dir;
    Service service(tax, catalog(), std::move(config));
    const int port = service.bind(opt_.bind, opt_.port);
    if (port < 0) {
      throw Error(ErrorCode::IoError,
                  "cannot bind " + opt_.bind + ":" + std::to_string(opt_.port));
    }
    io_.out << "listening on http://" << opt_.bind << ':' << port << std::endl;
    return service.listen_after_bind() ? kExitOk : kExitFailure;
  }

  struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

 private:
  static std::string normalize_set(RequirementSet set) {
    std::string s(to_string(set));
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  static std::string join(const std::vector<std::string>& items, char sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i > 0) out.push_back(sep);
      out += items[i];
    }
    return out;
  }

  const Options& opt_;
  Streams io_;
  std::optional<Taxonomy> custom_taxonomy_;
  std::optional<Catalog> custom_catalog_;
};

void usage_error(std::ostream& err, const std::string& message) {
  err << nlohmann::json{{"code", "Usage"}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, Streams streams) {
  Options opt;
  CLI::App app{"Match cyber range reference architectures to requirement profiles", "rangematch"};
  app.require_subcommand(1);

  const auto add_format = [&opt](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format (default: table on a terminal, json otherwise)")
        ->check(CLI::IsMember({"json", "table", "csv"}));
  };
  const auto add_schema = [&opt](CLI::App* cmd) {
    cmd->add_option("--schema", opt.schema, "Schema file, or 'default' for the bundled one");
  };
  const auto add_dataset = [&opt](CLI::App* cmd) {
    cmd->add_option("--dataset", opt.dataset,
                    "Matching dataset CSV, or 'default'. Falls back to $RANGEMATCH_DATASET");
  };

  auto* list_attributes = app.add_subcommand("list-attributes", "Print the requirement attributes");
  add_schema(list_attributes);
  add_format(list_attributes);

  auto* list_architectures = app.add_subcommand("list-architectures", "Print the reference architectures");
  list_architectures->add_option("--catalog", opt.catalog, "Catalog file, or 'default'");
  add_format(list_architectures);

  auto* validate = app.add_subcommand("validate", "Validate a matching dataset (and optionally profiles)");
  add_dataset(validate);
  add_schema(validate);
  validate->add_option("--profile", opt.profiles, "Profile JSON to check against the dataset");
  validate->add_flag("--strict", opt.strict, "Treat incomplete coverage as an error");
  add_format(validate);

  auto* match_cmd = app.add_subcommand("match", "Score architectures for one requirement profile");
  add_dataset(match_cmd);
  add_schema(match_cmd);
  match_cmd->add_option("--profile", opt.profiles, "Profile JSON")->required();
  match_cmd->add_option("--heatmap", opt.heatmap, "Write the contribution heat map as SVG");
  match_cmd->add_option("--output", opt.output, "Write the full result as JSON");
  match_cmd->add_option("--normalization", opt.normalization, "Heat map scale")
      ->check(CLI::IsMember({"global_linear", "per_attribute_linear"}));
  add_format(match_cmd);

  auto* compare_cmd = app.add_subcommand("compare", "Score several profiles side by side");
  add_dataset(compare_cmd);
  add_schema(compare_cmd);
  compare_cmd->add_option("--profile", opt.profiles, "Profile JSON (repeatable)")->required();
  add_format(compare_cmd);

  auto* export_cmd = app.add_subcommand("export-defaults", "Write the bundled data files to a directory");
  export_cmd->add_option("directory", opt.export_dir, "Destination directory")->required();

  auto* serve_cmd = app.add_subcommand("serve", "Start the HTTP API");
  add_dataset(serve_cmd);
  add_schema(serve_cmd);
  serve_cmd->add_option("--catalog", opt.catalog, "Catalog file, or 'default'");
  serve_cmd->add_option("--port", opt.port, "TCP port");
  serve_cmd->add_option("--bind", opt.bind, "Listen address");
  serve_cmd->add_option("--ui-dir", opt.ui_dir, "Directory with the built UI bundle");

  std::vector<std::string> reversed(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    streams.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    streams.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    usage_error(streams.err, e.what());
    return kExitUsage;
  }

  Runner runner(opt, streams);
  try {
    if (*list_attributes) return runner.list_attributes();
    if (*list_architectures) return runner.list_architectures();
    if (*validate) return runner.validate();
    if (*match_cmd) return runner.match_command();
    if (*compare_cmd) return runner.compare_command();
    if (*export_cmd) return runner.export_defaults();
    if (*serve_cmd) return runner.serve();
  } catch (const Runner::UsageError& e) {
    usage_error(streams.err, e.what());
    return kExitUsage;
  } catch (const Error& e) {
    print_error(streams.err, e);
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace rangematch::cli
