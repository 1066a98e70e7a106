#pragma once

// Runs the command line either in-process or as the installed executable.

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rangematch/cli.hpp"

namespace harness {

namespace fs = std::filesystem;

struct Outcome {
  int exit_code = -1;
  std::string out;
  std::string err;

  /// Parsed stderr records, one per line.
  std::vector<nlohmann::json> errors() const {
    std::vector<nlohmann::json> records;
    std::istringstream in(err);
    for (std::string line; std::getline(in, line);) {
      if (!line.empty()) records.push_back(nlohmann::json::parse(line));
    }
    return records;
  }

  std::string first_code() const {
    const auto records = errors();
    return records.empty() ? std::string() : records.front().value("code", "");
  }
};

inline Outcome run_in_process(std::vector<std::string> args, bool terminal = false) {
  args.insert(args.begin(), "rangematch");
  std::ostringstream out, err;
  Outcome o;
  o.exit_code = rangematch::cli::run(args, {out, err, terminal});
  o.out = out.str();
  o.err = err.str();
  return o;
}

inline std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string shell_quote(const std::string& s) {
  std::string q = "'";
  for (const char c : s) {
    if (c == '\'') q += "'\\''";
    else q.push_back(c);
  }
  return q + "'";
}

/// Fresh empty directory under the system temp dir.
inline fs::path scratch_dir(const std::string& tag) {
  static std::atomic<int> counter{0};
  const auto dir = fs::temp_directory_path() /
                   ("rangematch-" + tag + "-" + std::to_string(::getpid()) + "-" +
                    std::to_string(counter++));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

/// Runs the real executable through /bin/sh, capturing both streams.
inline Outcome run_binary(const std::string& binary, const std::vector<std::string>& args,
                          const std::string& env_prefix = "") {
  const auto dir = scratch_dir("proc");
  std::string cmd = env_prefix + shell_quote(binary);
  for (const auto& a : args) cmd += " " + shell_quote(a);
  cmd += " >" + shell_quote((dir / "out").string()) + " 2>" + shell_quote((dir / "err").string());
  const int status = std::system(cmd.c_str());
  Outcome o;
  o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  o.out = slurp(dir / "out");
  o.err = slurp(dir / "err");
  fs::remove_all(dir);
  return o;
}

/// One documented error and the invocation that provokes it from a fixture.
struct ErrorPath {
  const char* code;
  std::vector<std::string> args;  // fixture names are relative to the fixtures dir
};

inline std::vector<ErrorPath> error_paths(const std::string& fixtures) {
  const auto f = [&](const char* name) { return fixtures + "/" + name; };
  return {
      {"UnknownAttribute", {"validate", "--dataset", f("unknown_attribute.csv")}},
      {"UnknownValue", {"validate", "--dataset", f("unknown_value.csv")}},
      {"DuplicateRow", {"validate", "--dataset", f("duplicate_row.csv")}},
      {"WeightOutOfRange", {"validate", "--dataset", f("weight_out_of_range.csv")}},
      {"ScoreOutOfRange", {"validate", "--dataset", f("score_out_of_range.csv")}},
      {"MissingRow",
       {"match", "--dataset", f("partial.csv"), "--profile", f("profile_missing_row.json")}},
      {"SchemaMismatch", {"match", "--profile", f("profile_schema_mismatch.json")}},
      {"MalformedCsv", {"validate", "--dataset", f("malformed.csv")}},
  };
}

}  // namespace harness
