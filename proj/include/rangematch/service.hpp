#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include "rangematch/catalog.hpp"
#include "rangematch/dataset.hpp"
#include "rangematch/taxonomy.hpp"

namespace rangematch {

struct ServiceConfig {
  /// Registered datasets by id. Requests without a "dataset" field use "default".
  std::map<std::string, MatchingDataset> datasets;
  /// Directory with the built UI bundle, served from "/" when present.
  std::optional<std::filesystem::path> static_dir;
};

/// HTTP API over the engine. All handlers are read-only over the shared
/// taxonomy, catalog and datasets.
class Service {
 public:
  struct Response {
    int status = 200;
    std::string body;
  };

  Service(const Taxonomy& taxonomy, const Catalog& catalog, ServiceConfig config);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  // Transport-independent handlers. `accept` is the raw Accept header ("" if absent).
  Response get_attributes(const std::string& accept) const;
  Response get_architectures(const std::string& accept) const;
  Response post_match(const std::string& body) const;
  Response post_compare(const std::string& body) const;

  /// Binds to `host`:`port` (0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks serving requests until stop() is called.
  bool listen_after_bind();
  void stop();
  /// Blocks until the server is accepting connections.
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace rangematch
