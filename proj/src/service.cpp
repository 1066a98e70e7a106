#include "rangematch/service.hpp"

#include <httplib.h>

#include <sstream>

#include "rangematch/error.hpp"
#include "rangematch/matcher.hpp"
#include "rangematch/profile.hpp"
#include "rangematch/report.hpp"

namespace rangematch {

namespace {

constexpr const char* kJson = "application/json";

Service::Response json_response(int status, const nlohmann::json& body) {
  return {status, body.dump()};
}

Service::Response api_error(int status, std::string_view code, const std::string& message) {
  return json_response(status, {{"code", code}, {"message", message}});
}

bool accepts_json(const std::string& accept) {
  if (accept.empty()) return true;
  std::stringstream ss(accept);
  std::string range;
  while (std::getline(ss, range, ',')) {
    const auto semi = range.find(';');
    if (semi != std::string::npos) range.resize(semi);
    const auto b = range.find_first_not_of(" \t");
    const auto e = range.find_last_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto media = range.substr(b, e - b + 1);
    if (media == "application/json" || media == "application/*" || media == "*/*") return true;
  }
  return false;
}

std::optional<nlohmann::json> parse_body(const std::string& body) {
  try {
    return nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    return std::nullopt;
  }
}

}  // namespace

struct Service::Impl {
  Impl(const Taxonomy& t, const Catalog& c, ServiceConfig cfg)
      : taxonomy(t), catalog(c), config(std::move(cfg)) {}

  const Taxonomy& taxonomy;
  const Catalog& catalog;
  ServiceConfig config;
  httplib::Server server;
  std::string attributes_body;
  std::string architectures_body;

  // Resolves the dataset named by `doc["dataset"]` (removing the field), or the default.
  const MatchingDataset& dataset_for(nlohmann::json& doc, const std::string& fallback) const {
    std::string id = fallback;
    if (doc.is_object()) {
      if (const auto it = doc.find("dataset"); it != doc.end()) {
        if (!it->is_string()) {
          throw Error(ErrorCode::InvalidProfile, "'dataset' must be a string id", "dataset");
        }
        id = it->get<std::string>();
        doc.erase(it);
      }
    }
    const auto found = config.datasets.find(id);
    if (found == config.datasets.end()) {
      nlohmann::json known = nlohmann::json::array();
      for (const auto& [name, _] : config.datasets) known.push_back(name);
      throw Error(ErrorCode::UnknownDataset, "no dataset registered as '" + id + "'", "dataset",
                  nlohmann::json{{"registered", std::move(known)}});
    }
    return found->second;
  }

  nlohmann::json match_one(nlohmann::json doc, const std::string& fallback_dataset) const {
    const auto& dataset = dataset_for(doc, fallback_dataset);
    const auto profile = RequirementProfile::from_json(doc, taxonomy);
    return match_response(match(profile, dataset));
  }
};

Service::Service(const Taxonomy& taxonomy, const Catalog& catalog, ServiceConfig config)
    : impl_(std::make_unique<Impl>(taxonomy, catalog, std::move(config))) {
  impl_->attributes_body = taxonomy.to_json().dump();
  impl_->architectures_body = catalog.to_json().dump();

  auto& server = impl_->server;
  const auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body, kJson);
  };
  server.Get("/api/v1/attributes", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, get_attributes(req.get_header_value("Accept")));
  });
  server.Get("/api/v1/architectures",
             [this, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, get_architectures(req.get_header_value("Accept")));
             });
  server.Post("/api/v1/match", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, post_match(req.body));
  });
  server.Post("/api/v1/compare", [this, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, post_compare(req.body));
  });
  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (req.path.rfind("/api/", 0) == 0 && res.status == 404) {
      res.set_content(R"({"code":"NotFound","message":"no such endpoint"})", kJson);
    }
  });
  if (impl_->config.static_dir && std::filesystem::is_directory(*impl_->config.static_dir)) {
    server.set_mount_point("/", impl_->config.static_dir->string());
  }
}

Service::~Service() { stop(); }

Service::Response Service::get_attributes(const std::string& accept) const {
  if (!accepts_json(accept)) return api_error(406, "NotAcceptable", "only application/json is served");
  return {200, impl_->attributes_body};
}

Service::Response Service::get_architectures(const std::string& accept) const {
  if (!accepts_json(accept)) return api_error(406, "NotAcceptable", "only application/json is served");
  return {200, impl_->architectures_body};
}

Service::Response Service::post_match(const std::string& body) const {
  auto doc = parse_body(body);
  if (!doc || !doc->is_object()) {
    return api_error(422, to_string(ErrorCode::MalformedJson), "request body must be a JSON object");
  }
  try {
    return json_response(200, impl_->match_one(std::move(*doc), "default"));
  } catch (const Error& e) {
    return json_response(400, e.to_json());
  }
}

Service::Response Service::post_compare(const std::string& body) const {
  auto doc = parse_body(body);
  if (!doc || !(doc->is_array() || doc->is_object())) {
    return api_error(422, to_string(ErrorCode::MalformedJson),
                     "request body must be a JSON array of profiles or {dataset, profiles}");
  }

  std::string fallback = "default";
  nlohmann::json profiles;
  if (doc->is_object()) {
    for (const auto& [key, _] : doc->items()) {
      if (key != "dataset" && key != "profiles") {
        return api_error(400, "InvalidRequest", "unknown field '" + key + "'");
      }
    }
    if (doc->contains("dataset")) {
      if (!(*doc)["dataset"].is_string()) return api_error(400, "InvalidRequest", "'dataset' must be a string");
      fallback = (*doc)["dataset"].get<std::string>();
    }
    profiles = doc->value("profiles", nlohmann::json());
    if (!profiles.is_array()) return api_error(422, to_string(ErrorCode::MalformedJson), "'profiles' must be an array");
  } else {
    profiles = std::move(*doc);
  }
  if (profiles.empty()) return api_error(400, "InvalidRequest", "at least one profile is required");

  nlohmann::json results = nlohmann::json::array();
  for (auto& item : profiles) {
    try {
      results.push_back(impl_->match_one(std::move(item), fallback));
    } catch (const Error& e) {
      results.push_back(e.to_json());
    }
  }
  return json_response(200, results);
}

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void Service::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace rangematch
