#include "litiquant/server.hpp"

#include <iostream>
#include <stdexcept>

#include "httplib.h"
#include "litiquant/api.hpp"
#include "litiquant/scenario_store.hpp"

namespace litiquant {

struct HttpService::Impl {
  ServiceConfig config;
  std::unique_ptr<ScenarioStore> store;
  httplib::Server server;
  int port = -1;
};

namespace {

void send(httplib::Response& res, const api::Response& r) {
  res.status = r.status;
  if (!r.etag.empty()) res.set_header("ETag", r.etag);
  res.set_content(r.body, "application/json");
}

std::optional<std::string> if_match(const httplib::Request& req) {
  if (!req.has_header("If-Match")) return std::nullopt;
  return req.get_header_value("If-Match");
}

}  // namespace

HttpService::HttpService(ServiceConfig config) : impl_(std::make_unique<Impl>()) {
  impl_->config = std::move(config);
}

HttpService::~HttpService() { stop(); }

int HttpService::bind() {
  auto& im = *impl_;
  im.store = std::make_unique<ScenarioStore>(im.config.store_dir);
  ScenarioStore& store = *im.store;
  auto& svr = im.server;

  svr.Get("/api/v1/health", [](const httplib::Request&, httplib::Response& res) {
    send(res, api::health());
  });
  svr.Post("/api/v1/analyze", [](const httplib::Request& req, httplib::Response& res) {
    send(res, api::analyze(req.body));
  });
  svr.Post("/api/v1/sweep", [](const httplib::Request& req, httplib::Response& res) {
    send(res, api::sweep(req.body));
  });
  svr.Post("/api/v1/simulate", [](const httplib::Request& req, httplib::Response& res) {
    send(res, api::simulate(req.body));
  });
  svr.Post("/api/v1/optimal-cost", [](const httplib::Request& req, httplib::Response& res) {
    send(res, api::optimal_cost(req.body));
  });
  svr.Post("/api/v1/offers/classify", [](const httplib::Request& req, httplib::Response& res) {
    send(res, api::classify_offer(req.body));
  });
  svr.Get("/api/v1/scenarios", [&store](const httplib::Request&, httplib::Response& res) {
    send(res, api::list_scenarios(store));
  });
  svr.Get(R"(/api/v1/scenarios/([^/]+))",
          [&store](const httplib::Request& req, httplib::Response& res) {
            send(res, api::get_scenario(store, req.matches[1]));
          });
  svr.Put(R"(/api/v1/scenarios/([^/]+))",
          [&store](const httplib::Request& req, httplib::Response& res) {
            send(res, api::put_scenario(store, req.matches[1], req.body, if_match(req)));
          });
  svr.Delete(R"(/api/v1/scenarios/([^/]+))",
             [&store](const httplib::Request& req, httplib::Response& res) {
               send(res, api::delete_scenario(store, req.matches[1], if_match(req)));
             });

  if (im.config.static_dir) {
    if (!svr.set_mount_point("/", im.config.static_dir->string())) {
      throw std::runtime_error("static directory " + im.config.static_dir->string() +
                               " does not exist");
    }
  }

  // httplib's default adds SO_REUSEPORT, which lets a second process share a
  // busy port instead of failing.
  svr.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const char*>(&yes),
               sizeof(yes));
  });

  if (im.config.port == 0) {
    im.port = svr.bind_to_any_port(im.config.host);
  } else if (svr.bind_to_port(im.config.host, im.config.port)) {
    im.port = im.config.port;
  }
  if (im.port <= 0) {
    throw std::runtime_error("cannot bind " + im.config.host + ":" +
                             std::to_string(im.config.port));
  }
  return im.port;
}

void HttpService::run() {
  if (impl_->port <= 0) bind();
  if (!impl_->server.listen_after_bind()) throw std::runtime_error("server stopped with an error");
}

void HttpService::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

void HttpService::wait_until_ready() const { impl_->server.wait_until_ready(); }

}  // namespace litiquant
