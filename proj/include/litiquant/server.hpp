#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>

namespace litiquant {

struct ServiceConfig {
  std::string host = "0.0.0.0";
  int port = 8080;  // 0 picks a free port
  std::optional<std::filesystem::path> static_dir;
  std::filesystem::path store_dir = "scenario-store";
};

// HTTP front end over litiquant::api. bind() and run() are split so callers
// (and tests) can learn the port before blocking.
class HttpService {
 public:
  explicit HttpService(ServiceConfig config);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  // Opens the store and binds; throws StoreError or std::runtime_error.
  // Returns the bound port.
  int bind();
  // Blocks until stop() is called.
  void run();
  void stop();
  void wait_until_ready() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace litiquant
