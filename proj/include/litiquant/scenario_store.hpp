#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "litiquant/errors.hpp"
#include "litiquant/scenario.hpp"

namespace litiquant {

class StoreError : public Error {
 public:
  using Error::Error;
};

// An If-Match precondition did not hold.
class StoreConflict : public Error {
 public:
  using Error::Error;
};

struct StoredScenario {
  DisputeScenario scenario;
  std::string etag;
};

// Directory of named scenario documents (<name>.json). Writes go through a
// temporary file and rename, so readers never see a partial document; writes
// to the same name are serialized within the process. Last write wins unless
// the caller passes the etag it expects to replace.
class ScenarioStore {
 public:
  // Creates the directory if needed; throws StoreError if it is not writable.
  explicit ScenarioStore(std::filesystem::path dir);

  std::optional<StoredScenario> get(const std::string& name) const;

  // Returns the new etag. `if_match` of "*" requires an existing document.
  std::string put(const std::string& name, const DisputeScenario& s,
                  const std::optional<std::string>& if_match = std::nullopt);

  // False when the name does not exist.
  bool remove(const std::string& name,
              const std::optional<std::string>& if_match = std::nullopt);

  std::vector<std::string> list() const;

  const std::filesystem::path& dir() const noexcept { return dir_; }

  // Throws ValidationError unless name matches [A-Za-z0-9_-]{1,64}.
  static void validate_name(const std::string& name);

 private:
  std::filesystem::path path_for(const std::string& name) const;
  std::mutex& lock_for(const std::string& name);
  std::optional<std::string> current_etag(const std::string& name) const;

  std::filesystem::path dir_;
  std::mutex locks_guard_;
  std::map<std::string, std::unique_ptr<std::mutex>> locks_;
};

// FNV-1a 64 of the document bytes, as 16 hex digits in quotes.
std::string etag_for(const std::string& document);

}  // namespace litiquant
