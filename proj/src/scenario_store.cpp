#include "litiquant/scenario_store.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <sstream>
#include <system_error>
#include <thread>

#include "litiquant/scenario_io.hpp"

namespace litiquant {

namespace fs = std::filesystem;

namespace {

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  return std::string{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes next to the target and renames over it.
void atomic_write(const fs::path& target, const std::string& content) {
  static std::atomic<unsigned long long> counter{0};
  std::ostringstream tmp_name;
  tmp_name << '.' << target.filename().string() << ".tmp."
           << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.'
           << counter++;
  const fs::path tmp = target.parent_path() / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw StoreError("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw StoreError("short write to " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw StoreError("cannot replace " + target.string());
  }
}

}  // namespace

std::string etag_for(const std::string& document) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : document) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "\"%016llx\"", static_cast<unsigned long long>(h));
  return buf;
}

ScenarioStore::ScenarioStore(fs::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (!fs::is_directory(dir_)) {
    throw StoreError("store directory " + dir_.string() + " cannot be created");
  }
  const fs::path probe = dir_ / ".write-probe";
  {
    std::ofstream out(probe);
    if (!out) throw StoreError("store directory " + dir_.string() + " is not writable");
  }
  fs::remove(probe, ec);
}

void ScenarioStore::validate_name(const std::string& name) {
  if (name.empty() || name.size() > 64) {
    throw ValidationError("name", "must be 1 to 64 characters");
  }
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) throw ValidationError("name", "may only contain [A-Za-z0-9_-]");
  }
}

fs::path ScenarioStore::path_for(const std::string& name) const {
  validate_name(name);
  return dir_ / (name + ".json");
}

std::mutex& ScenarioStore::lock_for(const std::string& name) {
  std::lock_guard guard(locks_guard_);
  auto& slot = locks_[name];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

std::optional<std::string> ScenarioStore::current_etag(const std::string& name) const {
  const auto text = read_file(path_for(name));
  if (!text) return std::nullopt;
  return etag_for(*text);
}

std::optional<StoredScenario> ScenarioStore::get(const std::string& name) const {
  const auto text = read_file(path_for(name));
  if (!text) return std::nullopt;
  return StoredScenario{load_scenario(std::string_view(*text)), etag_for(*text)};
}

std::string ScenarioStore::put(const std::string& name, const DisputeScenario& s,
                               const std::optional<std::string>& if_match) {
  const fs::path target = path_for(name);
  validate(s);
  const std::string document = serialize_scenario(s);
  std::lock_guard guard(lock_for(name));
  if (if_match) {
    const auto current = current_etag(name);
    if (!current) throw StoreConflict("scenario '" + name + "' does not exist");
    if (*if_match != "*" && *if_match != *current) {
      throw StoreConflict("scenario '" + name + "' has changed (etag " + *current + ")");
    }
  }
  atomic_write(target, document);
  return etag_for(document);
}

bool ScenarioStore::remove(const std::string& name,
                           const std::optional<std::string>& if_match) {
  const fs::path target = path_for(name);
  std::lock_guard guard(lock_for(name));
  const auto current = current_etag(name);
  if (!current) return false;
  if (if_match && *if_match != "*" && *if_match != *current) {
    throw StoreConflict("scenario '" + name + "' has changed (etag " + *current + ")");
  }
  std::error_code ec;
  return fs::remove(target, ec);
}

std::vector<std::string> ScenarioStore::list() const {
  std::vector<std::string> names;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (!entry.is_regular_file() || entry.path().extension() != ".json") continue;
    const std::string stem = entry.path().stem().string();
    if (stem.empty() || stem.front() == '.') continue;
    names.push_back(stem);
  }
  std::sort(names.begin(), names.end());
  return names;
}

}  // namespace litiquant
