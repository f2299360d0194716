#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include <json.hpp>

namespace fhq {

// Directory of JSON records, one file per (kind, key). Records written with a
// different format version are ignored on load.
class Store {
 public:
  static constexpr int kFormatVersion = 1;

  explicit Store(std::filesystem::path dir);

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<nlohmann::json> load(const std::string& kind, const std::string& key) const;
  void save(const std::string& kind, const std::string& key, const nlohmann::json& payload);
  // (kind, key) of every readable record, sorted.
  std::vector<std::pair<std::string, std::string>> list() const;
  // Removes every record; returns how many were removed.
  std::size_t clear();

 private:
  std::filesystem::path record_path(const std::string& kind, const std::string& key) const;

  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
};

// Process-wide store consulted by the Gamma and structure-constant caches;
// null disables persistence.
void set_default_store(std::shared_ptr<Store> store);
std::shared_ptr<Store> default_store();

}  // namespace fhq
