#include "fhq/store.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>

#include "fhq/error.hpp"

namespace fhq {

namespace fs = std::filesystem;

Store::Store(fs::path dir) : dir_(std::move(dir)) {}

fs::path Store::record_path(const std::string& kind, const std::string& key) const {
  return dir_ / kind / (key + ".json");
}

std::optional<nlohmann::json> Store::load(const std::string& kind, const std::string& key) const {
  std::shared_lock lock(mutex_);
  std::ifstream in(record_path(kind, key));
  if (!in) return std::nullopt;
  auto record = nlohmann::json::parse(in, nullptr, false);
  if (record.is_discarded() || !record.is_object() || record.value("format_version", 0) != kFormatVersion ||
      record.value("kind", "") != kind || record.value("key", "") != key)
    return std::nullopt;
  return record.at("payload");
}

void Store::save(const std::string& kind, const std::string& key, const nlohmann::json& payload) {
  std::unique_lock lock(mutex_);
  const fs::path target = record_path(kind, key);
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create " + target.parent_path().string() + ": " + ec.message());
  nlohmann::json record = {{"format_version", kFormatVersion}, {"kind", kind}, {"key", key}, {"payload", payload}};
  fs::path temp = target;
  temp += ".tmp";
  {
    std::ofstream out(temp);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + temp.string());
    out << record.dump() << '\n';
  }
  fs::rename(temp, target, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot move record into place: " + ec.message());
}

std::vector<std::pair<std::string, std::string>> Store::list() const {
  std::shared_lock lock(mutex_);
  std::vector<std::pair<std::string, std::string>> out;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return out;
  for (const auto& kind_dir : fs::directory_iterator(dir_)) {
    if (!kind_dir.is_directory()) continue;
    for (const auto& file : fs::directory_iterator(kind_dir.path()))
      if (file.path().extension() == ".json")
        out.emplace_back(kind_dir.path().filename().string(), file.path().stem().string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Store::clear() {
  std::unique_lock lock(mutex_);
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::is_directory(dir_, ec)) return 0;
  for (const auto& kind_dir : fs::directory_iterator(dir_)) {
    if (!kind_dir.is_directory()) continue;
    for (const auto& file : fs::directory_iterator(kind_dir.path()))
      if (file.path().extension() == ".json" && fs::remove(file.path(), ec)) ++removed;
  }
  return removed;
}

namespace {
std::shared_mutex default_mutex;
std::shared_ptr<Store> default_instance;
}  // namespace

void set_default_store(std::shared_ptr<Store> store) {
  std::unique_lock lock(default_mutex);
  default_instance = std::move(store);
}

std::shared_ptr<Store> default_store() {
  std::shared_lock lock(default_mutex);
  return default_instance;
}

}  // namespace fhq
