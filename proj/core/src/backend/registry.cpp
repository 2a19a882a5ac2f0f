#include "ais/backend/registry.hpp"

#include <nlohmann/json.hpp>

#include "ais/common/error.hpp"
#include "ais/common/files.hpp"

namespace ais::backend {

using nlohmann::json;

AdapterRegistry::AdapterRegistry(std::filesystem::path path) : path_(std::move(path)) {
  std::error_code ec;
  if (!std::filesystem::exists(*path_, ec)) return;
  try {
    const json doc = json::parse(read_text(*path_));
    for (const auto& [id, e] : doc.items()) {
      RegistryEntry entry;
      entry.ref.id = id;
      entry.ref.kind = parse_adapter_kind(e.at("kind").get<std::string>());
      entry.ref.config.rank = e.at("config").at("rank").get<int>();
      entry.ref.config.steps = e.at("config").at("steps").get<int>();
      entry.ref.status = parse_adapter_status(e.at("status").get<std::string>());
      entry.ref.created_at = e.value("created_at", "");
      entry.transform = e.value("transform", "");
      entries_.emplace(id, std::move(entry));
    }
  } catch (const json::exception& e) {
    throw ManifestError("adapter registry '" + path_->string() + "' is malformed: " + e.what());
  }
}

std::optional<RegistryEntry> AdapterRegistry::find(std::string_view id) const {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(id);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void AdapterRegistry::put(const RegistryEntry& entry) {
  std::lock_guard lock(mutex_);
  const auto it = entries_.find(entry.ref.id);
  if (it != entries_.end() && it->second.ref.status != AdapterStatus::pending) {
    const auto& old = it->second;
    if (old.ref.kind == entry.ref.kind && old.ref.config == entry.ref.config &&
        old.ref.status == entry.ref.status && old.transform == entry.transform) {
      return;
    }
    throw PermanentError("adapter '" + entry.ref.id + "' is " +
                         std::string(to_string(old.ref.status)) + " and cannot change");
  }
  entries_[entry.ref.id] = entry;
  save_locked();
}

std::size_t AdapterRegistry::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

void AdapterRegistry::save_locked() const {
  if (!path_) return;
  json doc = json::object();
  for (const auto& [id, e] : entries_) {
    json j = {{"kind", to_string(e.ref.kind)},
              {"config", {{"rank", e.ref.config.rank}, {"steps", e.ref.config.steps}}},
              {"status", to_string(e.ref.status)},
              {"created_at", e.ref.created_at}};
    if (!e.transform.empty()) j["transform"] = e.transform;
    doc[id] = j;
  }
  write_atomic(*path_, doc.dump(2) + "\n");
}

}  // namespace ais::backend
