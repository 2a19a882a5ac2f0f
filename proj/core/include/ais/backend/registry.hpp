#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "ais/backend/protocol.hpp"

namespace ais::backend {

struct RegistryEntry {
  AdapterRef ref;
  std::string transform;  // mock backends only
};

/// Append-only id -> adapter record map, optionally persisted as JSON
/// ({id: {kind, config: {rank, steps}, status, created_at, transform?}}).
/// All members are safe to call concurrently; writes are exclusive.
class AdapterRegistry {
 public:
  AdapterRegistry() = default;
  /// Loads `path` if it exists; every change is written back atomically.
  explicit AdapterRegistry(std::filesystem::path path);

  std::optional<RegistryEntry> find(std::string_view id) const;

  /// Inserts `entry`, or updates a pending one. Re-inserting an identical
  /// ready entry is a no-op; changing a ready entry throws PermanentError.
  void put(const RegistryEntry& entry);

  std::size_t size() const;

 private:
  void save_locked() const;

  std::optional<std::filesystem::path> path_;
  mutable std::mutex mutex_;
  std::map<std::string, RegistryEntry, std::less<>> entries_;
};

}  // namespace ais::backend
