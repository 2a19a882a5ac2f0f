#pragma once

#include <filesystem>
#include <vector>

namespace ais::orchestrator {

/// Writes request/response JSON pairs for every endpoint, produced by the
/// in-process mock, for backend conformance suites. Returns written files.
std::vector<std::filesystem::path> write_protocol_fixtures(const std::filesystem::path& dir);

}  // namespace ais::orchestrator
