#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ais {

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
std::string read_text(const std::filesystem::path& path);

/// Outcome of a content-addressed write.
enum class WriteResult { written, unchanged };

/// Writes via a sibling temp file and rename so readers never observe a
/// partial file. Skips the write when the file already holds `bytes`.
WriteResult write_atomic(const std::filesystem::path& path,
                         std::span<const std::uint8_t> bytes);
WriteResult write_atomic(const std::filesystem::path& path, std::string_view text);

}  // namespace ais
