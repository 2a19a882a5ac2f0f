#include "ais/common/files.hpp"

#include <atomic>
#include <fstream>
#include <iterator>
#include <thread>

#include "ais/common/error.hpp"

namespace ais {

namespace fs = std::filesystem;

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

WriteResult write_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  std::error_code ec;
  if (fs::is_regular_file(path, ec) && fs::file_size(path, ec) == bytes.size()) {
    const auto existing = read_file(path);
    if (std::equal(existing.begin(), existing.end(), bytes.begin(), bytes.end())) {
      return WriteResult::unchanged;
    }
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());

  static std::atomic<unsigned> counter{0};
  const auto tid = std::hash<std::thread::id>{}(std::this_thread::get_id());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(tid % 100000) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InvalidInput("cannot write '" + tmp.string() + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw InvalidInput("short write to '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
  return WriteResult::written;
}

WriteResult write_atomic(const fs::path& path, std::string_view text) {
  return write_atomic(path, std::span<const std::uint8_t>(
                                reinterpret_cast<const std::uint8_t*>(text.data()),
                                text.size()));
}

}  // namespace ais
