#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ais {

/// Lower-case hex SHA-256 of a byte buffer.
std::string sha256_hex(std::span<const std::uint8_t> bytes);
std::string sha256_hex(std::string_view text);

/// Incremental SHA-256 for hashing several buffers as one stream.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  Sha256& update(std::span<const std::uint8_t> bytes);
  Sha256& update(std::string_view text);
  std::string hex();

 private:
  struct State;
  State* state_;
};

std::string base64_encode(std::span<const std::uint8_t> bytes);
/// Throws InvalidInput on malformed input.
std::vector<std::uint8_t> base64_decode(std::string_view text);

}  // namespace ais
