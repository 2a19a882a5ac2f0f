#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ais/analogy/manifest.hpp"

namespace ais::analogy {

struct ExemplarPair {
  std::string r1;
  std::string r2;
  friend bool operator==(const ExemplarPair&, const ExemplarPair&) = default;
};

/// disjoint: consecutive ids in the given order, floor(N/2) pairs, no id twice.
/// all_pairs: every unordered pair of the lexicographically sorted ids.
/// `cap` truncates after ordering. Throws InvalidInput when N < 2.
std::vector<ExemplarPair> build_pairs(const std::vector<std::string>& ids, PairingMode mode,
                                      std::optional<std::size_t> cap = std::nullopt);

std::vector<ExemplarPair> build_pairs(const StyleManifest& manifest, PairingMode mode,
                                      std::optional<std::size_t> cap = std::nullopt);

}  // namespace ais::analogy
