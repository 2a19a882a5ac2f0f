#include "ais/analogy/pairs.hpp"

#include <algorithm>

#include "ais/common/error.hpp"

namespace ais::analogy {

std::vector<ExemplarPair> build_pairs(const std::vector<std::string>& ids, PairingMode mode,
                                      std::optional<std::size_t> cap) {
  if (ids.size() < 2) {
    throw InvalidInput("pairing needs at least 2 exemplars, got " + std::to_string(ids.size()));
  }
  std::vector<ExemplarPair> pairs;
  if (mode == PairingMode::disjoint) {
    for (std::size_t i = 0; i + 1 < ids.size(); i += 2) pairs.push_back({ids[i], ids[i + 1]});
  } else {
    std::vector<std::string> sorted = ids;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      for (std::size_t j = i + 1; j < sorted.size(); ++j) pairs.push_back({sorted[i], sorted[j]});
    }
  }
  if (cap && pairs.size() > *cap) pairs.resize(*cap);
  return pairs;
}

std::vector<ExemplarPair> build_pairs(const StyleManifest& manifest, PairingMode mode,
                                      std::optional<std::size_t> cap) {
  std::vector<std::string> ids;
  ids.reserve(manifest.exemplars.size());
  for (const auto& e : manifest.exemplars) ids.push_back(e.id);
  return build_pairs(ids, mode, cap);
}

}  // namespace ais::analogy
