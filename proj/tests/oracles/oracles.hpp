#pragma once

// Slow, literal reference implementations used only to pin down expected
// values. None of them shares code with the library under test.

#include <cstdint>
#include <random>
#include <vector>

#include "ais/imaging/binary_image.hpp"
#include "ais/vectorizer/palette.hpp"
#include "ais/vectorizer/path.hpp"
#include "ais/vectorizer/regions.hpp"

namespace oracle {

using ais::imaging::BinaryImage;

/// Zhang-Suen thinning straight from its definition: full-image passes,
/// P2..P9 read clockwise from north, both subiterations until neither
/// deletes anything. Outside pixels are 0.
BinaryImage zhang_suen(const BinaryImage& img);

/// Erosion by the closed disk x^2 + y^2 <= r^2, checking every offset.
BinaryImage erode_disk(const BinaryImage& img, int r);

/// Random image with exactly `count` foreground pixels.
BinaryImage random_sparse(int w, int h, int count, std::mt19937_64& rng);
/// Random image where each pixel is foreground with probability p.
BinaryImage random_dense(int w, int h, double p, std::mt19937_64& rng);

/// Region absorption re-run from scratch after every merge: components by
/// flood fill over a component-id map, borders by scanning every pixel pair.
std::vector<ais::vectorizer::Region> absorb_regions(const ais::vectorizer::PaletteImage& pimg,
                                                    int min_area);

/// Textbook recursive Ramer-Douglas-Peucker; the first farthest vertex
/// wins ties.
std::vector<ais::vectorizer::Point> rdp_open(const std::vector<ais::vectorizer::Point>& pts,
                                             double eps);

/// Closed-path RDP: split at the farthest vertex pair (all pairs, lowest
/// indices on ties), simplify both chains, keep at least three vertices.
ais::vectorizer::VectorPath rdp_closed(const ais::vectorizer::VectorPath& path, double eps);

/// Even-odd crossing test of the pixel centre against every ring.
BinaryImage fill_rings(const std::vector<ais::vectorizer::VectorPath>& rings, int w, int h);

}  // namespace oracle
