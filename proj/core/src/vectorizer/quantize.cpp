#include "ais/vectorizer/palette.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

namespace {

constexpr std::uint32_t pack(Rgb c) {
  return (static_cast<std::uint32_t>(c.r) << 16) | (static_cast<std::uint32_t>(c.g) << 8) | c.b;
}
constexpr Rgb unpack(std::uint32_t v) {
  return {static_cast<std::uint8_t>(v >> 16), static_cast<std::uint8_t>(v >> 8),
          static_cast<std::uint8_t>(v)};
}
constexpr int channel(std::uint32_t v, int c) { return static_cast<int>((v >> (16 - 8 * c)) & 0xFF); }

struct Bin {
  std::uint32_t color;
  std::uint64_t count;
};

struct Box {
  std::size_t begin;
  std::size_t end;  // half-open range into the bin array
};

struct BoxStats {
  std::uint64_t weight = 0;
  std::array<std::uint64_t, 3> sum{};
  double sse = 0.0;
  int widest = 0;
};

BoxStats stats(const std::vector<Bin>& bins, const Box& box) {
  BoxStats s;
  std::array<double, 3> sq{};
  std::array<int, 3> lo{255, 255, 255};
  std::array<int, 3> hi{0, 0, 0};
  for (std::size_t i = box.begin; i < box.end; ++i) {
    s.weight += bins[i].count;
    for (int c = 0; c < 3; ++c) {
      const int v = channel(bins[i].color, c);
      s.sum[c] += static_cast<std::uint64_t>(v) * bins[i].count;
      sq[c] += static_cast<double>(v) * v * static_cast<double>(bins[i].count);
      lo[c] = std::min(lo[c], v);
      hi[c] = std::max(hi[c], v);
    }
  }
  int best_range = -1;
  for (int c = 0; c < 3; ++c) {
    const double mean = static_cast<double>(s.sum[c]) / static_cast<double>(s.weight);
    s.sse += sq[c] - mean * mean * static_cast<double>(s.weight);
    if (hi[c] - lo[c] > best_range) {
      best_range = hi[c] - lo[c];
      s.widest = c;
    }
  }
  return s;
}

Rgb mean_color(const BoxStats& s) {
  Rgb c;
  const std::uint64_t w = s.weight;
  c.r = static_cast<std::uint8_t>((2 * s.sum[0] + w) / (2 * w));
  c.g = static_cast<std::uint8_t>((2 * s.sum[1] + w) / (2 * w));
  c.b = static_cast<std::uint8_t>((2 * s.sum[2] + w) / (2 * w));
  return c;
}

std::uint32_t dist2(Rgb a, Rgb b) {
  const int dr = a.r - b.r;
  const int dg = a.g - b.g;
  const int db = a.b - b.b;
  return static_cast<std::uint32_t>(dr * dr + dg * dg + db * db);
}

}  // namespace

imaging::RasterImage PaletteImage::to_raster() const {
  imaging::RasterImage out(width, height, imaging::PixelFormat::rgb8);
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) out.set_rgb(x, y, color_at(x, y));
  }
  return out;
}

PaletteImage quantize_colors(const imaging::RasterImage& img, int k) {
  if (k < 1) throw InvalidInput("quantize_colors: k must be >= 1");
  if (img.format() == imaging::PixelFormat::binary) {
    throw InvalidInput("quantize_colors: binary input is not supported");
  }
  if (img.empty()) throw InvalidInput("quantize_colors: empty image");

  const int w = img.width();
  const int h = img.height();
  std::vector<std::uint32_t> packed(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) packed[static_cast<std::size_t>(y) * w + x] = pack(img.rgb(x, y));
  }

  std::vector<std::uint32_t> sorted = packed;
  std::sort(sorted.begin(), sorted.end());
  std::vector<Bin> bins;
  for (std::uint32_t v : sorted) {
    if (bins.empty() || bins.back().color != v) bins.push_back({v, 0});
    ++bins.back().count;
  }

  std::vector<Box> boxes{{0, bins.size()}};
  while (static_cast<int>(boxes.size()) < k) {
    std::size_t pick = boxes.size();
    BoxStats pick_stats;
    for (std::size_t i = 0; i < boxes.size(); ++i) {
      if (boxes[i].end - boxes[i].begin < 2) continue;
      const BoxStats s = stats(bins, boxes[i]);
      if (pick == boxes.size() || s.sse > pick_stats.sse) {
        pick = i;
        pick_stats = s;
      }
    }
    if (pick == boxes.size()) break;  // every box holds a single colour

    Box& box = boxes[pick];
    const int c = pick_stats.widest;
    auto first = bins.begin() + static_cast<std::ptrdiff_t>(box.begin);
    auto last = bins.begin() + static_cast<std::ptrdiff_t>(box.end);
    std::sort(first, last, [c](const Bin& a, const Bin& b) {
      const int va = channel(a.color, c);
      const int vb = channel(b.color, c);
      return va != vb ? va < vb : a.color < b.color;
    });
    std::uint64_t acc = 0;
    std::size_t cut = box.begin;
    while (cut < box.end - 1) {
      acc += bins[cut].count;
      ++cut;
      if (2 * acc >= pick_stats.weight) break;
    }
    const Box upper{cut, box.end};
    box.end = cut;
    boxes.push_back(upper);
  }

  std::vector<Rgb> candidates;
  for (const Box& box : boxes) {
    const Rgb c = mean_color(stats(bins, box));
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) {
      candidates.push_back(c);
    }
  }

  // Nearest candidate per distinct colour, then per pixel.
  std::vector<std::uint16_t> bin_label(bins.size());
  std::sort(bins.begin(), bins.end(), [](const Bin& a, const Bin& b) { return a.color < b.color; });
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const Rgb col = unpack(bins[i].color);
    std::size_t best = 0;
    for (std::size_t j = 1; j < candidates.size(); ++j) {
      if (dist2(col, candidates[j]) < dist2(col, candidates[best])) best = j;
    }
    bin_label[i] = static_cast<std::uint16_t>(best);
  }

  std::vector<int> remap(candidates.size(), -1);
  PaletteImage out;
  out.width = w;
  out.height = h;
  out.labels.resize(packed.size());
  for (std::size_t p = 0; p < packed.size(); ++p) {
    const auto it = std::lower_bound(bins.begin(), bins.end(), packed[p],
                                     [](const Bin& b, std::uint32_t v) { return b.color < v; });
    const auto label = bin_label[static_cast<std::size_t>(it - bins.begin())];
    if (remap[label] < 0) {
      remap[label] = static_cast<int>(out.palette.size());
      out.palette.push_back(candidates[label]);
    }
    out.labels[p] = static_cast<std::uint16_t>(remap[label]);
  }
  return out;
}

}  // namespace ais::vectorizer
