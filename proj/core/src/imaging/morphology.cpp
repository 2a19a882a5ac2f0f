#include "ais/imaging/morphology.hpp"

#include <array>
#include <cstdint>

#include "ais/common/error.hpp"

namespace ais::imaging {

StructuringDisk::StructuringDisk(int radius) : radius_(radius) {
  if (radius < 0) throw InvalidInput("disk radius must be >= 0");
  half_widths_.resize(static_cast<std::size_t>(2 * radius + 1));
  for (int dy = -radius; dy <= radius; ++dy) {
    int h = 0;
    while ((h + 1) * (h + 1) + dy * dy <= radius * radius) ++h;
    half_widths_[static_cast<std::size_t>(dy + radius)] = h;
  }
}

std::vector<std::pair<int, int>> StructuringDisk::offsets() const {
  std::vector<std::pair<int, int>> out;
  for (int dy = -radius_; dy <= radius_; ++dy) {
    const int h = half_width(dy);
    for (int dx = -h; dx <= h; ++dx) out.emplace_back(dx, dy);
  }
  return out;
}

namespace {

// Neighbourhood code: bit k set when neighbour P(k+2) is foreground, with
// P2 = north and the rest following clockwise (P3 = north-east ... P9 = north-west).
constexpr std::array<std::pair<int, int>, 8> kRing{{
    {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}, {-1, -1}}};

struct ThinningTables {
  std::array<std::uint8_t, 256> first{};
  std::array<std::uint8_t, 256> second{};
};

constexpr ThinningTables make_tables() {
  ThinningTables t{};
  for (int code = 0; code < 256; ++code) {
    auto p = [code](int k) { return (code >> (k - 2)) & 1; };  // k in 2..9
    int b = 0;
    int a = 0;
    for (int k = 2; k <= 9; ++k) {
      b += p(k);
      const int next = k == 9 ? 2 : k + 1;
      if (p(k) == 0 && p(next) == 1) ++a;
    }
    const bool common = b >= 2 && b <= 6 && a == 1;
    t.first[code] = common && p(2) * p(4) * p(6) == 0 && p(4) * p(6) * p(8) == 0;
    t.second[code] = common && p(2) * p(4) * p(8) == 0 && p(2) * p(6) * p(8) == 0;
  }
  return t;
}

constexpr ThinningTables kTables = make_tables();

}  // namespace

BinaryImage skeletonize(const BinaryImage& img) {
  const int w = img.width();
  const int h = img.height();
  BinaryImage out = img;
  if (out.none()) return out;

  auto code_at = [&](int x, int y) {
    int code = 0;
    for (int k = 0; k < 8; ++k) {
      if (out.get_or_background(x + kRing[k].first, y + kRing[k].second)) code |= 1 << k;
    }
    return code;
  };
  auto on_border = [&](int x, int y) {
    return !out.get_or_background(x, y - 1) || !out.get_or_background(x + 1, y) ||
           !out.get_or_background(x, y + 1) || !out.get_or_background(x - 1, y);
  };

  // Only foreground pixels with a background 4-neighbour can ever be deleted,
  // so each pass inspects that frontier instead of the whole canvas.
  std::vector<std::uint8_t> queued(out.pixel_count(), 0);
  std::vector<int> frontier;
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      if (out.get(x, y) && on_border(x, y)) {
        queued[static_cast<std::size_t>(y) * w + x] = 1;
        frontier.push_back(y * w + x);
      }
    }
  }

  std::vector<int> doomed;
  std::vector<int> next;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int pass = 0; pass < 2; ++pass) {
      const auto& table = pass == 0 ? kTables.first : kTables.second;
      doomed.clear();
      for (int p : frontier) {
        if (table[static_cast<std::size_t>(code_at(p % w, p / w))]) doomed.push_back(p);
      }
      if (doomed.empty()) continue;
      changed = true;
      for (int p : doomed) {
        out.set_index(static_cast<std::size_t>(p), false);
        queued[static_cast<std::size_t>(p)] = 0;
      }
      next.clear();
      for (int p : frontier) {
        if (queued[static_cast<std::size_t>(p)]) next.push_back(p);
      }
      for (int p : doomed) {
        const int px = p % w;
        const int py = p / w;
        for (const auto& [dx, dy] : kRing) {
          const int nx = px + dx;
          const int ny = py + dy;
          if (!out.get_or_background(nx, ny)) continue;
          const auto q = static_cast<std::size_t>(ny) * w + nx;
          if (queued[q]) continue;
          queued[q] = 1;
          next.push_back(static_cast<int>(q));
        }
      }
      frontier.swap(next);
    }
  }
  return out;
}

BinaryImage erode(const BinaryImage& img, const StructuringDisk& disk) {
  const int r = disk.radius();
  if (r == 0) return img;
  const int w = img.width();
  const int h = img.height();
  BinaryImage out(w, h);
  if (w == 0 || h == 0) return out;

  // Per row: length of the foreground run reaching x from the left and from
  // the right. A pixel survives iff every disk row fits inside its run.
  std::vector<int> left(img.pixel_count());
  std::vector<int> right(img.pixel_count());
  for (int y = 0; y < h; ++y) {
    const std::size_t row = static_cast<std::size_t>(y) * w;
    int run = 0;
    for (int x = 0; x < w; ++x) {
      run = img.at_index(row + x) ? run + 1 : 0;
      left[row + x] = run;
    }
    run = 0;
    for (int x = w - 1; x >= 0; --x) {
      run = img.at_index(row + x) ? run + 1 : 0;
      right[row + x] = run;
    }
  }

  for (int y = r; y < h - r; ++y) {
    for (int x = r; x < w - r; ++x) {
      bool keep = true;
      for (int dy = -r; dy <= r && keep; ++dy) {
        const std::size_t i = static_cast<std::size_t>(y + dy) * w + x;
        const int hw = disk.half_width(dy);
        keep = left[i] > hw && right[i] > hw;
      }
      if (keep) out.set(x, y);
    }
  }
  return out;
}

BinaryImage union_of(const BinaryImage& a, const BinaryImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw InvalidInput("union_of: dimension mismatch (" + std::to_string(a.width()) + "x" +
                       std::to_string(a.height()) + " vs " + std::to_string(b.width()) + "x" +
                       std::to_string(b.height()) + ")");
  }
  BinaryImage out = a;
  for (std::size_t i = 0; i < b.pixel_count(); ++i) {
    if (b.at_index(i)) out.set_index(i);
  }
  return out;
}

}  // namespace ais::imaging
