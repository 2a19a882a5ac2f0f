#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <tuple>

namespace oracle {

using ais::vectorizer::PaletteImage;
using ais::vectorizer::Point;
using ais::vectorizer::Region;
using ais::vectorizer::VectorPath;

namespace {

int px(const BinaryImage& img, int x, int y) {
  if (x < 0 || y < 0 || x >= img.width() || y >= img.height()) return 0;
  return img.get(x, y) ? 1 : 0;
}

}  // namespace

BinaryImage zhang_suen(const BinaryImage& input) {
  BinaryImage img = input;
  for (;;) {
    bool changed = false;
    for (int step = 0; step < 2; ++step) {
      std::vector<std::pair<int, int>> doomed;
      for (int y = 0; y < img.height(); ++y) {
        for (int x = 0; x < img.width(); ++x) {
          if (!img.get(x, y)) continue;
          const int p2 = px(img, x, y - 1);
          const int p3 = px(img, x + 1, y - 1);
          const int p4 = px(img, x + 1, y);
          const int p5 = px(img, x + 1, y + 1);
          const int p6 = px(img, x, y + 1);
          const int p7 = px(img, x - 1, y + 1);
          const int p8 = px(img, x - 1, y);
          const int p9 = px(img, x - 1, y - 1);
          const int b = p2 + p3 + p4 + p5 + p6 + p7 + p8 + p9;
          const int seq[9] = {p2, p3, p4, p5, p6, p7, p8, p9, p2};
          int a = 0;
          for (int i = 0; i < 8; ++i) a += (seq[i] == 0 && seq[i + 1] == 1) ? 1 : 0;
          if (b < 2 || b > 6 || a != 1) continue;
          if (step == 0) {
            if (p2 * p4 * p6 != 0 || p4 * p6 * p8 != 0) continue;
          } else {
            if (p2 * p4 * p8 != 0 || p2 * p6 * p8 != 0) continue;
          }
          doomed.emplace_back(x, y);
        }
      }
      for (const auto& [x, y] : doomed) img.set(x, y, false);
      changed = changed || !doomed.empty();
    }
    if (!changed) return img;
  }
}

BinaryImage erode_disk(const BinaryImage& img, int r) {
  BinaryImage out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      bool all = true;
      for (int dy = -r; dy <= r && all; ++dy) {
        for (int dx = -r; dx <= r && all; ++dx) {
          if (dx * dx + dy * dy > r * r) continue;
          if (!px(img, x + dx, y + dy)) all = false;
        }
      }
      out.set(x, y, all);
    }
  }
  return out;
}

BinaryImage random_sparse(int w, int h, int count, std::mt19937_64& rng) {
  BinaryImage img(w, h);
  std::vector<int> idx(static_cast<std::size_t>(w * h));
  for (int i = 0; i < w * h; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::shuffle(idx.begin(), idx.end(), rng);
  for (int i = 0; i < count && i < w * h; ++i) {
    img.set_index(static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]));
  }
  return img;
}

BinaryImage random_dense(int w, int h, double p, std::mt19937_64& rng) {
  BinaryImage img(w, h);
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < img.pixel_count(); ++i) img.set_index(i, coin(rng));
  return img;
}

std::vector<Region> absorb_regions(const PaletteImage& pimg, int min_area) {
  const int w = pimg.width;
  const int h = pimg.height;
  std::vector<int> label(pimg.labels.begin(), pimg.labels.end());

  // Component ids from flood fill over equal labels.
  std::vector<int> comp(label.size(), -1);
  int n = 0;
  for (int start = 0; start < w * h; ++start) {
    if (comp[static_cast<std::size_t>(start)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start)] = n;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      const int x = p % w, y = p / w;
      const int nx[4] = {x + 1, x - 1, x, x};
      const int ny[4] = {y, y, y + 1, y - 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < 0 || ny[k] < 0 || nx[k] >= w || ny[k] >= h) continue;
        const int q = ny[k] * w + nx[k];
        if (comp[static_cast<std::size_t>(q)] < 0 &&
            label[static_cast<std::size_t>(q)] == label[static_cast<std::size_t>(p)]) {
          comp[static_cast<std::size_t>(q)] = n;
          stack.push_back(q);
        }
      }
    }
    ++n;
  }

  for (;;) {
    std::map<int, int> size;
    std::map<int, int> first;
    for (int p = 0; p < w * h; ++p) {
      const int c = comp[static_cast<std::size_t>(p)];
      ++size[c];
      if (!first.count(c)) first[c] = p;
    }
    if (size.size() <= 1) break;
    int victim = -1;
    for (const auto& [c, s] : size) {
      if (s >= min_area) continue;
      if (victim < 0 || s < size[victim] || (s == size[victim] && first[c] < first[victim])) {
        victim = c;
      }
    }
    if (victim < 0) break;

    std::map<int, int> border;
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const int c = comp[static_cast<std::size_t>(y * w + x)];
        if (x + 1 < w) {
          const int d = comp[static_cast<std::size_t>(y * w + x + 1)];
          if (c == victim && d != victim) ++border[d];
          if (d == victim && c != victim) ++border[c];
        }
        if (y + 1 < h) {
          const int d = comp[static_cast<std::size_t>((y + 1) * w + x)];
          if (c == victim && d != victim) ++border[d];
          if (d == victim && c != victim) ++border[c];
        }
      }
    }
    int target = -1;
    auto lab = [&](int c) { return label[static_cast<std::size_t>(first[c])]; };
    for (const auto& [c, b] : border) {
      if (target < 0) {
        target = c;
        continue;
      }
      const auto key = std::make_tuple(-b, lab(c), first[c]);
      const auto best = std::make_tuple(-border[target], lab(target), first[target]);
      if (key < best) target = c;
    }
    const int new_label = lab(target);
    for (int p = 0; p < w * h; ++p) {
      if (comp[static_cast<std::size_t>(p)] == victim) {
        comp[static_cast<std::size_t>(p)] = target;
        label[static_cast<std::size_t>(p)] = new_label;
      }
    }
  }

  // Final regions: equal-label 4-components of the relabelled map.
  std::vector<int> seen(label.size(), 0);
  std::vector<Region> out;
  for (int start = 0; start < w * h; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Region r;
    r.canvas_width = w;
    r.canvas_height = h;
    r.label = static_cast<std::uint16_t>(label[static_cast<std::size_t>(start)]);
    r.fill = pimg.palette[r.label];
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    while (!stack.empty()) {
      const int p = stack.back();
      stack.pop_back();
      r.pixels.push_back(static_cast<std::uint32_t>(p));
      const int x = p % w, y = p / w;
      const int nx[4] = {x + 1, x - 1, x, x};
      const int ny[4] = {y, y, y + 1, y - 1};
      for (int k = 0; k < 4; ++k) {
        if (nx[k] < 0 || ny[k] < 0 || nx[k] >= w || ny[k] >= h) continue;
        const int q = ny[k] * w + nx[k];
        if (!seen[static_cast<std::size_t>(q)] &&
            label[static_cast<std::size_t>(q)] == label[static_cast<std::size_t>(p)]) {
          seen[static_cast<std::size_t>(q)] = 1;
          stack.push_back(q);
        }
      }
    }
    std::sort(r.pixels.begin(), r.pixels.end());
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

double perpendicular(const Point& p, const Point& a, const Point& b) {
  const double ax = a.x, ay = a.y, bx = b.x, by = b.y;
  const double len = std::sqrt((bx - ax) * (bx - ax) + (by - ay) * (by - ay));
  if (len == 0) return std::sqrt((p.x - ax) * (p.x - ax) + (p.y - ay) * (p.y - ay));
  return std::fabs((by - ay) * p.x - (bx - ax) * p.y + bx * ay - by * ax) / len;
}

void rdp_rec(const std::vector<Point>& pts, std::size_t lo, std::size_t hi, double eps,
             std::set<std::size_t>& keep) {
  if (hi <= lo + 1) return;
  double best = -1;
  std::size_t at = lo;
  for (std::size_t i = lo + 1; i < hi; ++i) {
    const double d = perpendicular(pts[i], pts[lo], pts[hi]);
    if (d > best) {
      best = d;
      at = i;
    }
  }
  if (best > eps) {
    keep.insert(at);
    rdp_rec(pts, lo, at, eps, keep);
    rdp_rec(pts, at, hi, eps, keep);
  }
}

}  // namespace

std::vector<Point> rdp_open(const std::vector<Point>& pts, double eps) {
  if (pts.size() < 3) return pts;
  std::set<std::size_t> keep{0, pts.size() - 1};
  rdp_rec(pts, 0, pts.size() - 1, eps, keep);
  std::vector<Point> out;
  for (auto i : keep) out.push_back(pts[i]);
  return out;
}

VectorPath rdp_closed(const VectorPath& path, double eps) {
  const auto& pts = path.points;
  const std::size_t n = pts.size();
  if (eps == 0 || n < 3) return path;
  std::size_t bi = 0, bj = 1;
  long long best = -1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const long long dx = pts[i].x - pts[j].x, dy = pts[i].y - pts[j].y;
      if (dx * dx + dy * dy > best) {
        best = dx * dx + dy * dy;
        bi = i;
        bj = j;
      }
    }
  }
  std::set<std::size_t> keep{bi, bj};
  // Chain bi..bj, then bj..n-1,0..bi, each simplified as an open polyline.
  std::vector<std::size_t> a, b;
  for (std::size_t t = bi; t <= bj; ++t) a.push_back(t);
  for (std::size_t t = bj; t != bi; t = (t + 1) % n) b.push_back(t);
  b.push_back(bi);
  for (const auto* chain : {&a, &b}) {
    std::vector<Point> sub;
    for (auto t : *chain) sub.push_back(pts[t]);
    std::set<std::size_t> k{0, sub.size() - 1};
    rdp_rec(sub, 0, sub.size() - 1, eps, k);
    for (auto t : k) keep.insert((*chain)[t]);
  }
  if (keep.size() < 3) {
    double far = -1;
    std::size_t at = 0;
    for (std::size_t t = 0; t < n; ++t) {
      if (keep.count(t)) continue;
      const double d = perpendicular(pts[t], pts[bi], pts[bj]);
      if (d > far) {
        far = d;
        at = t;
      }
    }
    keep.insert(at);
  }
  VectorPath out;
  out.closed = true;
  for (auto t : keep) {
    if (!out.points.empty() && out.points.back() == pts[t]) continue;
    out.points.push_back(pts[t]);
  }
  if (out.points.size() > 1 && out.points.front() == out.points.back()) out.points.pop_back();
  return out;
}

BinaryImage fill_rings(const std::vector<VectorPath>& rings, int w, int h) {
  BinaryImage out(w, h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const double cx = x + 0.5, cy = y + 0.5;
      int crossings = 0;
      for (const auto& ring : rings) {
        const auto& p = ring.points;
        for (std::size_t i = 0, j = p.size() - 1; i < p.size(); j = i++) {
          const double yi = p[i].y, yj = p[j].y, xi = p[i].x, xj = p[j].x;
          if ((yi > cy) != (yj > cy)) {
            const double xc = xi + (cy - yi) * (xj - xi) / (yj - yi);
            if (cx < xc) ++crossings;
          }
        }
      }
      out.set(x, y, crossings % 2 == 1);
    }
  }
  return out;
}

}  // namespace oracle
