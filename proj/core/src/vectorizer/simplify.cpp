#include "ais/vectorizer/path.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

namespace {

double line_distance(const Point& p, const Point& a, const Point& b) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  if (len == 0.0) return std::hypot(p.x - a.x, p.y - a.y);
  return std::abs(dy * (p.x - a.x) - dx * (p.y - a.y)) / len;
}

long long dist2(const Point& a, const Point& b) {
  const long long dx = a.x - b.x;
  const long long dy = a.y - b.y;
  return dx * dx + dy * dy;
}

long long cross(const Point& o, const Point& a, const Point& b) {
  return static_cast<long long>(a.x - o.x) * (b.y - o.y) -
         static_cast<long long>(a.y - o.y) * (b.x - o.x);
}

/// Marks the vertices RDP keeps on the chain seq[0..n-1] (endpoints included).
void rdp(const std::vector<Point>& pts, const std::vector<std::size_t>& seq, double eps,
         std::vector<std::uint8_t>& keep) {
  if (seq.size() < 2) return;
  keep[seq.front()] = 1;
  keep[seq.back()] = 1;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, seq.size() - 1}};
  while (!stack.empty()) {
    const auto [lo, hi] = stack.back();
    stack.pop_back();
    if (hi <= lo + 1) continue;
    double best = -1.0;
    std::size_t at = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
      const double d = line_distance(pts[seq[i]], pts[seq[lo]], pts[seq[hi]]);
      if (d > best) {
        best = d;
        at = i;
      }
    }
    if (best > eps) {
      keep[seq[at]] = 1;
      stack.emplace_back(lo, at);
      stack.emplace_back(at, hi);
    }
  }
}

/// Indices (i < j) of the mutually farthest vertex pair, lowest indices on ties.
std::pair<std::size_t, std::size_t> farthest_pair(const std::vector<Point>& pts) {
  // Diameter endpoints are convex-hull vertices.
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (pts[a].x != pts[b].x) return pts[a].x < pts[b].x;
    if (pts[a].y != pts[b].y) return pts[a].y < pts[b].y;
    return a < b;
  });
  std::vector<std::size_t> unique;
  for (auto i : order) {
    if (unique.empty() || !(pts[unique.back()] == pts[i])) unique.push_back(i);
  }
  std::vector<std::size_t> hull;
  if (unique.size() <= 2) {
    hull = unique;
  } else {
    std::vector<std::size_t> h(2 * unique.size());
    std::size_t k = 0;
    for (auto i : unique) {
      while (k >= 2 && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
      h[k++] = i;
    }
    for (std::size_t t = unique.size() - 1, lower = k + 1; t-- > 0;) {
      const auto i = unique[t];
      while (k >= lower && cross(pts[h[k - 2]], pts[h[k - 1]], pts[i]) <= 0) --k;
      h[k++] = i;
    }
    h.resize(k - 1);
    hull = std::move(h);
  }

  long long best = -1;
  for (std::size_t a = 0; a < hull.size(); ++a) {
    for (std::size_t b = a + 1; b < hull.size(); ++b) {
      best = std::max(best, dist2(pts[hull[a]], pts[hull[b]]));
    }
  }
  // Resolve ties over the original indices: every vertex sharing a position
  // with a hull vertex is a candidate, the first occurrence wins.
  std::pair<std::size_t, std::size_t> pick{pts.size(), pts.size()};
  for (std::size_t a = 0; a < hull.size(); ++a) {
    for (std::size_t b = a + 1; b < hull.size(); ++b) {
      if (dist2(pts[hull[a]], pts[hull[b]]) != best) continue;
      std::size_t ia = pts.size(), ib = pts.size();
      for (std::size_t i = 0; i < pts.size(); ++i) {
        if (ia == pts.size() && pts[i] == pts[hull[a]]) ia = i;
        if (ib == pts.size() && pts[i] == pts[hull[b]]) ib = i;
      }
      const std::pair<std::size_t, std::size_t> cand = std::minmax(ia, ib);
      if (cand < pick) pick = cand;
    }
  }
  return pick;
}

}  // namespace

VectorPath simplify_path(const VectorPath& path, double eps) {
  if (eps < 0.0) throw InvalidInput("simplify_path: eps must be >= 0");
  const auto& pts = path.points;
  if (eps == 0.0 || pts.size() < 3) return path;

  std::vector<std::uint8_t> keep(pts.size(), 0);
  if (!path.closed) {
    std::vector<std::size_t> seq(pts.size());
    for (std::size_t i = 0; i < seq.size(); ++i) seq[i] = i;
    rdp(pts, seq, eps, keep);
  } else {
    const auto [i, j] = farthest_pair(pts);
    std::vector<std::size_t> forward;
    for (std::size_t t = i; t <= j; ++t) forward.push_back(t);
    std::vector<std::size_t> wrap;
    for (std::size_t t = j; t != i; t = (t + 1) % pts.size()) wrap.push_back(t);
    wrap.push_back(i);
    rdp(pts, forward, eps, keep);
    rdp(pts, wrap, eps, keep);

    if (std::count(keep.begin(), keep.end(), 1) < 3) {
      double best = -1.0;
      std::size_t at = 0;
      for (std::size_t t = 0; t < pts.size(); ++t) {
        if (keep[t]) continue;
        const double d = line_distance(pts[t], pts[i], pts[j]);
        if (d > best) {
          best = d;
          at = t;
        }
      }
      keep[at] = 1;
    }
  }

  VectorPath out;
  out.closed = path.closed;
  for (std::size_t t = 0; t < pts.size(); ++t) {
    if (!keep[t]) continue;
    if (!out.points.empty() && out.points.back() == pts[t]) continue;
    out.points.push_back(pts[t]);
  }
  if (out.closed && out.points.size() > 1 && out.points.front() == out.points.back()) {
    out.points.pop_back();
  }
  return out;
}

}  // namespace ais::vectorizer
