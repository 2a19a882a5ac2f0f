#include "ais/vectorizer/regions.hpp"

#include <map>
#include <queue>
#include <tuple>

#include "ais/common/error.hpp"

namespace ais::vectorizer {

imaging::BinaryImage Region::mask() const {
  imaging::BinaryImage m(canvas_width, canvas_height);
  for (auto p : pixels) m.set_index(p);
  return m;
}

namespace {

/// Labels 4-connected equal-label components in scanline discovery order.
std::vector<int> label_components(const std::vector<std::uint16_t>& labels, int w, int h,
                                  int& count) {
  std::vector<int> comp(labels.size(), -1);
  std::vector<std::uint32_t> stack;
  count = 0;
  for (std::uint32_t start = 0; start < labels.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = count++;
    comp[start] = id;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      const int x = static_cast<int>(p % static_cast<std::uint32_t>(w));
      const int y = static_cast<int>(p / static_cast<std::uint32_t>(w));
      auto visit = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return;
        const auto q = static_cast<std::uint32_t>(ny) * static_cast<std::uint32_t>(w) +
                       static_cast<std::uint32_t>(nx);
        if (comp[q] >= 0 || labels[q] != labels[p]) return;
        comp[q] = id;
        stack.push_back(q);
      };
      visit(x + 1, y);
      visit(x - 1, y);
      visit(x, y + 1);
      visit(x, y - 1);
    }
  }
  return comp;
}

struct Component {
  std::size_t area = 0;
  std::uint32_t first = 0;
  std::uint16_t label = 0;
  bool alive = true;
  std::map<int, std::size_t> border;  // neighbour id -> shared edge count
};

}  // namespace

std::vector<Region> extract_regions(const PaletteImage& pimg, int min_area) {
  if (min_area < 1) throw InvalidInput("extract_regions: min_area must be >= 1");
  const int w = pimg.width;
  const int h = pimg.height;
  if (w <= 0 || h <= 0) throw InvalidInput("extract_regions: empty image");

  std::vector<std::uint16_t> labels = pimg.labels;
  int count = 0;
  std::vector<int> comp = label_components(labels, w, h, count);

  std::vector<Component> comps(static_cast<std::size_t>(count));
  for (std::uint32_t p = 0; p < comp.size(); ++p) {
    auto& c = comps[static_cast<std::size_t>(comp[p])];
    if (c.area == 0) {
      c.first = p;
      c.label = labels[p];
    }
    ++c.area;
  }
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const std::size_t p = static_cast<std::size_t>(y) * w + x;
      const int a = comp[p];
      if (x + 1 < w && comp[p + 1] != a) {
        ++comps[static_cast<std::size_t>(a)].border[comp[p + 1]];
        ++comps[static_cast<std::size_t>(comp[p + 1])].border[a];
      }
      if (y + 1 < h && comp[p + static_cast<std::size_t>(w)] != a) {
        const int b = comp[p + static_cast<std::size_t>(w)];
        ++comps[static_cast<std::size_t>(a)].border[b];
        ++comps[static_cast<std::size_t>(b)].border[a];
      }
    }
  }

  // Union-find parent for the final pixel relabelling.
  std::vector<int> parent(comps.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&parent](int i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      parent[static_cast<std::size_t>(i)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
      i = parent[static_cast<std::size_t>(i)];
    }
    return i;
  };

  using Key = std::tuple<std::size_t, std::uint32_t, int>;  // area, first pixel, id
  std::priority_queue<Key, std::vector<Key>, std::greater<>> small;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].area < static_cast<std::size_t>(min_area)) {
      small.emplace(comps[i].area, comps[i].first, static_cast<int>(i));
    }
  }

  while (!small.empty()) {
    const auto [area, first, id] = small.top();
    small.pop();
    Component& victim = comps[static_cast<std::size_t>(id)];
    if (!victim.alive || victim.area != area || victim.first != first) continue;
    if (victim.border.empty()) continue;  // sole remaining component

    int target = -1;
    for (const auto& [n, len] : victim.border) {
      if (target < 0) {
        target = n;
        continue;
      }
      const Component& cand = comps[static_cast<std::size_t>(n)];
      const Component& best = comps[static_cast<std::size_t>(target)];
      const std::size_t best_len = victim.border.at(target);
      if (len > best_len ||
          (len == best_len &&
           (cand.label < best.label || (cand.label == best.label && cand.first < best.first)))) {
        target = n;
      }
    }

    Component& into = comps[static_cast<std::size_t>(target)];
    for (const auto& [n, len] : victim.border) {
      auto& other = comps[static_cast<std::size_t>(n)];
      other.border.erase(id);
      if (n == target) continue;
      into.border[n] += len;
      other.border[target] += len;
    }
    victim.border.clear();
    victim.alive = false;
    into.area += victim.area;
    into.first = std::min(into.first, victim.first);
    parent[static_cast<std::size_t>(id)] = target;
    if (into.area < static_cast<std::size_t>(min_area)) {
      small.emplace(into.area, into.first, target);
    }
  }

  for (std::size_t p = 0; p < labels.size(); ++p) {
    labels[p] = comps[static_cast<std::size_t>(root(comp[p]))].label;
  }

  int final_count = 0;
  const std::vector<int> final_comp = label_components(labels, w, h, final_count);
  std::vector<Region> regions(static_cast<std::size_t>(final_count));
  for (std::uint32_t p = 0; p < final_comp.size(); ++p) {
    Region& r = regions[static_cast<std::size_t>(final_comp[p])];
    if (r.pixels.empty()) {
      r.canvas_width = w;
      r.canvas_height = h;
      r.label = labels[p];
      r.fill = pimg.palette[labels[p]];
    }
    r.pixels.push_back(p);
  }
  return regions;
}

}  // namespace ais::vectorizer
