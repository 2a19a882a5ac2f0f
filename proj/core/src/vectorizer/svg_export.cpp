#include <cstdio>
#include <sstream>

#include "ais/vectorizer/layers.hpp"

namespace ais::vectorizer {

namespace {

void append_ring(std::ostringstream& d, const VectorPath& ring) {
  for (std::size_t i = 0; i < ring.points.size(); ++i) {
    d << (i == 0 ? 'M' : 'L') << ring.points[i].x << ' ' << ring.points[i].y << ' ';
  }
  d << "Z ";
}

std::string hex(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

}  // namespace

std::string layers_to_svg(std::span<const VectorLayer> layers, int width, int height) {
  std::vector<const VectorLayer*> ordered;
  for (const auto& l : layers) ordered.push_back(&l);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const VectorLayer* a, const VectorLayer* b) { return a->z < b->z; });

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
  for (const auto* l : ordered) {
    std::ostringstream d;
    append_ring(d, l->outer);
    for (const auto& h : l->holes) append_ring(d, h);
    std::string path = d.str();
    if (!path.empty()) path.pop_back();
    out << "  <path data-z=\"" << l->z << "\" fill=\"" << hex(l->fill)
        << "\" fill-rule=\"evenodd\" d=\"" << path << "\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace ais::vectorizer
