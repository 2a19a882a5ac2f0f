#include "ais/orchestrator/scenes.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "ais/common/error.hpp"

namespace ais::orchestrator {

namespace {

using imaging::RasterImage;
using imaging::Rgb;

constexpr Rgb kRed{220, 40, 40};
constexpr Rgb kGreen{40, 160, 60};
constexpr Rgb kBlue{40, 70, 200};
constexpr Rgb kYellow{240, 200, 40};
constexpr Rgb kPurple{130, 50, 150};
constexpr Rgb kSky{200, 225, 245};

/// Paints every pixel whose centre, in 1024-space, satisfies `inside`.
class Painter {
 public:
  Painter(int size, Rgb background) : img_(RasterImage::filled(size, size, background)) {}

  void fill(Rgb color, const std::function<bool(double, double)>& inside) {
    const double s = 1024.0 / img_.width();
    for (int y = 0; y < img_.height(); ++y) {
      for (int x = 0; x < img_.width(); ++x) {
        if (inside((x + 0.5) * s, (y + 0.5) * s)) img_.set_rgb(x, y, color);
      }
    }
  }
  void rect(Rgb c, double x0, double y0, double x1, double y1) {
    fill(c, [=](double x, double y) { return x >= x0 && x < x1 && y >= y0 && y < y1; });
  }
  void disk(Rgb c, double cx, double cy, double r) {
    fill(c, [=](double x, double y) { return (x - cx) * (x - cx) + (y - cy) * (y - cy) <= r * r; });
  }
  void ring(Rgb c, double cx, double cy, double r_in, double r_out) {
    fill(c, [=](double x, double y) {
      const double d2 = (x - cx) * (x - cx) + (y - cy) * (y - cy);
      return d2 <= r_out * r_out && d2 >= r_in * r_in;
    });
  }
  void triangle(Rgb c, double ax, double ay, double bx, double by, double cx, double cy) {
    fill(c, [=](double x, double y) {
      const double d1 = (x - bx) * (ay - by) - (ax - bx) * (y - by);
      const double d2 = (x - cx) * (by - cy) - (bx - cx) * (y - cy);
      const double d3 = (x - ax) * (cy - ay) - (cx - ax) * (y - ay);
      const bool neg = d1 < 0 || d2 < 0 || d3 < 0;
      const bool pos = d1 > 0 || d2 > 0 || d3 > 0;
      return !(neg && pos);
    });
  }
  RasterImage take() { return std::move(img_); }

 private:
  RasterImage img_;
};

using Builder = void (*)(Painter&);

struct SceneDef {
  const char* name;
  Rgb background;
  bool thin;
  Builder build;
};

const SceneDef kScenes[] = {
    {"square", imaging::kWhite, false, [](Painter& p) { p.rect(imaging::kBlack, 312, 312, 712, 712); }},
    {"disk", imaging::kWhite, false, [](Painter& p) { p.disk(kRed, 512, 512, 300); }},
    {"two_squares", imaging::kWhite, false,
     [](Painter& p) {
       p.rect(kBlue, 100, 150, 450, 500);
       p.rect(kGreen, 560, 480, 900, 880);
     }},
    {"ring", imaging::kWhite, false, [](Painter& p) { p.ring(kPurple, 512, 512, 180, 380); }},
    {"thin_cross", imaging::kWhite, true,
     [](Painter& p) {
       p.rect(imaging::kBlack, 497, 150, 527, 874);
       p.rect(imaging::kBlack, 150, 497, 874, 527);
     }},
    // Open at the top: a closed thin ring encloses a white disk that becomes
    // its own (thick) layer.
    {"thin_arc", imaging::kWhite, true,
     [](Painter& p) {
       p.ring(kBlue, 512, 512, 300, 330);
       p.rect(imaging::kWhite, 462, 150, 562, 250);
     }},
    {"thin_strokes", imaging::kWhite, true,
     [](Painter& p) {
       p.rect(kRed, 120, 200, 900, 236);
       p.rect(kGreen, 120, 500, 900, 530);
       p.rect(kBlue, 300, 100, 330, 900);
     }},
    {"triangle", imaging::kWhite, false,
     [](Painter& p) { p.triangle(kGreen, 512, 120, 140, 860, 884, 860); }},
    {"stacked", imaging::kWhite, false,
     [](Painter& p) {
       p.rect(kYellow, 100, 100, 924, 700);
       p.disk(kRed, 400, 400, 200);
       p.triangle(kBlue, 650, 250, 560, 600, 860, 600);
       p.rect(kPurple, 200, 760, 820, 900);
     }},
    {"nested", imaging::kWhite, false,
     [](Painter& p) {
       p.rect(kBlue, 112, 112, 912, 912);
       p.rect(kYellow, 262, 262, 762, 762);
       p.rect(kRed, 412, 412, 612, 612);
     }},
    {"stripes", imaging::kWhite, false,
     [](Painter& p) {
       const Rgb colors[] = {kRed, kGreen, kBlue, kYellow, kPurple};
       for (int i = 0; i < 5; ++i) p.rect(colors[i], 112 + i * 160, 150, 192 + i * 160, 874);
     }},
    {"l_shape", imaging::kWhite, false,
     [](Painter& p) {
       p.rect(imaging::kBlack, 200, 150, 380, 850);
       p.rect(imaging::kBlack, 200, 670, 820, 850);
     }},
    {"blobs_on_sky", kSky, false,
     [](Painter& p) {
       p.disk(kRed, 250, 260, 150);
       p.disk(kGreen, 700, 300, 90);
       p.disk(kBlue, 420, 700, 60);
       p.disk(kPurple, 760, 760, 20);
     }},
};

Scene make(const SceneDef& def, int size) {
  Painter p(size, def.background);
  def.build(p);
  return {def.name, p.take(), def.thin};
}

}  // namespace

std::vector<Scene> synthetic_scenes(int size) {
  if (size < 16) throw InvalidInput("scene size must be >= 16");
  std::vector<Scene> out;
  for (const auto& def : kScenes) out.push_back(make(def, size));
  return out;
}

Scene synthetic_scene(std::string_view name, int size) {
  if (size < 16) throw InvalidInput("scene size must be >= 16");
  for (const auto& def : kScenes) {
    if (name == def.name) return make(def, size);
  }
  throw InvalidInput("unknown scene '" + std::string(name) + "'");
}

}  // namespace ais::orchestrator
