#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ais/analogy/grid.hpp"
#include "ais/analogy/manifest.hpp"
#include "ais/analogy/pairs.hpp"
#include "ais/analogy/prompt.hpp"
#include "ais/analogy/trainset.hpp"
#include "ais/common/error.hpp"
#include "ais/common/files.hpp"
#include "test_support.hpp"

using namespace ais::analogy;
using ais::imaging::PixelFormat;
using ais::imaging::RasterImage;

namespace {

RasterImage noise(int size, std::uint64_t seed, PixelFormat f = PixelFormat::rgb8) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> d(0, 255);
  RasterImage img(size, size, f);
  for (auto& s : img.samples()) s = static_cast<std::uint8_t>(d(rng));
  return img;
}

std::vector<std::string> ids(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace

// ---- grid ------------------------------------------------------------------

TEST(Grid, ComposeExtractRoundTrip) {
  const RasterImage a = noise(512, 1), ap = noise(512, 2), b = noise(512, 3), bp = noise(512, 4);
  const AnalogyGrid g = compose_grid(a, ap, b, bp, 512);
  EXPECT_EQ(g.canvas.width(), 1024);
  EXPECT_EQ(g.canvas.height(), 1024);
  EXPECT_FALSE(g.masked);
  EXPECT_EQ(extract_panel(g, Quadrant::top_left), a);
  EXPECT_EQ(extract_panel(g, Quadrant::top_right), ap);
  EXPECT_EQ(extract_panel(g, Quadrant::bottom_left), b);
  EXPECT_EQ(extract_panel(g, Quadrant::bottom_right), bp);
  EXPECT_THROW(inference_mask(g), ais::InvalidInput);
}

TEST(Grid, InferenceMaskIsBottomRightQuadrant) {
  const AnalogyGrid g = compose_grid(noise(512, 1), noise(512, 2), noise(512, 3), std::nullopt, 512);
  EXPECT_TRUE(g.masked);
  const auto mask = inference_mask(g);
  EXPECT_EQ(mask.count(), 262144u);
  for (int y = 0; y < 1024; y += 7) {
    for (int x = 0; x < 1024; x += 7) EXPECT_EQ(mask.get(x, y), x >= 512 && y >= 512);
  }
  const RasterImage masked = extract_panel(g, Quadrant::bottom_right);
  for (auto s : masked.samples()) ASSERT_EQ(s, kMaskFill);
}

TEST(Grid, RowLayoutIs1024By512) {
  const AnalogyGrid g = compose_row(noise(512, 5), std::nullopt, 512);
  EXPECT_EQ(g.layout, Layout::row_1x2);
  EXPECT_EQ(g.canvas.width(), 1024);
  EXPECT_EQ(g.canvas.height(), 512);
  const auto mask = inference_mask(g);
  EXPECT_EQ(mask.count(), 512u * 512u);
  EXPECT_TRUE(mask.get(512, 0));
  EXPECT_FALSE(mask.get(511, 511));
  EXPECT_THROW(extract_panel(g, Quadrant::bottom_left), ais::InvalidInput);
  const RasterImage p = noise(512, 6);
  EXPECT_EQ(extract_panel(compose_row(noise(512, 5), p, 512), Quadrant::top_right), p);
}

TEST(Grid, CanvasFormatFollowsPanels) {
  const RasterImage g1 = noise(64, 1, PixelFormat::gray8);
  EXPECT_EQ(compose_grid(g1, g1, g1, std::nullopt, 64).canvas.format(), PixelFormat::gray8);
  EXPECT_EQ(compose_grid(g1, noise(64, 2), g1, std::nullopt, 64).canvas.format(), PixelFormat::rgb8);
}

TEST(Grid, LetterboxesOddPanels) {
  const RasterImage wide = RasterImage::filled(200, 100, ais::imaging::kBlack);
  const AnalogyGrid g = compose_grid(wide, wide, wide, std::nullopt, 64);
  const RasterImage tl = extract_panel(g, Quadrant::top_left);
  EXPECT_EQ(tl.rgb(32, 0), ais::imaging::kWhite);
  EXPECT_EQ(tl.rgb(32, 32), ais::imaging::kBlack);
}

TEST(Grid, RejectsBadInput) {
  const RasterImage p = noise(64, 1);
  EXPECT_THROW(compose_grid(p, p, p, std::nullopt, 32), ais::InvalidInput);
  EXPECT_THROW(compose_grid(p, RasterImage(), p, std::nullopt, 64), ais::InvalidInput);
  EXPECT_THROW(AnalogyGrid::from_canvas(noise(100, 1), Layout::grid_2x2), ais::InvalidInput);
  EXPECT_THROW(parse_quadrant("middle"), ais::InvalidInput);
}

// ---- pairs -----------------------------------------------------------------

TEST(Pairs, CountsForStatedRange) {
  EXPECT_EQ(build_pairs(ids(10), PairingMode::disjoint).size(), 5u);
  EXPECT_EQ(build_pairs(ids(40), PairingMode::disjoint).size(), 20u);
  EXPECT_EQ(build_pairs(ids(9), PairingMode::disjoint).size(), 4u);
  EXPECT_EQ(build_pairs(ids(9), PairingMode::all_pairs).size(), 36u);
}

TEST(Pairs, DisjointNeverRepeatsAndAllPairsIsComplete) {
  for (int n = 2; n <= 64; ++n) {
    const auto d = build_pairs(ids(n), PairingMode::disjoint);
    ASSERT_EQ(d.size(), static_cast<std::size_t>(n / 2));
    std::set<std::string> used;
    for (const auto& p : d) {
      EXPECT_NE(p.r1, p.r2);
      EXPECT_TRUE(used.insert(p.r1).second);
      EXPECT_TRUE(used.insert(p.r2).second);
    }
    const auto all = build_pairs(ids(n), PairingMode::all_pairs);
    ASSERT_EQ(all.size(), static_cast<std::size_t>(n * (n - 1) / 2));
    std::set<std::pair<std::string, std::string>> uniq;
    for (const auto& p : all) {
      EXPECT_LT(p.r1, p.r2);
      uniq.insert({p.r1, p.r2});
    }
    EXPECT_EQ(uniq.size(), all.size());
  }
}

TEST(Pairs, OrderAndCap) {
  const std::vector<std::string> v{"c", "a", "d", "b"};
  const auto d = build_pairs(v, PairingMode::disjoint);
  EXPECT_EQ(d, (std::vector<ExemplarPair>{{"c", "a"}, {"d", "b"}}));
  const auto all = build_pairs(v, PairingMode::all_pairs, 2);
  EXPECT_EQ(all, (std::vector<ExemplarPair>{{"a", "b"}, {"a", "c"}}));
  EXPECT_THROW(build_pairs(std::vector<std::string>{"a"}, PairingMode::disjoint), ais::InvalidInput);
}

// ---- prompt ----------------------------------------------------------------

TEST(Prompt, TemplateMatchesFixtureBytes) {
  const std::string fixture =
      ais::read_text(std::filesystem::path(AIS_TEST_DATA_DIR) / "fixtures" / "prompt_template.txt");
  EXPECT_EQ(std::string(kPromptTemplate), fixture);
}

TEST(Prompt, OnlyStyvecIsSubstituted) {
  const std::string fixture =
      ais::read_text(std::filesystem::path(AIS_TEST_DATA_DIR) / "fixtures" / "prompt_template.txt");
  const std::string out = render_prompt("sks");
  const auto at = fixture.find("[styvec]");
  ASSERT_NE(at, std::string::npos);
  EXPECT_EQ(out, fixture.substr(0, at) + "sks" + fixture.substr(at + 8));
  EXPECT_EQ(out.find("[styvec]"), std::string::npos);
  EXPECT_THROW(render_prompt(""), ais::InvalidInput);
  EXPECT_THROW(render_prompt("a\nb"), ais::InvalidInput);
}

// ---- manifest --------------------------------------------------------------

TEST(Manifest, ParsesAndRoundTrips) {
  const std::string text = R"({
    "name": "ink", "styvec": "inkvec",
    "params": {"panel_size": 256, "erosion_radius": 10, "colors": 6, "pairing": "all_pairs"},
    "exemplars": [{"id": "a", "image": "a.png"}, {"id": "b", "image": "b.png", "proxy": "bp.png"}],
    "adapters": {"avat": "A1"}
  })";
  const StyleManifest m = parse_manifest(text, "/base");
  EXPECT_EQ(m.name, "ink");
  EXPECT_EQ(m.params.panel_size, 256);
  EXPECT_EQ(m.params.backbone.erosion_radius, 10);
  EXPECT_EQ(m.params.proxy.colors, 6);
  EXPECT_EQ(m.params.backbone.vectorize.colors, 6);
  EXPECT_EQ(m.params.pairing, PairingMode::all_pairs);
  EXPECT_EQ(m.resolve("a.png"), std::filesystem::path("/base/a.png"));
  EXPECT_EQ(m.adapters.avat, "A1");
  ASSERT_TRUE(m.exemplars[1].proxy.has_value());
  const StyleManifest again = parse_manifest(manifest_to_json(m), "/base");
  EXPECT_EQ(manifest_to_json(again), manifest_to_json(m));
}

TEST(Manifest, RejectsInvalidDocuments) {
  const char* bad[] = {
      "not json",
      R"({"name": "x", "styvec": "v", "exemplars": [{"id": "a", "image": "a.png"}]})",
      R"({"name": "x", "styvec": "v", "exemplars": [{"id": "a", "image": "a.png"}, {"id": "a", "image": "b.png"}]})",
      R"({"name": "", "styvec": "v", "exemplars": [{"id": "a", "image": "a.png"}, {"id": "b", "image": "b.png"}]})",
      R"({"name": "x", "styvec": "two words\n", "exemplars": [{"id": "a", "image": "a.png"}, {"id": "b", "image": "b.png"}]})",
      R"({"name": "x", "styvec": "v", "params": {"bogus": 1}, "exemplars": [{"id": "a", "image": "a.png"}, {"id": "b", "image": "b.png"}]})",
      R"({"name": "x", "styvec": "v"})",
  };
  for (const char* doc : bad) EXPECT_THROW(parse_manifest(doc), ais::ManifestError) << doc;
  EXPECT_THROW(load_manifest("/nonexistent/manifest.json"), ais::ManifestError);
}

// ---- training sets ---------------------------------------------------------

TEST(Trainset, AvatGridsAndNames) {
  const auto dir = testing_support::fresh_dir("trainset");
  const StyleManifest m = load_manifest(testing_support::write_style(dir, 10));
  PanelSet panels;
  for (const auto& e : m.exemplars) {
    panels[e.id].backbone = noise(64, 1, PixelFormat::gray8);
    panels[e.id].proxy = noise(64, 2, PixelFormat::gray8);
  }
  const auto samples = build_trainset(m, panels, SampleKind::avat, PairingMode::disjoint);
  ASSERT_EQ(samples.size(), 5u);
  EXPECT_EQ(samples[0].file_stem("toy"), "toy_avat_e00_e01");
  EXPECT_EQ(samples[0].prompt, render_prompt("toyvec"));
  EXPECT_EQ(samples[0].grid.canvas.width(), 128);
  EXPECT_FALSE(samples[0].grid.masked);
  EXPECT_EQ(extract_panel(samples[0].grid, Quadrant::top_right), *panels["e00"].proxy);

  const auto summary = write_trainset(samples, "toy", dir / "out");
  EXPECT_EQ(summary.written, 10u);
  const auto rerun = write_trainset(samples, "toy", dir / "out");
  EXPECT_EQ(rerun.written, 0u);
  EXPECT_EQ(rerun.unchanged, 10u);
}

TEST(Trainset, MissingPanelsAreNamed) {
  const auto dir = testing_support::fresh_dir("trainset_missing");
  const StyleManifest m = load_manifest(testing_support::write_style(dir, 3));
  PanelSet panels;
  panels["e00"].proxy = noise(64, 1);
  panels["e00"].output = noise(64, 2);
  try {
    build_trainset(m, panels, SampleKind::svat, PairingMode::all_pairs);
    FAIL();
  } catch (const ais::InvalidInput& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("e01 (proxy"), std::string::npos) << msg;
    EXPECT_NE(msg.find("e02"), std::string::npos) << msg;
  }
}

TEST(Trainset, LayoutRowIsOnePerExemplar) {
  const auto dir = testing_support::fresh_dir("trainset_row");
  const StyleManifest m = load_manifest(testing_support::write_style(dir, 5));
  PanelSet panels;
  for (const auto& e : m.exemplars) {
    panels[e.id].proxy = noise(64, 3);
    panels[e.id].output = noise(64, 4);
  }
  const auto samples = build_trainset(m, panels, SampleKind::layout_1x2, PairingMode::disjoint);
  ASSERT_EQ(samples.size(), 5u);
  EXPECT_EQ(samples[2].file_stem("toy"), "toy_layout_1x2_e02");
  EXPECT_EQ(samples[2].grid.canvas.width(), 128);
  EXPECT_EQ(samples[2].grid.canvas.height(), 64);
}
