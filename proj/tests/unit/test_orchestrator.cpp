#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "ais/analogy/manifest.hpp"
#include "ais/backend/mock_backend.hpp"
#include "ais/common/error.hpp"
#include "ais/common/files.hpp"
#include "ais/imaging/morphology.hpp"
#include "ais/imaging/png_io.hpp"
#include "ais/imaging/resample.hpp"
#include "ais/orchestrator/pipeline.hpp"
#include "ais/orchestrator/scenes.hpp"
#include "ais/orchestrator/structural.hpp"
#include "test_support.hpp"

using namespace ais::orchestrator;
using ais::analogy::SampleKind;
using ais::backend::AdapterKind;
using ais::backend::MockBackend;
using ais::backend::MockTransform;
using ais::imaging::BinaryImage;
using ais::imaging::RasterImage;

namespace {

struct Trained {
  MockBackend mock;
  ais::analogy::StyleManifest style;
  std::string avat, svat, asvat;
};

void train_all(Trained& t, const std::filesystem::path& dir, int n = 4) {
  t.style = ais::analogy::load_manifest(testing_support::write_style(dir, n));
  t.avat = cmd_train(t.mock, t.style, {SampleKind::avat}).id;
  t.svat = cmd_train(t.mock, t.style, {SampleKind::svat}).id;
  t.asvat = cmd_train(t.mock, t.style, {SampleKind::asvat}).id;
}

RasterImage gray(const RasterImage& img) { return ais::imaging::to_grayscale(img); }

}  // namespace

TEST(Infer, IdentityMockReturnsTheTargetBackbone) {
  Trained t;
  train_all(t, testing_support::fresh_dir("infer_identity"));
  const RasterImage target = synthetic_scene("stacked", 96).image;
  InferOptions o{t.avat, t.svat, {}, 3};
  const InferResult r = infer_image(t.mock, t.style, target, o);
  ASSERT_EQ(r.stages.size(), 2u);
  EXPECT_EQ(r.stages[0].name, "stage1");
  EXPECT_EQ(r.stages[1].name, "stage2");
  EXPECT_EQ(r.stages[1].seed, 3u);
  EXPECT_EQ(r.ref_exemplar, "e00");
  EXPECT_EQ(r.output.width(), 64);
  EXPECT_EQ(gray(r.output), gray(ais::imaging::letterbox(r.backbone, 64)));
}

TEST(Infer, ErodeThenInvertComposes) {
  Trained t;
  t.mock.set_transform(AdapterKind::avat, MockTransform::parse("erode-2"));
  t.mock.set_transform(AdapterKind::svat, MockTransform::parse("invert"));
  train_all(t, testing_support::fresh_dir("infer_erode"));
  const RasterImage target = synthetic_scene("ring", 128).image;
  const InferResult r = infer_image(t.mock, t.style, target, {t.avat, t.svat, {}, 1});
  const BinaryImage eroded =
      ais::imaging::erode(BinaryImage::from_raster(gray(ais::imaging::letterbox(r.backbone, 64))),
                          ais::imaging::StructuringDisk(2));
  EXPECT_EQ(gray(r.output), ais::imaging::invert(eroded.to_gray()));
}

TEST(Infer, AblationsPickTheirStages) {
  Trained t;
  train_all(t, testing_support::fresh_dir("infer_ablations"));
  const RasterImage target = synthetic_scene("two_squares", 64).image;
  auto run = [&](InferAblation a) {
    InferOptions o{t.avat, t.svat, t.asvat, 0};
    o.ablation = a;
    return infer_image(t.mock, t.style, target, o);
  };
  EXPECT_EQ(run(InferAblation::asvat).stages.size(), 1u);
  EXPECT_EQ(run(InferAblation::none).stages.size(), 1u);
  EXPECT_EQ(run(InferAblation::none).proxy, target);
  EXPECT_EQ(run(InferAblation::vec).stages.size(), 1u);
  EXPECT_EQ(run(InferAblation::color).stages.size(), 1u);
  const InferResult row = run(InferAblation::layout_1x2);
  ASSERT_EQ(row.stages.size(), 2u);
  EXPECT_EQ(row.stages[1].grid.canvas.height(), 64);
  EXPECT_EQ(row.stages[1].grid.canvas.width(), 128);
  const InferResult skel = run(InferAblation::skeleton_only);
  const InferResult full = run(InferAblation::off);
  EXPECT_LT(BinaryImage::from_raster(skel.backbone).count(),
            BinaryImage::from_raster(full.backbone).count());
  EXPECT_THROW(parse_infer_ablation("sideways"), ais::InvalidInput);
}

TEST(Infer, RejectsMismatchedAdaptersAndBlankTargets) {
  Trained t;
  train_all(t, testing_support::fresh_dir("infer_errors"));
  const RasterImage target = synthetic_scene("square", 64).image;
  EXPECT_THROW(infer_image(t.mock, t.style, target, {t.svat, t.svat, {}, 0}),
               ais::PermanentError);
  EXPECT_THROW(infer_image(t.mock, t.style, target, {"missing", t.svat, {}, 0}),
               ais::PermanentError);
  InferOptions no_avat;
  no_avat.svat_id = t.svat;
  EXPECT_THROW(infer_image(t.mock, t.style, target, no_avat), ais::InvalidInput);
  try {
    infer_image(t.mock, t.style, RasterImage::filled(64, 64, ais::imaging::kWhite),
                {t.avat, t.svat, {}, 0});
    FAIL();
  } catch (const ais::InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("no layers"), std::string::npos) << e.what();
  }
  InferOptions bad_ref{t.avat, t.svat, {}, 0};
  bad_ref.ref_exemplar = "zz";
  EXPECT_THROW(infer_image(t.mock, t.style, target, bad_ref), ais::Error);
}

TEST(Infer, WritesRunDirectoryDeterministically) {
  const auto dir = testing_support::fresh_dir("infer_files");
  Trained t;
  train_all(t, dir);
  const auto target = dir / "target in.png";
  ais::imaging::write_png(target, synthetic_scene("l_shape", 80).image);
  InferOptions o{t.avat, t.svat, {}, 9, 2};
  o.out_dir = dir / "runs";
  const InferResult r = cmd_infer(t.mock, t.style, target, o);
  for (const char* f : {"target.png", "backbone.png", "backbone.json", "proxy.png", "proxy.json",
                        "stage1_grid.png", "stage1_canvas.png", "stage2_canvas_1.png",
                        "output.png", "output_1.png", "output.json", "run.json", "timings.json"}) {
    EXPECT_TRUE(std::filesystem::exists(r.run_dir / f)) << f;
  }
  const std::string first = ais::read_text(r.run_dir / "run.json");
  cmd_infer(t.mock, t.style, target, o);
  EXPECT_EQ(ais::read_text(r.run_dir / "run.json"), first);
  const auto doc = nlohmann::json::parse(first);
  EXPECT_EQ(doc["stages"][0]["job_id"], r.stages[0].job_id);
}

TEST(Mix, NamesEveryCombination) {
  const auto dir = testing_support::fresh_dir("mix");
  Trained a, b;
  std::filesystem::create_directories(dir / "a");
  std::filesystem::create_directories(dir / "b");
  train_all(a, dir / "a", 2);
  b.style = ais::analogy::load_manifest(testing_support::write_style(dir / "b", 3, 128, 64, "other"));
  const std::string svat_b = cmd_train(a.mock, b.style, {SampleKind::svat}).id;
  const auto target = dir / "t.png";
  ais::imaging::write_png(target, synthetic_scene("triangle", 64).image);
  const auto outs = cmd_mix(a.mock, target, {{&a.style, a.avat}},
                            {{&a.style, a.svat}, {&b.style, svat_b}}, 1, dir / "out");
  ASSERT_EQ(outs.size(), 2u);
  EXPECT_EQ(outs[1].path.filename().string(), "t__avat-" + a.avat + "__svat-" + svat_b + ".png");
  for (const auto& m : outs) EXPECT_TRUE(std::filesystem::exists(m.path));
  EXPECT_EQ(outs[0].proxy, outs[1].proxy);
  EXPECT_THROW(cmd_mix(a.mock, target, {{&a.style, a.svat}}, {{&a.style, a.svat}}, 1, dir / "out"),
               ais::PermanentError);
  EXPECT_THROW(cmd_mix(a.mock, target, {}, {{&a.style, a.svat}}, 1, dir / "out"),
               ais::InvalidInput);
}

TEST(Trainset, TenExemplarsGiveFiveGridsAndRerunsAreStable) {
  const auto dir = testing_support::fresh_dir("cmd_trainset");
  const auto style = ais::analogy::load_manifest(testing_support::write_style(dir, 10));
  const auto first = cmd_trainset(style, {SampleKind::avat}, dir / "out");
  EXPECT_EQ(first.written, 10u);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "toy_avat_e08_e09.png"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "toy_avat_e08_e09.txt"));
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "representations" / "e03_backbone.png"));
  const auto again = cmd_trainset(style, {SampleKind::avat}, dir / "out");
  EXPECT_EQ(again.written, 0u);
  TrainsetOptions all{SampleKind::svat, ais::analogy::PairingMode::all_pairs, std::size_t{7}};
  EXPECT_EQ(make_trainset(style, all).size(), 7u);
}

TEST(Structural, Basics) {
  BinaryImage a(10, 10), b(10, 10);
  for (int y = 0; y < 10; ++y)
    for (int x = 0; x < 10; ++x) {
      a.set(x, y);
      if (y < 5) b.set(x, y);
    }
  EXPECT_DOUBLE_EQ(eval_structural(a, a).backbone_iou, 1.0);
  EXPECT_DOUBLE_EQ(eval_structural(a, b).backbone_iou, 0.5);
  EXPECT_DOUBLE_EQ(eval_structural(a, b).fg_ratio_delta, 0.5);
  EXPECT_DOUBLE_EQ(eval_structural(BinaryImage(4, 4), BinaryImage(4, 4)).backbone_iou, 1.0);

  BinaryImage c(10, 10), d(10, 10);
  c.set(0, 0);
  c.set(5, 5);
  c.set(9, 9);
  d.set(1, 1);
  const auto r1 = eval_structural(c, d), r2 = eval_structural(d, c);
  EXPECT_DOUBLE_EQ(r1.backbone_iou, 0.0);
  EXPECT_EQ(r1.component_delta, 2);
  EXPECT_EQ(r1.component_delta, r2.component_delta);
  EXPECT_DOUBLE_EQ(r1.fg_ratio_delta, r2.fg_ratio_delta);
  EXPECT_THROW(eval_structural(a, BinaryImage(5, 5)), ais::InvalidInput);
}
