#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "ais/common/error.hpp"
#include "ais/imaging/morphology.hpp"
#include "ais/orchestrator/scenes.hpp"
#include "ais/representations/representations.hpp"
#include "oracles.hpp"

using namespace ais::representations;
using ais::imaging::BinaryImage;
using ais::imaging::PixelFormat;
using ais::imaging::RasterImage;
using ais::orchestrator::synthetic_scene;

TEST(Backbone, RadiusScalesWithShortSide) {
  BackboneParams p;
  EXPECT_EQ(p.radius_for(1024, 1024), 25);
  EXPECT_EQ(p.radius_for(512, 2048), 13);  // 12.5 rounds half-up
  EXPECT_EQ(p.radius_for(100, 100), 2);
  EXPECT_EQ(p.radius_for(2048, 2048), 50);
  p.erosion_radius = -1;
  EXPECT_THROW(p.radius_for(10, 10), ais::InvalidInput);
}

TEST(Backbone, BlankInputHasNoLayers) {
  const RasterImage blank = RasterImage::filled(64, 64, ais::imaging::kWhite);
  try {
    build_backbone(blank, {});
    FAIL() << "expected InvalidInput";
  } catch (const ais::InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("no layers"), std::string::npos);
  }
}

TEST(Backbone, DecompositionHoldsOnEveryScene) {
  for (const auto& scene : ais::orchestrator::synthetic_scenes(256)) {
    const BackboneParts parts = build_backbone_parts(scene.image, {});
    EXPECT_EQ(parts.backbone, ais::imaging::union_of(parts.skeleton, parts.eroded)) << scene.name;
    EXPECT_TRUE(ais::imaging::is_subset(parts.skeleton, parts.render)) << scene.name;
    EXPECT_TRUE(ais::imaging::is_subset(parts.eroded, parts.render)) << scene.name;
    EXPECT_EQ(parts.skeleton, oracle::zhang_suen(parts.render)) << scene.name;
    EXPECT_EQ(parts.eroded, oracle::erode_disk(parts.render, parts.radius)) << scene.name;
    EXPECT_EQ(parts.radius, 6) << scene.name;  // 25 * 256 / 1024 = 6.25
  }
}

TEST(Backbone, SquareSceneIsErodedSquare) {
  // 400 px black square on white at 1024: the render loses one stroke pixel
  // per side, and erosion by 25 leaves a 348 px square.
  const BackboneParts parts = build_backbone_parts(synthetic_scene("square").image, {});
  EXPECT_EQ(parts.selected_layers, 1);
  EXPECT_EQ(parts.render.count(), 398u * 398u);
  EXPECT_EQ(parts.eroded.count(), 348u * 348u);
  EXPECT_TRUE(parts.eroded.get(512, 512));
  EXPECT_FALSE(parts.eroded.get(337, 512));
  EXPECT_TRUE(parts.eroded.get(338, 512));
  EXPECT_TRUE(parts.eroded.get(685, 512));
  EXPECT_FALSE(parts.eroded.get(686, 512));
}

TEST(Backbone, SkeletonOnlyEqualsSkeleton) {
  BackboneParams p;
  p.skeleton_only = true;
  const RasterImage img = synthetic_scene("disk", 256).image;
  const BackboneParts parts = build_backbone_parts(img, p);
  EXPECT_TRUE(parts.eroded.none());
  EXPECT_EQ(parts.backbone, parts.skeleton);
}

TEST(Backbone, LayerCountSelectsRearmost) {
  const RasterImage img = synthetic_scene("nested", 256).image;
  BackboneParams one;
  one.layer_count = 1;
  const BackboneParts back = build_backbone_parts(img, one);
  EXPECT_EQ(back.selected_layers, 1);
  // The rearmost shape is the outer blue band; its hole stays empty until
  // the nested squares are drawn over it.
  EXPECT_TRUE(back.render.get(40, 128));
  EXPECT_FALSE(back.render.get(128, 128));
  const BackboneParts all = build_backbone_parts(img, {});
  EXPECT_EQ(all.selected_layers, 3);
  EXPECT_TRUE(all.render.get(128, 128));
  EXPECT_LT(back.render.count(), all.render.count());
  one.layer_count = 0;
  EXPECT_THROW(build_backbone_parts(img, one), ais::InvalidInput);
}

TEST(Backbone, DeterministicWithProvenance) {
  const RasterImage img = synthetic_scene("stacked", 256).image;
  const HiddenBackbone a = build_backbone(img, {}, Role::target, "stacked.png");
  const HiddenBackbone b = build_backbone(img, {}, Role::target, "stacked.png");
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.source.content_sha256, image_sha256(img));
  EXPECT_EQ(a.source.params_sha256(), b.source.params_sha256());
  const auto doc = nlohmann::json::parse(a.source.to_json("backbone", R"({"extra": 1})"));
  EXPECT_EQ(doc["kind"], "backbone");
  EXPECT_EQ(doc["params"]["erosion_radius"], 25);
  EXPECT_EQ(doc["params"]["layer_count"], 4);
  EXPECT_EQ(doc["params"]["stroke_width"], 2.0);
  EXPECT_EQ(doc["pipeline_version"], "ais-pipeline/1");
  EXPECT_EQ(doc["extra"], 1);
}

TEST(Proxy, IsGrayFlatRender) {
  const RasterImage img = synthetic_scene("two_squares", 128).image;
  const AbstractionProxy p = build_reference_proxy(img, {});
  EXPECT_EQ(p.image.format(), PixelFormat::gray8);
  EXPECT_EQ(p.image, ais::imaging::to_grayscale(img));  // flat input survives exactly
  EXPECT_THROW(build_reference_proxy(RasterImage::filled(32, 32, ais::imaging::kWhite), {}),
               ais::InvalidInput);
}

TEST(Proxy, AblationModes) {
  const RasterImage img = synthetic_scene("stacked", 128).image;
  EXPECT_EQ(ablation_proxy(img, ProxyAblation::none, {}), img);
  EXPECT_EQ(ablation_proxy(img, ProxyAblation::color, {}).format(), PixelFormat::rgb8);
  EXPECT_EQ(ablation_proxy(img, ProxyAblation::vector_simplification_only, {}),
            build_reference_proxy(img, {}).image);
  EXPECT_EQ(parse_proxy_ablation("vec"), ProxyAblation::vector_simplification_only);
  EXPECT_THROW(parse_proxy_ablation("blur"), ais::InvalidInput);
}

TEST(Provenance, ImageHashCoversGeometryAndFormat) {
  const RasterImage a(4, 2, PixelFormat::gray8, 7);
  const RasterImage b(2, 4, PixelFormat::gray8, 7);
  EXPECT_NE(image_sha256(a), image_sha256(b));
  EXPECT_EQ(image_sha256(a), image_sha256(RasterImage(4, 2, PixelFormat::gray8, 7)));
}
