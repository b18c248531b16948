// Copyright 2026 The meshanno Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "meshanno/error.hpp"
#include "meshanno/raster.hpp"
#include "oracles.hpp"

namespace {

using namespace meshanno;

Camera viewport_camera(Index w, Index h) {
  Camera c;
  c.position = {0, 0, 5};
  c.target = {0, 0, 0};
  c.up = {0, 1, 0};
  c.viewport_w = w;
  c.viewport_h = h;
  return c;
}

BrushStroke stroke(std::vector<ScreenPoint> pts, double width, Index w = 128, Index h = 128) {
  return BrushStroke{viewport_camera(w, h), std::move(pts), width};
}

LassoOutline outline(std::vector<ScreenPoint> pts, Index w = 128, Index h = 128) {
  return LassoOutline{viewport_camera(w, h), std::move(pts)};
}

bool is_sorted_unique(const PixelFootprint& fp) {
  return std::adjacent_find(fp.covered.begin(), fp.covered.end(),
                            [](const Pixel& a, const Pixel& b) { return !(a < b); }) == fp.covered.end();
}

}  // namespace

TEST(RasterizeBrush, SinglePointWidthOne) {
  const PixelFootprint fp = rasterize_brush(stroke({{10, 10}}, 1.0));
  ASSERT_EQ(fp.size(), 1u);
  EXPECT_EQ(fp.covered[0], (Pixel{10, 10}));
}

TEST(RasterizeBrush, HorizontalLine) {
  const PixelFootprint fp = rasterize_brush(stroke({{10, 20}, {20, 20}}, 1.0));
  EXPECT_EQ(fp.size(), 11u);
  for (Index x = 10; x <= 20; ++x) EXPECT_TRUE(fp.contains({x, 20}));
}

TEST(RasterizeBrush, DiscMatchesLatticeCount) {
  const PixelFootprint fp = rasterize_brush(stroke({{50, 50}}, 9.0));
  // Lattice points with x² + y² <= 4.5².
  EXPECT_EQ(fp.size(), static_cast<std::size_t>(oracle::disc_lattice_count(4.5)));
  EXPECT_EQ(fp.size(), 69u);
  for (double width : {1.0, 2.0, 3.5, 10.0, 31.0, 80.0}) {
    const PixelFootprint d = rasterize_brush(stroke({{64, 64}}, width));
    EXPECT_EQ(d.size(), static_cast<std::size_t>(oracle::disc_lattice_count(width / 2))) << width;
  }
}

TEST(RasterizeBrush, ClipsToViewport) {
  const PixelFootprint fp = rasterize_brush(stroke({{0, 0}}, 9.0));
  for (const Pixel& p : fp.covered) {
    EXPECT_GE(p.x, 0);
    EXPECT_GE(p.y, 0);
  }
  int quarter = 0;
  for (int x = 0; x <= 4; ++x)
    for (int y = 0; y <= 4; ++y) quarter += (x * x + y * y <= 20.25);
  EXPECT_EQ(fp.size(), static_cast<std::size_t>(quarter));
}

TEST(RasterizeBrush, AgreesWithDenseSampling) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> coord(0.0, 127.999), width(1.0, 24.0);
  std::uniform_int_distribution<int> count(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<ScreenPoint> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    const double wpx = width(rng);
    const PixelFootprint fp = rasterize_brush(stroke(pts, wpx));
    const PixelFootprint ref = oracle::stroke_scan_oracle(pts, wpx / 2, 128, 128);
    EXPECT_TRUE(is_sorted_unique(fp));
    // The dense sampler can only under-cover in slivers thinner than its
    // step; every sampled pixel must be in the footprint.
    for (const Pixel& p : ref.covered) EXPECT_TRUE(fp.contains(p)) << p.x << "," << p.y;
    for (const Pixel& p : fp.covered) {
      double best = INFINITY;
      for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        const Vec2d a = pts[i], ab = pts[i + 1] - a, q(p.x, p.y);
        const double t = ab.squaredNorm() > 0 ? std::clamp((q - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0) : 0.0;
        best = std::min(best, (q - (a + t * ab)).norm());
      }
      for (const auto& a : pts) best = std::min(best, (Vec2d(p.x, p.y) - a).norm());
      EXPECT_LE(best, wpx / 2 + 1e-9);
    }
  }
}

TEST(RasterizeBrush, WiderStrokeCoversMore) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> coord(10, 118);
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<ScreenPoint> pts = {{coord(rng), coord(rng)}, {coord(rng), coord(rng)}};
    const PixelFootprint narrow = rasterize_brush(stroke(pts, 3.0));
    const PixelFootprint wide = rasterize_brush(stroke(pts, 7.0));
    for (const Pixel& p : narrow.covered) EXPECT_TRUE(wide.contains(p));
  }
}

TEST(RasterizeBrush, InvalidStrokes) {
  EXPECT_THROW(rasterize_brush(stroke({}, 3.0)), Error);
  EXPECT_THROW(rasterize_brush(stroke({{1, 1}}, 0.5)), Error);
  EXPECT_THROW(rasterize_brush(stroke({{1, 1}}, 129.0)), Error);
  EXPECT_THROW(rasterize_brush(stroke({{128, 1}}, 3.0)), Error);
  EXPECT_THROW(rasterize_brush(stroke({{NAN, 1}}, 3.0)), Error);
  try {
    rasterize_brush(stroke({{1, 1}}, 0.0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGesture);
  }
}

TEST(ConvexHull, DropsInteriorAndCollinear) {
  const auto hull = convex_hull({{0, 0}, {2, 0}, {4, 0}, {4, 4}, {0, 4}, {2, 2}, {1, 3}});
  EXPECT_EQ(hull.size(), 4u);
  for (const auto& p : hull) EXPECT_TRUE(p.x() == 0 || p.x() == 4);
}

TEST(RasterizeLasso, AxisAlignedSquare) {
  const PixelFootprint fp = rasterize_lasso(outline({{10, 10}, {20, 10}, {20, 20}, {10, 20}}));
  EXPECT_EQ(fp.size(), 100u);
  EXPECT_TRUE(fp.contains({10, 10}));
  EXPECT_FALSE(fp.contains({20, 15}));
  EXPECT_FALSE(fp.contains({15, 20}));
  const std::vector<Vec2d> poly = {{10, 10}, {20, 10}, {20, 20}, {10, 20}};
  EXPECT_EQ(fp, oracle::polygon_scan_oracle(poly, 128, 128));
}

TEST(RasterizeLasso, ClockwiseInputGivesSameResult) {
  const PixelFootprint a = rasterize_lasso(outline({{10, 10}, {20, 10}, {20, 20}, {10, 20}}));
  const PixelFootprint b = rasterize_lasso(outline({{10, 20}, {20, 20}, {20, 10}, {10, 10}}));
  EXPECT_EQ(a, b);
}

TEST(RasterizeLasso, CollinearOutlineIsDegenerate) {
  try {
    rasterize_lasso(outline({{1, 1}, {5, 5}, {9, 9}, {3, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateOutline);
  }
  EXPECT_THROW(rasterize_lasso(outline({{1, 1}, {1, 1}, {1, 1}})), Error);
  EXPECT_THROW(rasterize_lasso(outline({{1, 1}, {5, 1}, {130, 9}})), Error);
}

TEST(RasterizeLasso, TooFewPoints) {
  try {
    rasterize_lasso(outline({{1, 1}, {5, 5}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidGesture);
  }
}

TEST(RasterizeLasso, StarEqualsItsHull) {
  std::vector<ScreenPoint> star;
  for (int k = 0; k < 10; ++k) {
    const double angle = k * std::acos(-1.0) / 5, r = (k % 2 == 0) ? 40.0 : 15.0;
    star.push_back({64 + r * std::cos(angle), 64 + r * std::sin(angle)});
  }
  const auto hull = convex_hull(star);
  EXPECT_EQ(hull.size(), 5u);
  EXPECT_EQ(rasterize_lasso(outline(star)), rasterize_lasso(outline(hull)));
  EXPECT_EQ(rasterize_lasso(outline(star)), oracle::polygon_scan_oracle(hull, 128, 128));
}

TEST(RasterizeLasso, RandomHullsMatchCrossingTest) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> coord(0.0, 127.999);
  std::uniform_int_distribution<int> count(3, 12);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<ScreenPoint> pts(static_cast<std::size_t>(count(rng)));
    for (auto& p : pts) p = {coord(rng), coord(rng)};
    PixelFootprint fp;
    try {
      fp = rasterize_lasso(outline(pts));
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateOutline);
      continue;
    }
    ++tested;
    EXPECT_TRUE(is_sorted_unique(fp));
    EXPECT_EQ(fp, oracle::polygon_scan_oracle(convex_hull(pts), 128, 128));
  }
  EXPECT_GT(tested, 190);
}

TEST(RasterizeLasso, IntegerVerticesOnSharedBoundary) {
  // Two squares sharing the column x = 20: no pixel center is claimed by both.
  const PixelFootprint left = rasterize_lasso(outline({{10, 10}, {20, 10}, {20, 20}, {10, 20}}));
  const PixelFootprint right = rasterize_lasso(outline({{20, 10}, {30, 10}, {30, 20}, {20, 20}}));
  for (const Pixel& p : left.covered) EXPECT_FALSE(right.contains(p));
  EXPECT_EQ(left.size() + right.size(), 200u);
}
