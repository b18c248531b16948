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

#pragma once

#include <vector>

#include "meshanno/camera.hpp"
#include "meshanno/types.hpp"

namespace meshanno {

// Screen points live in pixel-index space: (x, y) is the center of pixel
// (x, y), x grows to the right and y grows downwards.
using ScreenPoint = Vec2d;

struct BrushStroke {
  Camera camera;
  std::vector<ScreenPoint> points;
  double width_px = 1.0;
};

struct LassoOutline {
  Camera camera;
  std::vector<ScreenPoint> points;
};

/// Covered pixels, sorted row-major and duplicate-free.
struct PixelFootprint {
  std::vector<Pixel> covered;

  std::size_t size() const { return covered.size(); }
  bool empty() const { return covered.empty(); }
  bool contains(Pixel p) const;
  friend bool operator==(const PixelFootprint&, const PixelFootprint&) = default;
};

// Throw InvalidGesture when the gesture violates its invariants.
void check_stroke(const BrushStroke& stroke);
void check_outline(const LassoOutline& outline);

/// Union of discs of radius width/2 stamped at every stroke point and at
/// samples no more than 1 px apart along each segment. A pixel is covered
/// when its center lies within the radius.
PixelFootprint rasterize_brush(const BrushStroke& stroke);

/// Convex hull, counter-clockwise in screen space, collinear points removed.
std::vector<ScreenPoint> convex_hull(std::vector<ScreenPoint> points);

/// Scan-converts the convex hull of the outline into horizontal spans.
/// Centers on the left/top hull boundary are inside, on the right/bottom
/// boundary outside. Throws DegenerateOutline when the hull has no area.
PixelFootprint rasterize_lasso(const LassoOutline& outline);

}  // namespace meshanno
