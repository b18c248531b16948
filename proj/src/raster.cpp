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

#include "meshanno/raster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "meshanno/error.hpp"

namespace meshanno {
namespace {

void check_points(const std::vector<ScreenPoint>& points, const Camera& camera) {
  for (const auto& p : points) {
    if (!p.allFinite() || p.x() < 0.0 || p.y() < 0.0 || p.x() >= camera.viewport_w ||
        p.y() >= camera.viewport_h) {
      throw Error(ErrorCode::InvalidGesture, "gesture point outside the viewport");
    }
  }
}

// Dense coverage mask over the viewport, flushed to a sorted pixel list.
class CoverageMask {
 public:
  CoverageMask(Index w, Index h)
      : w_(w), h_(h), bits_(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

  void set(Index x, Index y) { bits_[index(x, y)] = 1; }
  void set_span(Index y, Index x0, Index x1) {
    for (Index x = x0; x < x1; ++x) set(x, y);
  }

  PixelFootprint to_footprint() const {
    PixelFootprint fp;
    for (Index y = 0; y < h_; ++y) {
      for (Index x = 0; x < w_; ++x) {
        if (bits_[index(x, y)]) fp.covered.push_back({x, y});
      }
    }
    return fp;
  }

 private:
  std::size_t index(Index x, Index y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(w_) + static_cast<std::size_t>(x);
  }
  Index w_, h_;
  std::vector<std::uint8_t> bits_;
};

void stamp_disc(CoverageMask& mask, const Camera& camera, const ScreenPoint& c, double radius) {
  const double r2 = radius * radius;
  const Index y0 = std::max<Index>(0, static_cast<Index>(std::ceil(c.y() - radius)));
  const Index y1 = std::min<Index>(camera.viewport_h - 1, static_cast<Index>(std::floor(c.y() + radius)));
  for (Index y = y0; y <= y1; ++y) {
    const double dy = y - c.y();
    const double rem = r2 - dy * dy;
    if (rem < 0.0) continue;
    const double half = std::sqrt(rem);
    Index x0 = std::max<Index>(0, static_cast<Index>(std::ceil(c.x() - half)));
    Index x1 = std::min<Index>(camera.viewport_w - 1, static_cast<Index>(std::floor(c.x() + half)));
    // sqrt rounding can misplace a center lying exactly on the circle.
    while (x0 > 0 && (x0 - 1 - c.x()) * (x0 - 1 - c.x()) + dy * dy <= r2) --x0;
    while (x0 <= x1 && (x0 - c.x()) * (x0 - c.x()) + dy * dy > r2) ++x0;
    while (x1 + 1 < camera.viewport_w && (x1 + 1 - c.x()) * (x1 + 1 - c.x()) + dy * dy <= r2) ++x1;
    while (x1 >= x0 && (x1 - c.x()) * (x1 - c.x()) + dy * dy > r2) --x1;
    if (x0 <= x1) mask.set_span(y, x0, x1 + 1);
  }
}

double cross(const ScreenPoint& o, const ScreenPoint& a, const ScreenPoint& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

}  // namespace

bool PixelFootprint::contains(Pixel p) const {
  return std::binary_search(covered.begin(), covered.end(), p);
}

void check_stroke(const BrushStroke& stroke) {
  check_camera(stroke.camera);
  if (stroke.points.empty()) throw Error(ErrorCode::InvalidGesture, "brush stroke has no points");
  if (!(stroke.width_px >= 1.0) ||
      stroke.width_px > std::min(stroke.camera.viewport_w, stroke.camera.viewport_h)) {
    throw Error(ErrorCode::InvalidGesture, "brush width must lie in [1, min(viewport)]");
  }
  check_points(stroke.points, stroke.camera);
}

void check_outline(const LassoOutline& outline) {
  check_camera(outline.camera);
  if (outline.points.size() < 3) {
    throw Error(ErrorCode::InvalidGesture, "lasso outline needs at least 3 points");
  }
  check_points(outline.points, outline.camera);
}

PixelFootprint rasterize_brush(const BrushStroke& stroke) {
  check_stroke(stroke);
  const double radius = stroke.width_px / 2.0;
  CoverageMask mask(stroke.camera.viewport_w, stroke.camera.viewport_h);
  stamp_disc(mask, stroke.camera, stroke.points.front(), radius);
  for (std::size_t i = 1; i < stroke.points.size(); ++i) {
    const ScreenPoint& a = stroke.points[i - 1];
    const ScreenPoint& b = stroke.points[i];
    const int steps = std::max(1, static_cast<int>(std::ceil((b - a).norm())));
    for (int s = 1; s <= steps; ++s) {
      stamp_disc(mask, stroke.camera, a + (b - a) * (static_cast<double>(s) / steps), radius);
    }
  }
  return mask.to_footprint();
}

std::vector<ScreenPoint> convex_hull(std::vector<ScreenPoint> points) {
  std::sort(points.begin(), points.end(), [](const ScreenPoint& a, const ScreenPoint& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;

  std::vector<ScreenPoint> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], points[i]) <= 0.0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

PixelFootprint rasterize_lasso(const LassoOutline& outline) {
  check_outline(outline);
  const std::vector<ScreenPoint> hull = convex_hull(outline.points);
  if (hull.size() < 3) throw Error(ErrorCode::DegenerateOutline, "lasso outline has zero area");

  double y_min = hull[0].y(), y_max = hull[0].y();
  for (const auto& p : hull) {
    y_min = std::min(y_min, p.y());
    y_max = std::max(y_max, p.y());
  }

  CoverageMask mask(outline.camera.viewport_w, outline.camera.viewport_h);
  const Index row0 = std::max<Index>(0, static_cast<Index>(std::ceil(y_min)));
  const Index row1 = std::min<Index>(outline.camera.viewport_h - 1, static_cast<Index>(std::ceil(y_max)) - 1);
  for (Index y = row0; y <= row1; ++y) {
    // A convex polygon crosses each row inside [y_min, y_max) on exactly two
    // edges, taken half-open in y.
    double x_left = std::numeric_limits<double>::infinity();
    double x_right = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const ScreenPoint& a = hull[i];
      const ScreenPoint& b = hull[(i + 1) % hull.size()];
      if ((a.y() <= y) == (b.y() <= y)) continue;
      const double x = a.x() + (y - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      x_left = std::min(x_left, x);
      x_right = std::max(x_right, x);
    }
    if (!(x_left < x_right)) continue;
    const Index x0 = std::max<Index>(0, static_cast<Index>(std::ceil(x_left)));
    const Index x1 = std::min<Index>(outline.camera.viewport_w, static_cast<Index>(std::ceil(x_right)));
    if (x0 < x1) mask.set_span(y, x0, x1);
  }
  return mask.to_footprint();
}

}  // namespace meshanno
