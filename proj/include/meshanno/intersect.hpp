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

#include <cmath>
#include <optional>

#include "meshanno/camera.hpp"
#include "meshanno/types.hpp"

namespace meshanno {

// Barycentric slack accepted on triangle edges, relative to the edge frame.
inline constexpr double kBarycentricTolerance = 1e-7;
// Ray t-min as a fraction of the scene bounding-box diagonal.
inline constexpr double kTMinFraction = 1e-7;

template <typename Scalar>
struct TriangleHit {
  Scalar t;
  Scalar u;
  Scalar v;
  bool front_facing;
};

/// Möller-Trumbore ray/triangle test with a relative barycentric tolerance so
/// rays through shared edges hit at least one of the adjacent triangles.
/// Rays parallel to the triangle plane miss. Only hits with t > t_min count.
template <typename Scalar>
std::optional<TriangleHit<Scalar>> intersect_triangle(const Ray<Scalar>& ray, const Vec3<Scalar>& a,
                                                      const Vec3<Scalar>& b, const Vec3<Scalar>& c,
                                                      Scalar t_min) {
  const Vec3<Scalar> e1 = b - a;
  const Vec3<Scalar> e2 = c - a;
  const Vec3<Scalar> p = ray.direction.cross(e2);
  const Scalar det = e1.dot(p);
  const Scalar scale = e1.norm() * e2.norm();
  if (!(std::abs(det) > scale * Scalar(1e-12))) return std::nullopt;

  const Scalar inv_det = Scalar(1) / det;
  const Vec3<Scalar> s = ray.origin - a;
  const Scalar u = s.dot(p) * inv_det;
  const Scalar eps = Scalar(kBarycentricTolerance);
  if (u < -eps || u > Scalar(1) + eps) return std::nullopt;
  const Vec3<Scalar> q = s.cross(e1);
  const Scalar v = ray.direction.dot(q) * inv_det;
  if (v < -eps || u + v > Scalar(1) + eps) return std::nullopt;
  const Scalar t = e2.dot(q) * inv_det;
  if (!(t > t_min)) return std::nullopt;
  const bool front = ray.direction.dot(e1.cross(e2)) < Scalar(0);
  return TriangleHit<Scalar>{t, u, v, front};
}

}  // namespace meshanno
