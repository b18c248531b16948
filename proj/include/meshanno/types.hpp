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

#include <cstdint>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace meshanno {

using Index = std::int32_t;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Vec3 = Eigen::Matrix<Scalar, 3, 1>;
template <typename Scalar>
using Box3 = Eigen::AlignedBox<Scalar, 3>;

using Vec2d = Vec2<double>;
using Vec3d = Vec3<double>;
using Box3d = Box3<double>;

// Row-per-element storage, the layout used for vertex and index buffers.
template <typename Scalar, int Cols>
using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Cols, Eigen::RowMajor>;

using VertexMatrix = RowMatrix<double, 3>;
using UvMatrix = RowMatrix<double, 2>;
using TriangleMatrix = RowMatrix<Index, 3>;
using IndexVector = Eigen::Matrix<Index, Eigen::Dynamic, 1>;

// A screen pixel. Pixel (0,0) is the top-left of the viewport.
struct Pixel {
  Index x = 0;
  Index y = 0;

  friend constexpr bool operator==(const Pixel&, const Pixel&) = default;
  // Row-major order.
  friend constexpr auto operator<=>(const Pixel& a, const Pixel& b) {
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.x <=> b.x;
  }
};

struct Rgb {
  int r = 0;
  int g = 0;
  int b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

}  // namespace meshanno
