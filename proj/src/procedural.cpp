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

#include "meshanno/procedural.hpp"

#include <cmath>
#include <numbers>

#include "meshanno/error.hpp"

namespace meshanno {

Mesh grid_plane(Index n, double size, double z, const Vec2d& origin) {
  if (n <= 0) throw Error(ErrorCode::EmptyMesh, "grid needs at least one cell");
  MeshBuilder b;
  const Index row = n + 1;
  for (Index j = 0; j <= n; ++j) {
    for (Index i = 0; i <= n; ++i) {
      const double u = static_cast<double>(i) / n;
      const double v = static_cast<double>(j) / n;
      b.add_vertex({origin.x() + u * size, origin.y() + v * size, z});
      b.add_uv({u, v});
    }
  }
  for (Index j = 0; j < n; ++j) {
    for (Index i = 0; i < n; ++i) {
      const Index v00 = j * row + i, v10 = v00 + 1, v01 = v00 + row, v11 = v01 + 1;
      const Index lower[3] = {v00, v10, v11};
      const Index upper[3] = {v00, v11, v01};
      b.add_face(lower, lower);
      b.add_face(upper, upper);
    }
  }
  return std::move(b).build();
}

Mesh uv_sphere(Index slices, Index stacks, double radius, const Vec3d& center) {
  if (slices < 3 || stacks < 2) throw Error(ErrorCode::EmptyMesh, "sphere needs slices >= 3, stacks >= 2");
  MeshBuilder b;
  const Index north = b.add_vertex(center + Vec3d(0, 0, radius));
  for (Index s = 1; s < stacks; ++s) {
    const double theta = std::numbers::pi * s / stacks;
    for (Index k = 0; k < slices; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / slices;
      b.add_vertex(center + radius * Vec3d(std::sin(theta) * std::cos(phi),
                                           std::sin(theta) * std::sin(phi), std::cos(theta)));
    }
  }
  const Index south = b.add_vertex(center - Vec3d(0, 0, radius));
  auto ring = [&](Index s, Index k) { return 1 + (s - 1) * slices + (k % slices); };

  for (Index k = 0; k < slices; ++k) {
    const Index f[3] = {north, ring(1, k), ring(1, k + 1)};
    b.add_face(f);
  }
  for (Index s = 1; s + 1 < stacks; ++s) {
    for (Index k = 0; k < slices; ++k) {
      const Index a = ring(s, k), c = ring(s, k + 1), d = ring(s + 1, k), e = ring(s + 1, k + 1);
      const Index t0[3] = {a, d, e};
      const Index t1[3] = {a, e, c};
      b.add_face(t0);
      b.add_face(t1);
    }
  }
  for (Index k = 0; k < slices; ++k) {
    const Index f[3] = {south, ring(stacks - 1, k + 1), ring(stacks - 1, k)};
    b.add_face(f);
  }
  return std::move(b).build();
}

Mesh concatenate(const std::vector<Mesh>& parts) {
  MeshBuilder b;
  for (const Mesh& m : parts) {
    const Index vbase = b.vertex_count();
    const Index ubase = b.uv_count();
    for (Index i = 0; i < m.vertex_count(); ++i) b.add_vertex(m.vertex(i));
    for (Eigen::Index i = 0; i < m.uvs.rows(); ++i) b.add_uv(m.uvs.row(i).transpose());
    std::vector<Index> corners, uvs;
    for (Index f = 0; f < m.original_face_count(); ++f) {
      corners.clear();
      uvs.clear();
      for (Index v : m.face_polygon(f)) corners.push_back(v + vbase);
      for (Index u : m.face_polygon_uvs(f)) uvs.push_back(u < 0 ? -1 : u + ubase);
      b.add_face(corners, uvs);
    }
  }
  return std::move(b).build();
}

}  // namespace meshanno
