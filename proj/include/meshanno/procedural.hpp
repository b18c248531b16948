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

#include "meshanno/mesh.hpp"

namespace meshanno {

/// Flat n×n grid of cells over [origin, origin + size]² at height z, two
/// triangles per cell, wound counter-clockwise seen from +z. Cell (i, j)
/// owns faces 2(jn + i) and 2(jn + i) + 1. Per-vertex uvs span [0, 1]².
Mesh grid_plane(Index n, double size = 1.0, double z = 0.0, const Vec2d& origin = Vec2d::Zero());

/// Latitude/longitude sphere with outward winding. Pole rows are triangle
/// fans, so the mesh has 2·slices·(stacks − 1) faces.
Mesh uv_sphere(Index slices, Index stacks, double radius = 1.0, const Vec3d& center = Vec3d::Zero());

/// Concatenates meshes; face indices of later parts are offset by the face
/// counts of earlier ones.
Mesh concatenate(const std::vector<Mesh>& parts);

}  // namespace meshanno
