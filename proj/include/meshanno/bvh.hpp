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

#include <optional>
#include <vector>

#include "meshanno/camera.hpp"
#include "meshanno/mesh.hpp"

namespace meshanno {

struct Hit {
  Index triangle_index = -1;
  Index original_face = -1;
  double t = 0;
  Vec3d point = Vec3d::Zero();
  bool front_facing = false;
};

/// Binary bounding volume hierarchy over a mesh's triangles, flattened in
/// depth-first order: an interior node's left child directly follows it.
struct Bvh {
  struct Node {
    Box3d box;
    Index first = 0;  // leaf: offset into triangle_order; interior: right child
    Index count = 0;  // triangles in a leaf, 0 for interior nodes
    bool is_leaf() const { return count > 0; }
  };

  std::vector<Node> nodes;
  std::vector<Index> triangle_order;
  double t_min = 0;
};

inline constexpr Index kBvhLeafSize = 4;

/// Median split on the longest centroid axis. Leaf boxes are padded by the
/// intersection tolerance so traversal never culls a hit the kernel accepts.
Bvh build_bvh(const Mesh& mesh);

// t-min shared by both intersection routes.
double ray_t_min(const Mesh& mesh);

std::optional<Hit> intersect_nearest(const Bvh& bvh, const Mesh& mesh, const Rayd& ray);

// Linear scan with the same kernel and tie-breaking; the reference for the BVH.
std::optional<Hit> intersect_brute(const Mesh& mesh, const Rayd& ray);
std::optional<Hit> intersect_brute(const Mesh& mesh, const Rayd& ray, double t_min);

}  // namespace meshanno
