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

#include "meshanno/bvh.hpp"

#include <algorithm>
#include <array>
#include <limits>

#include "meshanno/error.hpp"
#include "meshanno/intersect.hpp"

namespace meshanno {
namespace {

struct TriangleRef {
  Box3d box;
  Vec3d centroid;
  Index index;
};

class Builder {
 public:
  Builder(std::vector<TriangleRef>& refs, Bvh& bvh) : refs_(refs), bvh_(bvh) {}

  void build(std::size_t begin, std::size_t end) {
    const auto node_index = bvh_.nodes.size();
    bvh_.nodes.emplace_back();
    Box3d box;
    Box3d centroids;
    for (std::size_t i = begin; i < end; ++i) {
      box.extend(refs_[i].box);
      centroids.extend(refs_[i].centroid);
    }
    bvh_.nodes[node_index].box = box;

    const auto count = end - begin;
    if (count <= static_cast<std::size_t>(kBvhLeafSize)) {
      bvh_.nodes[node_index].first = static_cast<Index>(bvh_.triangle_order.size());
      bvh_.nodes[node_index].count = static_cast<Index>(count);
      for (std::size_t i = begin; i < end; ++i) bvh_.triangle_order.push_back(refs_[i].index);
      return;
    }

    int axis = 0;
    centroids.sizes().maxCoeff(&axis);
    const std::size_t mid = begin + count / 2;
    std::nth_element(refs_.begin() + static_cast<std::ptrdiff_t>(begin),
                     refs_.begin() + static_cast<std::ptrdiff_t>(mid),
                     refs_.begin() + static_cast<std::ptrdiff_t>(end),
                     [axis](const TriangleRef& a, const TriangleRef& b) {
                       if (a.centroid[axis] != b.centroid[axis]) {
                         return a.centroid[axis] < b.centroid[axis];
                       }
                       return a.index < b.index;
                     });
    build(begin, mid);
    bvh_.nodes[node_index].first = static_cast<Index>(bvh_.nodes.size());
    build(mid, end);
  }

 private:
  std::vector<TriangleRef>& refs_;
  Bvh& bvh_;
};

// Slab test against [t_min, t_max]. Returns the entry distance or a negative
// sentinel on a miss.
double slab_entry(const Box3d& box, const Rayd& ray, const Vec3d& inv_dir, double t_min,
                  double t_max) {
  double t_near = t_min;
  double t_far = t_max;
  for (int axis = 0; axis < 3; ++axis) {
    const double o = ray.origin[axis];
    if (ray.direction[axis] == 0.0) {
      if (o < box.min()[axis] || o > box.max()[axis]) return -1.0;
      continue;
    }
    double t0 = (box.min()[axis] - o) * inv_dir[axis];
    double t1 = (box.max()[axis] - o) * inv_dir[axis];
    if (t0 > t1) std::swap(t0, t1);
    // Rounding guard so a ray exactly grazing a face of the box still enters.
    t1 *= 1.0 + 4.0 * std::numeric_limits<double>::epsilon();
    t_near = std::max(t_near, t0);
    t_far = std::min(t_far, t1);
    if (t_near > t_far) return -1.0;
  }
  return t_near;
}

struct Nearest {
  double t = std::numeric_limits<double>::infinity();
  Index triangle = -1;
  bool front = false;

  void offer(const Mesh& mesh, const Rayd& ray, Index tri, double t_min) {
    auto hit = intersect_triangle<double>(ray, mesh.vertex(mesh.triangles(tri, 0)),
                                          mesh.vertex(mesh.triangles(tri, 1)),
                                          mesh.vertex(mesh.triangles(tri, 2)), t_min);
    if (!hit) return;
    if (hit->t < t || (hit->t == t && tri < triangle)) {
      t = hit->t;
      triangle = tri;
      front = hit->front_facing;
    }
  }

  std::optional<Hit> result(const Mesh& mesh, const Rayd& ray) const {
    if (triangle < 0) return std::nullopt;
    return Hit{triangle, mesh.source_face_of(triangle), t, ray.origin + t * ray.direction, front};
  }
};

}  // namespace

double ray_t_min(const Mesh& mesh) { return kTMinFraction * bounding_box(mesh).diagonal().norm(); }

Bvh build_bvh(const Mesh& mesh) {
  if (mesh.triangle_count() == 0) throw Error(ErrorCode::EmptyMesh, "cannot build a BVH without triangles");

  std::vector<TriangleRef> refs;
  refs.reserve(static_cast<std::size_t>(mesh.triangle_count()));
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const Vec3d a = mesh.vertex(mesh.triangles(t, 0));
    const Vec3d b = mesh.vertex(mesh.triangles(t, 1));
    const Vec3d c = mesh.vertex(mesh.triangles(t, 2));
    Box3d box(a);
    box.extend(b);
    box.extend(c);
    const double edge = std::max({(b - a).norm(), (c - b).norm(), (a - c).norm()});
    const double magnitude = box.min().cwiseAbs().cwiseMax(box.max().cwiseAbs()).maxCoeff();
    const double pad = 4.0 * kBarycentricTolerance * edge + 1e-12 * magnitude;
    box.min().array() -= pad;
    box.max().array() += pad;
    refs.push_back({box, (a + b + c) / 3.0, t});
  }

  Bvh bvh;
  bvh.nodes.reserve(2 * refs.size() / kBvhLeafSize + 1);
  bvh.triangle_order.reserve(refs.size());
  Builder(refs, bvh).build(0, refs.size());
  bvh.t_min = ray_t_min(mesh);
  return bvh;
}

std::optional<Hit> intersect_nearest(const Bvh& bvh, const Mesh& mesh, const Rayd& ray) {
  if (bvh.nodes.empty()) return std::nullopt;
  const Vec3d inv_dir = ray.direction.cwiseInverse();
  const double cull_slack = 1.0 + 4.0 * std::numeric_limits<double>::epsilon();

  struct Entry {
    Index node;
    double t;
  };
  std::array<Entry, 128> stack;
  int top = 0;

  Nearest nearest;
  const double root_t = slab_entry(bvh.nodes[0].box, ray, inv_dir, bvh.t_min, nearest.t);
  if (root_t < 0.0) return std::nullopt;
  stack[top++] = {0, root_t};

  while (top > 0) {
    const Entry entry = stack[--top];
    if (entry.t > nearest.t * cull_slack) continue;
    const Bvh::Node& node = bvh.nodes[entry.node];
    if (node.is_leaf()) {
      for (Index i = node.first; i < node.first + node.count; ++i) {
        nearest.offer(mesh, ray, bvh.triangle_order[i], bvh.t_min);
      }
      continue;
    }
    const Index left = entry.node + 1;
    const Index right = node.first;
    const double t_limit = nearest.t * cull_slack;
    const double tl = slab_entry(bvh.nodes[left].box, ray, inv_dir, bvh.t_min, t_limit);
    const double tr = slab_entry(bvh.nodes[right].box, ray, inv_dir, bvh.t_min, t_limit);
    if (tl >= 0.0 && tr >= 0.0) {
      if (tl <= tr) {
        stack[top++] = {right, tr};
        stack[top++] = {left, tl};
      } else {
        stack[top++] = {left, tl};
        stack[top++] = {right, tr};
      }
    } else if (tl >= 0.0) {
      stack[top++] = {left, tl};
    } else if (tr >= 0.0) {
      stack[top++] = {right, tr};
    }
  }
  return nearest.result(mesh, ray);
}

std::optional<Hit> intersect_brute(const Mesh& mesh, const Rayd& ray, double t_min) {
  Nearest nearest;
  for (Index t = 0; t < mesh.triangle_count(); ++t) nearest.offer(mesh, ray, t, t_min);
  return nearest.result(mesh, ray);
}

std::optional<Hit> intersect_brute(const Mesh& mesh, const Rayd& ray) {
  return intersect_brute(mesh, ray, ray_t_min(mesh));
}

}  // namespace meshanno
