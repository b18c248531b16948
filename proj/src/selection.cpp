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

#include "meshanno/selection.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "meshanno/error.hpp"

namespace meshanno {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void sort_unique(std::vector<Index>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

void cast_range(std::span<const Pixel> pixels, const RayGenerator& rays, const Bvh& bvh,
                const Mesh& mesh, std::vector<Index>& out) {
  for (const Pixel& p : pixels) {
    auto hit = intersect_nearest(bvh, mesh, rays(p.x, p.y));
    if (hit && hit->front_facing) out.push_back(hit->original_face);
  }
  sort_unique(out);
}

SelectionSet finish(SelectionSet selection, GestureKind kind, const Camera& camera) {
  selection.gesture_kind = kind;
  selection.camera = camera;
  return selection;
}

SelectionSet select_footprint(const PixelFootprint& footprint, const Camera& camera, const Bvh& bvh,
                              const Mesh& mesh, const AdjacencyMap& adjacency,
                              const SelectOptions& options, Clock::time_point started) {
  StageTimings timings;
  timings.raster_ms = elapsed_ms(started);

  auto stage = Clock::now();
  std::vector<Index> seed = cast_footprint(footprint, camera, bvh, mesh, options.workers);
  timings.cast_ms = elapsed_ms(stage);

  SelectionSet selection;
  stage = Clock::now();
  if (!seed.empty()) {
    selection = refine_selection(mesh, adjacency, camera, seed, selection_volume(mesh, seed));
  }
  timings.refine_ms = elapsed_ms(stage);
  selection.camera = camera;
  if (options.timings) *options.timings = timings;
  return selection;
}

}  // namespace

Scene make_scene(Mesh mesh) {
  Scene scene;
  scene.bvh = build_bvh(mesh);
  scene.adjacency = build_adjacency(mesh);
  scene.fingerprint = fingerprint(mesh);
  scene.mesh = std::move(mesh);
  return scene;
}

std::vector<Index> cast_footprint(const PixelFootprint& footprint, const Camera& camera,
                                  const Bvh& bvh, const Mesh& mesh, int workers) {
  const RayGenerator rays(camera);
  for (const Pixel& p : footprint.covered) {
    if (p.x < 0 || p.y < 0 || p.x >= camera.viewport_w || p.y >= camera.viewport_h) {
      throw Error(ErrorCode::OutOfViewport, "footprint pixel outside the camera viewport");
    }
  }
  const std::span<const Pixel> pixels(footprint.covered);
  constexpr std::size_t kMinPixelsPerWorker = 256;
  const std::size_t max_useful = pixels.size() / kMinPixelsPerWorker + 1;
  const auto count = static_cast<std::size_t>(
      std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1,
                              std::min<std::size_t>(kMaxWorkers, max_useful)));

  std::vector<std::vector<Index>> parts(count);
  if (count == 1) {
    cast_range(pixels, rays, bvh, mesh, parts[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(count);
    const std::size_t chunk = (pixels.size() + count - 1) / count;
    for (std::size_t w = 0; w < count; ++w) {
      const std::size_t begin = std::min(pixels.size(), w * chunk);
      const std::size_t end = std::min(pixels.size(), begin + chunk);
      threads.emplace_back([&, begin, end, w] {
        cast_range(pixels.subspan(begin, end - begin), rays, bvh, mesh, parts[w]);
      });
    }
  }

  std::vector<Index> seed;
  for (auto& part : parts) seed.insert(seed.end(), part.begin(), part.end());
  sort_unique(seed);
  return seed;
}

Box3d selection_volume(const Mesh& mesh, std::span<const Index> seed) {
  if (seed.empty()) throw Error(ErrorCode::EmptySeed, "selection volume needs at least one face");
  Box3d box;
  for (Index face : seed) {
    if (face < 0 || face >= mesh.original_face_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "seed face " + std::to_string(face) + " out of range");
    }
    for (Index v : mesh.face_polygon(face)) box.extend(mesh.vertex(v));
  }
  return box;
}

SelectionSet refine_selection(const Mesh& mesh, const AdjacencyMap& adjacency, const Camera& camera,
                              std::span<const Index> seed, const Box3d& volume) {
  if (seed.empty()) throw Error(ErrorCode::EmptySeed, "refinement needs a non-empty seed");

  const double pad = 1e-6 * bounding_box(mesh).diagonal().norm();
  Box3d padded = volume;
  padded.min().array() -= pad;
  padded.max().array() += pad;

  enum : std::uint8_t { kUnseen = 0, kSelected, kRejected, kQueued };
  std::vector<std::uint8_t> state(static_cast<std::size_t>(mesh.original_face_count()), kUnseen);
  for (Index f : seed) {
    if (f < 0 || f >= mesh.original_face_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "seed face " + std::to_string(f) + " out of range");
    }
    state[static_cast<std::size_t>(f)] = kSelected;
  }

  auto is_candidate = [&](Index f) {
    const Vec3d c = face_centroid(mesh, f);
    if (!padded.contains(c)) return false;
    return (c - camera.position).dot(face_normal(mesh, f)) < 0.0;
  };

  std::vector<Index> result(seed.begin(), seed.end());
  std::vector<Index> group;
  for (Index s : seed) {
    for (Index start : adjacency.neighbors(s)) {
      if (state[static_cast<std::size_t>(start)] != kUnseen) continue;
      if (!is_candidate(start)) {
        state[static_cast<std::size_t>(start)] = kRejected;
        continue;
      }
      // Flood the candidate group containing `start`; it is a hole only if
      // nothing but selected faces borders it.
      group.clear();
      group.push_back(start);
      state[static_cast<std::size_t>(start)] = kQueued;
      bool enclosed = true;
      for (std::size_t i = 0; i < group.size(); ++i) {
        const Index f = group[i];
        if (adjacency.has_open_edge[static_cast<std::size_t>(f)]) enclosed = false;
        for (Index n : adjacency.neighbors(f)) {
          auto& st = state[static_cast<std::size_t>(n)];
          if (st == kSelected || st == kQueued) continue;
          if (st == kRejected) {
            enclosed = false;
            continue;
          }
          if (is_candidate(n)) {
            st = kQueued;
            group.push_back(n);
          } else {
            st = kRejected;
            enclosed = false;
          }
        }
      }
      for (Index f : group) {
        // Leaked groups are settled too, so they are never flooded twice.
        state[static_cast<std::size_t>(f)] = enclosed ? kSelected : kRejected;
        if (enclosed) result.push_back(f);
      }
    }
  }
  sort_unique(result);

  SelectionSet selection;
  selection.faces = std::move(result);
  selection.camera = camera;
  return selection;
}

SelectionSet select_brush(const BrushStroke& stroke, const Bvh& bvh, const Mesh& mesh,
                          const AdjacencyMap& adjacency, const SelectOptions& options) {
  const auto started = Clock::now();
  const PixelFootprint footprint = rasterize_brush(stroke);
  return finish(select_footprint(footprint, stroke.camera, bvh, mesh, adjacency, options, started),
                GestureKind::Brush, stroke.camera);
}

SelectionSet select_lasso(const LassoOutline& outline, const Bvh& bvh, const Mesh& mesh,
                          const AdjacencyMap& adjacency, const SelectOptions& options) {
  const auto started = Clock::now();
  const PixelFootprint footprint = rasterize_lasso(outline);
  return finish(select_footprint(footprint, outline.camera, bvh, mesh, adjacency, options, started),
                GestureKind::Lasso, outline.camera);
}

SelectionSet select_brush(const BrushStroke& stroke, const Scene& scene,
                          const SelectOptions& options) {
  SelectionSet s = select_brush(stroke, scene.bvh, scene.mesh, scene.adjacency, options);
  s.mesh_sha256 = scene.fingerprint.sha256;
  return s;
}

SelectionSet select_lasso(const LassoOutline& outline, const Scene& scene,
                          const SelectOptions& options) {
  SelectionSet s = select_lasso(outline, scene.bvh, scene.mesh, scene.adjacency, options);
  s.mesh_sha256 = scene.fingerprint.sha256;
  return s;
}

}  // namespace meshanno
