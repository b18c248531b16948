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

#include <span>
#include <string>
#include <vector>

#include "meshanno/bvh.hpp"
#include "meshanno/mesh.hpp"
#include "meshanno/raster.hpp"

namespace meshanno {

enum class GestureKind { Brush, Lasso };

struct SelectionSet {
  std::vector<Index> faces;  // sorted, unique original-face indices
  Camera camera;
  GestureKind gesture_kind = GestureKind::Brush;
  // Fingerprint of the mesh the faces index into; empty when unbound.
  std::string mesh_sha256;

  bool empty() const { return faces.empty(); }
};

/// Everything derived from one mesh that gestures need. Built once per mesh.
struct Scene {
  Mesh mesh;
  Bvh bvh;
  AdjacencyMap adjacency;
  MeshFingerprint fingerprint;
};

Scene make_scene(Mesh mesh);

// Hard cap on ray-casting workers.
inline constexpr int kMaxWorkers = 64;

/// Casts one ray per covered pixel and keeps the original face of every
/// front-facing nearest hit. The result is sorted and independent of
/// `workers`.
std::vector<Index> cast_footprint(const PixelFootprint& footprint, const Camera& camera,
                                  const Bvh& bvh, const Mesh& mesh, int workers = 1);

/// Axis-aligned box over all vertices of the seed faces. Throws EmptySeed.
Box3d selection_volume(const Mesh& mesh, std::span<const Index> seed);

/// Repairs faces the rays missed inside the painted patch.
///
/// Candidates are faces that are not selected, have their centroid inside
/// `volume` (padded by 1e-6 of the scene diagonal) and face the camera. A
/// connected group of candidates is added iff it touches the selection and is
/// enclosed: every edge neighbor of the group is either selected or in the
/// group, and no face of the group lies on an open mesh boundary. Groups that
/// leak to the surrounding surface are the region's outside, not holes.
SelectionSet refine_selection(const Mesh& mesh, const AdjacencyMap& adjacency, const Camera& camera,
                              std::span<const Index> seed, const Box3d& volume);

struct StageTimings {
  double raster_ms = 0;
  double cast_ms = 0;
  double refine_ms = 0;
};

struct SelectOptions {
  int workers = 1;
  StageTimings* timings = nullptr;
};

/// Rasterize, cast, bound, refine. A gesture that hits nothing yields an
/// empty selection rather than an error.
SelectionSet select_brush(const BrushStroke& stroke, const Bvh& bvh, const Mesh& mesh,
                          const AdjacencyMap& adjacency, const SelectOptions& options = {});
SelectionSet select_lasso(const LassoOutline& outline, const Bvh& bvh, const Mesh& mesh,
                          const AdjacencyMap& adjacency, const SelectOptions& options = {});

// Scene overloads also bind the selection to the scene's fingerprint.
SelectionSet select_brush(const BrushStroke& stroke, const Scene& scene,
                          const SelectOptions& options = {});
SelectionSet select_lasso(const LassoOutline& outline, const Scene& scene,
                          const SelectOptions& options = {});

}  // namespace meshanno
