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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "meshanno/types.hpp"

namespace meshanno {

/// Indexed triangle mesh that remembers which OBJ face every triangle came
/// from. Original faces, not triangles, are the unit annotations refer to.
///
/// Polygons are kept in CSR form (`face_offsets` into `face_corners`) so a
/// face's distinct vertices stay available even when all of its triangles
/// were dropped as degenerate. Triangles of one face are contiguous and are
/// addressed by `face_triangle_offsets`.
struct Mesh {
  VertexMatrix vertices;
  UvMatrix uvs;
  TriangleMatrix triangles;
  // Per-corner uv indices for each triangle, -1 where a corner has none.
  // Empty when the file has no `vt` references.
  TriangleMatrix triangle_uvs;
  IndexVector source_face_of;

  std::vector<Index> face_offsets{0};
  std::vector<Index> face_corners;
  std::vector<Index> face_corner_uvs;
  std::vector<Index> face_triangle_offsets{0};

  std::string material_library;
  std::string material_name;
  std::optional<std::string> texture_path;

  // Triangles discarded by parsing for repeated indices or near-zero area.
  Index dropped_triangle_count = 0;

  Index vertex_count() const { return static_cast<Index>(vertices.rows()); }
  Index triangle_count() const { return static_cast<Index>(triangles.rows()); }
  Index original_face_count() const { return static_cast<Index>(face_offsets.size()) - 1; }

  std::span<const Index> face_polygon(Index face) const;
  std::span<const Index> face_polygon_uvs(Index face) const;
  Index face_triangle_begin(Index face) const { return face_triangle_offsets[face]; }
  Index face_triangle_end(Index face) const { return face_triangle_offsets[face + 1]; }

  Vec3d vertex(Index i) const { return vertices.row(i).transpose(); }
};

/// Builds a Mesh from OBJ-style polygon data. Used by the OBJ parser and the
/// procedural generators so both go through one validation path.
class MeshBuilder {
 public:
  Index add_vertex(const Vec3d& p);
  Index add_uv(const Vec2d& uv);
  // Appends one original face; `uv_corners` is empty or parallel to `corners`.
  // Indices must already be resolved and in range.
  Index add_face(std::span<const Index> corners, std::span<const Index> uv_corners = {});

  void set_material(std::string library, std::string name);
  std::size_t face_count() const { return faces_.size(); }
  Index vertex_count() const { return static_cast<Index>(vertices_.size()); }
  Index uv_count() const { return static_cast<Index>(uvs_.size()); }

  // Fan-triangulates every face and drops degenerate triangles.
  // Throws EmptyMesh when no triangle survives.
  Mesh build() &&;

 private:
  struct Face {
    Index first;
    Index count;
  };
  std::vector<Vec3d> vertices_;
  std::vector<Vec2d> uvs_;
  std::vector<Face> faces_;
  std::vector<Index> corners_;
  std::vector<Index> corner_uvs_;
  bool has_uv_refs_ = false;
  std::string material_library_;
  std::string material_name_;
};

// Triangles with area below this (model units squared) are dropped.
inline constexpr double kDegenerateArea = 1e-12;

Mesh parse_obj(std::string_view text);

/// Reads an OBJ file and resolves the first diffuse texture of its material
/// library, looked up relative to the OBJ's directory.
Mesh load_obj_file(const std::string& path);

/// Canonical OBJ text (`v`, `vt`, `usemtl`/`mtllib`, `f`) for the mesh's
/// original polygons. Parsing the result reproduces the mesh.
std::string serialize_obj(const Mesh& mesh);

struct MeshFingerprint {
  std::string sha256;  // lowercase hex
  Index face_count = 0;

  friend bool operator==(const MeshFingerprint&, const MeshFingerprint&) = default;
};

MeshFingerprint fingerprint(const Mesh& mesh);

/// Edge adjacency between original faces, stored CSR.
struct AdjacencyMap {
  std::vector<Index> offsets{0};
  std::vector<Index> neighbor_list;
  // 1 where the face owns an edge no other face shares (an open boundary).
  std::vector<std::uint8_t> has_open_edge;

  std::span<const Index> neighbors(Index face) const {
    return {neighbor_list.data() + offsets[face], neighbor_list.data() + offsets[face + 1]};
  }
  Index face_count() const { return static_cast<Index>(offsets.size()) - 1; }
};

AdjacencyMap build_adjacency(const Mesh& mesh);

Vec3d face_centroid(const Mesh& mesh, Index original_face);

// Sum of the face's triangle winding normals (area-weighted, unnormalized).
// Zero for a face whose triangles were all dropped.
Vec3d face_normal(const Mesh& mesh, Index original_face);

Box3d bounding_box(const Mesh& mesh);

}  // namespace meshanno
