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

#include "meshanno/mesh.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "meshanno/error.hpp"

namespace meshanno {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedStatement: return "malformed_statement";
    case ErrorCode::IndexOutOfRange: return "index_out_of_range";
    case ErrorCode::EmptyMesh: return "empty_mesh";
    case ErrorCode::NoMesh: return "no_mesh";
    case ErrorCode::InvalidCamera: return "invalid_camera";
    case ErrorCode::InvalidRay: return "invalid_ray";
    case ErrorCode::OutOfViewport: return "out_of_viewport";
    case ErrorCode::InvalidGesture: return "invalid_gesture";
    case ErrorCode::DegenerateOutline: return "degenerate_outline";
    case ErrorCode::EmptySeed: return "empty_seed";
    case ErrorCode::EmptySelection: return "empty_selection";
    case ErrorCode::MeshMismatch: return "mesh_mismatch";
    case ErrorCode::UnknownId: return "unknown_id";
    case ErrorCode::InvalidFaces: return "invalid_faces";
    case ErrorCode::InvalidColor: return "invalid_color";
    case ErrorCode::InvalidText: return "invalid_text";
    case ErrorCode::SchemaViolation: return "schema_violation";
    case ErrorCode::VersionUnsupported: return "version_unsupported";
    case ErrorCode::FingerprintMismatch: return "fingerprint_mismatch";
    case ErrorCode::TraceSchemaViolation: return "trace_schema_violation";
    case ErrorCode::Io: return "io_error";
  }
  return "unknown";
}

std::span<const Index> Mesh::face_polygon(Index face) const {
  return {face_corners.data() + face_offsets[face],
          static_cast<std::size_t>(face_offsets[face + 1] - face_offsets[face])};
}

std::span<const Index> Mesh::face_polygon_uvs(Index face) const {
  if (face_corner_uvs.empty()) return {};
  return {face_corner_uvs.data() + face_offsets[face],
          static_cast<std::size_t>(face_offsets[face + 1] - face_offsets[face])};
}

Index MeshBuilder::add_vertex(const Vec3d& p) {
  vertices_.push_back(p);
  return static_cast<Index>(vertices_.size()) - 1;
}

Index MeshBuilder::add_uv(const Vec2d& uv) {
  uvs_.push_back(uv);
  return static_cast<Index>(uvs_.size()) - 1;
}

Index MeshBuilder::add_face(std::span<const Index> corners, std::span<const Index> uv_corners) {
  Face face{static_cast<Index>(corners_.size()), static_cast<Index>(corners.size())};
  corners_.insert(corners_.end(), corners.begin(), corners.end());
  if (uv_corners.empty()) {
    corner_uvs_.insert(corner_uvs_.end(), corners.size(), -1);
  } else {
    corner_uvs_.insert(corner_uvs_.end(), uv_corners.begin(), uv_corners.end());
    has_uv_refs_ = has_uv_refs_ ||
                   std::any_of(uv_corners.begin(), uv_corners.end(), [](Index i) { return i >= 0; });
  }
  faces_.push_back(face);
  return static_cast<Index>(faces_.size()) - 1;
}

void MeshBuilder::set_material(std::string library, std::string name) {
  material_library_ = std::move(library);
  material_name_ = std::move(name);
}

Mesh MeshBuilder::build() && {
  Mesh mesh;
  mesh.vertices.resize(static_cast<Eigen::Index>(vertices_.size()), 3);
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    mesh.vertices.row(static_cast<Eigen::Index>(i)) = vertices_[i].transpose();
  }
  mesh.uvs.resize(static_cast<Eigen::Index>(uvs_.size()), 2);
  for (std::size_t i = 0; i < uvs_.size(); ++i) {
    mesh.uvs.row(static_cast<Eigen::Index>(i)) = uvs_[i].transpose();
  }

  std::vector<Index> tris;
  std::vector<Index> tri_uvs;
  std::vector<Index> source;
  tris.reserve(corners_.size() * 3);
  source.reserve(corners_.size());
  mesh.face_offsets.reserve(faces_.size() + 1);
  mesh.face_triangle_offsets.reserve(faces_.size() + 1);

  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const Face& face = faces_[f];
    const Index* c = corners_.data() + face.first;
    const Index* cu = corner_uvs_.data() + face.first;
    for (Index k = 1; k + 1 < face.count; ++k) {
      const Index a = c[0], b = c[k], d = c[k + 1];
      if (a == b || b == d || a == d) {
        ++mesh.dropped_triangle_count;
        continue;
      }
      const Vec3d& pa = vertices_[a];
      const double area = 0.5 * (vertices_[b] - pa).cross(vertices_[d] - pa).norm();
      if (!(area >= kDegenerateArea)) {
        ++mesh.dropped_triangle_count;
        continue;
      }
      tris.insert(tris.end(), {a, b, d});
      tri_uvs.insert(tri_uvs.end(), {cu[0], cu[k], cu[k + 1]});
      source.push_back(static_cast<Index>(f));
    }
    mesh.face_offsets.push_back(face.first + face.count);
    mesh.face_triangle_offsets.push_back(static_cast<Index>(source.size()));
  }
  if (source.empty()) {
    throw Error(ErrorCode::EmptyMesh, "mesh has no non-degenerate faces");
  }

  const auto tri_count = static_cast<Eigen::Index>(source.size());
  mesh.triangles = Eigen::Map<const TriangleMatrix>(tris.data(), tri_count, 3);
  if (has_uv_refs_) {
    mesh.triangle_uvs = Eigen::Map<const TriangleMatrix>(tri_uvs.data(), tri_count, 3);
    mesh.face_corner_uvs = std::move(corner_uvs_);
  }
  mesh.source_face_of = Eigen::Map<const IndexVector>(source.data(), tri_count);
  mesh.face_corners = std::move(corners_);
  mesh.material_library = std::move(material_library_);
  mesh.material_name = std::move(material_name_);
  return mesh;
}

Vec3d face_centroid(const Mesh& mesh, Index original_face) {
  if (original_face < 0 || original_face >= mesh.original_face_count()) {
    throw Error(ErrorCode::IndexOutOfRange,
                "face index " + std::to_string(original_face) + " out of range");
  }
  auto polygon = mesh.face_polygon(original_face);
  Vec3d sum = Vec3d::Zero();
  int distinct = 0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    if (std::find(polygon.begin(), polygon.begin() + static_cast<std::ptrdiff_t>(i), polygon[i]) !=
        polygon.begin() + static_cast<std::ptrdiff_t>(i)) {
      continue;
    }
    sum += mesh.vertex(polygon[i]);
    ++distinct;
  }
  return sum / distinct;
}

Vec3d face_normal(const Mesh& mesh, Index original_face) {
  Vec3d n = Vec3d::Zero();
  for (Index t = mesh.face_triangle_begin(original_face); t < mesh.face_triangle_end(original_face);
       ++t) {
    const Vec3d a = mesh.vertex(mesh.triangles(t, 0));
    n += (mesh.vertex(mesh.triangles(t, 1)) - a).cross(mesh.vertex(mesh.triangles(t, 2)) - a);
  }
  return n;
}

Box3d bounding_box(const Mesh& mesh) {
  if (mesh.triangle_count() == 0) throw Error(ErrorCode::EmptyMesh, "mesh has no triangles");
  Box3d box;
  for (Eigen::Index t = 0; t < mesh.triangles.rows(); ++t) {
    for (int k = 0; k < 3; ++k) box.extend(mesh.vertex(mesh.triangles(t, k)));
  }
  return box;
}

std::string serialize_obj(const Mesh& mesh) {
  std::ostringstream out;
  out.precision(std::numeric_limits<double>::max_digits10);
  if (!mesh.material_library.empty()) out << "mtllib " << mesh.material_library << '\n';
  for (Index i = 0; i < mesh.vertex_count(); ++i) {
    out << "v " << mesh.vertices(i, 0) << ' ' << mesh.vertices(i, 1) << ' ' << mesh.vertices(i, 2)
        << '\n';
  }
  for (Eigen::Index i = 0; i < mesh.uvs.rows(); ++i) {
    out << "vt " << mesh.uvs(i, 0) << ' ' << mesh.uvs(i, 1) << '\n';
  }
  if (!mesh.material_name.empty()) out << "usemtl " << mesh.material_name << '\n';
  for (Index f = 0; f < mesh.original_face_count(); ++f) {
    auto polygon = mesh.face_polygon(f);
    auto uvs = mesh.face_polygon_uvs(f);
    out << 'f';
    for (std::size_t k = 0; k < polygon.size(); ++k) {
      out << ' ' << polygon[k] + 1;
      if (!uvs.empty() && uvs[k] >= 0) out << '/' << uvs[k] + 1;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace meshanno
