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

#include <algorithm>

#include "meshanno/mesh.hpp"

namespace meshanno {

AdjacencyMap build_adjacency(const Mesh& mesh) {
  struct EdgeUse {
    Index lo, hi, face;
    bool operator<(const EdgeUse& o) const {
      if (lo != o.lo) return lo < o.lo;
      if (hi != o.hi) return hi < o.hi;
      return face < o.face;
    }
  };

  std::vector<EdgeUse> uses;
  uses.reserve(static_cast<std::size_t>(mesh.triangle_count()) * 3);
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    const Index face = mesh.source_face_of(t);
    for (int k = 0; k < 3; ++k) {
      const Index a = mesh.triangles(t, k);
      const Index b = mesh.triangles(t, (k + 1) % 3);
      uses.push_back({std::min(a, b), std::max(a, b), face});
    }
  }
  std::sort(uses.begin(), uses.end());

  const Index face_count = mesh.original_face_count();
  AdjacencyMap adjacency;
  adjacency.has_open_edge.assign(static_cast<std::size_t>(face_count), 0);

  std::vector<std::pair<Index, Index>> pairs;
  std::vector<Index> faces;
  for (std::size_t i = 0; i < uses.size();) {
    std::size_t j = i;
    faces.clear();
    while (j < uses.size() && uses[j].lo == uses[i].lo && uses[j].hi == uses[i].hi) {
      if (faces.empty() || faces.back() != uses[j].face) faces.push_back(uses[j].face);
      ++j;
    }
    // A single use is an open boundary; two uses by one face are a fan
    // diagonal inside that face.
    if (j - i == 1) adjacency.has_open_edge[static_cast<std::size_t>(uses[i].face)] = 1;
    for (Index a : faces) {
      for (Index b : faces) {
        if (a != b) pairs.emplace_back(a, b);
      }
    }
    i = j;
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  adjacency.offsets.assign(static_cast<std::size_t>(face_count) + 1, 0);
  for (const auto& [a, b] : pairs) ++adjacency.offsets[static_cast<std::size_t>(a) + 1];
  for (Index f = 0; f < face_count; ++f) adjacency.offsets[f + 1] += adjacency.offsets[f];
  adjacency.neighbor_list.reserve(pairs.size());
  for (const auto& [a, b] : pairs) adjacency.neighbor_list.push_back(b);
  return adjacency;
}

}  // namespace meshanno
