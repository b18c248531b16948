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

#include "fixtures.hpp"

#include <iterator>

#include "meshanno/procedural.hpp"

namespace meshanno::fixtures {
namespace {

std::string random_text(std::mt19937_64& rng) {
  static const char* pieces[] = {"a", "Z", " ", "\"", "\\", "\n", "\t", "/", "é", "∑", "😀", "\x01", "{", "}"};
  std::uniform_int_distribution<std::size_t> len(0, 12), pick(0, std::size(pieces) - 1);
  std::string s;
  for (std::size_t i = len(rng); i > 0; --i) s += pieces[pick(rng)];
  return s;
}

}  // namespace

const MeshFingerprint& small_grid_fingerprint() {
  static const MeshFingerprint fp = fingerprint(grid_plane(4));
  return fp;
}

SelectionSet bound_selection(std::vector<Index> faces, const MeshFingerprint& fp) {
  SelectionSet s;
  s.faces = std::move(faces);
  s.mesh_sha256 = fp.sha256;
  return s;
}

AnnotationDocument golden_document() {
  AnnotationDocument doc(small_grid_fingerprint());
  doc.create(bound_selection({3, 1, 2}), "Crack along the rim", {200, 30, 30});
  doc.create(bound_selection({2, 3, 17, 30}), "Überlappung \"overlap\"\nsecond line", {0, 128, 255});
  doc.create(bound_selection({31}), "", {0, 0, 0});
  doc.update("a-0003", "restored area ✓", std::nullopt, std::nullopt);
  return doc;
}

std::string golden_path() { return std::string(MESHANNO_GOLDEN_DIR) + "/three_annotations.anno.json"; }

AnnotationDocument random_document(std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> face_count(1, 5000);
  MeshFingerprint fp;
  fp.face_count = face_count(rng);
  std::uniform_int_distribution<int> nibble(0, 15);
  for (int i = 0; i < 64; ++i) fp.sha256 += "0123456789abcdef"[nibble(rng)];

  AnnotationDocument doc(fp);
  std::uniform_int_distribution<int> records(0, 8), channel(0, 255), size(1, 40);
  std::uniform_int_distribution<Index> face(0, fp.face_count - 1);
  std::bernoulli_distribution coin(0.3);
  for (int r = records(rng); r > 0; --r) {
    std::vector<Index> faces(static_cast<std::size_t>(size(rng)));
    for (auto& f : faces) f = face(rng);
    const std::string id = doc.create(bound_selection(faces, fp), random_text(rng),
                                      {channel(rng), channel(rng), channel(rng)});
    if (coin(rng)) doc.update(id, random_text(rng), std::nullopt, std::nullopt);
    if (coin(rng)) doc.remove(id);
  }
  return doc;
}

}  // namespace meshanno::fixtures
