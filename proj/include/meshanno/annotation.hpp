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
#include <string>
#include <string_view>
#include <vector>

#include "meshanno/error.hpp"
#include "meshanno/mesh.hpp"
#include "meshanno/selection.hpp"
#include "meshanno/types.hpp"

namespace meshanno {

inline constexpr std::string_view kDocumentFormat = "art3mis-annotations";
inline constexpr int kDocumentVersion = 1;

struct AnnotationRecord {
  std::string id;
  Rgb color;
  std::string text;
  std::vector<Index> faces;

  friend bool operator==(const AnnotationRecord&, const AnnotationRecord&) = default;
};

/// Ordered annotation records bound to one mesh. Face sets of different
/// records may overlap.
class AnnotationDocument {
 public:
  AnnotationDocument() = default;
  explicit AnnotationDocument(MeshFingerprint mesh) : mesh_(std::move(mesh)) {}

  const MeshFingerprint& mesh() const { return mesh_; }
  Index face_count() const { return mesh_.face_count; }
  const std::vector<AnnotationRecord>& annotations() const { return records_; }
  const AnnotationRecord* find(std::string_view id) const;

  /// Appends a record for the selection. Ids are "a-" plus a zero-padded
  /// counter that only ever grows.
  std::string create(const SelectionSet& selection, std::string text, Rgb color);
  void update(std::string_view id, std::optional<std::string> text, std::optional<Rgb> color,
              std::optional<std::vector<Index>> faces);
  void remove(std::string_view id);

  // Next counter value a new record will receive.
  Index next_counter() const { return next_counter_; }

  /// Rebuilds a document from persisted records, checking every invariant.
  /// The id counter resumes after the highest "a-N" id present.
  static AnnotationDocument from_records(MeshFingerprint mesh, std::vector<AnnotationRecord> records);

  // Persisted content only; the id counter is not part of it.
  friend bool operator==(const AnnotationDocument& a, const AnnotationDocument& b) {
    return a.mesh_ == b.mesh_ && a.records_ == b.records_;
  }

 private:
  AnnotationRecord* find_mutable(std::string_view id);
  void check_faces(const std::vector<Index>& faces, ErrorCode code) const;

  MeshFingerprint mesh_;
  std::vector<AnnotationRecord> records_;
  Index next_counter_ = 1;
};

std::string format_annotation_id(Index counter);

// Throws InvalidColor / InvalidText.
void check_color(const Rgb& color);
void check_text(std::string_view text);

/// Canonical JSON: two-space indent, fixed key order, ascending faces,
/// trailing newline.
std::string save_document(const AnnotationDocument& doc);

struct LoadOptions {
  // When set, the document must reference this mesh.
  const MeshFingerprint* expected_mesh = nullptr;
  // Downgrades a fingerprint mismatch to a warning.
  bool allow_mesh_mismatch = false;
  std::vector<std::string>* warnings = nullptr;
};

/// A single problem found in a document, addressed by JSON path.
struct Finding {
  std::string code;
  std::string path;
  std::string message;
  std::string record_id;
};

/// Every schema and range problem in `text`, without throwing. With
/// `mesh`, also checks the fingerprint and face range against it.
std::vector<Finding> validate_document(std::string_view text, const MeshFingerprint* mesh = nullptr);

/// Parses and validates. Throws SchemaViolation, VersionUnsupported or
/// FingerprintMismatch.
AnnotationDocument load_document(std::string_view text, const LoadOptions& options = {});

}  // namespace meshanno
