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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "meshanno/annotation.hpp"
#include "meshanno/selection.hpp"
#include "meshanno/trace.hpp"

namespace meshanno {

struct SessionStats {
  Index vertex_count = 0;
  Index face_count = 0;
  Index triangle_count = 0;
  Index selected_face_count = 0;
  Index annotation_count = 0;
  StageTimings last_timings;
  double bvh_build_ms = 0;
};

/// Worker count from ANNOTATE_THREADS, else hardware concurrency; at least 1.
int default_worker_count();

/// One annotation session: a mesh, the current camera and selection, and the
/// annotation document. Both the CLI replay and the boundary API drive this
/// same object.
class Session {
 public:
  explicit Session(int workers = default_worker_count()) : workers_(workers) {}

  void load_mesh(const std::string& path);
  void load_mesh(Mesh mesh, std::string path = {});
  bool has_mesh() const { return scene_ != nullptr; }
  const Scene& scene() const;
  const std::string& mesh_path() const { return mesh_path_; }

  void set_camera(const Camera& camera) { camera_ = camera; }
  const std::optional<Camera>& camera() const { return camera_; }

  /// Runs the gesture and replaces (or, when additive, extends) the current
  /// selection.
  const SelectionSet& gesture(const GestureRequest& request);
  const SelectionSet& selection() const { return selection_; }
  void clear_selection();

  // Commits the current selection as a new record; returns its id.
  std::string commit(std::string text, Rgb color);

  AnnotationDocument& document();
  const AnnotationDocument& document() const;
  void load_document(std::string_view text, bool allow_mesh_mismatch = false,
                     std::vector<std::string>* warnings = nullptr);

  SessionStats stats() const;
  int workers() const { return workers_; }

 private:
  void require_mesh() const;

  int workers_;
  std::unique_ptr<Scene> scene_;
  std::string mesh_path_;
  double bvh_build_ms_ = 0;
  std::optional<Camera> camera_;
  SelectionSet selection_;
  AnnotationDocument document_;
  StageTimings last_timings_;
};

/// Runs every trace entry in order. Errors are rethrown with the failing
/// entry index in the message and "entry=N" in the detail.
void replay_trace(Session& session, const GestureTrace& trace);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace meshanno
