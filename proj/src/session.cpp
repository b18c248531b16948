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

#include "meshanno/session.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "meshanno/error.hpp"

namespace meshanno {

int default_worker_count() {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ANNOTATE_THREADS")) {
    const int cap = std::atoi(env);
    if (cap > 0) workers = workers > 0 ? std::min(workers, cap) : cap;
  }
  return std::clamp(workers, 1, kMaxWorkers);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::Io, "failed writing '" + path + "'");
}

void Session::load_mesh(const std::string& path) { load_mesh(load_obj_file(path), path); }

void Session::load_mesh(Mesh mesh, std::string path) {
  const auto started = std::chrono::steady_clock::now();
  auto scene = std::make_unique<Scene>();
  scene->bvh = build_bvh(mesh);
  bvh_build_ms_ =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  scene->adjacency = build_adjacency(mesh);
  scene->fingerprint = fingerprint(mesh);
  scene->mesh = std::move(mesh);
  scene_ = std::move(scene);
  mesh_path_ = std::move(path);
  selection_ = {};
  document_ = AnnotationDocument(scene_->fingerprint);
  last_timings_ = {};
}

const Scene& Session::scene() const {
  require_mesh();
  return *scene_;
}

void Session::require_mesh() const {
  if (!scene_) throw Error(ErrorCode::NoMesh, "no mesh loaded");
}

const SelectionSet& Session::gesture(const GestureRequest& request) {
  require_mesh();
  const SelectOptions options{workers_, &last_timings_};
  SelectionSet result;
  if (request.kind == GestureKind::Brush) {
    result = select_brush(BrushStroke{request.camera, request.points, request.width_px}, *scene_, options);
  } else {
    result = select_lasso(LassoOutline{request.camera, request.points}, *scene_, options);
  }
  camera_ = request.camera;
  if (request.additive) {
    std::vector<Index> merged;
    std::set_union(selection_.faces.begin(), selection_.faces.end(), result.faces.begin(),
                   result.faces.end(), std::back_inserter(merged));
    result.faces = std::move(merged);
  }
  selection_ = std::move(result);
  return selection_;
}

void Session::clear_selection() {
  selection_.faces.clear();
}

std::string Session::commit(std::string text, Rgb color) {
  require_mesh();
  return document_.create(selection_, std::move(text), color);
}

AnnotationDocument& Session::document() {
  require_mesh();
  return document_;
}

const AnnotationDocument& Session::document() const {
  require_mesh();
  return document_;
}

void Session::load_document(std::string_view text, bool allow_mesh_mismatch,
                            std::vector<std::string>* warnings) {
  require_mesh();
  LoadOptions options;
  options.expected_mesh = &scene_->fingerprint;
  options.allow_mesh_mismatch = allow_mesh_mismatch;
  options.warnings = warnings;
  document_ = meshanno::load_document(text, options);
}

SessionStats Session::stats() const {
  require_mesh();
  SessionStats s;
  s.vertex_count = scene_->mesh.vertex_count();
  s.face_count = scene_->mesh.original_face_count();
  s.triangle_count = scene_->mesh.triangle_count();
  s.selected_face_count = static_cast<Index>(selection_.faces.size());
  s.annotation_count = static_cast<Index>(document_.annotations().size());
  s.last_timings = last_timings_;
  s.bvh_build_ms = bvh_build_ms_;
  return s;
}

void replay_trace(Session& session, const GestureTrace& trace) {
  for (std::size_t i = 0; i < trace.entries.size(); ++i) {
    const TraceEntry& entry = trace.entries[i];
    try {
      if (entry.gesture) session.gesture(*entry.gesture);
      if (entry.annotate) session.commit(entry.annotate->text, entry.annotate->color);
    } catch (const Error& e) {
      throw Error(e.code(), "entry " + std::to_string(i) + ": " + e.what(), "entry=" + std::to_string(i));
    }
  }
}

}  // namespace meshanno
