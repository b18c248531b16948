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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "meshanno/annotation.hpp"
#include "meshanno/error.hpp"
#include "meshanno/session.hpp"

int serve_pipe(std::istream& in, std::ostream& out);
int serve_socket(const std::string& path);

namespace {

using namespace meshanno;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitValidation = 3;
constexpr int kExitReplay = 4;

void print_stats(const SessionStats& s) {
  std::cout << "vertices: " << s.vertex_count << ", faces: " << s.face_count
            << ", triangles: " << s.triangle_count << '\n';
  std::cout << "selected faces: " << s.selected_face_count << ", annotations: " << s.annotation_count
            << '\n';
  std::cout << "bvh_build_ms: " << s.bvh_build_ms << '\n';
  std::cout << "last gesture ms: raster " << s.last_timings.raster_ms << ", cast "
            << s.last_timings.cast_ms << ", refine " << s.last_timings.refine_ms << '\n';
}

int run_stats(const std::string& mesh_path) {
  Session session;
  try {
    session.load_mesh(mesh_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  const SessionStats s = session.stats();
  std::cout << "vertices: " << s.vertex_count << ", faces: " << s.face_count
            << ", triangles: " << s.triangle_count << '\n';
  std::cout << "bvh_build_ms: " << s.bvh_build_ms << '\n';
  if (const auto dropped = session.scene().mesh.dropped_triangle_count; dropped > 0) {
    std::cout << "warning: dropped " << dropped << " degenerate triangles\n";
  }
  return kExitOk;
}

int run_replay(const std::string& mesh_path, const std::string& trace_path, const std::string& out_path,
               const std::string& doc_path, bool allow_mismatch) {
  Session session;
  GestureTrace trace;
  try {
    session.load_mesh(mesh_path);
    trace = parse_trace(read_text_file(trace_path));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  if (!doc_path.empty()) {
    try {
      std::vector<std::string> warnings;
      session.load_document(read_text_file(doc_path), allow_mismatch, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    } catch (const Error& e) {
      std::cerr << "error: " << e.what() << '\n';
      return e.code() == ErrorCode::FingerprintMismatch ? kExitValidation : kExitInput;
    }
  }
  try {
    replay_trace(session, trace);
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return kExitReplay;
  }
  try {
    write_text_file(out_path, save_document(session.document()));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  print_stats(session.stats());
  return kExitOk;
}

int run_validate(const std::string& doc_path, const std::string& mesh_path, bool as_json) {
  std::string text;
  std::optional<MeshFingerprint> mesh;
  try {
    text = read_text_file(doc_path);
    if (!mesh_path.empty()) mesh = fingerprint(load_obj_file(mesh_path));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  const std::vector<Finding> findings = validate_document(text, mesh ? &*mesh : nullptr);
  if (as_json) {
    nlohmann::ordered_json report;
    report["document"] = doc_path;
    report["violations"] = findings.size();
    report["findings"] = nlohmann::ordered_json::array();
    for (const auto& f : findings) {
      report["findings"].push_back({{"code", f.code}, {"path", f.path}, {"message", f.message},
                                    {"record", f.record_id.empty() ? nlohmann::ordered_json(nullptr)
                                                                   : nlohmann::ordered_json(f.record_id)}});
    }
    std::cout << report.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) << '\n';
  } else {
    for (const auto& f : findings) {
      std::cout << f.code << " at " << (f.path.empty() ? "/" : f.path);
      if (!f.record_id.empty()) std::cout << " (record " << f.record_id << ")";
      std::cout << ": " << f.message << '\n';
    }
    std::cout << findings.size() << " violations\n";
  }
  return findings.empty() ? kExitOk : kExitValidation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Headless mesh region annotation engine"};
  app.require_subcommand(1);

  std::string mesh_path, trace_path, out_path, doc_path, socket_path;
  bool allow_mismatch = false, as_json = false, pipe = false;

  auto* replay = app.add_subcommand("replay", "Replay a gesture trace into an annotation document");
  replay->add_option("mesh", mesh_path, "OBJ mesh")->required();
  replay->add_option("trace", trace_path, "Gesture trace JSON")->required();
  replay->add_option("-o,--output", out_path, "Output .anno.json")->required();
  replay->add_option("--doc", doc_path, "Existing document to continue from");
  replay->add_flag("--allow-mesh-mismatch", allow_mismatch, "Warn instead of failing on fingerprint mismatch");

  auto* validate = app.add_subcommand("validate", "Check an annotation document");
  validate->add_option("doc", doc_path, "Annotation document")->required();
  validate->add_option("--mesh", mesh_path, "Mesh the document must match");
  validate->add_flag("--json", as_json, "Machine-readable report");

  auto* stats = app.add_subcommand("stats", "Print mesh statistics");
  stats->add_option("mesh", mesh_path, "OBJ mesh")->required();

  auto* serve = app.add_subcommand("serve", "Run the boundary API");
  auto* pipe_flag = serve->add_flag("--pipe", pipe, "JSON lines over stdin/stdout (default)");
  serve->add_option("--socket", socket_path, "Unix domain socket path")->excludes(pipe_flag);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  if (*replay) return run_replay(mesh_path, trace_path, out_path, doc_path, allow_mismatch);
  if (*validate) return run_validate(doc_path, mesh_path, as_json);
  if (*stats) return run_stats(mesh_path);
  if (*serve) return socket_path.empty() ? serve_pipe(std::cin, std::cout) : serve_socket(socket_path);
  return kExitInput;
}
