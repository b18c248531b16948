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

#include "meshanno/rpc.hpp"

#include <cstring>

#include <openssl/evp.h>

#include "meshanno/error.hpp"

namespace meshanno {
namespace {

using json = nlohmann::json;

class ApiError : public std::runtime_error {
 public:
  ApiError(std::string code, const std::string& message, std::string detail = {})
      : std::runtime_error(message), code(std::move(code)), detail(std::move(detail)) {}
  std::string code;
  std::string detail;
};

[[noreturn]] void invalid(const std::string& message) { throw ApiError("invalid_params", message); }

template <typename T>
void put_le(std::string& out, T value) {
  static_assert(sizeof(T) == 4);
  std::uint32_t bits;
  std::memcpy(&bits, &value, 4);
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
}

std::string base64(std::string_view bytes) {
  std::string out(4 * ((bytes.size() + 2) / 3) + 1, '\0');
  const int n = EVP_EncodeBlock(reinterpret_cast<unsigned char*>(out.data()),
                                reinterpret_cast<const unsigned char*>(bytes.data()),
                                static_cast<int>(bytes.size()));
  out.resize(static_cast<std::size_t>(n));
  return out;
}

json stats_json(const SessionStats& s) {
  return {{"vertices", s.vertex_count},
          {"faces", s.face_count},
          {"triangles", s.triangle_count},
          {"selected_faces", s.selected_face_count},
          {"annotations", s.annotation_count},
          {"bvh_build_ms", s.bvh_build_ms},
          {"timings_ms",
           {{"raster", s.last_timings.raster_ms},
            {"cast", s.last_timings.cast_ms},
            {"refine", s.last_timings.refine_ms}}}};
}

json record_json(const AnnotationRecord& r) {
  return {{"id", r.id},
          {"color", {r.color.r, r.color.g, r.color.b}},
          {"text", r.text},
          {"faces", r.faces}};
}

json selection_json(const SelectionSet& s) {
  return {{"face_count", s.faces.size()},
          {"faces", s.faces},
          {"gesture_kind", s.gesture_kind == GestureKind::Brush ? "brush" : "lasso"}};
}

std::string string_param(const json& params, const char* key) {
  if (!params.contains(key) || !params[key].is_string()) invalid(std::string("'") + key + "' must be a string");
  return params[key].get<std::string>();
}

}  // namespace

std::string encode_mesh_blob(const Mesh& mesh) {
  std::string out("MABL");
  const bool corner_uvs = mesh.triangle_uvs.rows() > 0;
  put_le<std::uint32_t>(out, 1);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(mesh.vertex_count()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(mesh.triangle_count()));
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(mesh.uvs.rows()));
  put_le<std::uint32_t>(out, corner_uvs ? 1u : 0u);
  for (Index i = 0; i < mesh.vertex_count(); ++i) {
    for (int k = 0; k < 3; ++k) put_le<float>(out, static_cast<float>(mesh.vertices(i, k)));
  }
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    for (int k = 0; k < 3; ++k) put_le<std::uint32_t>(out, static_cast<std::uint32_t>(mesh.triangles(t, k)));
  }
  for (Eigen::Index i = 0; i < mesh.uvs.rows(); ++i) {
    for (int k = 0; k < 2; ++k) put_le<float>(out, static_cast<float>(mesh.uvs(i, k)));
  }
  if (corner_uvs) {
    for (Index t = 0; t < mesh.triangle_count(); ++t) {
      for (int k = 0; k < 3; ++k) put_le<std::int32_t>(out, mesh.triangle_uvs(t, k));
    }
  }
  for (Index t = 0; t < mesh.triangle_count(); ++t) {
    put_le<std::uint32_t>(out, static_cast<std::uint32_t>(mesh.source_face_of(t)));
  }
  return out;
}

json BoundaryApi::dispatch(const std::string& method, const json& params) {
  if (method == "load_mesh") {
    session_.load_mesh(string_param(params, "path"));
    const Scene& scene = session_.scene();
    json result = stats_json(session_.stats());
    result["sha256"] = scene.fingerprint.sha256;
    result["texture_path"] = scene.mesh.texture_path ? json(*scene.mesh.texture_path) : json(nullptr);
    return result;
  }
  if (method == "get_mesh_blob") {
    const std::string blob = encode_mesh_blob(session_.scene().mesh);
    return {{"layout", "MABL/1"}, {"encoding", "base64"}, {"byte_length", blob.size()}, {"data", base64(blob)}};
  }
  if (method == "set_camera") {
    if (!params.contains("camera")) invalid("'camera' is required");
    session_.set_camera(camera_from_json(params["camera"], ErrorCode::InvalidCamera));
    return {{"camera", camera_to_json(*session_.camera())}};
  }
  if (method == "get_camera") {
    return {{"camera", session_.camera() ? camera_to_json(*session_.camera()) : json(nullptr)}};
  }
  if (method == "gesture_select") {
    json gesture = params;
    if (!gesture.contains("camera")) {
      if (!session_.camera()) throw ApiError("no_camera", "no camera set and none given with the gesture");
      gesture["camera"] = camera_to_json(*session_.camera());
    }
    session_.gesture(gesture_from_json(gesture, ErrorCode::InvalidGesture));
    json result = selection_json(session_.selection());
    result["stats"] = stats_json(session_.stats());
    return result;
  }
  if (method == "get_selection") {
    session_.scene();
    return selection_json(session_.selection());
  }
  if (method == "clear_selection") {
    session_.scene();
    session_.clear_selection();
    return selection_json(session_.selection());
  }
  if (method == "commit_annotation") {
    std::string text;
    if (params.contains("text")) text = string_param(params, "text");
    const Rgb color = color_from_json(params.value("color", json()), ErrorCode::InvalidColor, "/params/color");
    return {{"id", session_.commit(std::move(text), color)}};
  }
  if (method == "update_annotation") {
    const std::string id = string_param(params, "id");
    std::optional<std::string> text;
    std::optional<Rgb> color;
    std::optional<std::vector<Index>> faces;
    if (params.contains("text")) text = string_param(params, "text");
    if (params.contains("color")) color = color_from_json(params["color"], ErrorCode::InvalidColor, "/params/color");
    if (params.contains("faces")) {
      const json& f = params["faces"];
      if (!f.is_array() || !std::all_of(f.begin(), f.end(), [](const json& x) { return x.is_number_integer(); })) {
        invalid("'faces' must be an array of integers");
      }
      faces = f.get<std::vector<Index>>();
    }
    session_.document().update(id, std::move(text), color, std::move(faces));
    return record_json(*session_.document().find(id));
  }
  if (method == "delete_annotation") {
    const std::string id = string_param(params, "id");
    session_.document().remove(id);
    return {{"deleted", id}};
  }
  if (method == "list_annotations") {
    json list = json::array();
    for (const auto& r : session_.document().annotations()) list.push_back(record_json(r));
    return {{"annotations", std::move(list)}};
  }
  if (method == "save_document") {
    const std::string text = save_document(session_.document());
    if (params.contains("path")) write_text_file(string_param(params, "path"), text);
    return {{"text", text}};
  }
  if (method == "load_document") {
    std::string text;
    if (params.contains("path")) {
      text = read_text_file(string_param(params, "path"));
    } else {
      text = string_param(params, "text");
    }
    std::vector<std::string> warnings;
    session_.load_document(text, params.value("allow_mesh_mismatch", false), &warnings);
    return {{"annotations", session_.document().annotations().size()}, {"warnings", warnings}};
  }
  if (method == "get_stats") {
    return stats_json(session_.stats());
  }
  throw ApiError("unknown_method", "unknown method '" + method + "'");
}

json BoundaryApi::handle(const json& request) {
  json response{{"version", kApiVersion}};
  response["id"] = request.is_object() && request.contains("id") ? request["id"] : json(nullptr);
  try {
    if (!request.is_object() || !request.contains("method") || !request["method"].is_string()) {
      throw ApiError("invalid_request", "request must be an object with a string 'method'");
    }
    if (request.contains("version") && request["version"] != kApiVersion) {
      throw ApiError("version_unsupported", "unsupported API version " + request["version"].dump());
    }
    const json params = request.value("params", json::object());
    if (!params.is_object()) throw ApiError("invalid_request", "'params' must be an object");
    response["result"] = dispatch(request["method"].get<std::string>(), params);
  } catch (const ApiError& e) {
    response["error"] = {{"code", e.code}, {"message", e.what()}, {"detail", e.detail}};
  } catch (const Error& e) {
    response["error"] = {{"code", error_code_name(e.code())}, {"message", e.what()}, {"detail", e.detail()}};
  } catch (const std::exception& e) {
    response["error"] = {{"code", "internal"}, {"message", e.what()}, {"detail", ""}};
  }
  return response;
}

std::string BoundaryApi::handle_line(std::string_view line) {
  const json request = json::parse(line, nullptr, false);
  if (request.is_discarded()) {
    json response{{"version", kApiVersion}, {"id", nullptr}};
    response["error"] = {{"code", "parse_error"}, {"message", "request is not valid JSON"}, {"detail", ""}};
    return response.dump(-1, ' ', false, json::error_handler_t::replace);
  }
  return handle(request).dump(-1, ' ', false, json::error_handler_t::replace);
}

}  // namespace meshanno
