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

#include "meshanno/trace.hpp"

#include "meshanno/error.hpp"

namespace meshanno {
namespace {

using json = nlohmann::json;

[[noreturn]] void fail(ErrorCode code, const std::string& path, const std::string& what) {
  throw Error(code, (path.empty() ? std::string("/") : path) + ": " + what, path);
}

const json& require(const json& obj, const char* key, ErrorCode code, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) fail(code, path + "/" + key, "missing");
  return obj[key];
}

double number(const json& j, ErrorCode code, const std::string& path) {
  if (!j.is_number()) fail(code, path, "expected a number");
  return j.get<double>();
}

Vec3d vec3(const json& j, ErrorCode code, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(code, path, "expected [x, y, z]");
  return {number(j[0], code, path + "/0"), number(j[1], code, path + "/1"), number(j[2], code, path + "/2")};
}

json vec3_json(const Vec3d& v) { return json::array({v.x(), v.y(), v.z()}); }

Index positive_int(const json& j, ErrorCode code, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() <= 0 || j.get<long long>() > (1 << 20)) {
    fail(code, path, "expected a positive integer");
  }
  return j.get<Index>();
}

}  // namespace

json camera_to_json(const Camera& c) {
  return {{"position", vec3_json(c.position)},
          {"target", vec3_json(c.target)},
          {"up", vec3_json(c.up)},
          {"vfov_deg", c.vfov_deg},
          {"viewport", json::array({c.viewport_w, c.viewport_h})},
          {"near", c.near}};
}

Camera camera_from_json(const json& j, ErrorCode code, const std::string& path) {
  if (!j.is_object()) fail(code, path, "camera must be an object");
  Camera c;
  c.position = vec3(require(j, "position", code, path), code, path + "/position");
  c.target = vec3(require(j, "target", code, path), code, path + "/target");
  c.up = vec3(require(j, "up", code, path), code, path + "/up");
  c.vfov_deg = number(require(j, "vfov_deg", code, path), code, path + "/vfov_deg");
  const json& vp = require(j, "viewport", code, path);
  if (!vp.is_array() || vp.size() != 2) fail(code, path + "/viewport", "expected [width, height]");
  c.viewport_w = positive_int(vp[0], code, path + "/viewport/0");
  c.viewport_h = positive_int(vp[1], code, path + "/viewport/1");
  if (j.contains("near")) c.near = number(j["near"], code, path + "/near");
  try {
    check_camera(c);
  } catch (const Error& e) {
    fail(code, path, e.what());
  }
  return c;
}

Rgb color_from_json(const json& j, ErrorCode code, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(code, path, "color must be [r, g, b]");
  int ch[3];
  for (int k = 0; k < 3; ++k) {
    if (!j[k].is_number_integer() || j[k].get<long long>() < 0 || j[k].get<long long>() > 255) {
      fail(code, path + "/" + std::to_string(k), "channel must be an integer in [0, 255]");
    }
    ch[k] = j[k].get<int>();
  }
  return {ch[0], ch[1], ch[2]};
}

json gesture_to_json(const GestureRequest& g) {
  json j;
  j["kind"] = g.kind == GestureKind::Brush ? "brush" : "lasso";
  j["camera"] = camera_to_json(g.camera);
  json pts = json::array();
  for (const auto& p : g.points) pts.push_back(json::array({p.x(), p.y()}));
  j["points"] = std::move(pts);
  if (g.kind == GestureKind::Brush) j["width_px"] = g.width_px;
  if (g.additive) j["additive"] = true;
  return j;
}

GestureRequest gesture_from_json(const json& j, ErrorCode code, const std::string& path) {
  GestureRequest g;
  const json& kind = require(j, "kind", code, path);
  if (kind == "brush") {
    g.kind = GestureKind::Brush;
  } else if (kind == "lasso") {
    g.kind = GestureKind::Lasso;
  } else {
    fail(code, path + "/kind", "kind must be \"brush\" or \"lasso\"");
  }
  g.camera = camera_from_json(require(j, "camera", code, path), code, path + "/camera");
  const json& pts = require(j, "points", code, path);
  if (!pts.is_array() || pts.empty()) fail(code, path + "/points", "expected a non-empty array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = path + "/points/" + std::to_string(i);
    if (!pts[i].is_array() || pts[i].size() != 2) fail(code, p, "expected [x, y]");
    g.points.emplace_back(number(pts[i][0], code, p + "/0"), number(pts[i][1], code, p + "/1"));
  }
  const bool has_width = j.contains("width_px");
  if (g.kind == GestureKind::Brush) {
    if (!has_width) fail(code, path + "/width_px", "brush gestures need width_px");
    g.width_px = number(j["width_px"], code, path + "/width_px");
  } else if (has_width) {
    fail(code, path + "/width_px", "lasso gestures take no width_px");
  }
  if (j.contains("additive")) {
    if (!j["additive"].is_boolean()) fail(code, path + "/additive", "expected a boolean");
    g.additive = j["additive"].get<bool>();
  }
  return g;
}

GestureTrace parse_trace(std::string_view text) {
  constexpr ErrorCode code = ErrorCode::TraceSchemaViolation;
  const json root = json::parse(text, nullptr, false);
  if (root.is_discarded()) fail(code, "", "trace is not valid JSON");
  if (!root.is_object()) fail(code, "", "trace root must be an object");
  const json& version = require(root, "version", code, "");
  if (!version.is_number_integer() || version.get<long long>() != kTraceVersion) {
    fail(code, "/version", "unsupported trace version " + version.dump());
  }
  const json& entries = require(root, "entries", code, "");
  if (!entries.is_array()) fail(code, "/entries", "expected an array");

  GestureTrace trace;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string path = "/entries/" + std::to_string(i);
    const json& e = entries[i];
    if (!e.is_object()) fail(code, path, "entry must be an object");
    TraceEntry entry;
    const json& action = require(e, "action", code, path);
    if (action.is_object() && action.contains("annotate")) {
      const json& a = action["annotate"];
      const std::string apath = path + "/action/annotate";
      if (!a.is_object()) fail(code, apath, "expected an object");
      AnnotateAction ann;
      if (a.contains("text")) {
        if (!a["text"].is_string()) fail(code, apath + "/text", "expected a string");
        ann.text = a["text"].get<std::string>();
      }
      ann.color = color_from_json(require(a, "color", code, apath), code, apath + "/color");
      entry.annotate = std::move(ann);
    } else if (!(action.is_string() && action == "select")) {
      fail(code, path + "/action", "action must be \"select\" or {\"annotate\": {...}}");
    }
    if (e.contains("kind")) entry.gesture = gesture_from_json(e, code, path);
    if (!entry.gesture && !entry.annotate) fail(code, path, "select entries need a gesture");
    trace.entries.push_back(std::move(entry));
  }
  return trace;
}

std::string serialize_trace(const GestureTrace& trace) {
  nlohmann::ordered_json root;
  root["version"] = kTraceVersion;
  root["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : trace.entries) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    if (e.gesture) {
      const json g = gesture_to_json(*e.gesture);
      for (const auto& [k, v] : g.items()) j[k] = v;
    }
    if (e.annotate) {
      j["action"] = {{"annotate",
                      {{"text", e.annotate->text},
                       {"color", {e.annotate->color.r, e.annotate->color.g, e.annotate->color.b}}}}};
    } else {
      j["action"] = "select";
    }
    root["entries"].push_back(std::move(j));
  }
  return root.dump(2) + "\n";
}

}  // namespace meshanno
