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

#include <string>
#include <string_view>

#include "json.hpp"
#include "meshanno/session.hpp"

namespace meshanno {

inline constexpr int kApiVersion = 1;

/// Little-endian mesh blob for the viewer's renderer:
///   "MABL", u32 version, u32 vertex_count, u32 triangle_count, u32 uv_count,
///   u32 flags (bit 0: per-corner uv indices present),
///   f32[3V] positions, u32[3T] triangle indices, f32[2U] uvs,
///   i32[3T] corner uv indices (when flagged), u32[T] source face indices.
std::string encode_mesh_blob(const Mesh& mesh);

/// JSON request/response processor over one Session. Requests are
/// {"version":1, "id":..., "method":"...", "params":{...}}; responses echo the
/// id and carry either "result" or "error": {code, message, detail}.
/// Messages are handled strictly in order.
class BoundaryApi {
 public:
  explicit BoundaryApi(int workers = default_worker_count()) : session_(workers) {}

  nlohmann::json handle(const nlohmann::json& request);
  // One JSON message in, one compact JSON line out (no trailing newline).
  std::string handle_line(std::string_view line);

  Session& session() { return session_; }

 private:
  nlohmann::json dispatch(const std::string& method, const nlohmann::json& params);

  Session session_;
};

}  // namespace meshanno
