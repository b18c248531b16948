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

#include "json.hpp"
#include "meshanno/error.hpp"
#include "meshanno/raster.hpp"
#include "meshanno/selection.hpp"

namespace meshanno {

inline constexpr int kTraceVersion = 1;

/// One gesture as sent by a client or stored in a trace.
struct GestureRequest {
  GestureKind kind = GestureKind::Brush;
  Camera camera;
  std::vector<ScreenPoint> points;
  double width_px = 0;  // brush only
  bool additive = false;
};

struct AnnotateAction {
  std::string text;
  Rgb color;
};

/// A trace entry. Either part may be absent but not both: a gesture alone
/// selects, an annotate alone commits the current selection, both together
/// select and then commit.
struct TraceEntry {
  std::optional<GestureRequest> gesture;
  std::optional<AnnotateAction> annotate;
};

struct GestureTrace {
  std::vector<TraceEntry> entries;
};

// JSON forms; parse functions throw `code` with a JSON path in the message.
nlohmann::json camera_to_json(const Camera& camera);
Camera camera_from_json(const nlohmann::json& j, ErrorCode code, const std::string& path = "/camera");
nlohmann::json gesture_to_json(const GestureRequest& gesture);
GestureRequest gesture_from_json(const nlohmann::json& j, ErrorCode code, const std::string& path = "");
Rgb color_from_json(const nlohmann::json& j, ErrorCode code, const std::string& path);

GestureTrace parse_trace(std::string_view text);
std::string serialize_trace(const GestureTrace& trace);

}  // namespace meshanno
