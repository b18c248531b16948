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

#include <stdexcept>
#include <string>
#include <string_view>

namespace meshanno {

enum class ErrorCode {
  MalformedStatement,
  IndexOutOfRange,
  EmptyMesh,
  NoMesh,
  InvalidCamera,
  InvalidRay,
  OutOfViewport,
  InvalidGesture,
  DegenerateOutline,
  EmptySeed,
  EmptySelection,
  MeshMismatch,
  UnknownId,
  InvalidFaces,
  InvalidColor,
  InvalidText,
  SchemaViolation,
  VersionUnsupported,
  FingerprintMismatch,
  TraceSchemaViolation,
  Io,
};

// Stable snake_case name, used in structured error objects.
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string detail = {})
      : std::runtime_error(std::move(message)), code_(code), detail_(std::move(detail)) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace meshanno
