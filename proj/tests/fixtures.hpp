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

// Shared document fixtures for the unit tests and the acceptance binary.

#include <random>
#include <string>
#include <vector>

#include "meshanno/annotation.hpp"

namespace meshanno::fixtures {

/// Fingerprint of grid_plane(4).
const MeshFingerprint& small_grid_fingerprint();

SelectionSet bound_selection(std::vector<Index> faces, const MeshFingerprint& fp = small_grid_fingerprint());

/// The three-record document stored as the golden file.
AnnotationDocument golden_document();
std::string golden_path();

/// Random fingerprint, records with awkward UTF-8 text, random edits and
/// deletions.
AnnotationDocument random_document(std::mt19937_64& rng);

}  // namespace meshanno::fixtures
