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

#include "meshanno/types.hpp"

namespace meshanno {

template <typename Scalar>
struct Ray {
  Vec3<Scalar> origin;
  Vec3<Scalar> direction;  // unit length
};

using Rayd = Ray<double>;

// Throws InvalidRay for a zero or non-finite direction.
Rayd make_ray(const Vec3d& origin, const Vec3d& direction);

/// Pinhole view state. Together with the viewport it fully determines the
/// pixel to ray mapping, so it is what gestures and traces snapshot.
struct Camera {
  Vec3d position{0, 0, 1};
  Vec3d target{0, 0, 0};
  Vec3d up{0, 1, 0};
  double vfov_deg = 45.0;
  Index viewport_w = 1;
  Index viewport_h = 1;
  double near = 1e-3;

  friend bool operator==(const Camera&, const Camera&) = default;
};

struct CameraBasis {
  Vec3d right;
  Vec3d up;
  Vec3d forward;
};

// Throws InvalidCamera when the pose or viewport is unusable.
void check_camera(const Camera& camera);
CameraBasis camera_basis(const Camera& camera);

/// Ray from the camera position through the center of pixel (px, py).
/// Throws OutOfViewport.
Rayd pixel_to_ray(const Camera& camera, Index px, Index py);

/// A pixel-to-ray mapper with the basis and tangents precomputed; used for
/// batch casting. Produces exactly the rays of `pixel_to_ray`.
class RayGenerator {
 public:
  explicit RayGenerator(const Camera& camera);
  Rayd operator()(Index px, Index py) const;

 private:
  Vec3d origin_;
  CameraBasis basis_;
  double tan_half_ = 0;
  double aspect_ = 1;
  double inv_w_ = 1;
  double inv_h_ = 1;
};

}  // namespace meshanno
