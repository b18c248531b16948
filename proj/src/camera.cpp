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

#include "meshanno/camera.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "meshanno/error.hpp"

namespace meshanno {

Rayd make_ray(const Vec3d& origin, const Vec3d& direction) {
  const double n = direction.norm();
  if (!(n > 0.0) || !std::isfinite(n) || !origin.allFinite()) {
    throw Error(ErrorCode::InvalidRay, "ray direction must be finite and non-zero");
  }
  return {origin, direction / n};
}

void check_camera(const Camera& camera) {
  if (!camera.position.allFinite() || !camera.target.allFinite() || !camera.up.allFinite()) {
    throw Error(ErrorCode::InvalidCamera, "camera vectors must be finite");
  }
  const Vec3d view = camera.target - camera.position;
  if (!(view.norm() > 0.0)) throw Error(ErrorCode::InvalidCamera, "camera position equals target");
  if (!(camera.up.norm() > 0.0) || view.normalized().cross(camera.up.normalized()).norm() < 1e-9) {
    throw Error(ErrorCode::InvalidCamera, "camera up is zero or parallel to the view direction");
  }
  if (!(camera.vfov_deg > 0.0 && camera.vfov_deg < 180.0)) {
    throw Error(ErrorCode::InvalidCamera, "vfov_deg must lie in (0, 180)");
  }
  if (camera.viewport_w <= 0 || camera.viewport_h <= 0) {
    throw Error(ErrorCode::InvalidCamera, "viewport dimensions must be positive");
  }
  if (!(camera.near > 0.0) || !std::isfinite(camera.near)) {
    throw Error(ErrorCode::InvalidCamera, "near must be positive");
  }
}

CameraBasis camera_basis(const Camera& camera) {
  check_camera(camera);
  CameraBasis basis;
  basis.forward = (camera.target - camera.position).normalized();
  basis.right = basis.forward.cross(camera.up).normalized();
  basis.up = basis.right.cross(basis.forward);
  return basis;
}

RayGenerator::RayGenerator(const Camera& camera)
    : origin_(camera.position),
      basis_(camera_basis(camera)),
      tan_half_(std::tan(camera.vfov_deg * std::numbers::pi / 360.0)),
      aspect_(static_cast<double>(camera.viewport_w) / camera.viewport_h),
      inv_w_(1.0 / camera.viewport_w),
      inv_h_(1.0 / camera.viewport_h) {}

Rayd RayGenerator::operator()(Index px, Index py) const {
  const double ndc_x = (px + 0.5) * inv_w_ * 2.0 - 1.0;
  const double ndc_y = 1.0 - (py + 0.5) * inv_h_ * 2.0;
  const Vec3d dir = basis_.forward + (ndc_x * tan_half_ * aspect_) * basis_.right +
                    (ndc_y * tan_half_) * basis_.up;
  return {origin_, dir.normalized()};
}

Rayd pixel_to_ray(const Camera& camera, Index px, Index py) {
  check_camera(camera);
  if (px < 0 || py < 0 || px >= camera.viewport_w || py >= camera.viewport_h) {
    throw Error(ErrorCode::OutOfViewport,
                "pixel (" + std::to_string(px) + ", " + std::to_string(py) + ") outside viewport");
  }
  return RayGenerator(camera)(px, py);
}

}  // namespace meshanno
