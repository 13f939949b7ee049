// Copyright 2026 The uvkit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UVKIT_FRAME_HPP_
#define UVKIT_FRAME_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "uvkit/errors.hpp"

namespace uvkit {

/// Grayscale image, row-major luminance values in [0,1]. Immutable by
/// convention once filled in; every operation takes frames by const
/// reference and returns new values.
struct Frame {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;  // width * height values
  std::uint64_t seq = 0;       // position in its sequence

  double at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  double& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  const double* row(int y) const {
    return pixels.data() + static_cast<std::size_t>(y) * width;
  }
  bool contains(int x, int y) const {
    return x >= 0 && x < width && y >= 0 && y < height;
  }
};

/// Builds a constant frame; throws DomainError for non-positive dimensions.
Frame make_frame(int width, int height, double fill = 0.0, std::uint64_t seq = 0);

/// Checks the Frame invariants (positive dims, pixel count, values in [0,1]).
void validate_frame(const Frame& f);

/// Integer pixel position; y grows downward.
struct PatchCenter {
  int x = 0;
  int y = 0;
  bool operator==(const PatchCenter&) const = default;
};

/// Odd-sized (2*half+1)^2 window around a center pixel, row-major copy.
struct Patch {
  PatchCenter center;
  int half = 1;
  std::vector<double> pixels;

  int side() const { return 2 * half + 1; }
  double at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * side() + x];
  }
};

/// True when the (2*half+1) window around center lies fully inside the frame.
bool patch_fits(const Frame& f, PatchCenter center, int half);

/// Copies the window around center out of the frame.
/// Throws DomainError when any window pixel falls outside the frame; callers
/// are expected to pre-clip candidate centers.
Patch extract_patch(const Frame& f, PatchCenter center, int half);

/// Zero-mean normalized cross-correlation of two same-sized patches,
/// clamped to [-1,1]. A patch with zero variance (all values equal) scores 0,
/// so featureless regions never match. Throws DomainError on dimension
/// mismatch.
double correlation(const Patch& a, const Patch& b);

namespace detail {

/// Read-only strided 2-D window. Lets the tracker and the baseline score
/// frame windows in place; scoring a view row by row produces bit-identical
/// results to scoring the copied patch.
struct View2d {
  const double* data = nullptr;
  int rows = 0;
  int cols = 0;
  std::size_t stride = 0;  // elements between row starts

  const double* row(int r) const { return data + static_cast<std::size_t>(r) * stride; }
};

View2d patch_view(const Patch& p);

/// View of the window around center; the caller guarantees patch_fits.
View2d window_view(const Frame& f, PatchCenter center, int half);

/// NCC over two equal-shaped views; the engine behind correlation().
double ncc(const View2d& a, const View2d& b);

}  // namespace detail

}  // namespace uvkit

#endif  // UVKIT_FRAME_HPP_
