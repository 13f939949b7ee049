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

#include "uvkit/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "uvkit/simd.hpp"

namespace uvkit {

Frame make_frame(int width, int height, double fill, std::uint64_t seq) {
  if (width < 1 || height < 1) {
    throw DomainError("frame dimensions must be at least 1x1, got " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  Frame f;
  f.width = width;
  f.height = height;
  f.seq = seq;
  f.pixels.assign(static_cast<std::size_t>(width) * height, fill);
  return f;
}

void validate_frame(const Frame& f) {
  if (f.width < 1 || f.height < 1) {
    throw DomainError("frame dimensions must be at least 1x1");
  }
  if (f.pixels.size() != static_cast<std::size_t>(f.width) * f.height) {
    throw DomainError("frame pixel count does not match width*height");
  }
  for (double v : f.pixels) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("frame luminance outside [0,1]");
    }
  }
}

bool patch_fits(const Frame& f, PatchCenter c, int half) {
  return half >= 1 && c.x - half >= 0 && c.y - half >= 0 && c.x + half < f.width &&
         c.y + half < f.height;
}

Patch extract_patch(const Frame& f, PatchCenter center, int half) {
  if (half < 1) throw DomainError("patch half-size must be at least 1");
  if (!patch_fits(f, center, half)) {
    throw DomainError("patch window around (" + std::to_string(center.x) + "," +
                      std::to_string(center.y) + ") with half " + std::to_string(half) +
                      " is out of bounds for a " + std::to_string(f.width) + "x" +
                      std::to_string(f.height) + " frame");
  }
  Patch p;
  p.center = center;
  p.half = half;
  const int side = p.side();
  p.pixels.resize(static_cast<std::size_t>(side) * side);
  for (int r = 0; r < side; ++r) {
    const double* src = f.row(center.y - half + r) + (center.x - half);
    std::copy(src, src + side, p.pixels.begin() + static_cast<std::size_t>(r) * side);
  }
  return p;
}

namespace detail {

View2d patch_view(const Patch& p) {
  return View2d{p.pixels.data(), p.side(), p.side(), static_cast<std::size_t>(p.side())};
}

View2d window_view(const Frame& f, PatchCenter center, int half) {
  const int side = 2 * half + 1;
  return View2d{f.row(center.y - half) + (center.x - half), side, side,
                static_cast<std::size_t>(f.width)};
}

namespace {

bool all_equal(const View2d& v) {
  const double first = v.data[0];
  for (int r = 0; r < v.rows; ++r) {
    const double* p = v.row(r);
    for (int c = 0; c < v.cols; ++c) {
      if (p[c] != first) return false;
    }
  }
  return true;
}

}  // namespace

double ncc(const View2d& a, const View2d& b) {
  const auto& k = simd::active_kernels();
  const std::size_t n = static_cast<std::size_t>(a.rows) * a.cols;
  if (n == 0) return 0.0;

  // Constant windows have zero variance; catching them by direct comparison
  // keeps their score exactly 0 even when the mean is not representable.
  if (all_equal(a) || all_equal(b)) return 0.0;

  double sa = 0.0;
  double sb = 0.0;
  for (int r = 0; r < a.rows; ++r) {
    sa += k.sum(a.row(r), a.cols);
    sb += k.sum(b.row(r), b.cols);
  }
  const double mean_a = sa / static_cast<double>(n);
  const double mean_b = sb / static_cast<double>(n);

  simd::CenteredStats s;
  for (int r = 0; r < a.rows; ++r) {
    const simd::CenteredStats rs = k.centered_stats(a.row(r), b.row(r), mean_a, mean_b, a.cols);
    s.saa += rs.saa;
    s.sbb += rs.sbb;
    s.sab += rs.sab;
  }
  if (s.saa <= 0.0 || s.sbb <= 0.0) return 0.0;
  const double r = s.sab / (std::sqrt(s.saa) * std::sqrt(s.sbb));
  return std::clamp(r, -1.0, 1.0);
}

}  // namespace detail

double correlation(const Patch& a, const Patch& b) {
  if (a.half != b.half || a.pixels.size() != b.pixels.size()) {
    throw DomainError("correlation requires patches of identical dimensions");
  }
  return detail::ncc(detail::patch_view(a), detail::patch_view(b));
}

}  // namespace uvkit
