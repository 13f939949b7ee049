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

#ifndef UVKIT_CONV_HPP_
#define UVKIT_CONV_HPP_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "uvkit/errors.hpp"

namespace uvkit {

/// Feature map: h rows, w cols, c channels. Channel-minor layout
/// (index = (y*w + x)*c + ch) keeps the per-pixel channel vector contiguous,
/// which is what the pointwise stage wants.
struct Tensor3 {
  int h = 0;
  int w = 0;
  int c = 0;
  std::vector<double> data;

  double at(int y, int x, int ch) const {
    return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
  }
  double& at(int y, int x, int ch) {
    return data[(static_cast<std::size_t>(y) * w + x) * c + ch];
  }
  const double* pixel(int y, int x) const {
    return data.data() + (static_cast<std::size_t>(y) * w + x) * c;
  }
  double* pixel(int y, int x) {
    return data.data() + (static_cast<std::size_t>(y) * w + x) * c;
  }
};

Tensor3 make_tensor(int h, int w, int c, double fill = 0.0);

/// Full convolution kernel, spatial size lk x lk, m input channels, n output
/// channels. index = ((i*lk + j)*m + ch_in)*n + ch_out, so the ch_out vector
/// for a fixed tap and input channel is contiguous.
struct Kernel4 {
  int lk = 0;
  int m = 0;
  int n = 0;
  std::vector<double> data;

  double at(int i, int j, int ch_in, int ch_out) const {
    return data[((static_cast<std::size_t>(i) * lk + j) * m + ch_in) * n + ch_out];
  }
  double& at(int i, int j, int ch_in, int ch_out) {
    return data[((static_cast<std::size_t>(i) * lk + j) * m + ch_in) * n + ch_out];
  }
  const double* out_row(int i, int j, int ch_in) const {
    return data.data() + ((static_cast<std::size_t>(i) * lk + j) * m + ch_in) * n;
  }
};

Kernel4 make_kernel4(int lk, int m, int n, double fill = 0.0);

/// Per-channel spatial filter: one lk x lk tap set per input channel.
/// index = (i*lk + j)*m + ch.
struct DepthwiseKernel {
  int lk = 0;
  int m = 0;
  std::vector<double> data;

  double at(int i, int j, int ch) const {
    return data[(static_cast<std::size_t>(i) * lk + j) * m + ch];
  }
  double& at(int i, int j, int ch) {
    return data[(static_cast<std::size_t>(i) * lk + j) * m + ch];
  }
  const double* tap_row(int i, int j) const {
    return data.data() + (static_cast<std::size_t>(i) * lk + j) * m;
  }
};

DepthwiseKernel make_depthwise(int lk, int m, double fill = 0.0);

/// 1x1 cross-channel combination, m inputs to n outputs. index = ch_in*n + ch_out.
struct PointwiseKernel {
  int m = 0;
  int n = 0;
  std::vector<double> data;

  double at(int ch_in, int ch_out) const {
    return data[static_cast<std::size_t>(ch_in) * n + ch_out];
  }
  double& at(int ch_in, int ch_out) {
    return data[static_cast<std::size_t>(ch_in) * n + ch_out];
  }
  const double* out_row(int ch_in) const {
    return data.data() + static_cast<std::size_t>(ch_in) * n;
  }
};

PointwiseKernel make_pointwise(int m, int n, double fill = 0.0);

/// Convolution result plus the exact number of multiply-accumulates the
/// call performed. The implementations always sweep the full kernel window
/// over an explicitly zero-padded input, so the counter lands on
/// lk^2 * m * n * h * w (or the depthwise/pointwise analogue) by counting,
/// not by formula.
struct ConvOutput {
  Tensor3 tensor;
  std::uint64_t macs = 0;
};

/// Standard convolution with same-size output and implicit zero padding of
/// (lk-1)/2 per border. Throws DomainError on channel mismatch or an even
/// kernel.
ConvOutput conv2d_standard(const Tensor3& input, const Kernel4& kernel);

/// Depthwise stage: each input channel is filtered by its own lk x lk taps.
ConvOutput depthwise_conv(const Tensor3& input, const DepthwiseKernel& dk);

/// Pointwise stage: per-pixel linear combination of channels, m to n.
ConvOutput pointwise_conv(const Tensor3& input, const PointwiseKernel& pk);

/// Depthwise followed by pointwise; macs is the sum of both stages.
ConvOutput separable_conv(const Tensor3& input, const DepthwiseKernel& dk,
                          const PointwiseKernel& pk);

/// Materializes K[i,j,m,n] = dk[i,j,m] * pk[m,n], the rank-1 kernel whose
/// standard convolution matches separable_conv on every input.
Kernel4 compose_separable_kernel(const DepthwiseKernel& dk, const PointwiseKernel& pk);

// Flat binary container: magic "UVK1", 32-bit LE rank, 32-bit LE dims,
// then 64-bit LE float values in the documented index order.
// Tensor3 dims are (h,w,c); Kernel4 (lk,lk,m,n); DepthwiseKernel (lk,lk,m);
// PointwiseKernel (m,n).

void write_tensor(const Tensor3& t, const std::filesystem::path& path);
Tensor3 read_tensor(const std::filesystem::path& path);
void write_kernel4(const Kernel4& k, const std::filesystem::path& path);
Kernel4 read_kernel4(const std::filesystem::path& path);
void write_depthwise(const DepthwiseKernel& k, const std::filesystem::path& path);
DepthwiseKernel read_depthwise(const std::filesystem::path& path);
void write_pointwise(const PointwiseKernel& k, const std::filesystem::path& path);
PointwiseKernel read_pointwise(const std::filesystem::path& path);

}  // namespace uvkit

#endif  // UVKIT_CONV_HPP_
