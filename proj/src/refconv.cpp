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

#include "uvkit/refconv.hpp"

#include <algorithm>
#include <cmath>

namespace uvkit::refconv {

namespace {

double padded_at(const Tensor3& t, int y, int x, int ch) {
  if (y < 0 || y >= t.h || x < 0 || x >= t.w) return 0.0;
  return t.at(y, x, ch);
}

}  // namespace

Tensor3 conv2d_standard_ref(const Tensor3& input, const Kernel4& kernel) {
  const int pad = (kernel.lk - 1) / 2;
  Tensor3 out = make_tensor(input.h, input.w, kernel.n, 0.0);
  for (int p = 0; p < input.h; ++p) {
    for (int q = 0; q < input.w; ++q) {
      for (int ch_out = 0; ch_out < kernel.n; ++ch_out) {
        double acc = 0.0;
        for (int i = 0; i < kernel.lk; ++i) {
          for (int j = 0; j < kernel.lk; ++j) {
            for (int ch_in = 0; ch_in < kernel.m; ++ch_in) {
              acc += kernel.at(i, j, ch_in, ch_out) *
                     padded_at(input, p + i - pad, q + j - pad, ch_in);
            }
          }
        }
        out.at(p, q, ch_out) = acc;
      }
    }
  }
  return out;
}

Tensor3 depthwise_ref(const Tensor3& input, const DepthwiseKernel& dk) {
  const int pad = (dk.lk - 1) / 2;
  Tensor3 out = make_tensor(input.h, input.w, dk.m, 0.0);
  for (int p = 0; p < input.h; ++p) {
    for (int q = 0; q < input.w; ++q) {
      for (int ch = 0; ch < dk.m; ++ch) {
        double acc = 0.0;
        for (int i = 0; i < dk.lk; ++i) {
          for (int j = 0; j < dk.lk; ++j) {
            acc += dk.at(i, j, ch) * padded_at(input, p + i - pad, q + j - pad, ch);
          }
        }
        out.at(p, q, ch) = acc;
      }
    }
  }
  return out;
}

Tensor3 pointwise_ref(const Tensor3& input, const PointwiseKernel& pk) {
  Tensor3 out = make_tensor(input.h, input.w, pk.n, 0.0);
  for (int p = 0; p < input.h; ++p) {
    for (int q = 0; q < input.w; ++q) {
      for (int ch_out = 0; ch_out < pk.n; ++ch_out) {
        double acc = 0.0;
        for (int ch_in = 0; ch_in < pk.m; ++ch_in) {
          acc += input.at(p, q, ch_in) * pk.at(ch_in, ch_out);
        }
        out.at(p, q, ch_out) = acc;
      }
    }
  }
  return out;
}

double max_abs_diff(const Tensor3& a, const Tensor3& b) {
  if (a.h != b.h || a.w != b.w || a.c != b.c) {
    throw DomainError("max_abs_diff requires same-shaped tensors");
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) {
    worst = std::max(worst, std::abs(a.data[i] - b.data[i]));
  }
  return worst;
}

}  // namespace uvkit::refconv
