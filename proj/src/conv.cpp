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

#include "uvkit/conv.hpp"

#include <string>

#include "uvkit/simd.hpp"

namespace uvkit {

namespace {

void check_positive(int v, const char* what) {
  if (v < 1) throw DomainError(std::string(what) + " must be at least 1");
}

void check_odd_kernel(int lk) {
  check_positive(lk, "kernel size");
  if (lk % 2 == 0) {
    throw DomainError("kernel size must be odd, got " + std::to_string(lk));
  }
}

// Input copy with (lk-1)/2 rings of explicit zeros. The convolutions sweep
// the full window over it with no boundary branches, so the MAC counter
// includes the multiplies against padding.
Tensor3 zero_padded(const Tensor3& in, int pad) {
  Tensor3 p = make_tensor(in.h + 2 * pad, in.w + 2 * pad, in.c, 0.0);
  for (int y = 0; y < in.h; ++y) {
    const double* src = in.pixel(y, 0);
    double* dst = p.pixel(y + pad, pad);
    std::copy(src, src + static_cast<std::size_t>(in.w) * in.c, dst);
  }
  return p;
}

}  // namespace

Tensor3 make_tensor(int h, int w, int c, double fill) {
  check_positive(h, "tensor height");
  check_positive(w, "tensor width");
  check_positive(c, "tensor channels");
  Tensor3 t;
  t.h = h;
  t.w = w;
  t.c = c;
  t.data.assign(static_cast<std::size_t>(h) * w * c, fill);
  return t;
}

Kernel4 make_kernel4(int lk, int m, int n, double fill) {
  check_odd_kernel(lk);
  check_positive(m, "input channels");
  check_positive(n, "output channels");
  Kernel4 k;
  k.lk = lk;
  k.m = m;
  k.n = n;
  k.data.assign(static_cast<std::size_t>(lk) * lk * m * n, fill);
  return k;
}

DepthwiseKernel make_depthwise(int lk, int m, double fill) {
  check_odd_kernel(lk);
  check_positive(m, "input channels");
  DepthwiseKernel k;
  k.lk = lk;
  k.m = m;
  k.data.assign(static_cast<std::size_t>(lk) * lk * m, fill);
  return k;
}

PointwiseKernel make_pointwise(int m, int n, double fill) {
  check_positive(m, "input channels");
  check_positive(n, "output channels");
  PointwiseKernel k;
  k.m = m;
  k.n = n;
  k.data.assign(static_cast<std::size_t>(m) * n, fill);
  return k;
}

ConvOutput conv2d_standard(const Tensor3& input, const Kernel4& kernel) {
  check_odd_kernel(kernel.lk);
  if (input.c != kernel.m) {
    throw DomainError("channel mismatch: input has " + std::to_string(input.c) +
                      " channels, kernel expects " + std::to_string(kernel.m));
  }
  const auto& ks = simd::active_kernels();
  const int pad = (kernel.lk - 1) / 2;
  const Tensor3 padded = zero_padded(input, pad);

  ConvOutput out;
  out.tensor = make_tensor(input.h, input.w, kernel.n, 0.0);
  for (int y = 0; y < input.h; ++y) {
    for (int x = 0; x < input.w; ++x) {
      double* acc = out.tensor.pixel(y, x);
      for (int i = 0; i < kernel.lk; ++i) {
        for (int j = 0; j < kernel.lk; ++j) {
          const double* in_px = padded.pixel(y + i, x + j);
          for (int ch = 0; ch < kernel.m; ++ch) {
            ks.axpy(acc, in_px[ch], kernel.out_row(i, j, ch), kernel.n);
            out.macs += kernel.n;
          }
        }
      }
    }
  }
  return out;
}

ConvOutput depthwise_conv(const Tensor3& input, const DepthwiseKernel& dk) {
  check_odd_kernel(dk.lk);
  if (input.c != dk.m) {
    throw DomainError("channel mismatch: input has " + std::to_string(input.c) +
                      " channels, depthwise kernel expects " + std::to_string(dk.m));
  }
  const auto& ks = simd::active_kernels();
  const int pad = (dk.lk - 1) / 2;
  const Tensor3 padded = zero_padded(input, pad);

  ConvOutput out;
  out.tensor = make_tensor(input.h, input.w, dk.m, 0.0);
  for (int y = 0; y < input.h; ++y) {
    for (int x = 0; x < input.w; ++x) {
      double* acc = out.tensor.pixel(y, x);
      for (int i = 0; i < dk.lk; ++i) {
        for (int j = 0; j < dk.lk; ++j) {
          ks.mul_acc(acc, dk.tap_row(i, j), padded.pixel(y + i, x + j), dk.m);
          out.macs += dk.m;
        }
      }
    }
  }
  return out;
}

ConvOutput pointwise_conv(const Tensor3& input, const PointwiseKernel& pk) {
  if (input.c != pk.m) {
    throw DomainError("channel mismatch: input has " + std::to_string(input.c) +
                      " channels, pointwise kernel expects " + std::to_string(pk.m));
  }
  const auto& ks = simd::active_kernels();
  ConvOutput out;
  out.tensor = make_tensor(input.h, input.w, pk.n, 0.0);
  for (int y = 0; y < input.h; ++y) {
    for (int x = 0; x < input.w; ++x) {
      double* acc = out.tensor.pixel(y, x);
      const double* in_px = input.pixel(y, x);
      for (int ch = 0; ch < pk.m; ++ch) {
        ks.axpy(acc, in_px[ch], pk.out_row(ch), pk.n);
        out.macs += pk.n;
      }
    }
  }
  return out;
}

ConvOutput separable_conv(const Tensor3& input, const DepthwiseKernel& dk,
                          const PointwiseKernel& pk) {
  if (dk.m != pk.m) {
    throw DomainError("channel mismatch: depthwise has " + std::to_string(dk.m) +
                      " channels, pointwise expects " + std::to_string(pk.m));
  }
  ConvOutput stage1 = depthwise_conv(input, dk);
  ConvOutput stage2 = pointwise_conv(stage1.tensor, pk);
  stage2.macs += stage1.macs;
  return stage2;
}

Kernel4 compose_separable_kernel(const DepthwiseKernel& dk, const PointwiseKernel& pk) {
  if (dk.m != pk.m) {
    throw DomainError("channel mismatch: depthwise has " + std::to_string(dk.m) +
                      " channels, pointwise expects " + std::to_string(pk.m));
  }
  Kernel4 k = make_kernel4(dk.lk, dk.m, pk.n, 0.0);
  for (int i = 0; i < dk.lk; ++i) {
    for (int j = 0; j < dk.lk; ++j) {
      for (int ch_in = 0; ch_in < dk.m; ++ch_in) {
        const double w = dk.at(i, j, ch_in);
        for (int ch_out = 0; ch_out < pk.n; ++ch_out) {
          k.at(i, j, ch_in, ch_out) = w * pk.at(ch_in, ch_out);
        }
      }
    }
  }
  return k;
}

}  // namespace uvkit
