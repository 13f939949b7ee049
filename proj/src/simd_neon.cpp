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

// NEON kernel set for aarch64, where 128-bit NEON is architecturally
// guaranteed. Compiled only on ARM builds.

#include "uvkit/simd.hpp"

#if defined(UVKIT_HAVE_NEON)

#include <arm_neon.h>

namespace uvkit::simd {
namespace {

double sum_neon(const double* x, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vld1q_f64(x + i));
    acc1 = vaddq_f64(acc1, vld1q_f64(x + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot_neon(const double* x, const double* y, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vfmaq_f64(acc0, vld1q_f64(x + i), vld1q_f64(y + i));
    acc1 = vfmaq_f64(acc1, vld1q_f64(x + i + 2), vld1q_f64(y + i + 2));
  }
  double s = vaddvq_f64(vaddq_f64(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_neon(double* y, double a, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), va, vld1q_f64(x + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void mul_acc_neon(double* acc, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(acc + i, vfmaq_f64(vld1q_f64(acc + i), vld1q_f64(x + i), vld1q_f64(y + i)));
  }
  for (; i < n; ++i) acc[i] += x[i] * y[i];
}

CenteredStats centered_stats_neon(const double* a, const double* b, double mean_a,
                                  double mean_b, std::size_t n) {
  const float64x2_t vma = vdupq_n_f64(mean_a);
  const float64x2_t vmb = vdupq_n_f64(mean_b);
  float64x2_t saa = vdupq_n_f64(0.0);
  float64x2_t sbb = vdupq_n_f64(0.0);
  float64x2_t sab = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t da = vsubq_f64(vld1q_f64(a + i), vma);
    const float64x2_t db = vsubq_f64(vld1q_f64(b + i), vmb);
    saa = vfmaq_f64(saa, da, da);
    sbb = vfmaq_f64(sbb, db, db);
    sab = vfmaq_f64(sab, da, db);
  }
  CenteredStats s;
  s.saa = vaddvq_f64(saa);
  s.sbb = vaddvq_f64(sbb);
  s.sab = vaddvq_f64(sab);
  for (; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    s.saa += da * da;
    s.sbb += db * db;
    s.sab += da * db;
  }
  return s;
}

const Kernels kNeon = {
    "neon", &sum_neon, &dot_neon, &axpy_neon, &mul_acc_neon, &centered_stats_neon,
};

}  // namespace

namespace detail {
const Kernels* neon_kernels() { return &kNeon; }
}  // namespace detail

}  // namespace uvkit::simd

#endif  // UVKIT_HAVE_NEON
