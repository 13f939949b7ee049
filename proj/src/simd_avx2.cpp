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

// AVX2 + FMA kernel set. This translation unit is compiled with
// -mavx2 -mfma on x86-64 only; the CPU feature check below keeps the
// code paths off machines that cannot run them.

#include "uvkit/simd.hpp"

#if defined(UVKIT_HAVE_AVX2)

#include <immintrin.h>

namespace uvkit::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d swapped = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double sum_avx2(const double* x, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x + i));
    acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x + i + 4));
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i];
  return s;
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  double s = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_avx2(double* y, double a, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void mul_acc_avx2(double* acc, const double* x, const double* y, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d va = _mm256_loadu_pd(acc + i);
    va = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), va);
    _mm256_storeu_pd(acc + i, va);
  }
  for (; i < n; ++i) acc[i] += x[i] * y[i];
}

CenteredStats centered_stats_avx2(const double* a, const double* b, double mean_a,
                                  double mean_b, std::size_t n) {
  const __m256d vma = _mm256_set1_pd(mean_a);
  const __m256d vmb = _mm256_set1_pd(mean_b);
  __m256d saa = _mm256_setzero_pd();
  __m256d sbb = _mm256_setzero_pd();
  __m256d sab = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a + i), vma);
    const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b + i), vmb);
    saa = _mm256_fmadd_pd(da, da, saa);
    sbb = _mm256_fmadd_pd(db, db, sbb);
    sab = _mm256_fmadd_pd(da, db, sab);
  }
  CenteredStats s;
  s.saa = hsum(saa);
  s.sbb = hsum(sbb);
  s.sab = hsum(sab);
  for (; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    s.saa += da * da;
    s.sbb += db * db;
    s.sab += da * db;
  }
  return s;
}

const Kernels kAvx2 = {
    "avx2", &sum_avx2, &dot_avx2, &axpy_avx2, &mul_acc_avx2, &centered_stats_avx2,
};

bool cpu_supports_avx2() {
#if defined(__GNUC__) || defined(__clang__)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

namespace detail {
const Kernels* avx2_kernels() {
  static const bool ok = cpu_supports_avx2();
  return ok ? &kAvx2 : nullptr;
}
}  // namespace detail

}  // namespace uvkit::simd

#endif  // UVKIT_HAVE_AVX2
