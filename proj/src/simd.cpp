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

#include "uvkit/simd.hpp"

#include <cstdlib>
#include <string>

#include "uvkit/errors.hpp"

namespace uvkit::simd {

namespace {

double sum_scalar(const double* x, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i];
  return s;
}

double dot_scalar(const double* x, const double* y, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void axpy_scalar(double* y, double a, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void mul_acc_scalar(double* acc, const double* x, const double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i] * y[i];
}

CenteredStats centered_stats_scalar(const double* a, const double* b, double mean_a,
                                    double mean_b, std::size_t n) {
  CenteredStats s;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = a[i] - mean_a;
    const double db = b[i] - mean_b;
    s.saa += da * da;
    s.sbb += db * db;
    s.sab += da * db;
  }
  return s;
}

const Kernels kScalar = {
    "scalar", &sum_scalar, &dot_scalar, &axpy_scalar, &mul_acc_scalar,
    &centered_stats_scalar,
};

}  // namespace

namespace detail {
// Defined in simd_avx2.cpp / simd_neon.cpp when compiled for the platform.
const Kernels* avx2_kernels();
const Kernels* neon_kernels();

#if !defined(UVKIT_HAVE_AVX2)
const Kernels* avx2_kernels() { return nullptr; }
#endif
#if !defined(UVKIT_HAVE_NEON)
const Kernels* neon_kernels() { return nullptr; }
#endif
}  // namespace detail

const Kernels& scalar_kernels() { return kScalar; }

std::vector<const Kernels*> available_kernels() {
  std::vector<const Kernels*> out{&kScalar};
  if (const Kernels* k = detail::neon_kernels()) out.push_back(k);
  if (const Kernels* k = detail::avx2_kernels()) out.push_back(k);
  return out;
}

const Kernels* find_kernels(std::string_view name) {
  for (const Kernels* k : available_kernels()) {
    if (name == k->name) return k;
  }
  return nullptr;
}

const Kernels& choose_kernels(std::string_view forced) {
  if (forced.empty()) {
    // Widest usable variant; available_kernels() lists scalar first.
    return *available_kernels().back();
  }
  if (const Kernels* k = find_kernels(forced)) return *k;
  throw ConfigError("UVK_SIMD requests unavailable kernel set '" + std::string(forced) + "'");
}

const Kernels& active_kernels() {
  static const Kernels* chosen = [] {
    const char* env = std::getenv("UVK_SIMD");
    return &choose_kernels(env ? env : "");
  }();
  return *chosen;
}

}  // namespace uvkit::simd
