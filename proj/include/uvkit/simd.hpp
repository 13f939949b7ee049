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

#ifndef UVKIT_SIMD_HPP_
#define UVKIT_SIMD_HPP_

#include <cstddef>
#include <string_view>
#include <vector>

namespace uvkit::simd {

/// Second-order sums of two equal-length sequences around precomputed means.
struct CenteredStats {
  double saa = 0.0;  // sum (a[i] - mean_a)^2
  double sbb = 0.0;  // sum (b[i] - mean_b)^2
  double sab = 0.0;  // sum (a[i] - mean_a) * (b[i] - mean_b)
};

/// One complete kernel set. Every function accepts n == 0.
///
/// These are the arithmetic inner loops shared by the correlation and
/// convolution code. Each variant (scalar, avx2, neon) implements the same
/// contracts; vector variants may reassociate sums, so results can differ
/// from scalar by normal floating-point reduction error.
struct Kernels {
  const char* name;

  double (*sum)(const double* x, std::size_t n);
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y[i] += a * x[i]
  void (*axpy)(double* y, double a, const double* x, std::size_t n);
  /// acc[i] += x[i] * y[i]
  void (*mul_acc)(double* acc, const double* x, const double* y, std::size_t n);
  CenteredStats (*centered_stats)(const double* a, const double* b, double mean_a,
                                  double mean_b, std::size_t n);
};

/// Portable reference kernels. Always available.
const Kernels& scalar_kernels();

/// Kernel sets usable on this CPU, scalar first.
std::vector<const Kernels*> available_kernels();

/// Lookup by name ("scalar", "avx2", "neon"). Null when the variant is not
/// compiled in or the CPU lacks the feature.
const Kernels* find_kernels(std::string_view name);

/// Resolves the kernel set for a forced name (empty = pick the widest
/// available). Throws ConfigError for an unknown or unusable name.
const Kernels& choose_kernels(std::string_view forced);

/// The set the library uses. Chosen once: UVK_SIMD=scalar|avx2|neon forces a
/// variant, otherwise the widest usable one wins.
const Kernels& active_kernels();

}  // namespace uvkit::simd

#endif  // UVKIT_SIMD_HPP_
