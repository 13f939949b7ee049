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

#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "uvkit/errors.hpp"

using namespace uvkit;

namespace {

// Lengths that exercise empty input, sub-vector sizes, vector boundaries,
// and remainders of every kernel's unroll width.
const std::vector<std::size_t> kLengths = {0,  1,  2,  3,  4,  5,  7,  8,   9,
                                           15, 16, 17, 31, 33, 64, 100, 1000, 4097};

std::vector<double> random_vec(std::mt19937_64& rng, std::size_t n) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

// Reassociation tolerance: scaled by the magnitude of the terms involved.
void check_close(double got, double want, double scale) {
  CHECK(std::abs(got - want) <= 1e-12 * scale + 1e-13);
}

}  // namespace

TEST_CASE("scalar kernels are always available and listed first") {
  const auto all = simd::available_kernels();
  REQUIRE(!all.empty());
  CHECK(std::string(all.front()->name) == "scalar");
  CHECK(simd::find_kernels("scalar") == &simd::scalar_kernels());
}

TEST_CASE("choose_kernels honors forced names and rejects unknown ones") {
  CHECK(std::string(simd::choose_kernels("scalar").name) == "scalar");
  CHECK_THROWS_AS(simd::choose_kernels("avx1024"), ConfigError);
  // Empty forces nothing: the widest available variant wins.
  const auto& best = simd::choose_kernels("");
  CHECK(std::string(best.name) == std::string(simd::available_kernels().back()->name));
}

TEST_CASE("every vector variant matches the scalar kernels") {
  const auto& scalar = simd::scalar_kernels();
  std::mt19937_64 rng(20260810);

  for (const simd::Kernels* variant : simd::available_kernels()) {
    CAPTURE(variant->name);
    for (std::size_t n : kLengths) {
      CAPTURE(n);
      const auto x = random_vec(rng, n);
      const auto y = random_vec(rng, n);
      const double scale = static_cast<double>(n) + 1.0;

      check_close(variant->sum(x.data(), n), scalar.sum(x.data(), n), scale);
      check_close(variant->dot(x.data(), y.data(), n), scalar.dot(x.data(), y.data(), n), scale);

      auto acc_a = random_vec(rng, n);
      auto acc_b = acc_a;
      variant->axpy(acc_a.data(), 0.37, x.data(), n);
      scalar.axpy(acc_b.data(), 0.37, x.data(), n);
      for (std::size_t i = 0; i < n; ++i) check_close(acc_a[i], acc_b[i], 4.0);

      auto mac_a = random_vec(rng, n);
      auto mac_b = mac_a;
      variant->mul_acc(mac_a.data(), x.data(), y.data(), n);
      scalar.mul_acc(mac_b.data(), x.data(), y.data(), n);
      for (std::size_t i = 0; i < n; ++i) check_close(mac_a[i], mac_b[i], 4.0);

      const auto sa = variant->centered_stats(x.data(), y.data(), 0.125, -0.25, n);
      const auto sb = scalar.centered_stats(x.data(), y.data(), 0.125, -0.25, n);
      check_close(sa.saa, sb.saa, scale);
      check_close(sa.sbb, sb.sbb, scale);
      check_close(sa.sab, sb.sab, scale);
    }
  }
}

TEST_CASE("axpy and mul_acc leave untouched elements alone") {
  for (const simd::Kernels* variant : simd::available_kernels()) {
    std::vector<double> y = {1.0, 2.0, 3.0, 4.0, 5.0};
    const std::vector<double> x = {10.0, 20.0, 30.0};
    variant->axpy(y.data(), 1.0, x.data(), 3);
    CHECK(y[3] == 4.0);
    CHECK(y[4] == 5.0);
    CHECK(y[0] == 11.0);
  }
}

TEST_CASE("kernels on exact integers are exact") {
  // Sums of small integers have no rounding, so every variant must agree
  // bit for bit.
  std::vector<double> v(137);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i % 11);
  for (const simd::Kernels* variant : simd::available_kernels()) {
    CHECK(variant->sum(v.data(), v.size()) == simd::scalar_kernels().sum(v.data(), v.size()));
  }
}
