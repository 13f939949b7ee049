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

#ifndef UVKIT_OPCOUNT_HPP_
#define UVKIT_OPCOUNT_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "uvkit/errors.hpp"

namespace uvkit {

/// Exact fraction, normalized so den > 0 and gcd(num, den) == 1. Keeps the
/// separable/standard operation-count quotient an identity instead of a
/// float approximation.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den);
  Rational plus(const Rational& other) const;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator==(const Rational&) const = default;
};

enum class ConvMode { Standard, Separable };

ConvMode conv_mode_from_name(const std::string& name);
std::string_view conv_mode_name(ConvMode m);

/// Analytic description of one convolutional layer: kernel size lk, input
/// channels m, output channels n, square spatial size lf.
struct ConvSpec {
  ConvMode mode = ConvMode::Standard;
  int lk = 1;
  int m = 1;
  int n = 1;
  int lf = 1;
};

void validate_conv_spec(const ConvSpec& s);

/// Multiply-accumulates of the standard convolution: lk^2 * m * n * lf^2.
/// Throws DomainError when the count exceeds 64 bits.
std::uint64_t ops_standard(const ConvSpec& s);

struct SeparableOps {
  std::uint64_t depthwise = 0;  // lk^2 * m * lf^2
  std::uint64_t pointwise = 0;  // m * lf^2 * n
  std::uint64_t total = 0;
};

SeparableOps ops_separable(const ConvSpec& s);

/// separable total / standard as an exact rational; algebraically equals
/// 1/n + 1/lk^2 independent of m and lf.
Rational reduction_ratio(const ConvSpec& s);

/// Weight counts (no bias terms): lk^2*m*n vs lk^2*m + m*n.
std::uint64_t params_standard(const ConvSpec& s);
std::uint64_t params_separable(const ConvSpec& s);

/// Ordered layer stack; adjacent layers must be channel-compatible.
struct NetSpec {
  std::vector<ConvSpec> layers;
  std::uint32_t bytes_per_weight = 4;
};

/// Checks bytes_per_weight > 0 and that each layer's n feeds the next
/// layer's m.
void validate_net_spec(const NetSpec& net);

/// Parses the layer-per-line text format: `mode lk m n lf`, '#' comments.
NetSpec parse_net_spec(std::istream& in);
NetSpec parse_net_spec_file(const std::string& path);

/// Sum of per-layer weight counts (by each layer's mode) times
/// bytes_per_weight.
std::uint64_t model_bytes(const NetSpec& net);

/// Total per-inference MACs of the stack, each layer counted by its mode.
std::uint64_t net_ops(const NetSpec& net);

/// Inputs of the power product: inference rate (1/s), operations per
/// inference, energy per operation (J).
struct PowerParams {
  double f_o = 0.0;
  double n_ops = 0.0;
  double e_o = 0.0;
};

/// P_w = f_o * n_ops * e_o, applied literally with no hidden factors.
/// Throws DomainError on negative or non-finite inputs.
double power(const PowerParams& p);

struct BudgetReport {
  double p_w = 0.0;
  double battery_w = 0.0;
  double battery_fraction = 0.0;  // p_w / battery_w; may exceed 1 when over budget
  std::uint64_t model_bytes = 0;
  std::uint64_t ram_bytes = 0;
  double ram_fraction = 0.0;  // model_bytes / ram_bytes
};

/// Combines the power product with the model-size arithmetic. battery_w and
/// ram_bytes must be positive.
BudgetReport budget_report(const PowerParams& p, double battery_w, const NetSpec& model,
                           std::uint64_t ram_bytes);

/// Caveats that belong next to every budget report. Returned as '#'-prefixed
/// CSV comment lines.
std::string budget_notes();

}  // namespace uvkit

#endif  // UVKIT_OPCOUNT_HPP_
