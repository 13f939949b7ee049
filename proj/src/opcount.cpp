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

#include "uvkit/opcount.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "uvkit/util.hpp"

namespace uvkit {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("operation count overflows 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw DomainError("operation count overflows 64 bits");
  }
  return out;
}

std::int64_t checked_mul_i64(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw DomainError("rational arithmetic overflows 64 bits");
  }
  return out;
}

std::uint64_t u64(int v) { return static_cast<std::uint64_t>(v); }

}  // namespace

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rational{num, den};
}

Rational Rational::plus(const Rational& other) const {
  const std::int64_t n =
      checked_mul_i64(num, other.den) + checked_mul_i64(other.num, den);
  return Rational::of(n, checked_mul_i64(den, other.den));
}

ConvMode conv_mode_from_name(const std::string& name) {
  if (name == "standard") return ConvMode::Standard;
  if (name == "separable") return ConvMode::Separable;
  throw ConfigError("unknown convolution mode '" + name + "'");
}

std::string_view conv_mode_name(ConvMode m) {
  return m == ConvMode::Standard ? "standard" : "separable";
}

void validate_conv_spec(const ConvSpec& s) {
  if (s.lk < 1 || s.m < 1 || s.n < 1 || s.lf < 1) {
    throw DomainError("conv spec fields must all be at least 1");
  }
  if (s.lk % 2 == 0) {
    throw DomainError("kernel size must be odd, got " + std::to_string(s.lk));
  }
}

std::uint64_t ops_standard(const ConvSpec& s) {
  validate_conv_spec(s);
  return checked_mul(checked_mul(checked_mul(u64(s.lk) * u64(s.lk), u64(s.m)), u64(s.n)),
                     u64(s.lf) * u64(s.lf));
}

SeparableOps ops_separable(const ConvSpec& s) {
  validate_conv_spec(s);
  SeparableOps ops;
  const std::uint64_t lf2 = checked_mul(u64(s.lf), u64(s.lf));
  ops.depthwise = checked_mul(checked_mul(u64(s.lk) * u64(s.lk), u64(s.m)), lf2);
  ops.pointwise = checked_mul(checked_mul(u64(s.m), lf2), u64(s.n));
  ops.total = checked_add(ops.depthwise, ops.pointwise);
  return ops;
}

Rational reduction_ratio(const ConvSpec& s) {
  const std::uint64_t total = ops_separable(s).total;
  const std::uint64_t standard = ops_standard(s);
  if (total > static_cast<std::uint64_t>(INT64_MAX) ||
      standard > static_cast<std::uint64_t>(INT64_MAX)) {
    throw DomainError("operation counts too large for exact ratio");
  }
  return Rational::of(static_cast<std::int64_t>(total), static_cast<std::int64_t>(standard));
}

std::uint64_t params_standard(const ConvSpec& s) {
  validate_conv_spec(s);
  return checked_mul(checked_mul(u64(s.lk) * u64(s.lk), u64(s.m)), u64(s.n));
}

std::uint64_t params_separable(const ConvSpec& s) {
  validate_conv_spec(s);
  return checked_add(checked_mul(u64(s.lk) * u64(s.lk), u64(s.m)),
                     checked_mul(u64(s.m), u64(s.n)));
}

void validate_net_spec(const NetSpec& net) {
  if (net.bytes_per_weight == 0) throw DomainError("bytes_per_weight must be positive");
  for (const auto& layer : net.layers) validate_conv_spec(layer);
  for (std::size_t i = 0; i + 1 < net.layers.size(); ++i) {
    if (net.layers[i].n != net.layers[i + 1].m) {
      throw DomainError("layer " + std::to_string(i) + " outputs " +
                        std::to_string(net.layers[i].n) + " channels but layer " +
                        std::to_string(i + 1) + " expects " +
                        std::to_string(net.layers[i + 1].m));
    }
  }
}

NetSpec parse_net_spec(std::istream& in) {
  NetSpec net;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = line;
    const auto hash = s.find('#');
    if (hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;

    std::istringstream fields{std::string(s)};
    std::string mode;
    long lk = 0, m = 0, n = 0, lf = 0;
    if (!(fields >> mode >> lk >> m >> n >> lf)) {
      throw ConfigError("line " + std::to_string(lineno) +
                        ": expected 'mode lk m n lf', got '" + std::string(s) + "'");
    }
    std::string extra;
    if (fields >> extra) {
      throw ConfigError("line " + std::to_string(lineno) + ": trailing field '" + extra + "'");
    }
    ConvSpec spec;
    spec.mode = conv_mode_from_name(mode);
    spec.lk = static_cast<int>(lk);
    spec.m = static_cast<int>(m);
    spec.n = static_cast<int>(n);
    spec.lf = static_cast<int>(lf);
    validate_conv_spec(spec);
    net.layers.push_back(spec);
  }
  validate_net_spec(net);
  return net;
}

NetSpec parse_net_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open net spec file " + path);
  return parse_net_spec(in);
}

std::uint64_t model_bytes(const NetSpec& net) {
  validate_net_spec(net);
  std::uint64_t params = 0;
  for (const auto& layer : net.layers) {
    params = checked_add(params, layer.mode == ConvMode::Standard ? params_standard(layer)
                                                                  : params_separable(layer));
  }
  return checked_mul(params, net.bytes_per_weight);
}

std::uint64_t net_ops(const NetSpec& net) {
  validate_net_spec(net);
  std::uint64_t ops = 0;
  for (const auto& layer : net.layers) {
    ops = checked_add(ops, layer.mode == ConvMode::Standard ? ops_standard(layer)
                                                            : ops_separable(layer).total);
  }
  return ops;
}

double power(const PowerParams& p) {
  if (!(std::isfinite(p.f_o) && std::isfinite(p.n_ops) && std::isfinite(p.e_o))) {
    throw DomainError("power inputs must be finite");
  }
  if (p.f_o < 0.0 || p.n_ops < 0.0 || p.e_o < 0.0) {
    throw DomainError("power inputs must be non-negative");
  }
  return p.f_o * p.n_ops * p.e_o;
}

BudgetReport budget_report(const PowerParams& p, double battery_w, const NetSpec& model,
                           std::uint64_t ram_bytes) {
  if (!(battery_w > 0.0)) throw DomainError("battery_w must be positive");
  if (ram_bytes == 0) throw DomainError("ram_bytes must be positive");
  BudgetReport r;
  r.p_w = power(p);
  r.battery_w = battery_w;
  r.battery_fraction = r.p_w / battery_w;
  r.model_bytes = model_bytes(model);
  r.ram_bytes = ram_bytes;
  r.ram_fraction = static_cast<double>(r.model_bytes) / static_cast<double>(ram_bytes);
  return r;
}

std::string budget_notes() {
  return
      "# note: p_w is the literal product rate*ops*energy; 10/s * 1e9 ops * 600pJ\n"
      "#       gives 6.0 W, so quotes of ~3 W for those same inputs do not follow\n"
      "#       from the product and are not silently reconciled here.\n"
      "# note: the product prices compute energy only; weight storage and memory\n"
      "#       fetch energy are separate costs this model does not include.\n";
}

}  // namespace uvkit
