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

// Flat binary tensor/kernel container. Everything is little-endian on disk
// regardless of host order: magic "UVK1", u32 rank, u32 dims, f64 payload.

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <string>
#include <vector>

#include "uvkit/conv.hpp"

namespace uvkit {

namespace {

constexpr char kMagic[4] = {'U', 'V', 'K', '1'};

void put_u32(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>(v & 0xff));
  out.push_back(static_cast<char>((v >> 8) & 0xff));
  out.push_back(static_cast<char>((v >> 16) & 0xff));
  out.push_back(static_cast<char>((v >> 24) & 0xff));
}

void put_f64(std::string& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int shift = 0; shift < 64; shift += 8) {
    out.push_back(static_cast<char>((bits >> shift) & 0xff));
  }
}

class Reader {
public:
  explicit Reader(const std::filesystem::path& path) : path_(path.string()), in_(path, std::ios::binary) {
    if (!in_) throw IoError("cannot open " + path_);
  }

  std::uint32_t u32() {
    std::uint8_t b[4];
    read(b, 4, "header");
    return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
           (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
  }

  double f64() {
    std::uint8_t b[8];
    read(b, 8, "payload");
    std::uint64_t bits = 0;
    for (int i = 7; i >= 0; --i) bits = (bits << 8) | b[i];
    return std::bit_cast<double>(bits);
  }

  void expect_magic() {
    char m[4];
    read(reinterpret_cast<std::uint8_t*>(m), 4, "magic");
    if (std::memcmp(m, kMagic, 4) != 0) {
      throw IoError(path_ + ": not a UVK1 container");
    }
  }

  void expect_eof() {
    if (in_.peek() != std::char_traits<char>::eof()) {
      throw IoError(path_ + ": trailing bytes after payload");
    }
  }

private:
  void read(std::uint8_t* dst, std::size_t n, const char* what) {
    in_.read(reinterpret_cast<char*>(dst), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in_.gcount()) != n) {
      throw IoError(path_ + ": truncated " + what);
    }
  }

  std::string path_;
  std::ifstream in_;
};

void write_container(const std::filesystem::path& path, std::span<const std::uint32_t> dims,
                     std::span<const double> values) {
  std::string out;
  out.reserve(4 + 4 + 4 * dims.size() + 8 * values.size());
  out.append(kMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(dims.size()));
  for (std::uint32_t d : dims) put_u32(out, d);
  for (double v : values) put_f64(out, v);

  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open " + path.string() + " for writing");
  f.write(out.data(), static_cast<std::streamsize>(out.size()));
  if (!f) throw IoError("failed writing " + path.string());
}

std::vector<std::uint32_t> read_header(Reader& r, std::uint32_t expected_rank,
                                       const std::filesystem::path& path) {
  r.expect_magic();
  const std::uint32_t rank = r.u32();
  if (rank != expected_rank) {
    throw IoError(path.string() + ": expected rank " + std::to_string(expected_rank) +
                  ", got " + std::to_string(rank));
  }
  std::vector<std::uint32_t> dims(rank);
  for (auto& d : dims) {
    d = r.u32();
    if (d == 0 || d > (1u << 24)) {
      throw IoError(path.string() + ": implausible dimension " + std::to_string(d));
    }
  }
  return dims;
}

void read_values(Reader& r, std::vector<double>& out) {
  for (auto& v : out) v = r.f64();
  r.expect_eof();
}

}  // namespace

void write_tensor(const Tensor3& t, const std::filesystem::path& path) {
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(t.h), static_cast<std::uint32_t>(t.w),
                                 static_cast<std::uint32_t>(t.c)};
  write_container(path, dims, t.data);
}

Tensor3 read_tensor(const std::filesystem::path& path) {
  Reader r(path);
  const auto dims = read_header(r, 3, path);
  Tensor3 t = make_tensor(static_cast<int>(dims[0]), static_cast<int>(dims[1]),
                          static_cast<int>(dims[2]));
  read_values(r, t.data);
  return t;
}

void write_kernel4(const Kernel4& k, const std::filesystem::path& path) {
  const std::uint32_t dims[4] = {static_cast<std::uint32_t>(k.lk), static_cast<std::uint32_t>(k.lk),
                                 static_cast<std::uint32_t>(k.m), static_cast<std::uint32_t>(k.n)};
  write_container(path, dims, k.data);
}

Kernel4 read_kernel4(const std::filesystem::path& path) {
  Reader r(path);
  const auto dims = read_header(r, 4, path);
  if (dims[0] != dims[1]) {
    throw IoError(path.string() + ": kernel spatial dims differ");
  }
  Kernel4 k = make_kernel4(static_cast<int>(dims[0]), static_cast<int>(dims[2]),
                           static_cast<int>(dims[3]));
  read_values(r, k.data);
  return k;
}

void write_depthwise(const DepthwiseKernel& k, const std::filesystem::path& path) {
  const std::uint32_t dims[3] = {static_cast<std::uint32_t>(k.lk), static_cast<std::uint32_t>(k.lk),
                                 static_cast<std::uint32_t>(k.m)};
  write_container(path, dims, k.data);
}

DepthwiseKernel read_depthwise(const std::filesystem::path& path) {
  Reader r(path);
  const auto dims = read_header(r, 3, path);
  if (dims[0] != dims[1]) {
    throw IoError(path.string() + ": kernel spatial dims differ");
  }
  DepthwiseKernel k = make_depthwise(static_cast<int>(dims[0]), static_cast<int>(dims[2]));
  read_values(r, k.data);
  return k;
}

void write_pointwise(const PointwiseKernel& k, const std::filesystem::path& path) {
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(k.m), static_cast<std::uint32_t>(k.n)};
  write_container(path, dims, k.data);
}

PointwiseKernel read_pointwise(const std::filesystem::path& path) {
  Reader r(path);
  const auto dims = read_header(r, 2, path);
  PointwiseKernel k = make_pointwise(static_cast<int>(dims[0]), static_cast<int>(dims[1]));
  read_values(r, k.data);
  return k;
}

}  // namespace uvkit
