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

#include "uvkit/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <string>

namespace uvkit {

namespace {

// Consumes PGM header whitespace, including '#' comment lines.
void skip_space_and_comments(std::istream& in) {
  for (;;) {
    int c = in.peek();
    if (c == '#') {
      std::string line;
      std::getline(in, line);
    } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      in.get();
    } else {
      return;
    }
  }
}

unsigned read_header_uint(std::istream& in, const std::filesystem::path& path,
                          const char* what) {
  skip_space_and_comments(in);
  unsigned value = 0;
  bool any = false;
  while (std::isdigit(in.peek())) {
    value = value * 10 + static_cast<unsigned>(in.get() - '0');
    any = true;
    if (value > 1u << 30) break;
  }
  if (!any) {
    throw IoError(path.string() + ": malformed PGM header (bad " + std::string(what) + ")");
  }
  return value;
}

}  // namespace

Frame read_frame_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());

  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (!in || magic[0] != 'P' || magic[1] != '5') {
    throw IoError(path.string() + ": malformed PGM header (expected magic P5)");
  }
  const unsigned width = read_header_uint(in, path, "width");
  const unsigned height = read_header_uint(in, path, "height");
  const unsigned maxval = read_header_uint(in, path, "maxval");
  if (maxval != 255) {
    throw IoError(path.string() + ": malformed PGM header (maxval must be 255, got " +
                  std::to_string(maxval) + ")");
  }
  if (width < 1 || height < 1) {
    throw IoError(path.string() + ": malformed PGM header (zero dimension)");
  }
  // Exactly one whitespace byte separates the header from the payload.
  const int sep = in.get();
  if (sep != ' ' && sep != '\t' && sep != '\r' && sep != '\n') {
    throw IoError(path.string() + ": malformed PGM header (missing separator)");
  }

  const std::size_t count = static_cast<std::size_t>(width) * height;
  std::vector<std::uint8_t> bytes(count);
  in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(count));
  if (static_cast<std::size_t>(in.gcount()) != count) {
    throw IoError(path.string() + ": truncated PGM data (expected " + std::to_string(count) +
                  " bytes, got " + std::to_string(in.gcount()) + ")");
  }

  Frame f = make_frame(static_cast<int>(width), static_cast<int>(height));
  for (std::size_t i = 0; i < count; ++i) {
    f.pixels[i] = bytes[i] / 255.0;
  }
  return f;
}

void write_frame_pgm(const Frame& frame, const std::filesystem::path& path) {
  validate_frame(frame);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");

  out << "P5\n" << frame.width << " " << frame.height << "\n255\n";
  std::vector<std::uint8_t> bytes(frame.pixels.size());
  for (std::size_t i = 0; i < frame.pixels.size(); ++i) {
    bytes[i] = static_cast<std::uint8_t>(std::lround(frame.pixels[i] * 255.0));
  }
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("failed writing " + path.string());
}

std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir) {
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw IoError("frame directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(),
            [](const auto& a, const auto& b) { return a.filename() < b.filename(); });
  return files;
}

std::vector<Frame> read_frame_sequence(const std::filesystem::path& dir) {
  std::vector<Frame> frames;
  std::uint64_t seq = 0;
  for (const auto& file : list_frame_files(dir)) {
    Frame f = read_frame_pgm(file);
    f.seq = seq++;
    frames.push_back(std::move(f));
  }
  return frames;
}

}  // namespace uvkit
