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

#ifndef UVKIT_PGM_HPP_
#define UVKIT_PGM_HPP_

#include <filesystem>
#include <vector>

#include "uvkit/frame.hpp"

namespace uvkit {

/// Reads a binary PGM ("P5", maxval 255). Luminance = byte / 255.
/// Throws IoError on a malformed header or truncated payload.
Frame read_frame_pgm(const std::filesystem::path& path);

/// Writes a binary PGM with maxval 255. write(read(p)) reproduces the pixel
/// bytes of p exactly.
void write_frame_pgm(const Frame& frame, const std::filesystem::path& path);

/// Lists the .pgm files of a sequence directory in lexicographic order.
/// Throws IoError when the directory is missing.
std::vector<std::filesystem::path> list_frame_files(const std::filesystem::path& dir);

/// Loads a whole sequence directory; frames get seq 0,1,... in file order.
std::vector<Frame> read_frame_sequence(const std::filesystem::path& dir);

}  // namespace uvkit

#endif  // UVKIT_PGM_HPP_
