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

#ifndef UVKIT_UTIL_HPP_
#define UVKIT_UTIL_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uvkit {

std::string_view trim(std::string_view s);

/// Splits on a single-character delimiter; keeps empty fields.
std::vector<std::string> split(std::string_view s, char delim);

/// key=value lines in order of appearance. Blank lines and '#' comments are
/// skipped; a line without '=' raises ConfigError.
std::vector<std::pair<std::string, std::string>> parse_kv_lines(std::istream& in);

/// Strict numeric parsing of a whole token; ConfigError names the key.
std::int64_t parse_int(std::string_view key, std::string_view value);
double parse_double(std::string_view key, std::string_view value);

/// Writes content to path via a temp file in the same directory plus rename,
/// so a crashed run leaves no partial output. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Shortest representation that still distinguishes doubles for CSV output.
std::string format_double(double v);

}  // namespace uvkit

#endif  // UVKIT_UTIL_HPP_
