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

#ifndef UVKIT_ERRORS_HPP_
#define UVKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace uvkit {

/// Base class for everything uvkit throws on purpose.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Invalid values or shapes: out-of-bounds windows, dimension mismatches,
/// even kernels, overflowing counts, paths that exit the frame.
class DomainError : public Error {
public:
  using Error::Error;
};

/// File problems: missing paths, malformed headers, truncated payloads.
class IoError : public Error {
public:
  using Error::Error;
};

/// Bad configuration input: unknown keys, unparsable values.
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace uvkit

#endif  // UVKIT_ERRORS_HPP_
