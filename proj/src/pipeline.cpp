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

#include "uvkit/pipeline.hpp"

#include <sstream>

#include "uvkit/util.hpp"

namespace uvkit {

std::string pipeline_stats_csv_header() {
  return "workers,jobs,wall_seconds,fps,hwm_inflight";
}

std::string pipeline_stats_csv_row(const PipelineStats& s) {
  std::ostringstream os;
  os << s.workers << ',' << s.jobs << ',' << format_double(s.wall_seconds) << ','
     << format_double(s.fps) << ',' << s.hwm_inflight;
  return os.str();
}

}  // namespace uvkit
