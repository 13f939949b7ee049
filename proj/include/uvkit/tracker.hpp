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

#ifndef UVKIT_TRACKER_HPP_
#define UVKIT_TRACKER_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uvkit/frame.hpp"

namespace uvkit {

/// Quadrant of object motion. Stationary covers displacements inside the
/// dead zone, which the four-way set cannot express.
enum class Direction { Top, Bottom, Left, Right, Stationary };

std::string_view direction_name(Direction d);

/// Inverse of direction_name; throws ConfigError for unknown names.
Direction direction_from_name(std::string_view name);

/// Tuning knobs of the direction predictor. All values are configuration
/// surface; the defaults favor smooth-but-responsive tracking with NCC
/// scores.
struct TrackerParams {
  double alpha = 0.8;      // smoothing toward the matched x, in [0,1]
  double beta = 0.8;       // smoothing toward the matched y, in [0,1]
  double threshold = 0.8;  // correlation acceptance score, in (-1,1]
  int stride = 1;          // candidate spacing in pixels, >= 1
  int max_radius = 16;     // layer cap; search gives up beyond it
  int half = 15;           // template half-size (template is 2*half+1 square)
  double dead_zone = 0.5;  // displacement magnitude treated as no motion
};

/// Throws DomainError when a parameter is outside its documented range.
void validate_params(const TrackerParams& p);

/// Parses the plain-text key=value tracker configuration (keys: alpha, beta,
/// threshold, stride, max_radius, half, dead_zone; '#' starts a comment).
/// Unknown keys are rejected with the offending key named.
TrackerParams parse_tracker_config(std::istream& in);
TrackerParams parse_tracker_config_file(const std::string& path);

/// Smoothed background center plus the fixed reference template. A value
/// type: track_step returns the updated copy and never mutates its input.
struct TrackerState {
  double x0 = 0.0;
  double y0 = 0.0;
  Patch tmpl;
  TrackerParams params;
};

/// Builds a state anchored at `center` of `frame`, with the template cut
/// from that frame. Throws DomainError when the template window does not fit.
TrackerState make_tracker(const Frame& frame, PatchCenter center, const TrackerParams& params);

/// Result of one layered search.
struct SearchOutcome {
  bool found = false;
  PatchCenter center;          // matched center when found
  double score = 0.0;          // matched score when found; best seen otherwise
  int layer_reached = 0;       // last layer examined
  std::uint64_t candidates_examined = 0;
};

/// Candidate centers at Chebyshev ring distance r*stride around (x,y), on
/// the stride lattice, enumerated row-major (top row left to right, then the
/// two side columns per row top to bottom, then the bottom row). Centers
/// whose patch window would exit the frame are dropped, so the result may be
/// empty.
std::vector<PatchCenter> layer_centers(int x, int y, int r, int stride, const Frame& frame,
                                       int half);

/// Best-correlated candidate against the template; ties go to the first
/// candidate in enumeration order. Throws DomainError on an empty layer.
std::pair<PatchCenter, double> max_correlation(std::span<const PatchCenter> candidates,
                                               const Patch& tmpl, const Frame& frame);

/// Greedy layered search: pop the current layer, take its best center; accept
/// it when the score clears the threshold, otherwise grow the ring radius and
/// re-center the next layer on that best candidate. Gives up (found == false)
/// when the radius passes max_radius or a layer comes back empty.
SearchOutcome bfs_search(const TrackerState& state, const Frame& frame);

/// Exponential smoothing of the background center toward the match:
/// x0' = alpha*p + (1-alpha)*x0 and y0' = beta*q + (1-beta)*y0.
TrackerState update_center(TrackerState state, int p, int q);

/// Dominant-axis quantization: inside the dead zone (max-norm) the result is
/// Stationary; otherwise the larger axis wins, with |dx| >= |dy| breaking the
/// tie toward horizontal. +y points down, so Top means dy < 0.
Direction quantize_direction(double dx, double dy, double dead_zone);

struct StepResult {
  Direction direction = Direction::Stationary;
  TrackerState state;
  SearchOutcome outcome;
};

/// One tracking cycle: search, compute the displacement against the
/// pre-update smoothed center, update the center, quantize. A failed search
/// reports Stationary and leaves the state untouched so one bad frame cannot
/// teleport the center.
StepResult track_step(const TrackerState& state, const Frame& frame);

/// Per-frame CSV row: seq,direction,p,q,score,layer_reached,candidates_examined.
std::string track_csv_header();
std::string track_csv_row(std::uint64_t seq, const StepResult& r);

}  // namespace uvkit

#endif  // UVKIT_TRACKER_HPP_
