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

#include "uvkit/tracker.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "uvkit/util.hpp"

namespace uvkit {

std::string_view direction_name(Direction d) {
  switch (d) {
    case Direction::Top: return "top";
    case Direction::Bottom: return "bottom";
    case Direction::Left: return "left";
    case Direction::Right: return "right";
    case Direction::Stationary: return "stationary";
  }
  return "stationary";
}

Direction direction_from_name(std::string_view name) {
  if (name == "top") return Direction::Top;
  if (name == "bottom") return Direction::Bottom;
  if (name == "left") return Direction::Left;
  if (name == "right") return Direction::Right;
  if (name == "stationary") return Direction::Stationary;
  throw ConfigError("unknown direction name '" + std::string(name) + "'");
}

void validate_params(const TrackerParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) throw DomainError("alpha must be in [0,1]");
  if (!(p.beta >= 0.0 && p.beta <= 1.0)) throw DomainError("beta must be in [0,1]");
  if (!(p.threshold > -1.0 && p.threshold <= 1.0)) {
    throw DomainError("threshold must be in (-1,1]");
  }
  if (p.stride < 1) throw DomainError("stride must be at least 1");
  if (p.max_radius < 0) throw DomainError("max_radius must be non-negative");
  if (p.half < 1) throw DomainError("half must be at least 1");
  if (!(p.dead_zone >= 0.0)) throw DomainError("dead_zone must be non-negative");
}

TrackerParams parse_tracker_config(std::istream& in) {
  TrackerParams p;
  for (const auto& [key, value] : parse_kv_lines(in)) {
    if (key == "alpha") {
      p.alpha = parse_double(key, value);
    } else if (key == "beta") {
      p.beta = parse_double(key, value);
    } else if (key == "threshold") {
      p.threshold = parse_double(key, value);
    } else if (key == "stride") {
      p.stride = static_cast<int>(parse_int(key, value));
    } else if (key == "max_radius") {
      p.max_radius = static_cast<int>(parse_int(key, value));
    } else if (key == "half") {
      p.half = static_cast<int>(parse_int(key, value));
    } else if (key == "dead_zone") {
      p.dead_zone = parse_double(key, value);
    } else {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }
  validate_params(p);
  return p;
}

TrackerParams parse_tracker_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file " + path);
  return parse_tracker_config(in);
}

TrackerState make_tracker(const Frame& frame, PatchCenter center, const TrackerParams& params) {
  validate_params(params);
  TrackerState s;
  s.x0 = center.x;
  s.y0 = center.y;
  s.tmpl = extract_patch(frame, center, params.half);
  s.params = params;
  return s;
}

std::vector<PatchCenter> layer_centers(int x, int y, int r, int stride, const Frame& frame,
                                       int half) {
  if (r < 0) throw DomainError("layer radius must be non-negative");
  if (stride < 1) throw DomainError("stride must be at least 1");

  std::vector<PatchCenter> out;
  auto push_if_fits = [&](int cx, int cy) {
    if (patch_fits(frame, {cx, cy}, half)) out.push_back({cx, cy});
  };

  if (r == 0) {
    push_if_fits(x, y);
    return out;
  }
  const int d = r * stride;
  out.reserve(static_cast<std::size_t>(8) * r);
  for (int cx = x - d; cx <= x + d; cx += stride) push_if_fits(cx, y - d);
  for (int cy = y - d + stride; cy <= y + d - stride; cy += stride) {
    push_if_fits(x - d, cy);
    push_if_fits(x + d, cy);
  }
  for (int cx = x - d; cx <= x + d; cx += stride) push_if_fits(cx, y + d);
  return out;
}

std::pair<PatchCenter, double> max_correlation(std::span<const PatchCenter> candidates,
                                               const Patch& tmpl, const Frame& frame) {
  if (candidates.empty()) throw DomainError("max_correlation on an empty layer");
  const detail::View2d tv = detail::patch_view(tmpl);
  PatchCenter best = candidates[0];
  double best_score = detail::ncc(tv, detail::window_view(frame, candidates[0], tmpl.half));
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const double s = detail::ncc(tv, detail::window_view(frame, candidates[i], tmpl.half));
    if (s > best_score) {  // strict: first candidate wins ties
      best_score = s;
      best = candidates[i];
    }
  }
  return {best, best_score};
}

SearchOutcome bfs_search(const TrackerState& state, const Frame& frame) {
  const TrackerParams& p = state.params;
  SearchOutcome out;

  int cx = static_cast<int>(std::lround(state.x0));
  int cy = static_cast<int>(std::lround(state.y0));
  int r = 0;
  std::vector<PatchCenter> layer = layer_centers(cx, cy, r, p.stride, frame, p.half);

  bool any = false;
  for (;;) {
    if (layer.empty()) return out;  // nothing left to examine
    out.layer_reached = r;
    out.candidates_examined += layer.size();
    const auto [best, score] = max_correlation(layer, state.tmpl, frame);
    if (!any || score > out.score) {
      out.score = score;
      out.center = best;
      any = true;
    }
    if (score > p.threshold) {
      out.found = true;
      out.center = best;
      out.score = score;
      return out;
    }
    ++r;
    if (r > p.max_radius) return out;
    // The next ring is re-centered on this layer's best candidate: a greedy
    // beam expansion, not a full breadth-first frontier.
    layer = layer_centers(best.x, best.y, r, p.stride, frame, p.half);
  }
}

TrackerState update_center(TrackerState state, int p, int q) {
  const double a = state.params.alpha;
  const double b = state.params.beta;
  state.x0 = a * p + (1.0 - a) * state.x0;
  state.y0 = b * q + (1.0 - b) * state.y0;
  return state;
}

Direction quantize_direction(double dx, double dy, double dead_zone) {
  if (std::max(std::abs(dx), std::abs(dy)) <= dead_zone) return Direction::Stationary;
  if (std::abs(dx) >= std::abs(dy)) {
    return dx > 0 ? Direction::Right : Direction::Left;
  }
  return dy > 0 ? Direction::Bottom : Direction::Top;
}

StepResult track_step(const TrackerState& state, const Frame& frame) {
  StepResult r;
  r.outcome = bfs_search(state, frame);
  if (!r.outcome.found) {
    r.direction = Direction::Stationary;
    r.state = state;
    return r;
  }
  // Displacement against the pre-update smoothed center; order matters.
  const double dx = r.outcome.center.x - state.x0;
  const double dy = r.outcome.center.y - state.y0;
  r.state = update_center(state, r.outcome.center.x, r.outcome.center.y);
  r.direction = quantize_direction(dx, dy, state.params.dead_zone);
  return r;
}

std::string track_csv_header() {
  return "seq,direction,p,q,score,layer_reached,candidates_examined";
}

std::string track_csv_row(std::uint64_t seq, const StepResult& r) {
  std::ostringstream os;
  os << seq << ',' << direction_name(r.direction) << ',' << r.outcome.center.x << ','
     << r.outcome.center.y << ',' << format_double(r.outcome.score) << ','
     << r.outcome.layer_reached << ',' << r.outcome.candidates_examined;
  return os.str();
}

}  // namespace uvkit
