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

#include "uvkit/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "uvkit/simd.hpp"
#include "uvkit/util.hpp"

namespace uvkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

std::vector<std::pair<int, int>> parse_path_list(std::string_view key, std::string_view value) {
  std::vector<std::pair<int, int>> path;
  for (const std::string& item : split(value, ';')) {
    const auto fields = split(trim(item), ',');
    if (fields.size() != 2) {
      throw ConfigError("value for '" + std::string(key) + "' needs dx,dy entries");
    }
    path.emplace_back(static_cast<int>(parse_int(key, trim(fields[0]))),
                      static_cast<int>(parse_int(key, trim(fields[1]))));
  }
  return path;
}

std::vector<std::pair<int, int>> parse_segments(std::string_view value) {
  std::vector<std::pair<int, int>> path;
  for (const std::string& item : split(value, ';')) {
    const std::string_view seg = trim(item);
    const auto star = seg.find('*');
    if (star == std::string_view::npos) {
      throw ConfigError("segments entries look like COUNT*dx,dy, got '" + std::string(seg) + "'");
    }
    const std::int64_t count = parse_int("segments", trim(seg.substr(0, star)));
    if (count < 0) throw ConfigError("segment count must be non-negative");
    const auto fields = split(seg.substr(star + 1), ',');
    if (fields.size() != 2) {
      throw ConfigError("segments entries look like COUNT*dx,dy, got '" + std::string(seg) + "'");
    }
    const int dx = static_cast<int>(parse_int("segments", trim(fields[0])));
    const int dy = static_cast<int>(parse_int("segments", trim(fields[1])));
    for (std::int64_t i = 0; i < count; ++i) path.emplace_back(dx, dy);
  }
  return path;
}

}  // namespace

void validate_sequence_spec(const SequenceSpec& spec) {
  if (spec.width < 1 || spec.height < 1) throw DomainError("sequence frame must be at least 1x1");
  if (spec.object_half < 1) throw DomainError("object_half must be at least 1");
  if (spec.object == ObjectKind::GaussianBlob && !(spec.object_sigma > 0.0)) {
    throw DomainError("object_sigma must be positive");
  }
  if (spec.object == ObjectKind::Checkerboard && spec.checker_cell < 1) {
    throw DomainError("checker_cell must be at least 1");
  }
  if (!(spec.noise_sigma >= 0.0)) throw DomainError("noise_sigma must be non-negative");
  if (!(spec.background >= 0.0 && spec.background <= 1.0)) {
    throw DomainError("background must be in [0,1]");
  }
}

SequenceSpec parse_sequence_spec(std::istream& in) {
  SequenceSpec spec;
  std::int64_t frames = -1;
  int dx = 0;
  int dy = 0;
  bool have_path = false;
  bool have_segments = false;

  for (const auto& [key, value] : parse_kv_lines(in)) {
    if (key == "width") {
      spec.width = static_cast<int>(parse_int(key, value));
    } else if (key == "height") {
      spec.height = static_cast<int>(parse_int(key, value));
    } else if (key == "object") {
      if (value == "blob") {
        spec.object = ObjectKind::GaussianBlob;
      } else if (value == "checker") {
        spec.object = ObjectKind::Checkerboard;
      } else {
        throw ConfigError("object must be 'blob' or 'checker', got '" + value + "'");
      }
    } else if (key == "object_half") {
      spec.object_half = static_cast<int>(parse_int(key, value));
    } else if (key == "object_sigma") {
      spec.object_sigma = parse_double(key, value);
    } else if (key == "checker_cell") {
      spec.checker_cell = static_cast<int>(parse_int(key, value));
    } else if (key == "amplitude") {
      spec.amplitude = parse_double(key, value);
    } else if (key == "background") {
      spec.background = parse_double(key, value);
    } else if (key == "start_x") {
      spec.start_x = static_cast<int>(parse_int(key, value));
    } else if (key == "start_y") {
      spec.start_y = static_cast<int>(parse_int(key, value));
    } else if (key == "noise_sigma") {
      spec.noise_sigma = parse_double(key, value);
    } else if (key == "seed") {
      spec.seed = static_cast<std::uint64_t>(parse_int(key, value));
    } else if (key == "frames") {
      frames = parse_int(key, value);
    } else if (key == "dx") {
      dx = static_cast<int>(parse_int(key, value));
    } else if (key == "dy") {
      dy = static_cast<int>(parse_int(key, value));
    } else if (key == "path") {
      spec.path = parse_path_list(key, value);
      have_path = true;
    } else if (key == "segments") {
      spec.path = parse_segments(value);
      have_segments = true;
    } else {
      throw ConfigError("unknown sequence spec key '" + key + "'");
    }
  }

  if (!have_path && !have_segments) {
    if (frames < 1) {
      throw ConfigError("sequence spec needs path=, segments=, or frames=");
    }
    spec.path.assign(static_cast<std::size_t>(frames - 1), {dx, dy});
  } else if (frames >= 1) {
    throw ConfigError("frames= conflicts with an explicit path/segments");
  }
  validate_sequence_spec(spec);
  return spec;
}

SequenceSpec parse_sequence_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open sequence spec file " + path);
  return parse_sequence_spec(in);
}

namespace {

void render_object(Frame& f, const SequenceSpec& spec, PatchCenter c) {
  const int h = spec.object_half;
  for (int yy = c.y - h; yy <= c.y + h; ++yy) {
    for (int xx = c.x - h; xx <= c.x + h; ++xx) {
      double v = f.at(xx, yy);
      if (spec.object == ObjectKind::GaussianBlob) {
        const double rx = xx - c.x;
        const double ry = yy - c.y;
        v += spec.amplitude *
             std::exp(-(rx * rx + ry * ry) / (2.0 * spec.object_sigma * spec.object_sigma));
      } else {
        const int px = (xx - c.x + h) / spec.checker_cell;
        const int py = (yy - c.y + h) / spec.checker_cell;
        if ((px + py) % 2 == 0) v += spec.amplitude;
      }
      f.at(xx, yy) = std::clamp(v, 0.0, 1.0);
    }
  }
}

}  // namespace

std::pair<std::vector<Frame>, GroundTruth> gen_sequence(const SequenceSpec& spec,
                                                        double dead_zone) {
  validate_sequence_spec(spec);
  const int cx0 = spec.start_x >= 0 ? spec.start_x : spec.width / 2;
  const int cy0 = spec.start_y >= 0 ? spec.start_y : spec.height / 2;

  // Lay out the true centers first so a bad path fails before any rendering.
  std::vector<PatchCenter> centers;
  centers.push_back({cx0, cy0});
  for (const auto& [dx, dy] : spec.path) {
    centers.push_back({centers.back().x + dx, centers.back().y + dy});
  }
  const int margin = spec.object_half;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const auto [x, y] = centers[k];
    if (x - margin < 0 || y - margin < 0 || x + margin >= spec.width ||
        y + margin >= spec.height) {
      throw DomainError("path exits frame at frame " + std::to_string(k));
    }
  }

  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> noise(0.0, spec.noise_sigma);

  std::vector<Frame> frames;
  frames.reserve(centers.size());
  for (std::size_t k = 0; k < centers.size(); ++k) {
    Frame f = make_frame(spec.width, spec.height, spec.background, k);
    render_object(f, spec, centers[k]);
    if (spec.noise_sigma > 0.0) {
      for (double& px : f.pixels) px = std::clamp(px + noise(rng), 0.0, 1.0);
    }
    frames.push_back(std::move(f));
  }

  GroundTruth truth;
  truth.dead_zone = dead_zone;
  truth.centers = std::move(centers);
  truth.directions.reserve(truth.centers.size());
  truth.directions.push_back(Direction::Stationary);
  for (const auto& [dx, dy] : spec.path) {
    truth.directions.push_back(quantize_direction(dx, dy, dead_zone));
  }
  return {std::move(frames), std::move(truth)};
}

std::string ground_truth_csv(const GroundTruth& truth) {
  std::ostringstream os;
  os << "seq,true_x,true_y,true_direction\n";
  for (std::size_t k = 0; k < truth.centers.size(); ++k) {
    os << k << ',' << truth.centers[k].x << ',' << truth.centers[k].y << ','
       << direction_name(truth.directions[k]) << '\n';
  }
  return os.str();
}

GroundTruth parse_ground_truth_csv(std::istream& in, double dead_zone) {
  GroundTruth truth;
  truth.dead_zone = dead_zone;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    const std::string_view s = trim(line);
    if (s.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    const auto fields = split(s, ',');
    if (fields.size() != 4) throw IoError("ground truth rows need 4 fields");
    truth.centers.push_back({static_cast<int>(parse_int("true_x", trim(fields[1]))),
                             static_cast<int>(parse_int("true_y", trim(fields[2])))});
    truth.directions.push_back(direction_from_name(trim(fields[3])));
  }
  return truth;
}

ExhaustiveResult exhaustive_search(const Patch& tmpl, const Frame& frame) {
  const int h = tmpl.half;
  const int side = tmpl.side();
  if (side > frame.width || side > frame.height) {
    throw DomainError("template " + std::to_string(side) + "x" + std::to_string(side) +
                      " does not fit in a " + std::to_string(frame.width) + "x" +
                      std::to_string(frame.height) + " frame");
  }
  const auto& ks = simd::active_kernels();
  const std::uint64_t n_px = static_cast<std::uint64_t>(side) * side;

  ExhaustiveResult res;
  res.candidates = static_cast<std::uint64_t>(frame.width - 2 * h) *
                   static_cast<std::uint64_t>(frame.height - 2 * h);
  res.center = {h, h};  // first valid center, row-major

  // Template statistics, two-pass.
  const double t_sum = ks.sum(tmpl.pixels.data(), tmpl.pixels.size());
  const double t_mean = t_sum / static_cast<double>(n_px);
  std::vector<double> tc(tmpl.pixels.size());
  for (std::size_t i = 0; i < tc.size(); ++i) tc[i] = tmpl.pixels[i] - t_mean;
  const double t_var = ks.dot(tc.data(), tc.data(), tc.size());
  const double tc_sum = ks.sum(tc.data(), tc.size());

  // Integral images of the frame and its square, plus a constant-frame check.
  const int w1 = frame.width + 1;
  std::vector<double> integ(static_cast<std::size_t>(w1) * (frame.height + 1), 0.0);
  std::vector<double> integ2(integ.size(), 0.0);
  double fmin = frame.pixels[0];
  double fmax = frame.pixels[0];
  for (int y = 0; y < frame.height; ++y) {
    const double* row = frame.row(y);
    double* out1 = integ.data() + static_cast<std::size_t>(y + 1) * w1;
    double* out2 = integ2.data() + static_cast<std::size_t>(y + 1) * w1;
    const double* up1 = out1 - w1;
    const double* up2 = out2 - w1;
    double acc1 = 0.0;
    double acc2 = 0.0;
    for (int x = 0; x < frame.width; ++x) {
      const double v = row[x];
      fmin = std::min(fmin, v);
      fmax = std::max(fmax, v);
      acc1 += v;
      acc2 += v * v;
      out1[x + 1] = up1[x + 1] + acc1;
      out2[x + 1] = up2[x + 1] + acc2;
    }
  }

  // Constant frame or constant template: every window scores 0 and the
  // first-wins rule picks the first valid center.
  if (fmin == fmax || t_var <= 0.0) {
    res.score = 0.0;
    return res;
  }

  const double t_norm = std::sqrt(t_var);
  bool first = true;
  for (int cy = h; cy < frame.height - h; ++cy) {
    const int y0 = cy - h;
    const int y1 = cy + h + 1;
    for (int cx = h; cx < frame.width - h; ++cx) {
      const int x0 = cx - h;
      const int x1 = cx + h + 1;
      const auto cell = [&](const std::vector<double>& s, int yy, int xx) {
        return s[static_cast<std::size_t>(yy) * w1 + xx];
      };
      const double sw = cell(integ, y1, x1) - cell(integ, y0, x1) - cell(integ, y1, x0) +
                        cell(integ, y0, x0);
      const double sw2 = cell(integ2, y1, x1) - cell(integ2, y0, x1) - cell(integ2, y1, x0) +
                         cell(integ2, y0, x0);
      const double var = sw2 - sw * sw / static_cast<double>(n_px);

      double score = 0.0;
      if (var > 0.0) {
        double cross = 0.0;
        for (int r = 0; r < side; ++r) {
          cross += ks.dot(tc.data() + static_cast<std::size_t>(r) * side,
                          frame.row(y0 + r) + x0, static_cast<std::size_t>(side));
        }
        // sum tc*(w - w_mean); the correction removes the residual of sum(tc).
        cross -= (sw / static_cast<double>(n_px)) * tc_sum;
        score = std::clamp(cross / (t_norm * std::sqrt(var)), -1.0, 1.0);
      }
      if (first || score > res.score) {
        res.score = score;
        res.center = {cx, cy};
        first = false;
      }
    }
  }
  return res;
}

DirectionMetrics eval_directions(std::span<const Direction> predicted,
                                 const GroundTruth& truth) {
  if (predicted.size() != truth.directions.size()) {
    throw DomainError("predicted stream length " + std::to_string(predicted.size()) +
                      " does not match ground truth length " +
                      std::to_string(truth.directions.size()));
  }
  std::uint64_t motion = 0;
  std::uint64_t motion_correct = 0;
  std::uint64_t still = 0;
  std::uint64_t still_false = 0;
  for (std::size_t k = 0; k < predicted.size(); ++k) {
    if (truth.directions[k] != Direction::Stationary) {
      ++motion;
      if (predicted[k] == truth.directions[k]) ++motion_correct;
    } else {
      ++still;
      if (predicted[k] != Direction::Stationary) ++still_false;
    }
  }
  DirectionMetrics m;
  if (motion > 0) m.tpr = static_cast<double>(motion_correct) / static_cast<double>(motion);
  if (still > 0) m.fpr = static_cast<double>(still_false) / static_cast<double>(still);
  return m;
}

namespace {

// Exact per-frame bound on examined candidates when the search stops at
// layer r: 1 + sum of ring sizes 8*1..8*r.
std::uint64_t candidate_budget(int layer_reached) {
  const std::uint64_t r = static_cast<std::uint64_t>(layer_reached);
  return 1 + 4 * r * (r + 1);
}

}  // namespace

BenchResult run_benchmark(const SequenceSpec& spec, const TrackerParams& params, int reps) {
  if (reps < 1) throw DomainError("reps must be at least 1");
  auto [frames, truth] = gen_sequence(spec, params.dead_zone);
  const TrackerState initial = make_tracker(frames[0], truth.centers[0], params);

  BenchResult result;
  result.frames.reserve(frames.size());
  std::vector<Direction> predicted;
  predicted.reserve(frames.size());

  // Instrumented pass: all deterministic metrics and invariant checks.
  TrackerState state = initial;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    const StepResult step = track_step(state, frames[k]);
    state = step.state;
    const ExhaustiveResult base = exhaustive_search(initial.tmpl, frames[k]);

    FrameRecord rec;
    rec.seq = frames[k].seq;
    rec.truth = truth.directions[k];
    rec.predicted = step.direction;
    rec.outcome = step.outcome;
    rec.baseline_center = base.center;
    rec.baseline_score = base.score;
    rec.baseline_candidates = base.candidates;
    if (k > 0) {
      rec.true_step_dx = truth.centers[k].x - truth.centers[k - 1].x;
      rec.true_step_dy = truth.centers[k].y - truth.centers[k - 1].y;
    }
    predicted.push_back(step.direction);

    if (rec.outcome.candidates_examined > candidate_budget(rec.outcome.layer_reached)) {
      throw DomainError("candidate budget exceeded at frame " + std::to_string(k));
    }
    if (rec.outcome.found) {
      const std::uint64_t span =
          2ull * rec.outcome.layer_reached * static_cast<std::uint64_t>(params.stride) + 1;
      if (span * span < base.candidates &&
          rec.outcome.candidates_examined >= base.candidates) {
        throw DomainError("cycle-reduction guarantee violated at frame " + std::to_string(k));
      }
    }

    result.metrics.candidates_predictor += rec.outcome.candidates_examined;
    result.metrics.candidates_baseline += base.candidates;
    result.frames.push_back(rec);
  }

  const DirectionMetrics dm = eval_directions(predicted, truth);
  result.metrics.tpr = dm.tpr;
  result.metrics.fpr = dm.fpr;

  // Timed passes; the median damps scheduler noise.
  std::vector<double> pred_times;
  for (int rep = 0; rep < reps; ++rep) {
    TrackerState s = initial;
    const auto t0 = Clock::now();
    for (const Frame& f : frames) {
      s = track_step(s, f).state;
    }
    pred_times.push_back(seconds_since(t0));
  }
  std::vector<double> base_times;
  for (int rep = 0; rep < reps; ++rep) {
    const auto t0 = Clock::now();
    for (const Frame& f : frames) {
      const ExhaustiveResult r = exhaustive_search(initial.tmpl, f);
      (void)r;
    }
    base_times.push_back(seconds_since(t0));
  }
  const double n = static_cast<double>(frames.size());
  const double mp = median(pred_times);
  const double mb = median(base_times);
  result.metrics.fps_predictor = mp > 0.0 ? n / mp : 0.0;
  result.metrics.fps_baseline = mb > 0.0 ? n / mb : 0.0;
  result.metrics.speedup =
      result.metrics.fps_baseline > 0.0 ? result.metrics.fps_predictor / result.metrics.fps_baseline
                                        : 0.0;
  return result;
}

std::string bench_csv_header() {
  return "width,height,frames,object,noise_sigma,seed,alpha,beta,threshold,stride,max_radius,"
         "half,dead_zone,tpr,fpr,fps_predictor,fps_baseline,speedup,candidates_predictor,"
         "candidates_baseline";
}

std::string bench_csv_row(const SequenceSpec& spec, const TrackerParams& params,
                          const MetricsReport& m) {
  std::ostringstream os;
  os << spec.width << ',' << spec.height << ',' << spec.path.size() + 1 << ','
     << (spec.object == ObjectKind::GaussianBlob ? "blob" : "checker") << ','
     << format_double(spec.noise_sigma) << ',' << spec.seed << ','
     << format_double(params.alpha) << ',' << format_double(params.beta) << ','
     << format_double(params.threshold) << ',' << params.stride << ',' << params.max_radius
     << ',' << params.half << ',' << format_double(params.dead_zone) << ','
     << (m.tpr ? format_double(*m.tpr) : "") << ',' << (m.fpr ? format_double(*m.fpr) : "")
     << ',' << format_double(m.fps_predictor) << ',' << format_double(m.fps_baseline) << ','
     << format_double(m.speedup) << ',' << m.candidates_predictor << ','
     << m.candidates_baseline;
  return os.str();
}

}  // namespace uvkit
