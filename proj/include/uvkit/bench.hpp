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

#ifndef UVKIT_BENCH_HPP_
#define UVKIT_BENCH_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "uvkit/frame.hpp"
#include "uvkit/tracker.hpp"

namespace uvkit {

enum class ObjectKind { GaussianBlob, Checkerboard };

/// Deterministic synthetic sequence: an object of known appearance moving
/// over a flat background by integer per-frame displacements, plus optional
/// additive Gaussian noise.
struct SequenceSpec {
  int width = 320;
  int height = 240;
  ObjectKind object = ObjectKind::GaussianBlob;
  int object_half = 8;        // rendered box half-size; also the stay-inside margin
  double object_sigma = 1.5;  // blob sharpness
  int checker_cell = 3;       // checkerboard cell size in px
  double amplitude = 0.75;    // object brightness above background
  double background = 0.15;
  int start_x = -1;  // -1 means frame center
  int start_y = -1;
  std::vector<std::pair<int, int>> path;  // per-transition (dx,dy); frames = path.size()+1
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
};

void validate_sequence_spec(const SequenceSpec& spec);

/// key=value format: width, height, object (blob|checker), object_half,
/// object_sigma, checker_cell, amplitude, background, start_x, start_y,
/// noise_sigma, seed, and exactly one motion form: path=dx,dy;dx,dy;... or
/// segments=COUNT*dx,dy;... or frames=N with optional dx=, dy= constants.
SequenceSpec parse_sequence_spec(std::istream& in);
SequenceSpec parse_sequence_spec_file(const std::string& path);

/// Per-frame truth: object center plus its displacement quantized with the
/// same dead-zone rule the predictor uses. Frame 0 is Stationary.
struct GroundTruth {
  std::vector<PatchCenter> centers;
  std::vector<Direction> directions;
  double dead_zone = 0.5;
};

/// Renders the sequence. Deterministic for a fixed seed. Throws DomainError
/// when the object box would leave the frame.
std::pair<std::vector<Frame>, GroundTruth> gen_sequence(const SequenceSpec& spec,
                                                        double dead_zone);

/// seq,true_x,true_y,true_direction rows for persisted sequences.
std::string ground_truth_csv(const GroundTruth& truth);
GroundTruth parse_ground_truth_csv(std::istream& in, double dead_zone);

struct ExhaustiveResult {
  PatchCenter center;
  double score = 0.0;
  std::uint64_t candidates = 0;  // (W-2h)*(H-2h)
};

/// Full sliding-window NCC argmax over every valid center, row-major,
/// first-wins ties. The speed baseline and search oracle for the layered
/// predictor. Window means and variances come from integral images; the
/// cross term is an explicit dot product per window.
ExhaustiveResult exhaustive_search(const Patch& tmpl, const Frame& frame);

struct DirectionMetrics {
  // Absent when a denominator is empty (no motion / no stationary frames).
  std::optional<double> tpr;
  std::optional<double> fpr;
};

/// Motion frames are those whose true direction is not Stationary.
/// TPR = correct direction on motion frames; FPR = spurious motion reported
/// on stationary frames. Throws DomainError on length mismatch.
DirectionMetrics eval_directions(std::span<const Direction> predicted,
                                 const GroundTruth& truth);

struct FrameRecord {
  std::uint64_t seq = 0;
  Direction truth = Direction::Stationary;
  Direction predicted = Direction::Stationary;
  SearchOutcome outcome;
  PatchCenter baseline_center;
  double baseline_score = 0.0;
  std::uint64_t baseline_candidates = 0;
  int true_step_dx = 0;
  int true_step_dy = 0;
};

struct MetricsReport {
  std::optional<double> tpr;
  std::optional<double> fpr;
  double fps_predictor = 0.0;
  double fps_baseline = 0.0;
  double speedup = 0.0;  // fps_predictor / fps_baseline
  std::uint64_t candidates_predictor = 0;
  std::uint64_t candidates_baseline = 0;
};

struct BenchResult {
  MetricsReport metrics;
  std::vector<FrameRecord> frames;
};

/// Runs the layered predictor and the per-frame exhaustive baseline over the
/// same generated frames. Deterministic metrics come from a single
/// instrumented pass; FPS is the median of `reps` timed passes each. Also
/// verifies the per-frame candidate-budget bound and the cycle-reduction
/// guarantee, throwing DomainError if either fails.
BenchResult run_benchmark(const SequenceSpec& spec, const TrackerParams& params, int reps = 3);

/// One CSV row per (config, spec) pair, config echoed first.
std::string bench_csv_header();
std::string bench_csv_row(const SequenceSpec& spec, const TrackerParams& params,
                          const MetricsReport& m);

}  // namespace uvkit

#endif  // UVKIT_BENCH_HPP_
