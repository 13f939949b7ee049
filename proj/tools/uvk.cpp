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

// uvk: tracking, benchmarking, convolution self-checks, op-count/budget
// reports, pipeline throughput measurement, synthetic data generation.
//
// Exit codes: 0 ok, 1 property failure, 2 usage, 3 I/O, 4 domain error.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "uvkit/bench.hpp"
#include "uvkit/conv.hpp"
#include "uvkit/opcount.hpp"
#include "uvkit/pgm.hpp"
#include "uvkit/pipeline.hpp"
#include "uvkit/refconv.hpp"
#include "uvkit/simd.hpp"
#include "uvkit/tracker.hpp"
#include "uvkit/util.hpp"

namespace {

using namespace uvkit;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitDomain = 4;

// UVK_SEED wins over --seed when both are present.
std::uint64_t effective_seed(std::uint64_t flag_seed) {
  if (const char* env = std::getenv("UVK_SEED")) {
    return static_cast<std::uint64_t>(parse_int("UVK_SEED", env));
  }
  return flag_seed;
}

PatchCenter parse_init(const std::string& text) {
  const auto fields = split(text, ',');
  if (fields.size() != 2) {
    throw ConfigError("--init expects X,Y, got '" + text + "'");
  }
  return {static_cast<int>(parse_int("init", trim(fields[0]))),
          static_cast<int>(parse_int("init", trim(fields[1])))};
}

struct TrackerFlagOverrides {
  std::optional<double> alpha, beta, threshold, dead_zone;
  std::optional<int> stride, max_radius, half;

  TrackerParams apply(TrackerParams p) const {
    if (alpha) p.alpha = *alpha;
    if (beta) p.beta = *beta;
    if (threshold) p.threshold = *threshold;
    if (dead_zone) p.dead_zone = *dead_zone;
    if (stride) p.stride = *stride;
    if (max_radius) p.max_radius = *max_radius;
    if (half) p.half = *half;
    validate_params(p);
    return p;
  }
};

void add_tracker_flags(CLI::App* cmd, TrackerFlagOverrides& o) {
  cmd->add_option("--alpha", o.alpha, "Override alpha from the config file");
  cmd->add_option("--beta", o.beta, "Override beta");
  cmd->add_option("--threshold", o.threshold, "Override threshold");
  cmd->add_option("--dead-zone", o.dead_zone, "Override dead_zone");
  cmd->add_option("--stride", o.stride, "Override stride");
  cmd->add_option("--max-radius", o.max_radius, "Override max_radius");
  cmd->add_option("--half", o.half, "Override half");
}

TrackerParams load_tracker_params(const std::string& config_path,
                                  const TrackerFlagOverrides& overrides) {
  TrackerParams p;
  if (!config_path.empty()) p = parse_tracker_config_file(config_path);
  return overrides.apply(p);
}

int cmd_track(const std::string& frames_dir, const std::string& config_path,
              const std::string& init_text, const std::string& out_path,
              const TrackerFlagOverrides& overrides) {
  const TrackerParams params = load_tracker_params(config_path, overrides);
  const std::vector<Frame> frames = read_frame_sequence(frames_dir);
  if (frames.size() < 2) {
    throw IoError("directory " + frames_dir + " holds " + std::to_string(frames.size()) +
                  " frames; tracking needs at least 2");
  }
  const PatchCenter init = parse_init(init_text);

  TrackerState state = make_tracker(frames[0], init, params);
  std::ostringstream csv;
  csv << track_csv_header() << '\n';
  for (std::size_t k = 1; k < frames.size(); ++k) {
    const StepResult step = track_step(state, frames[k]);
    state = step.state;
    csv << track_csv_row(frames[k].seq, step) << '\n';
  }
  write_file_atomic(out_path, csv.str());
  std::cout << "wrote " << frames.size() - 1 << " rows to " << out_path << "\n";
  return kExitOk;
}

int cmd_bench(const std::string& spec_path, const std::string& config_path,
              const std::string& out_path, int reps, const TrackerFlagOverrides& overrides) {
  const SequenceSpec spec = parse_sequence_spec_file(spec_path);
  const TrackerParams params = load_tracker_params(config_path, overrides);
  const BenchResult result = run_benchmark(spec, params, reps);

  std::ostringstream csv;
  csv << bench_csv_header() << '\n' << bench_csv_row(spec, params, result.metrics) << '\n';
  write_file_atomic(out_path, csv.str());

  const MetricsReport& m = result.metrics;
  std::cout << "tpr=" << (m.tpr ? format_double(*m.tpr) : "n/a")
            << " fpr=" << (m.fpr ? format_double(*m.fpr) : "n/a")
            << " speedup=" << format_double(m.speedup)
            << " candidate_ratio="
            << format_double(static_cast<double>(m.candidates_predictor) /
                             static_cast<double>(m.candidates_baseline))
            << "\n";
  return kExitOk;
}

// Random convolution self-checks: production path against the naive
// reference, the separable/composed identity, and exact MAC counts.
int cmd_conv_check(std::uint64_t seed, int trials) {
  std::mt19937_64 rng(effective_seed(seed));
  std::uniform_int_distribution<int> dim(1, 8);
  std::uniform_int_distribution<int> chan_m(1, 4);
  std::uniform_int_distribution<int> chan_n(1, 5);
  std::uniform_int_distribution<int> ksize(0, 2);  // lk in {1,3,5}
  std::uniform_real_distribution<double> value(-1.0, 1.0);

  const double tol = 1e-9;
  bool brute_ok = true;
  bool factor_ok = true;
  bool macs_ok = true;

  for (int t = 0; t < trials; ++t) {
    const int h = dim(rng);
    const int w = dim(rng);
    const int m = chan_m(rng);
    const int n = chan_n(rng);
    const int lk = 2 * ksize(rng) + 1;

    Tensor3 input = make_tensor(h, w, m);
    for (double& v : input.data) v = value(rng);
    Kernel4 kernel = make_kernel4(lk, m, n);
    for (double& v : kernel.data) v = value(rng);
    DepthwiseKernel dk = make_depthwise(lk, m);
    for (double& v : dk.data) v = value(rng);
    PointwiseKernel pk = make_pointwise(m, n);
    for (double& v : pk.data) v = value(rng);

    const ConvOutput std_out = conv2d_standard(input, kernel);
    if (refconv::max_abs_diff(std_out.tensor, refconv::conv2d_standard_ref(input, kernel)) > tol) {
      brute_ok = false;
    }

    const ConvOutput sep = separable_conv(input, dk, pk);
    const ConvOutput composed = conv2d_standard(input, compose_separable_kernel(dk, pk));
    if (refconv::max_abs_diff(sep.tensor, composed.tensor) > tol) factor_ok = false;

    const std::uint64_t hw = static_cast<std::uint64_t>(h) * w;
    const std::uint64_t lk2 = static_cast<std::uint64_t>(lk) * lk;
    if (std_out.macs != lk2 * m * n * hw) macs_ok = false;
    if (sep.macs != lk2 * m * hw + static_cast<std::uint64_t>(m) * n * hw) macs_ok = false;
  }

  std::cout << "brute-force-agreement: " << (brute_ok ? "pass" : "FAIL") << "\n"
            << "factorization-equivalence: " << (factor_ok ? "pass" : "FAIL") << "\n"
            << "mac-exactness: " << (macs_ok ? "pass" : "FAIL") << "\n";
  return (brute_ok && factor_ok && macs_ok) ? kExitOk : kExitPropertyFailure;
}

void emit_report(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
  } else {
    write_file_atomic(out_path, content);
  }
}

int cmd_opcount(const std::string& spec_path, const std::string& out_path) {
  const NetSpec net = parse_net_spec_file(spec_path);
  std::ostringstream csv;
  csv << "layer,mode,lk,m,n,lf,ops_standard,ops_depthwise,ops_pointwise,ops_separable,"
         "reduction_num,reduction_den,reduction,params_standard,params_separable\n";
  for (std::size_t i = 0; i < net.layers.size(); ++i) {
    const ConvSpec& s = net.layers[i];
    const SeparableOps sep = ops_separable(s);
    const Rational ratio = reduction_ratio(s);
    csv << i << ',' << conv_mode_name(s.mode) << ',' << s.lk << ',' << s.m << ',' << s.n << ','
        << s.lf << ',' << ops_standard(s) << ',' << sep.depthwise << ',' << sep.pointwise << ','
        << sep.total << ',' << ratio.num << ',' << ratio.den << ','
        << format_double(ratio.value()) << ',' << params_standard(s) << ','
        << params_separable(s) << '\n';
  }
  csv << "# total ops (per mode): " << net_ops(net) << ", model bytes: " << model_bytes(net)
      << '\n';
  emit_report(out_path, csv.str());
  return kExitOk;
}

int cmd_budget(const std::string& spec_path, double fo, double eo, double battery,
               std::uint64_t ram, std::uint32_t bytes_per_weight, const std::string& out_path) {
  NetSpec net = parse_net_spec_file(spec_path);
  if (bytes_per_weight > 0) net.bytes_per_weight = bytes_per_weight;
  PowerParams p;
  p.f_o = fo;
  p.n_ops = static_cast<double>(net_ops(net));
  p.e_o = eo;
  const BudgetReport r = budget_report(p, battery, net, ram);

  std::ostringstream csv;
  csv << "p_w,battery_w,battery_fraction,model_bytes,ram_bytes,ram_fraction\n"
      << format_double(r.p_w) << ',' << format_double(r.battery_w) << ','
      << format_double(r.battery_fraction) << ',' << r.model_bytes << ',' << r.ram_bytes << ','
      << format_double(r.ram_fraction) << '\n'
      << budget_notes();
  emit_report(out_path, csv.str());
  return kExitOk;
}

int cmd_pipeline_bench(const std::string& workers_list, int frames, double stage_ms,
                       std::size_t capacity, const std::string& out_path) {
  std::vector<int> worker_counts;
  for (const std::string& tok : split(workers_list, ',')) {
    worker_counts.push_back(static_cast<int>(parse_int("workers", trim(tok))));
  }
  if (worker_counts.empty()) throw ConfigError("--workers needs at least one count");
  if (frames < 1) throw DomainError("--frames must be at least 1");

  const auto stage = [stage_ms](const Job& job) -> double {
    const auto t0 = std::chrono::steady_clock::now();
    double acc = job.frame.pixels[0];
    while (std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
               .count() < stage_ms) {
      for (int i = 1; i <= 64; ++i) acc += std::sin(acc + i);
    }
    return acc;
  };

  std::ostringstream csv;
  csv << pipeline_stats_csv_header() << ",scaling_vs_w1\n";
  double fps_w1 = 0.0;
  for (int workers : worker_counts) {
    Pipeline<double>::Config config;
    config.workers = workers;
    config.queue_capacity = capacity;
    config.stage = stage;
    Pipeline<double> pipe(config);

    std::thread producer([&pipe, frames] {
      for (int i = 0; i < frames; ++i) {
        pipe.submit(make_frame(1, 1, 0.5, static_cast<std::uint64_t>(i)));
      }
    });
    std::uint64_t expected = 0;
    for (int i = 0; i < frames; ++i) {
      const auto r = pipe.next_result();
      if (!r || r->seq != expected++) {
        producer.join();
        throw DomainError("pipeline delivered results out of order");
      }
    }
    producer.join();
    const PipelineStats stats = pipe.shutdown();
    if (workers == worker_counts.front() && fps_w1 == 0.0) fps_w1 = stats.fps;
    const double scaling = fps_w1 > 0.0 ? stats.fps / fps_w1 : 0.0;
    csv << pipeline_stats_csv_row(stats) << ',' << format_double(scaling) << '\n';
  }
  emit_report(out_path, csv.str());
  return kExitOk;
}

int cmd_gen_data(const std::string& spec_path, const std::string& out_dir, double dead_zone) {
  const SequenceSpec spec = parse_sequence_spec_file(spec_path);
  auto [frames, truth] = gen_sequence(spec, dead_zone);

  std::filesystem::create_directories(out_dir);
  for (std::size_t k = 0; k < frames.size(); ++k) {
    char name[32];
    std::snprintf(name, sizeof(name), "frame_%06zu.pgm", k);
    const std::filesystem::path final_path = std::filesystem::path(out_dir) / name;
    std::filesystem::path tmp = final_path;
    tmp += ".tmp";
    write_frame_pgm(frames[k], tmp);
    std::filesystem::rename(tmp, final_path);
  }
  write_file_atomic(std::filesystem::path(out_dir) / "truth.csv", ground_truth_csv(truth));
  std::cout << "wrote " << frames.size() << " frames + truth.csv to " << out_dir << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"uvk: direction-predicting tracker, separable-convolution kernels, "
               "operation/power budgeting, and a bounded multi-worker frame pipeline"};
  app.require_subcommand(1);

  // track
  auto* track = app.add_subcommand("track", "Track a PGM sequence and emit per-frame directions");
  std::string track_frames, track_config, track_init, track_out;
  TrackerFlagOverrides track_overrides;
  track->add_option("--frames", track_frames, "Directory of .pgm frames")->required();
  track->add_option("--config", track_config, "key=value tracker config file");
  track->add_option("--init", track_init, "Initial center X,Y")->required();
  track->add_option("--out", track_out, "Output CSV path")->required();
  add_tracker_flags(track, track_overrides);

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark the predictor against the exhaustive baseline");
  std::string bench_spec, bench_config, bench_out;
  int bench_reps = 3;
  TrackerFlagOverrides bench_overrides;
  bench->add_option("--spec", bench_spec, "Sequence spec file")->required();
  bench->add_option("--config", bench_config, "key=value tracker config file");
  bench->add_option("--out", bench_out, "Output CSV path")->required();
  bench->add_option("--reps", bench_reps, "Timing repetitions (median reported)");
  add_tracker_flags(bench, bench_overrides);

  // conv-check
  auto* conv_check = app.add_subcommand("conv-check", "Random self-checks of the convolution core");
  std::uint64_t cc_seed = 1;
  int cc_trials = 100;
  conv_check->add_option("--seed", cc_seed, "RNG seed (UVK_SEED env overrides)");
  conv_check->add_option("--trials", cc_trials, "Random instances per property");

  // opcount
  auto* opcount = app.add_subcommand("opcount", "Analytic per-layer operation counts");
  std::string oc_spec, oc_out;
  opcount->add_option("--spec", oc_spec, "Net spec file (mode lk m n lf per line)")->required();
  opcount->add_option("--out", oc_out, "Output CSV path (default stdout)");

  // budget
  auto* budget = app.add_subcommand("budget", "Power and memory budget report");
  std::string bu_spec, bu_out;
  double bu_fo = 0.0, bu_eo = 0.0, bu_battery = 0.0;
  std::uint64_t bu_ram = 0;
  std::uint32_t bu_bpw = 0;
  budget->add_option("--spec", bu_spec, "Net spec file")->required();
  budget->add_option("--fo", bu_fo, "Inference rate (1/s)")->required();
  budget->add_option("--eo", bu_eo, "Energy per operation (J)")->required();
  budget->add_option("--battery", bu_battery, "Battery power budget (W)")->required();
  budget->add_option("--ram", bu_ram, "Available RAM (bytes)")->required();
  budget->add_option("--bytes-per-weight", bu_bpw, "Override weight width (default 4)");
  budget->add_option("--out", bu_out, "Output CSV path (default stdout)");

  // pipeline-bench
  auto* pipe_bench = app.add_subcommand("pipeline-bench", "Measure pipeline throughput scaling");
  std::string pb_workers = "1,2,4";
  int pb_frames = 100;
  double pb_stage_ms = 10.0;
  std::size_t pb_capacity = 8;
  std::string pb_out;
  pipe_bench->add_option("--workers", pb_workers, "Comma-separated worker counts");
  pipe_bench->add_option("--frames", pb_frames, "Jobs per run");
  pipe_bench->add_option("--stage-ms", pb_stage_ms, "CPU-bound stage duration per job (ms)");
  pipe_bench->add_option("--capacity", pb_capacity, "Input queue capacity");
  pipe_bench->add_option("--out", pb_out, "Output CSV path (default stdout)");

  // gen-data
  auto* gen_data = app.add_subcommand("gen-data", "Persist a synthetic sequence as PGM + truth.csv");
  std::string gd_spec, gd_out;
  double gd_dead_zone = 0.5;
  gen_data->add_option("--spec", gd_spec, "Sequence spec file")->required();
  gen_data->add_option("--out", gd_out, "Output directory")->required();
  gen_data->add_option("--dead-zone", gd_dead_zone, "Dead zone for truth directions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*track) {
      return cmd_track(track_frames, track_config, track_init, track_out, track_overrides);
    }
    if (*bench) {
      return cmd_bench(bench_spec, bench_config, bench_out, bench_reps, bench_overrides);
    }
    if (*conv_check) return cmd_conv_check(cc_seed, cc_trials);
    if (*opcount) return cmd_opcount(oc_spec, oc_out);
    if (*budget) return cmd_budget(bu_spec, bu_fo, bu_eo, bu_battery, bu_ram, bu_bpw, bu_out);
    if (*pipe_bench) {
      return cmd_pipeline_bench(pb_workers, pb_frames, pb_stage_ms, pb_capacity, pb_out);
    }
    if (*gen_data) return cmd_gen_data(gd_spec, gd_out, gd_dead_zone);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
