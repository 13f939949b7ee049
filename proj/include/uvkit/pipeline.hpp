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

#ifndef UVKIT_PIPELINE_HPP_
#define UVKIT_PIPELINE_HPP_

#include <chrono>
#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "uvkit/frame.hpp"

namespace uvkit {

/// Sequence-stamped unit flowing through the pipeline.
struct Job {
  std::uint64_t seq = 0;
  Frame frame;
};

struct PipelineStats {
  int workers = 0;
  std::uint64_t jobs = 0;
  double wall_seconds = 0.0;
  double fps = 0.0;
  std::uint64_t hwm_inflight = 0;  // peak of accepted-but-undelivered jobs
  std::vector<std::uint64_t> per_worker;
};

/// RunStats CSV: workers,jobs,wall_seconds,fps,hwm_inflight.
std::string pipeline_stats_csv_header();
std::string pipeline_stats_csv_row(const PipelineStats& s);

/// Bounded-queue worker pool with in-order delivery.
///
/// One producer thread calls submit, W workers apply the stage function, one
/// consumer thread calls next_result. Results come out in strictly
/// increasing seq order regardless of worker completion order; a reorder
/// buffer holds early finishers. submit applies backpressure instead of
/// dropping: it blocks while the input queue holds queue_capacity jobs, and
/// also caps the total of queued + in-flight + reordered results at
/// 2*queue_capacity + workers, so memory stays bounded no matter how the
/// consumer lags.
///
/// The stage function is shared read-only across workers and must be pure or
/// internally synchronized. submit and next_result are each single-caller:
/// one producer, one consumer.
template <typename Payload>
class Pipeline {
public:
  using Stage = std::function<Payload(const Job&)>;

  struct Config {
    int workers = 1;
    std::size_t queue_capacity = 1;
    Stage stage;
  };

  struct Result {
    std::uint64_t seq = 0;
    Payload payload{};
    int worker_id = -1;
    double latency_s = 0.0;  // submit-to-completion
  };

  enum class Submit { Accepted, WouldBlock, Closed };

  explicit Pipeline(Config config) : config_(std::move(config)) {
    if (config_.workers < 1) throw DomainError("pipeline needs at least one worker");
    if (config_.queue_capacity < 1) throw DomainError("queue capacity must be at least 1");
    if (!config_.stage) throw DomainError("pipeline stage must be callable");
    total_bound_ = 2 * config_.queue_capacity + static_cast<std::size_t>(config_.workers);
    per_worker_.assign(static_cast<std::size_t>(config_.workers), 0);
    start_time_ = Clock::now();
    workers_.reserve(static_cast<std::size_t>(config_.workers));
    try {
      for (int id = 0; id < config_.workers; ++id) {
        workers_.emplace_back([this, id] { worker_loop(id); });
      }
    } catch (...) {
      // Spawn failure: stop whatever did start, then rethrow.
      request_close();
      join_workers();
      throw;
    }
  }

  ~Pipeline() {
    request_close();
    join_workers();
  }

  Pipeline(const Pipeline&) = delete;
  Pipeline& operator=(const Pipeline&) = delete;

  /// Blocking submit. Returns false when the pipeline is closed.
  bool submit(Frame frame) {
    std::unique_lock lock(mu_);
    admission_.wait(lock, [this] { return closed_ || admissible_locked(); });
    if (closed_) return false;
    enqueue_locked(std::move(frame));
    return true;
  }

  /// Non-blocking submit: WouldBlock while backpressure holds.
  Submit try_submit(Frame frame) {
    std::unique_lock lock(mu_);
    if (closed_) return Submit::Closed;
    if (!admissible_locked()) return Submit::WouldBlock;
    enqueue_locked(std::move(frame));
    return Submit::Accepted;
  }

  /// Next result in seq order. Blocks until it is ready; empty once the
  /// pipeline is closed and every accepted job has been delivered.
  std::optional<Result> next_result() {
    std::unique_lock lock(mu_);
    result_ready_.wait(lock, [this] {
      return done_.contains(next_emit_) || (closed_ && delivered_ == accepted_);
    });
    const auto it = done_.find(next_emit_);
    if (it == done_.end()) return std::nullopt;  // closed and fully drained
    Result r = std::move(it->second);
    done_.erase(it);
    ++next_emit_;
    ++delivered_;
    admission_.notify_one();
    return r;
  }

  /// Stops accepting jobs, lets queued work finish, joins the workers.
  /// Undelivered results stay consumable through next_result afterwards.
  PipelineStats shutdown() {
    request_close();
    join_workers();
    std::unique_lock lock(mu_);
    PipelineStats s;
    s.workers = config_.workers;
    s.jobs = completed_;
    s.wall_seconds = std::chrono::duration<double>(Clock::now() - start_time_).count();
    s.fps = s.wall_seconds > 0.0 ? static_cast<double>(s.jobs) / s.wall_seconds : 0.0;
    s.hwm_inflight = hwm_inflight_;
    s.per_worker = per_worker_;
    return s;
  }

private:
  using Clock = std::chrono::steady_clock;

  struct TimedJob {
    Job job;
    Clock::time_point submitted;
  };

  bool admissible_locked() const {
    return queue_.size() < config_.queue_capacity && accepted_ - delivered_ < total_bound_;
  }

  void enqueue_locked(Frame frame) {
    TimedJob tj;
    tj.job.seq = next_seq_++;
    tj.job.frame = std::move(frame);
    tj.submitted = Clock::now();
    queue_.push_back(std::move(tj));
    ++accepted_;
    hwm_inflight_ = std::max(hwm_inflight_, accepted_ - delivered_);
    work_ready_.notify_one();
  }

  void worker_loop(int id) {
    for (;;) {
      TimedJob tj;
      {
        std::unique_lock lock(mu_);
        work_ready_.wait(lock, [this] { return closed_ || !queue_.empty(); });
        if (queue_.empty()) return;  // closed and drained
        tj = std::move(queue_.front());
        queue_.pop_front();
        admission_.notify_one();
      }

      Result r;
      r.seq = tj.job.seq;
      r.worker_id = id;
      r.payload = config_.stage(tj.job);
      r.latency_s = std::chrono::duration<double>(Clock::now() - tj.submitted).count();

      std::unique_lock lock(mu_);
      const std::uint64_t seq = r.seq;
      done_.emplace(seq, std::move(r));
      ++completed_;
      ++per_worker_[static_cast<std::size_t>(id)];
      if (seq == next_emit_) result_ready_.notify_all();
    }
  }

  void request_close() {
    std::unique_lock lock(mu_);
    closed_ = true;
    work_ready_.notify_all();
    admission_.notify_all();
    result_ready_.notify_all();
  }

  void join_workers() {
    for (auto& t : workers_) {
      if (t.joinable()) t.join();
    }
  }

  Config config_;
  std::size_t total_bound_ = 0;
  std::mutex mu_;
  std::condition_variable work_ready_;
  std::condition_variable admission_;
  std::condition_variable result_ready_;
  std::deque<TimedJob> queue_;
  std::map<std::uint64_t, Result> done_;
  std::vector<std::thread> workers_;
  std::vector<std::uint64_t> per_worker_;
  Clock::time_point start_time_;
  std::uint64_t next_seq_ = 0;
  std::uint64_t next_emit_ = 0;
  std::uint64_t accepted_ = 0;
  std::uint64_t delivered_ = 0;
  std::uint64_t completed_ = 0;
  std::uint64_t hwm_inflight_ = 0;
  bool closed_ = false;
};

}  // namespace uvkit

#endif  // UVKIT_PIPELINE_HPP_
