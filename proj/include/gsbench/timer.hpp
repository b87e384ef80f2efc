#pragma once

#include <chrono>
#include <cstddef>
#include <vector>

namespace gsbench {

/// Monotonic clock used to bracket timed runs. The engine calls now() exactly
/// twice per timed run: once before the sweep and once after the join.
class Timer {
public:
  virtual ~Timer() = default;
  /// Seconds since an arbitrary fixed origin.
  virtual double now() = 0;
};

class SteadyTimer final : public Timer {
public:
  double now() override {
    using namespace std::chrono;
    return duration<double>(steady_clock::now().time_since_epoch()).count();
  }
};

/// Deterministic timer for tests: every (start, stop) pair of calls measures
/// the next entry of `durations`, cycling when exhausted.
class FakeTimer final : public Timer {
public:
  explicit FakeTimer(std::vector<double> durations) : durations_(std::move(durations)) {}

  double now() override {
    if (calls_++ % 2 == 1 && !durations_.empty())
      clock_ += durations_[next_++ % durations_.size()];
    return clock_;
  }

private:
  std::vector<double> durations_;
  std::size_t calls_ = 0;
  std::size_t next_ = 0;
  double clock_ = 1000.0;
};

} // namespace gsbench
