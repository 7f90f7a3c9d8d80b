#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>

namespace tate {

class TimeoutError : public std::runtime_error {
 public:
  TimeoutError() : std::runtime_error("computation timed out") {}
};

/// Wall-clock limit polled from the reduction loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  explicit Deadline(Clock::duration budget) : until_(Clock::now() + budget) {}

  bool expired() const { return until_ && Clock::now() >= *until_; }
  void check() const {
    if (expired()) throw TimeoutError();
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace tate
