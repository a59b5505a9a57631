#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "errors.hpp"

namespace w123 {

// Wall-clock budget checked cooperatively inside long-running loops.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  static Deadline unbounded() { return Deadline(); }
  static Deadline after(double seconds) {
    Deadline d;
    if (seconds > 0)
      d.at_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    d.budget_ = seconds;
    return d;
  }

  bool bounded() const { return at_.has_value(); }
  bool expired() const { return at_ && Clock::now() >= *at_; }
  void check(const char* stage) const {
    if (expired())
      throw TimeoutError(std::string(stage) + " exceeded its " + std::to_string(budget_) + " s budget");
  }

 private:
  std::optional<Clock::time_point> at_;
  double budget_ = 0;
};

}  // namespace w123
