#pragma once

#include <chrono>
#include <optional>

#include "regjm/errors.hpp"

namespace regjm {

/// Optional wall-clock limit threaded through long computations.
class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;
  static Deadline after(double seconds) {
    Deadline d;
    d.until_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds));
    return d;
  }

  bool unlimited() const { return !until_.has_value(); }
  bool expired() const { return until_ && Clock::now() > *until_; }
  void check() const {
    if (expired()) throw BudgetExceeded("computation exceeded its time budget");
  }

 private:
  std::optional<Clock::time_point> until_;
};

}  // namespace regjm
