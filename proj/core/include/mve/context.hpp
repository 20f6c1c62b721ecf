#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

#include "mve/errors.hpp"

namespace mve {

/// Search statistics and an optional deadline shared by the solvers.
/// Solvers call `tick()` between branch expansions; it throws Timeout
/// once the deadline has passed.
class SolveContext {
 public:
  using Clock = std::chrono::steady_clock;

  SolveContext() = default;
  explicit SolveContext(std::chrono::milliseconds budget)
      : deadline_(Clock::now() + budget) {}

  void tick() {
    ++nodes_;
    if (deadline_ && (nodes_ & 0x3f) == 0 && Clock::now() > *deadline_) {
      throw Timeout();
    }
  }
  void leaf() { ++leaves_; }

  [[nodiscard]] std::int64_t nodes() const { return nodes_; }
  [[nodiscard]] std::int64_t leaves() const { return leaves_; }

 private:
  std::optional<Clock::time_point> deadline_;
  std::int64_t nodes_ = 0;
  std::int64_t leaves_ = 0;
};

}  // namespace mve
