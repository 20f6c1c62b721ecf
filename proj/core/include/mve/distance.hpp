#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

namespace mve {

/// Shortest-path length, or Infinite when no path exists.
///
/// Infinite compares greater than every finite value, so a disconnected
/// pair satisfies every length target.
class Distance {
 public:
  using value_type = std::int64_t;

  constexpr Distance() = default;
  constexpr explicit Distance(value_type v) : value_(v) {}

  static constexpr Distance infinite() { return Distance(kInf); }

  [[nodiscard]] constexpr bool is_infinite() const { return value_ == kInf; }
  [[nodiscard]] constexpr bool is_finite() const { return value_ != kInf; }
  /// Raw value; meaningless when infinite.
  [[nodiscard]] constexpr value_type value() const { return value_; }

  constexpr auto operator<=>(const Distance&) const = default;

  constexpr bool operator>=(value_type v) const { return value_ >= v; }
  constexpr bool operator<(value_type v) const { return value_ < v; }

  friend constexpr Distance operator+(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinite();
    return Distance(a.value_ + b.value_);
  }
  friend constexpr Distance operator+(Distance a, value_type b) {
    return a + Distance(b);
  }

  [[nodiscard]] std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(value_);
  }

 private:
  static constexpr value_type kInf = std::numeric_limits<value_type>::max();
  value_type value_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Distance d) {
  return os << d.to_string();
}

}  // namespace mve
