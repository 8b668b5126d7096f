#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace semigraph {

// Exact multiple of 1/4, stored as the integer count of quarter units.
// Adjacency weights are 1/4, 1/2, 1, or an integer distance, so every
// matrix entry, degree, and bound value lives in this set. The set is
// closed under addition, subtraction, and integer scaling, which are the
// only operations assembly and the bound formulas need; no rounding ever
// happens before an eigensolve.
class Quarter {
 public:
  constexpr Quarter() = default;

  static constexpr Quarter from_counts(std::int64_t quarters) { return Quarter(quarters); }
  static constexpr Quarter whole(std::int64_t units) { return Quarter(4 * units); }
  static constexpr Quarter half() { return Quarter(2); }
  static constexpr Quarter quarter() { return Quarter(1); }

  // Numerator over the fixed denominator 4.
  constexpr std::int64_t count() const { return count_; }
  constexpr bool is_integer() const { return count_ % 4 == 0; }
  constexpr double to_double() const { return static_cast<double>(count_) / 4.0; }

  // Lowest-terms rendering: "3", "-1/2", "9/4".
  std::string str() const {
    if (count_ % 4 == 0) return std::to_string(count_ / 4);
    if (count_ % 2 == 0) return std::to_string(count_ / 2) + "/2";
    return std::to_string(count_) + "/4";
  }

  constexpr Quarter operator-() const { return Quarter(-count_); }
  constexpr Quarter& operator+=(Quarter o) {
    count_ += o.count_;
    return *this;
  }
  constexpr Quarter& operator-=(Quarter o) {
    count_ -= o.count_;
    return *this;
  }
  constexpr Quarter& operator*=(std::int64_t k) {
    count_ *= k;
    return *this;
  }

  friend constexpr Quarter operator+(Quarter a, Quarter b) { return Quarter(a.count_ + b.count_); }
  friend constexpr Quarter operator-(Quarter a, Quarter b) { return Quarter(a.count_ - b.count_); }
  friend constexpr Quarter operator*(Quarter a, std::int64_t k) { return Quarter(a.count_ * k); }
  friend constexpr Quarter operator*(std::int64_t k, Quarter a) { return Quarter(k * a.count_); }
  friend constexpr auto operator<=>(Quarter a, Quarter b) = default;

 private:
  explicit constexpr Quarter(std::int64_t quarters) : count_(quarters) {}

  std::int64_t count_ = 0;
};

}  // namespace semigraph
