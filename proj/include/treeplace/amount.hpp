#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace treeplace {

// A nonnegative request count or bandwidth, extended with an explicit
// unbounded value. Addition saturates at unbounded (including on int64
// overflow) and unbounded compares above every finite amount.
class Amount {
 public:
  constexpr Amount() = default;
  constexpr Amount(std::int64_t value) : value_(value) {}  // NOLINT: implicit by intent

  static constexpr Amount unbounded() {
    Amount a;
    a.unbounded_ = true;
    return a;
  }

  constexpr bool finite() const { return !unbounded_; }
  constexpr bool is_unbounded() const { return unbounded_; }

  // Throws ContractViolation on an unbounded amount.
  std::int64_t value() const;

  friend constexpr Amount operator+(Amount a, Amount b) {
    if (a.unbounded_ || b.unbounded_) return unbounded();
    std::int64_t sum = 0;
    if (__builtin_add_overflow(a.value_, b.value_, &sum)) return unbounded();
    return Amount(sum);
  }
  constexpr Amount& operator+=(Amount other) { return *this = *this + other; }

  friend constexpr bool operator==(Amount a, Amount b) {
    if (a.unbounded_ || b.unbounded_) return a.unbounded_ == b.unbounded_;
    return a.value_ == b.value_;
  }
  friend constexpr std::strong_ordering operator<=>(Amount a, Amount b) {
    if (a.unbounded_ && b.unbounded_) return std::strong_ordering::equal;
    if (a.unbounded_) return std::strong_ordering::greater;
    if (b.unbounded_) return std::strong_ordering::less;
    return a.value_ <=> b.value_;
  }

  // "inf" for unbounded, the decimal value otherwise.
  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, Amount a) { return os << a.to_string(); }

 private:
  std::int64_t value_ = 0;
  bool unbounded_ = false;
};

using Contribution = Amount;
using Bandwidth = Amount;

}  // namespace treeplace
