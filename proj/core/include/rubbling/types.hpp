#pragma once

#include <cstdint>
#include <string>

#include "rubbling/error.hpp"

namespace rubbling {

using Vertex = std::int32_t;
using Count = std::int64_t;

// Pebble arithmetic is 64-bit and checked: silent wraparound would turn an
// infeasible instance into a wrong answer instead of an error.
inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("pebble count overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("pebble count overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("pebble count overflow in multiplication");
  return r;
}

// 2^e as a pebble count, rejecting exponents that do not fit in 63 bits.
inline Count checked_pow2(int e) {
  if (e < 0 || e >= 63) throw OverflowError("2^" + std::to_string(e) + " does not fit a 64-bit pebble count");
  return Count{1} << e;
}

// Floor division for possibly negative numerators; C++ '/' truncates toward
// zero, which is the wrong rounding for the bound arithmetic below.
inline Count floor_div(Count a, Count b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Exact value of a + b/2 - c kept as a count of halves, so move-effect
// bookkeeping never touches floating point.
class HalfInt {
 public:
  constexpr HalfInt() : twice_(0) {}
  constexpr HalfInt(Count whole) : twice_(2 * whole) {}  // NOLINT: implicit by design
  static constexpr HalfInt from_halves(Count twice) {
    HalfInt h;
    h.twice_ = twice;
    return h;
  }

  constexpr Count twice() const { return twice_; }
  constexpr bool is_integer() const { return twice_ % 2 == 0; }
  constexpr Count floor() const { return twice_ >= 0 ? twice_ / 2 : (twice_ - 1) / 2; }

  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_halves(a.twice_ + b.twice_); }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_halves(a.twice_ - b.twice_); }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  std::string str() const {
    if (is_integer()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

 private:
  Count twice_;
};

// a + b/2 - c, exactly.
inline constexpr HalfInt delta(Count a, Count b, Count c) {
  return HalfInt::from_halves(2 * a + b - 2 * c);
}

}  // namespace rubbling
