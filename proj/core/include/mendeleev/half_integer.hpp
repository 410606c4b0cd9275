#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace mendeleev {

using Rational = boost::rational<std::int64_t>;

//! Exact integer or half-odd-integer value, stored doubled.
//! HalfInt::from_twice(5) is 5/2, HalfInt::from_twice(-1) is -1/2.
class HalfInt {
 public:
  constexpr HalfInt() = default;

  static constexpr HalfInt from_twice(int twice) { return HalfInt(twice); }
  static constexpr HalfInt from_int(int value) { return HalfInt(2 * value); }

  constexpr int twice() const { return twice_; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }
  constexpr HalfInt abs() const { return HalfInt(twice_ < 0 ? -twice_ : twice_); }

  Rational to_rational() const { return Rational(twice_, 2); }

  //! "5/2", "-1/2", "3"
  std::string str() const {
    if (twice_ % 2 == 0) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt(twice_ + o.twice_); }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt(twice_ - o.twice_); }

  friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

 private:
  constexpr explicit HalfInt(int twice) : twice_(twice) {}
  int twice_ = 0;
};

inline constexpr HalfInt kHalf = HalfInt::from_twice(1);

}  // namespace mendeleev
