#pragma once

#include <cmath>
#include <compare>
#include <cstdlib>
#include <string>

#include "hypalg/error.hpp"

namespace hypalg {

/// Exact integer or half-integer, stored as twice its value.  Weights,
/// discrete labels and Losert indices are all elements of Z or Z+1/2, and
/// parity bookkeeping must be exact, so these are never kept as doubles.
struct HalfInt {
  int twice = 0;

  constexpr HalfInt() = default;
  constexpr explicit HalfInt(int t) : twice(t) {}

  static constexpr HalfInt of_int(int n) { return HalfInt{2 * n}; }
  static constexpr HalfInt of_twice(int t) { return HalfInt{t}; }

  constexpr double value() const { return 0.5 * twice; }
  constexpr bool is_integer() const { return (twice & 1) == 0; }
  /// Parity epsilon in {0, 1/2}, stored as twice-epsilon in {0, 1}.
  constexpr int two_epsilon() const { return std::abs(twice) & 1; }

  /// Integer value; requires is_integer().
  constexpr int as_int() const { return twice / 2; }

  constexpr HalfInt operator-() const { return HalfInt{-twice}; }
  constexpr HalfInt operator+(HalfInt o) const { return HalfInt{twice + o.twice}; }
  constexpr HalfInt operator-(HalfInt o) const { return HalfInt{twice - o.twice}; }
  constexpr HalfInt operator+(int n) const { return HalfInt{twice + 2 * n}; }
  constexpr HalfInt operator-(int n) const { return HalfInt{twice - 2 * n}; }
  constexpr auto operator<=>(const HalfInt&) const = default;

  constexpr bool same_parity(HalfInt o) const {
    return ((twice ^ o.twice) & 1) == 0;
  }

  std::string str() const {
    if (is_integer()) return std::to_string(as_int());
    return std::to_string(twice) + "/2";
  }
};

inline HalfInt abs(HalfInt h) { return HalfInt{std::abs(h.twice)}; }

inline HalfInt min(HalfInt a, HalfInt b) { return a < b ? a : b; }
inline HalfInt max(HalfInt a, HalfInt b) { return a < b ? b : a; }

}  // namespace hypalg
