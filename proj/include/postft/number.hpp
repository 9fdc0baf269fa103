#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>

#include "postft/error.hpp"

namespace postft {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Extended number: a finite exact rational or one of the two infinities.
// Carriers restrict which classes and which finite values are admissible.
struct XNum {
  int cls = 0;  // -1 = -inf, 0 = finite, +1 = +inf
  Rat q;        // meaningful only when cls == 0

  static XNum finite(Rat v) { return XNum{0, std::move(v)}; }
  static XNum pos_inf() { return XNum{+1, Rat(0)}; }
  static XNum neg_inf() { return XNum{-1, Rat(0)}; }

  bool is_finite() const { return cls == 0; }

  friend bool operator==(const XNum& a, const XNum& b) {
    return a.cls == b.cls && (a.cls != 0 || a.q == b.q);
  }
  friend bool operator<(const XNum& a, const XNum& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    return a.cls == 0 && a.q < b.q;
  }
};

inline XNum xmin(const XNum& a, const XNum& b) { return a < b ? a : b; }
inline XNum xmax(const XNum& a, const XNum& b) { return a < b ? b : a; }

// Numeric addition with saturation; -inf + +inf is rejected (callers never
// form it: in the arctic carrier -inf is the absorbing zero and is handled
// before this is reached).
inline XNum xplus(const XNum& a, const XNum& b) {
  if (a.cls != 0 || b.cls != 0) {
    int cls = a.cls != 0 ? a.cls : b.cls;
    if (a.cls != 0 && b.cls != 0 && a.cls != b.cls)
      fail(ErrorKind::InvalidArgument, "indeterminate sum of opposite infinities");
    return XNum{cls, Rat(0)};
  }
  return XNum::finite(a.q + b.q);
}

// Repetition count for summing a constant family: a natural number or the
// symbolic infinite cardinal.
struct Count {
  bool infinite = false;
  Int n = 0;

  static Count of(Int k) { return Count{false, std::move(k)}; }
  static Count inf() { return Count{true, 0}; }
};

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace postft
