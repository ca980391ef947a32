#pragma once

// Glue that lets numeric templates treat double, DD and MpReal uniformly:
// unqualified calls to exp/log/sqrt/... inside namespace bpmax resolve via
// these using-declarations for double and via overloads for DD / MpReal.

#include <cmath>

#include "bpmax/dd.hpp"
#include "bpmax/mp_real.hpp"

namespace bpmax {

using std::abs;
using std::cos;
using std::exp;
using std::floor;
using std::isfinite;
using std::log;
using std::pow;
using std::sin;
using std::sqrt;

inline double to_double(double x) { return x; }
inline double nint(double x) { return std::nearbyint(x); }
inline double pow_int(double b, long n) { return std::pow(b, static_cast<double>(n)); }
inline void sincos(double a, double& s, double& c) {
  s = std::sin(a);
  c = std::cos(a);
}
inline double ldexp(double a, int n) { return std::ldexp(a, n); }

template <class Real>
struct RealTraits;

template <>
struct RealTraits<double> {
  static constexpr int working_bits = 53;
  static double eps() { return 2.220446049250313e-16; }
  static double pi() { return 3.141592653589793; }
  static double from(double d) { return d; }
  static constexpr const char* name = "double";
};

template <>
struct RealTraits<DD> {
  static constexpr int working_bits = 106;
  static double eps() { return DD::eps; }
  static DD pi() { return DD::pi(); }
  static DD from(double d) { return DD(d); }
  static constexpr const char* name = "double-double";
};

template <>
struct RealTraits<MpReal> {
  static constexpr int working_bits = -1;  // runtime: MpReal::default_prec()
  static double eps() { return std::ldexp(1.0, -static_cast<int>(MpReal::default_prec()) + 2); }
  static MpReal pi() { return mp_pi(MpReal::default_prec()); }
  static MpReal from(double d) { return MpReal(d); }
  static constexpr const char* name = "mpfr";
};

template <class Real>
int working_bits_of() {
  if constexpr (RealTraits<Real>::working_bits > 0) {
    return RealTraits<Real>::working_bits;
  } else {
    return static_cast<int>(MpReal::default_prec());
  }
}

}  // namespace bpmax
