#pragma once

// Double-double arithmetic: an unevaluated sum of two IEEE doubles giving
// ~106 significant bits.  Algorithms follow the classical error-free
// transformations (Dekker, Knuth) with FMA-based products; layout is kept
// trivially copyable so kernels can treat arrays of DD as flat doubles.

#include <cmath>
#include <cstdint>
#include <limits>

namespace bpmax {

namespace dd_detail {

inline double quick_two_sum(double a, double b, double& err) {
  double s = a + b;
  err = b - (s - a);
  return s;
}

inline double two_sum(double a, double b, double& err) {
  double s = a + b;
  double bb = s - a;
  err = (a - (s - bb)) + (b - bb);
  return s;
}

inline double two_prod(double a, double b, double& err) {
  double p = a * b;
  err = std::fma(a, b, -p);
  return p;
}

}  // namespace dd_detail

struct DD {
  double hi = 0.0;
  double lo = 0.0;

  constexpr DD() = default;
  constexpr DD(double h) : hi(h), lo(0.0) {}
  constexpr DD(double h, double l) : hi(h), lo(l) {}
  constexpr DD(int v) : hi(static_cast<double>(v)), lo(0.0) {}
  constexpr DD(long v) : hi(static_cast<double>(v)), lo(0.0) {}

  explicit operator double() const { return hi; }

  static constexpr DD zero() { return DD(0.0, 0.0); }
  static constexpr DD one() { return DD(1.0, 0.0); }
  // 2^-104: relative rounding unit of the format.
  static constexpr double eps = 4.93038065763132378382330353301741e-32;

  static constexpr DD pi() {
    return DD(3.141592653589793116e+00, 1.224646799147353207e-16);
  }
  static constexpr DD two_pi() {
    return DD(6.283185307179586232e+00, 2.449293598294706414e-16);
  }
  static constexpr DD half_pi() {
    return DD(1.570796326794896558e+00, 6.123233995736766036e-17);
  }
  static constexpr DD ln2() {
    return DD(6.931471805599452862e-01, 2.319046813846299558e-17);
  }
  static constexpr DD inv_ln2() {
    return DD(1.442695040888963387e+00, 2.035527374093103311e-17);
  }
};

inline DD dd_fast(double hi, double lo) {  // assumes |hi| >= |lo|, renormalizes
  double e;
  double s = dd_detail::quick_two_sum(hi, lo, e);
  return DD(s, e);
}

// ---- addition / subtraction ----

inline DD operator+(const DD& a, const DD& b) {
  using namespace dd_detail;
  double e1, e2;
  double s1 = two_sum(a.hi, b.hi, e1);
  double s2 = two_sum(a.lo, b.lo, e2);
  e1 += s2;
  s1 = quick_two_sum(s1, e1, e1);
  e1 += e2;
  s1 = quick_two_sum(s1, e1, e1);
  return DD(s1, e1);
}

inline DD operator+(const DD& a, double b) {
  using namespace dd_detail;
  double e;
  double s = two_sum(a.hi, b, e);
  e += a.lo;
  s = quick_two_sum(s, e, e);
  return DD(s, e);
}

inline DD operator+(double a, const DD& b) { return b + a; }

inline DD operator-(const DD& a) { return DD(-a.hi, -a.lo); }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }
inline DD operator-(const DD& a, double b) { return a + (-b); }
inline DD operator-(double a, const DD& b) { return (-b) + a; }

// ---- multiplication ----

inline DD operator*(const DD& a, const DD& b) {
  using namespace dd_detail;
  double e;
  double p = two_prod(a.hi, b.hi, e);
  e += a.hi * b.lo + a.lo * b.hi;
  p = quick_two_sum(p, e, e);
  return DD(p, e);
}

inline DD operator*(const DD& a, double b) {
  using namespace dd_detail;
  double e;
  double p = two_prod(a.hi, b, e);
  e += a.lo * b;
  p = quick_two_sum(p, e, e);
  return DD(p, e);
}

inline DD operator*(double a, const DD& b) { return b * a; }

inline DD dd_sqr(const DD& a) {
  using namespace dd_detail;
  double e;
  double p = two_prod(a.hi, a.hi, e);
  e += 2.0 * a.hi * a.lo;
  p = quick_two_sum(p, e, e);
  return DD(p, e);
}

// Exact scaling by a power of two.
inline DD mul_pwr2(const DD& a, double p2) { return DD(a.hi * p2, a.lo * p2); }

// ---- division ----

inline DD operator/(const DD& a, const DD& b) {
  using namespace dd_detail;
  double q1 = a.hi / b.hi;
  DD r = a - b * q1;
  double q2 = r.hi / b.hi;
  r = r - b * q2;
  double q3 = r.hi / b.hi;
  double e;
  double s = quick_two_sum(q1, q2, e);
  return DD(s, e) + q3;
}

inline DD operator/(const DD& a, double b) { return a / DD(b); }
inline DD operator/(double a, const DD& b) { return DD(a) / b; }

inline DD& operator+=(DD& a, const DD& b) { return a = a + b; }
inline DD& operator+=(DD& a, double b) { return a = a + b; }
inline DD& operator-=(DD& a, const DD& b) { return a = a - b; }
inline DD& operator-=(DD& a, double b) { return a = a - b; }
inline DD& operator*=(DD& a, const DD& b) { return a = a * b; }
inline DD& operator*=(DD& a, double b) { return a = a * b; }
inline DD& operator/=(DD& a, const DD& b) { return a = a / b; }
inline DD& operator/=(DD& a, double b) { return a = a / b; }

// ---- comparisons ----

inline bool operator==(const DD& a, const DD& b) { return a.hi == b.hi && a.lo == b.lo; }
inline bool operator!=(const DD& a, const DD& b) { return !(a == b); }
inline bool operator<(const DD& a, const DD& b) {
  return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo);
}
inline bool operator>(const DD& a, const DD& b) { return b < a; }
inline bool operator<=(const DD& a, const DD& b) { return !(b < a); }
inline bool operator>=(const DD& a, const DD& b) { return !(a < b); }
inline bool operator==(const DD& a, double b) { return a == DD(b); }
inline bool operator<(const DD& a, double b) { return a < DD(b); }
inline bool operator>(const DD& a, double b) { return a > DD(b); }
inline bool operator<=(const DD& a, double b) { return a <= DD(b); }
inline bool operator>=(const DD& a, double b) { return a >= DD(b); }

// ---- basic functions ----

inline DD abs(const DD& a) { return a.hi < 0.0 ? -a : a; }
inline double to_double(const DD& a) { return a.hi; }
inline bool isfinite(const DD& a) { return std::isfinite(a.hi); }

inline DD floor(const DD& a) {
  double h = std::floor(a.hi);
  if (h == a.hi) {
    double l = std::floor(a.lo);
    double e;
    h = dd_detail::quick_two_sum(h, l, e);
    return DD(h, e);
  }
  return DD(h, 0.0);
}

inline DD nint(const DD& a) {
  double h = std::nearbyint(a.hi);
  if (h == a.hi) {
    double l = std::nearbyint(a.lo);
    double e;
    h = dd_detail::quick_two_sum(h, l, e);
    return DD(h, e);
  }
  if (std::abs(h - a.hi) == 0.5 && a.lo < 0.0) h -= 1.0;
  return DD(h, 0.0);
}

inline DD ldexp(const DD& a, int n) {
  return DD(std::ldexp(a.hi, n), std::ldexp(a.lo, n));
}

inline DD sqrt(const DD& a) {
  // Karp's method: one Newton step from the double square root.
  if (a.hi == 0.0 && a.lo == 0.0) return DD(0.0);
  double x = 1.0 / std::sqrt(a.hi);
  double ax = a.hi * x;
  DD err = a - dd_sqr(DD(ax));
  return DD(ax) + err.hi * (x * 0.5);
}

// ---- transcendental functions (dd_math.cpp) ----

DD exp(const DD& a);
DD log(const DD& a);
DD sin(const DD& a);
DD cos(const DD& a);
void sincos(const DD& a, DD& s, DD& c);
DD pow(const DD& b, const DD& e);
DD pow_int(const DD& b, long n);

}  // namespace bpmax
