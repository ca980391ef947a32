#pragma once

// Thin RAII wrapper over MPFR used for working precisions above double-double.
// Each value carries its own precision; binary operations produce results at
// the wider of the two operand precisions.  Default-constructed values use a
// thread-local default precision so that templated numeric code can create
// temporaries without plumbing precision through every call site.

#include <mpfr.h>

#include <string>

#include "bpmax/dd.hpp"

namespace bpmax {

class MpReal {
 public:
  MpReal() { mpfr_init2(v_, default_prec()); mpfr_set_zero(v_, 1); }
  MpReal(double d) { mpfr_init2(v_, default_prec()); mpfr_set_d(v_, d, MPFR_RNDN); }
  MpReal(int i) { mpfr_init2(v_, default_prec()); mpfr_set_si(v_, i, MPFR_RNDN); }
  MpReal(long i) { mpfr_init2(v_, default_prec()); mpfr_set_si(v_, i, MPFR_RNDN); }
  MpReal(const DD& d) {
    mpfr_init2(v_, default_prec());
    mpfr_set_d(v_, d.hi, MPFR_RNDN);
    mpfr_add_d(v_, v_, d.lo, MPFR_RNDN);
  }
  MpReal(double d, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, d, MPFR_RNDN); }

  MpReal(const MpReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  MpReal(MpReal&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  MpReal& operator=(const MpReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  MpReal& operator=(MpReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~MpReal() { mpfr_clear(v_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  static mpfr_prec_t default_prec();
  static void set_default_prec(mpfr_prec_t bits);

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  std::string str(int digits = 0) const;

 private:
  mpfr_t v_;
};

// Scoped override of the thread-local default precision.
class MpPrecGuard {
 public:
  explicit MpPrecGuard(mpfr_prec_t bits) : old_(MpReal::default_prec()) {
    MpReal::set_default_prec(bits);
  }
  ~MpPrecGuard() { MpReal::set_default_prec(old_); }
  MpPrecGuard(const MpPrecGuard&) = delete;
  MpPrecGuard& operator=(const MpPrecGuard&) = delete;

 private:
  mpfr_prec_t old_;
};

MpReal operator+(const MpReal& a, const MpReal& b);
MpReal operator-(const MpReal& a, const MpReal& b);
MpReal operator*(const MpReal& a, const MpReal& b);
MpReal operator/(const MpReal& a, const MpReal& b);
MpReal operator-(const MpReal& a);

inline MpReal operator+(const MpReal& a, double b) { return a + MpReal(b, a.prec()); }
inline MpReal operator+(double a, const MpReal& b) { return MpReal(a, b.prec()) + b; }
inline MpReal operator-(const MpReal& a, double b) { return a - MpReal(b, a.prec()); }
inline MpReal operator-(double a, const MpReal& b) { return MpReal(a, b.prec()) - b; }
inline MpReal operator*(const MpReal& a, double b) { return a * MpReal(b, a.prec()); }
inline MpReal operator*(double a, const MpReal& b) { return MpReal(a, b.prec()) * b; }
inline MpReal operator/(const MpReal& a, double b) { return a / MpReal(b, a.prec()); }
inline MpReal operator/(double a, const MpReal& b) { return MpReal(a, b.prec()) / b; }

inline MpReal& operator+=(MpReal& a, const MpReal& b) { return a = a + b; }
inline MpReal& operator-=(MpReal& a, const MpReal& b) { return a = a - b; }
inline MpReal& operator*=(MpReal& a, const MpReal& b) { return a = a * b; }
inline MpReal& operator/=(MpReal& a, const MpReal& b) { return a = a / b; }
inline MpReal& operator+=(MpReal& a, double b) { return a = a + b; }
inline MpReal& operator-=(MpReal& a, double b) { return a = a - b; }
inline MpReal& operator*=(MpReal& a, double b) { return a = a * b; }
inline MpReal& operator/=(MpReal& a, double b) { return a = a / b; }

int cmp(const MpReal& a, const MpReal& b);
inline bool operator==(const MpReal& a, const MpReal& b) { return cmp(a, b) == 0; }
inline bool operator!=(const MpReal& a, const MpReal& b) { return cmp(a, b) != 0; }
inline bool operator<(const MpReal& a, const MpReal& b) { return cmp(a, b) < 0; }
inline bool operator>(const MpReal& a, const MpReal& b) { return cmp(a, b) > 0; }
inline bool operator<=(const MpReal& a, const MpReal& b) { return cmp(a, b) <= 0; }
inline bool operator>=(const MpReal& a, const MpReal& b) { return cmp(a, b) >= 0; }
inline bool operator==(const MpReal& a, double b) { return a == MpReal(b, a.prec()); }
inline bool operator<(const MpReal& a, double b) { return a < MpReal(b, a.prec()); }
inline bool operator>(const MpReal& a, double b) { return a > MpReal(b, a.prec()); }
inline bool operator<=(const MpReal& a, double b) { return a <= MpReal(b, a.prec()); }
inline bool operator>=(const MpReal& a, double b) { return a >= MpReal(b, a.prec()); }

MpReal abs(const MpReal& a);
MpReal sqrt(const MpReal& a);
MpReal exp(const MpReal& a);
MpReal log(const MpReal& a);
MpReal sin(const MpReal& a);
MpReal cos(const MpReal& a);
void sincos(const MpReal& a, MpReal& s, MpReal& c);
MpReal pow(const MpReal& b, const MpReal& e);
MpReal pow_int(const MpReal& b, long n);
MpReal floor(const MpReal& a);
MpReal nint(const MpReal& a);
MpReal ldexp(const MpReal& a, int n);
MpReal mp_gamma(const MpReal& x);
MpReal mp_lgamma(const MpReal& x);  // log |Gamma(x)|
MpReal mp_pi(mpfr_prec_t prec);

double to_double(const MpReal& a);
DD to_dd(const MpReal& a);
bool isfinite(const MpReal& a);

}  // namespace bpmax
