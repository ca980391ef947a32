#include "bpmax/mp_real.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace bpmax {

namespace {
thread_local mpfr_prec_t g_default_prec = 212;

mpfr_prec_t wider(const MpReal& a, const MpReal& b) {
  return std::max(a.prec(), b.prec());
}
}  // namespace

mpfr_prec_t MpReal::default_prec() { return g_default_prec; }
void MpReal::set_default_prec(mpfr_prec_t bits) { g_default_prec = bits; }

std::string MpReal::str(int digits) const {
  char* s = nullptr;
  if (mpfr_asprintf(&s, "%.*Rg", digits > 0 ? digits : 20, v_) < 0) return "<mpfr error>";
  std::string out(s);
  mpfr_free_str(s);
  return out;
}

#define BPMAX_MP_BINOP(name, fn)                             \
  MpReal name(const MpReal& a, const MpReal& b) {            \
    MpReal r(0.0, wider(a, b));                              \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                \
    return r;                                                \
  }

BPMAX_MP_BINOP(operator+, mpfr_add)
BPMAX_MP_BINOP(operator-, mpfr_sub)
BPMAX_MP_BINOP(operator*, mpfr_mul)
BPMAX_MP_BINOP(operator/, mpfr_div)
#undef BPMAX_MP_BINOP

MpReal operator-(const MpReal& a) {
  MpReal r(0.0, a.prec());
  mpfr_neg(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

int cmp(const MpReal& a, const MpReal& b) { return mpfr_cmp(a.raw(), b.raw()); }

#define BPMAX_MP_UNOP(name, fn)          \
  MpReal name(const MpReal& a) {         \
    MpReal r(0.0, a.prec());             \
    fn(r.raw(), a.raw(), MPFR_RNDN);     \
    return r;                            \
  }

BPMAX_MP_UNOP(abs, mpfr_abs)
BPMAX_MP_UNOP(sqrt, mpfr_sqrt)
BPMAX_MP_UNOP(exp, mpfr_exp)
BPMAX_MP_UNOP(log, mpfr_log)
BPMAX_MP_UNOP(sin, mpfr_sin)
BPMAX_MP_UNOP(cos, mpfr_cos)
BPMAX_MP_UNOP(mp_gamma, mpfr_gamma)
#undef BPMAX_MP_UNOP

void sincos(const MpReal& a, MpReal& s, MpReal& c) {
  MpReal rs(0.0, a.prec()), rc(0.0, a.prec());
  mpfr_sin_cos(rs.raw(), rc.raw(), a.raw(), MPFR_RNDN);
  s = rs;
  c = rc;
}

MpReal pow(const MpReal& b, const MpReal& e) {
  MpReal r(0.0, wider(b, e));
  mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
  return r;
}

MpReal pow_int(const MpReal& b, long n) {
  MpReal r(0.0, b.prec());
  mpfr_pow_si(r.raw(), b.raw(), n, MPFR_RNDN);
  return r;
}

MpReal floor(const MpReal& a) {
  MpReal r(0.0, a.prec());
  mpfr_floor(r.raw(), a.raw());
  return r;
}

MpReal nint(const MpReal& a) {
  MpReal r(0.0, a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

MpReal ldexp(const MpReal& a, int n) {
  MpReal r(0.0, a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

MpReal mp_lgamma(const MpReal& x) {
  MpReal r(0.0, x.prec());
  int sign = 0;
  mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
  return r;
}

MpReal mp_pi(mpfr_prec_t prec) {
  MpReal r(0.0, prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

double to_double(const MpReal& a) { return mpfr_get_d(a.raw(), MPFR_RNDN); }

DD to_dd(const MpReal& a) {
  double hi = mpfr_get_d(a.raw(), MPFR_RNDN);
  MpReal rem = a - MpReal(hi, a.prec());
  double lo = mpfr_get_d(rem.raw(), MPFR_RNDN);
  return dd_fast(hi, lo);
}

bool isfinite(const MpReal& a) { return mpfr_number_p(a.raw()) != 0; }

}  // namespace bpmax
