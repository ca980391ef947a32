#include "bpmax/dd.hpp"

#include <cmath>
#include <limits>

#include "bpmax/errors.hpp"

// Elementary functions for double-double values.  exp uses scaled Taylor of
// expm1 plus repeated doubling; log is Newton's method on exp from the double
// seed; sin/cos reduce by quadrants against a triple-double pi/2 and then
// evaluate Taylor series on |r| <= pi/4.

namespace bpmax {

namespace {

DD expm1_taylor(const DD& r) {
  // |r| <= ~7e-4 after the 1/512 scaling, so a dozen terms suffice.
  DD term = r;
  DD sum = r;
  const double thresh = DD::eps * (1.0 / 512.0);
  for (int k = 2; k <= 16; ++k) {
    term = term * r / static_cast<double>(k);
    sum += term;
    if (std::abs(term.hi) < thresh) break;
  }
  return sum;
}

void sincos_taylor(const DD& r, DD& s, DD& c) {
  if (r.hi == 0.0) {
    s = DD(0.0);
    c = DD(1.0);
    return;
  }
  const DD mr2 = -dd_sqr(r);
  const double thresh = 0.5 * DD::eps;

  DD term = r;
  DD sum = r;
  for (int k = 1; k <= 20; ++k) {
    term = term * mr2 / static_cast<double>(2 * k * (2 * k + 1));
    sum += term;
    if (std::abs(term.hi) < thresh * std::abs(sum.hi)) break;
  }
  s = sum;

  term = DD(1.0);
  sum = DD(1.0);
  for (int k = 1; k <= 20; ++k) {
    term = term * mr2 / static_cast<double>((2 * k - 1) * 2 * k);
    sum += term;
    if (std::abs(term.hi) < thresh) break;
  }
  c = sum;
}

}  // namespace

DD exp(const DD& a) {
  if (a.hi <= -709.0) return DD(0.0);
  if (a.hi >= 709.0) return DD(std::numeric_limits<double>::infinity());
  if (a.hi == 0.0 && a.lo == 0.0) return DD(1.0);

  const double m = std::floor(a.hi / DD::ln2().hi + 0.5);
  DD r = mul_pwr2(a - DD::ln2() * m, 1.0 / 512.0);
  DD s = expm1_taylor(r);
  for (int j = 0; j < 9; ++j) s = mul_pwr2(s, 2.0) + dd_sqr(s);
  s += 1.0;
  return ldexp(s, static_cast<int>(m));
}

DD log(const DD& a) {
  if (a.hi == 1.0 && a.lo == 0.0) return DD(0.0);
  if (a.hi <= 0.0) throw DomainError("dd log: non-positive argument");
  DD y = DD(std::log(a.hi));
  y = y + a * exp(-y) - 1.0;  // one Newton step doubles the seed's 53 bits
  y = y + a * exp(-y) - 1.0;
  return y;
}

void sincos(const DD& a, DD& s, DD& c) {
  if (a.hi == 0.0 && a.lo == 0.0) {
    s = DD(0.0);
    c = DD(1.0);
    return;
  }
  // pi/2 split across three doubles: reduction is accurate to ~2^-106 relative
  // in the phase for |a| up to ~2^40.
  static const double p1 = 1.570796326794896558e+00;
  static const double p2 = 6.123233995736766036e-17;
  static const double p3 = -1.497384904859169833e-33;
  static const DD two_over_pi = DD(2.0) / DD::pi();

  const double j = std::nearbyint((a * two_over_pi).hi);
  double pl;
  double ph = dd_detail::two_prod(j, p1, pl);
  DD r = a - DD(ph, pl);
  ph = dd_detail::two_prod(j, p2, pl);
  r = r - DD(ph, pl);
  r = r - j * p3;

  const long lj = static_cast<long>(j);
  const int q = static_cast<int>(((lj % 4) + 4) % 4);

  DD sr, cr;
  sincos_taylor(r, sr, cr);
  switch (q) {
    case 0: s = sr;  c = cr;  break;
    case 1: s = cr;  c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

DD sin(const DD& a) {
  DD s, c;
  sincos(a, s, c);
  return s;
}

DD cos(const DD& a) {
  DD s, c;
  sincos(a, s, c);
  return c;
}

DD pow_int(const DD& b, long n) {
  if (n == 0) return DD(1.0);
  const bool invert = n < 0;
  unsigned long e = invert ? 0UL - static_cast<unsigned long>(n) : static_cast<unsigned long>(n);
  DD r(1.0);
  DD base = b;
  while (e != 0) {
    if (e & 1UL) r = r * base;
    base = dd_sqr(base);
    e >>= 1;
  }
  return invert ? DD(1.0) / r : r;
}

DD pow(const DD& b, const DD& e) {
  if (b.hi == 0.0 && b.lo == 0.0) {
    if (e.hi > 0.0) return DD(0.0);
    throw DomainError("dd pow: 0^e with e <= 0");
  }
  const DD n = nint(e);
  if (n == e && std::abs(e.hi) < 9.0e15) {
    return pow_int(b, static_cast<long>(e.hi));
  }
  if (b.hi < 0.0) throw DomainError("dd pow: negative base with non-integer exponent");
  return exp(e * log(b));
}

}  // namespace bpmax
