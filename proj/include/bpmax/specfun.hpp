#pragma once

// Self-contained special-function kernel: Gamma, Bessel J/I of real order
// alpha > -1, higher J derivatives through the first-order recurrences, and
// certified positive zeros of J_alpha.  Everything is templated over the
// working real type (double, DD, MpReal); the double instantiation evaluates
// in double-double internally and rounds, so its results are correctly
// rounded for all practical purposes.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "bpmax/errors.hpp"
#include "bpmax/real_ops.hpp"

namespace bpmax {

inline constexpr int kMaxDerivOrder = 64;

// ---------------------------------------------------------------------------
// Gamma
// ---------------------------------------------------------------------------

namespace detail {

// Lanczos (g = 7, 9 terms), the production double path.
double gamma_lanczos(double x);

// Stirling with Bernoulli corrections after shifting x above 25; carries
// double-double precision.  Returns log Gamma for x > 0.
DD log_gamma_stirling_dd(const DD& x);

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace detail

template <class Real>
Real gamma_fn(const Real& x);

template <class Real>
Real log_gamma(const Real& x);  // requires x > 0

template <>
inline DD gamma_fn<DD>(const DD& x) {
  if (detail::is_nonpositive_integer(to_double(x)) && nint(x) == x) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  if (x.hi >= 0.5) return exp(detail::log_gamma_stirling_dd(x));
  // reflection: Gamma(x) = pi / (sin(pi x) Gamma(1 - x))
  const DD pix = DD::pi() * x;
  return DD::pi() / (sin(pix) * exp(detail::log_gamma_stirling_dd(1.0 - x)));
}

template <>
inline double gamma_fn<double>(const double& x) {
  if (detail::is_nonpositive_integer(x)) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  return detail::gamma_lanczos(x);
}

template <>
inline MpReal gamma_fn<MpReal>(const MpReal& x) {
  if (detail::is_nonpositive_integer(to_double(x)) && nint(x) == x) {
    throw DomainError("gamma_fn: pole at non-positive integer");
  }
  return mp_gamma(x);
}

template <>
inline DD log_gamma<DD>(const DD& x) {
  if (x.hi <= 0.0) throw DomainError("log_gamma: requires x > 0");
  return detail::log_gamma_stirling_dd(x);
}

template <>
inline double log_gamma<double>(const double& x) {
  if (x <= 0.0) throw DomainError("log_gamma: requires x > 0");
  return to_double(detail::log_gamma_stirling_dd(DD(x)));
}

template <>
inline MpReal log_gamma<MpReal>(const MpReal& x) {
  if (to_double(x) <= 0.0) throw DomainError("log_gamma: requires x > 0");
  return mp_lgamma(x);
}

// ---------------------------------------------------------------------------
// Bessel J and I
// ---------------------------------------------------------------------------

namespace detail {

// Ascending series, sum of (-1)^k (x/2)^(2k+alpha) / (k! Gamma(k+alpha+1)).
// Caller is responsible for providing enough working precision to absorb the
// ~e^x cancellation.
template <class Real>
Real bessel_j_series(double alpha, const Real& x) {
  const Real half_x = ldexp(x, -1);
  const Real ralpha = RealTraits<Real>::from(alpha);
  Real term = pow(half_x, ralpha) / gamma_fn<Real>(ralpha + 1.0);
  Real sum = term;
  const Real mq = -(half_x * half_x);
  const double xd = to_double(x);
  const double eps = RealTraits<Real>::eps();
  double max_mag = std::abs(to_double(term));
  const int kmax = 64 + static_cast<int>(3.0 * xd) + static_cast<int>(std::abs(alpha));
  for (int k = 1; k <= kmax; ++k) {
    const Real rk = RealTraits<Real>::from(static_cast<double>(k));
    term = term * mq / (rk * (rk + ralpha));
    sum += term;
    const double tmag = std::abs(to_double(term));
    max_mag = std::max(max_mag, tmag);
    if (tmag < eps * max_mag && 2 * k > xd) return sum;
  }
  throw ConvergenceError("bessel_j_series: did not converge");
}

// Hankel large-argument expansion truncated at its smallest term.
template <class Real>
Real bessel_j_asymptotic(double alpha, const Real& x) {
  const Real ralpha = RealTraits<Real>::from(alpha);
  const Real mu = ldexp(ralpha * ralpha, 2);
  const Real pi = RealTraits<Real>::pi();
  Real p_sum = RealTraits<Real>::from(1.0);
  Real q_sum = RealTraits<Real>::from(0.0);
  Real ratio = RealTraits<Real>::from(1.0);  // a_k / x^k
  const double eps = RealTraits<Real>::eps();
  double prev = 1.0;
  for (int k = 0; k < 400; ++k) {
    const double odd = 2.0 * k + 1.0;
    ratio = ratio * (mu - odd * odd) / (8.0 * (k + 1.0)) / x;
    const double mag = std::abs(to_double(ratio));
    if (k > 2 && mag >= prev) break;  // past the optimal truncation point
    const int m = k + 1;
    const int phase = (m / 2) % 2;  // (-1)^floor(m/2)
    const Real signed_term = phase ? -ratio : ratio;
    if (m % 2 == 0) {
      p_sum += signed_term;
    } else {
      q_sum += signed_term;
    }
    if (mag < eps) break;
    prev = mag;
  }
  const Real omega = x - (ralpha * 0.5 + 0.25) * pi;
  Real s, c;
  sincos(omega, s, c);
  return sqrt(ldexp(RealTraits<Real>::from(1.0), 1) / (pi * x)) * (p_sum * c - q_sum * s);
}

// Scaled modified-Bessel series: e^{-x} I_alpha(x); positive terms, so no
// guard precision is needed.
template <class Real>
Real bessel_i_series_scaled(double alpha, const Real& x) {
  const Real half_x = ldexp(x, -1);
  const Real ralpha = RealTraits<Real>::from(alpha);
  Real term = pow(half_x, ralpha) / gamma_fn<Real>(ralpha + 1.0);
  Real sum = term;
  const Real q = half_x * half_x;
  const double eps = RealTraits<Real>::eps();
  const double xd = to_double(x);
  const int kmax = 64 + static_cast<int>(2.0 * xd) + static_cast<int>(std::abs(alpha));
  for (int k = 1; k <= kmax; ++k) {
    const Real rk = RealTraits<Real>::from(static_cast<double>(k));
    term = term * q / (rk * (rk + ralpha));
    sum += term;
    if (std::abs(to_double(term)) < eps * std::abs(to_double(sum))) {
      return sum * exp(-x);
    }
  }
  throw ConvergenceError("bessel_i_series: did not converge");
}

// e^{-x} I_alpha(x) ~ (2 pi x)^{-1/2} sum (-1)^k a_k / x^k for large x.
template <class Real>
Real bessel_i_asymptotic_scaled(double alpha, const Real& x) {
  const Real ralpha = RealTraits<Real>::from(alpha);
  const Real mu = ldexp(ralpha * ralpha, 2);
  Real sum = RealTraits<Real>::from(1.0);
  Real ratio = RealTraits<Real>::from(1.0);
  const double eps = RealTraits<Real>::eps();
  double prev = 1.0;
  for (int k = 0; k < 400; ++k) {
    const double odd = 2.0 * k + 1.0;
    ratio = ratio * (mu - odd * odd) / (-8.0 * (k + 1.0)) / x;
    const double mag = std::abs(to_double(ratio));
    if (k > 2 && mag >= prev) break;
    sum += ratio;
    if (mag < eps) break;
    prev = mag;
  }
  const Real pi = RealTraits<Real>::pi();
  return sum / sqrt(ldexp(pi, 1) * x);
}

void check_bessel_domain(double alpha, double x);

}  // namespace detail

// J_alpha(x) for alpha > -1, x >= 0.
template <class Real>
Real bessel_j(double alpha, const Real& x);

template <>
inline DD bessel_j<DD>(double alpha, const DD& x) {
  detail::check_bessel_domain(alpha, to_double(x));
  if (x.hi == 0.0) {
    if (alpha > 0.0) return DD(0.0);
    if (alpha == 0.0) return DD(1.0);
    throw DomainError("bessel_j: J_alpha singular at x = 0 for alpha < 0");
  }
  const double crossover = std::max(25.0, alpha * alpha * 0.5);
  if (x.hi < crossover) return detail::bessel_j_series(alpha, x);
  return detail::bessel_j_asymptotic(alpha, x);
}

template <>
inline double bessel_j<double>(double alpha, const double& x) {
  return to_double(bessel_j<DD>(alpha, DD(x)));
}

template <>
inline MpReal bessel_j<MpReal>(double alpha, const MpReal& x) {
  detail::check_bessel_domain(alpha, to_double(x));
  const mpfr_prec_t p = MpReal::default_prec();
  const double xd = to_double(x);
  if (xd == 0.0) {
    if (alpha > 0.0) return MpReal(0.0);
    if (alpha == 0.0) return MpReal(1.0);
    throw DomainError("bessel_j: J_alpha singular at x = 0 for alpha < 0");
  }
  MpReal out;
  if (xd >= 0.35 * (static_cast<double>(p) + 20.0) && xd >= alpha * alpha * 0.5) {
    MpPrecGuard guard(p + 64);
    out = detail::bessel_j_asymptotic(alpha, MpReal(0.0) + x);
  } else {
    const mpfr_prec_t guard_bits = static_cast<mpfr_prec_t>(1.45 * xd) + 64;
    MpPrecGuard guard(p + guard_bits);
    out = detail::bessel_j_series(alpha, MpReal(0.0) + x);
  }
  MpReal rounded(0.0, p);
  mpfr_set(rounded.raw(), out.raw(), MPFR_RNDN);
  return rounded;
}

// e^{-x} I_alpha(x); safe for all representable x.
template <class Real>
Real bessel_i_scaled(double alpha, const Real& x);

template <>
inline DD bessel_i_scaled<DD>(double alpha, const DD& x) {
  detail::check_bessel_domain(alpha, to_double(x));
  if (x.hi == 0.0) {
    if (alpha > 0.0) return DD(0.0);
    if (alpha == 0.0) return DD(1.0);
    throw DomainError("bessel_i: I_alpha singular at x = 0 for alpha < 0");
  }
  if (x.hi < 38.0) return detail::bessel_i_series_scaled(alpha, x);
  return detail::bessel_i_asymptotic_scaled(alpha, x);
}

template <>
inline double bessel_i_scaled<double>(double alpha, const double& x) {
  return to_double(bessel_i_scaled<DD>(alpha, DD(x)));
}

template <>
inline MpReal bessel_i_scaled<MpReal>(double alpha, const MpReal& x) {
  detail::check_bessel_domain(alpha, to_double(x));
  const mpfr_prec_t p = MpReal::default_prec();
  const double xd = to_double(x);
  if (xd == 0.0) {
    if (alpha > 0.0) return MpReal(0.0);
    if (alpha == 0.0) return MpReal(1.0);
    throw DomainError("bessel_i: I_alpha singular at x = 0 for alpha < 0");
  }
  MpReal out;
  if (xd >= 0.35 * (static_cast<double>(p) + 20.0) && xd >= alpha * alpha * 0.5) {
    MpPrecGuard guard(p + 64);
    out = detail::bessel_i_asymptotic_scaled(alpha, MpReal(0.0) + x);
  } else {
    MpPrecGuard guard(p + 64);
    out = detail::bessel_i_series_scaled(alpha, MpReal(0.0) + x);
  }
  MpReal rounded(0.0, p);
  mpfr_set(rounded.raw(), out.raw(), MPFR_RNDN);
  return rounded;
}

// I_alpha(x); throws std::overflow_error once e^x overflows the format.
template <class Real>
Real bessel_i(double alpha, const Real& x) {
  if constexpr (std::is_same_v<Real, MpReal>) {
    return bessel_i_scaled(alpha, x) * exp(MpReal(0.0) + x);
  } else {
    if (to_double(x) > 708.0) {
      throw std::overflow_error("bessel_i: unscaled value overflows; use bessel_i_scaled");
    }
    return bessel_i_scaled(alpha, x) * exp(x);
  }
}

// ---------------------------------------------------------------------------
// Higher derivatives of J_alpha
// ---------------------------------------------------------------------------

// J_alpha^{(n)}(x) = A_n(1/x) J_alpha(x) + B_n(1/x) J_{alpha+1}(x), where the
// coefficient polynomials follow from the two first-order recurrences
//   J_alpha'   = (alpha/x) J_alpha - J_{alpha+1}
//   J_{alpha+1}' = J_alpha - ((alpha+1)/x) J_{alpha+1}.
// Building A_n, B_n symbolically keeps the evaluation to a single Bessel pair
// regardless of the order.
template <class Real>
class DerivReduction {
 public:
  DerivReduction(double alpha, int max_order) : alpha_(alpha) {
    if (max_order < 0 || max_order > kMaxDerivOrder) {
      throw DomainError("DerivReduction: order outside [0, " +
                        std::to_string(kMaxDerivOrder) + "]");
    }
    a_.resize(max_order + 1);
    b_.resize(max_order + 1);
    a_[0] = {RealTraits<Real>::from(1.0)};
    b_[0] = {RealTraits<Real>::from(0.0)};
    for (int n = 0; n < max_order; ++n) {
      const auto& A = a_[n];
      const auto& B = b_[n];
      std::vector<Real> nA(A.size() + 1, RealTraits<Real>::from(0.0));
      std::vector<Real> nB(B.size() + 1, RealTraits<Real>::from(0.0));
      for (size_t p = 0; p < A.size(); ++p) {
        nA[p + 1] += RealTraits<Real>::from(alpha_ - static_cast<double>(p)) * A[p];
        nB[p] += -A[p];
      }
      for (size_t p = 0; p < B.size(); ++p) {
        nB[p + 1] += RealTraits<Real>::from(-(alpha_ + 1.0) - static_cast<double>(p)) * B[p];
        nA[p] += B[p];
      }
      a_[n + 1] = std::move(nA);
      b_[n + 1] = std::move(nB);
    }
  }

  // coefficients (c1, c2) with J^{(n)}(x) = c1 J_alpha(x) + c2 J_{alpha+1}(x)
  std::pair<Real, Real> coeffs(int order, const Real& x) const {
    const Real w = RealTraits<Real>::from(1.0) / x;
    return {horner(a_[order], w), horner(b_[order], w)};
  }

 private:
  static Real horner(const std::vector<Real>& c, const Real& w) {
    Real r = RealTraits<Real>::from(0.0);
    for (size_t i = c.size(); i-- > 0;) r = r * w + c[i];
    return r;
  }

  double alpha_;
  std::vector<std::vector<Real>> a_, b_;
};

template <class Real>
Real bessel_j_deriv(double alpha, int order, const Real& x) {
  detail::check_bessel_domain(alpha, to_double(x));
  if (to_double(x) <= 0.0) {
    throw DomainError("bessel_j_deriv: requires x > 0");
  }
  if (order == 0) return bessel_j(alpha, x);
  DerivReduction<Real> red(alpha, order);
  auto [c1, c2] = red.coeffs(order, x);
  return c1 * bessel_j(alpha, x) + c2 * bessel_j(alpha + 1.0, x);
}

// ---------------------------------------------------------------------------
// Zeros of J_alpha
// ---------------------------------------------------------------------------

template <class Real>
struct BesselZeroTableT {
  double alpha = 0.0;
  std::vector<Real> zeros;
  std::vector<double> residuals;  // |J_alpha(zero)| at working precision
  double residual_bound = 0.0;

  int count() const { return static_cast<int>(zeros.size()); }

  // ordering + residual certificates; throws on violation
  void validate() const {
    for (size_t i = 0; i + 1 < zeros.size(); ++i) {
      if (!(zeros[i] < zeros[i + 1])) {
        throw ConsistencyError("BesselZeroTable: zeros not strictly increasing at n=" +
                               std::to_string(i + 1));
      }
    }
    for (size_t i = 0; i < residuals.size(); ++i) {
      if (!(residuals[i] <= 1e-14 * std::max(1.0, static_cast<double>(i + 1)))) {
        throw ConsistencyError("BesselZeroTable: residual certificate failed at n=" +
                               std::to_string(i + 1));
      }
    }
  }
};

namespace detail {

inline double mcmahon_guess(double alpha, int n) {
  const double beta = (n + 0.5 * alpha - 0.25) * 3.141592653589793;
  const double mu = 4.0 * alpha * alpha;
  const double b8 = 8.0 * beta;
  double x = beta - (mu - 1.0) / b8;
  x -= 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * b8 * b8 * b8);
  return x;
}

}  // namespace detail

// First `count` positive zeros, found by sign-change marching (step pi/2, so
// no zero can be straddled) and polished by bracket-safeguarded Newton.
template <class Real>
BesselZeroTableT<Real> bessel_zeros(double alpha, int count, double tol = 1e-14) {
  if (alpha <= -1.0) throw DomainError("bessel_zeros: requires alpha > -1");
  if (count <= 0) throw DomainError("bessel_zeros: count must be positive");
  if (tol < 1e-15) tol = 1e-15;

  BesselZeroTableT<Real> table;
  table.alpha = alpha;
  table.zeros.reserve(count);
  table.residuals.reserve(count);

  const double eps_r = RealTraits<Real>::eps();
  auto j = [&](const Real& x) { return bessel_j(alpha, x); };
  auto jp = [&](const Real& x, const Real& jx) {
    return RealTraits<Real>::from(alpha) / x * jx - bessel_j(alpha + 1.0, x);
  };

  Real prev = RealTraits<Real>::from(0.0);
  const double step = 1.5707963267948966;  // pi/2, below the minimal zero gap
  for (int n = 1; n <= count; ++n) {
    // 1. bracket by marching
    Real lo = (n == 1) ? RealTraits<Real>::from(1e-3) : prev + 0.05;
    Real flo = j(lo);
    if (n == 1 && to_double(flo) <= 0.0) {
      // first zero may sit extremely close to the origin when alpha -> -1
      lo = RealTraits<Real>::from(1e-12);
      flo = j(lo);
    }
    Real hi = lo;
    Real fhi = flo;
    int guard = 0;
    while (to_double(flo) * to_double(fhi) > 0.0) {
      lo = hi;
      flo = fhi;
      hi = hi + step;
      fhi = j(hi);
      if (++guard > 10000) {
        throw ConvergenceError("bessel_zeros: no sign change while bracketing zero " +
                               std::to_string(n) + " of J_" + std::to_string(alpha));
      }
    }

    // 2. safeguarded Newton inside [lo, hi]
    Real x = RealTraits<Real>::from(detail::mcmahon_guess(alpha, n));
    if (!(x > lo && x < hi)) x = ldexp(lo + hi, -1);
    bool converged = false;
    for (int it = 0; it < 200; ++it) {
      const Real fx = j(x);
      if (to_double(fx) == 0.0) {
        converged = true;
        break;
      }
      if (to_double(fx) * to_double(flo) > 0.0) {
        lo = x;
        flo = fx;
      } else {
        hi = x;
        fhi = fx;
      }
      const Real dfx = jp(x, fx);
      Real xn = x - fx / dfx;
      if (!(xn > lo && xn < hi) || !isfinite(xn)) {
        xn = ldexp(lo + hi, -1);  // bisect when Newton leaves the bracket
      }
      const double dx = std::abs(to_double(xn - x));
      x = xn;
      if (dx <= std::max(tol, 4.0 * eps_r) * std::abs(to_double(x))) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw ConvergenceError("bessel_zeros: Newton failed for zero " + std::to_string(n) +
                             " of J_" + std::to_string(alpha));
    }
    if (!(x > prev)) {
      throw ConvergenceError("bessel_zeros: ordering violated at zero " + std::to_string(n));
    }
    table.zeros.push_back(x);
    table.residuals.push_back(std::abs(to_double(j(x))));
    prev = x;
  }
  table.residual_bound =
      *std::max_element(table.residuals.begin(), table.residuals.end());
  table.validate();
  return table;
}

}  // namespace bpmax
