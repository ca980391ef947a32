#include "bpmax/specfun.hpp"

#include <array>
#include <cmath>

namespace bpmax {
namespace detail {

double gamma_lanczos(double x) {
  // g = 7, 9-term coefficient set.
  static constexpr std::array<double, 9> c = {
      0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
      771.32342877765313,      -176.61502916214059,    12.507343278686905,
      -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
  static constexpr double pi = 3.141592653589793;
  if (x < 0.5) {
    return pi / (std::sin(pi * x) * gamma_lanczos(1.0 - x));
  }
  x -= 1.0;
  double a = c[0];
  const double t = x + 7.5;
  for (int i = 1; i < 9; ++i) a += c[i] / (x + i);
  return std::sqrt(2.0 * pi) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

DD log_gamma_stirling_dd(const DD& x) {
  // B_{2n} / (2n (2n-1)), exact rationals through n = 15.
  static constexpr std::array<std::array<double, 2>, 15> coef = {{
      {1.0, 12.0},
      {-1.0, 360.0},
      {1.0, 1260.0},
      {-1.0, 1680.0},
      {1.0, 1188.0},
      {-691.0, 360360.0},
      {1.0, 156.0},
      {-3617.0, 122400.0},
      {43867.0, 244188.0},
      {-174611.0, 125400.0},
      {854513.0, 63756.0},
      {-236364091.0, 1506960.0},
      {8553103.0, 3900.0},
      {-23749461029.0, 657720.0},
      {8615841276005.0, 12460140.0},
  }};
  static const DD half_log_two_pi = mul_pwr2(log(DD::two_pi()), 0.5);

  // shift to X >= 25 so the truncated series sits below dd roundoff
  int m = 0;
  if (x.hi < 25.0) m = static_cast<int>(std::ceil(25.0 - x.hi));
  const DD big = x + static_cast<double>(m);

  const DD inv2 = DD(1.0) / dd_sqr(big);
  DD series = DD(coef[14][0]) / DD(coef[14][1]);
  for (int n = 13; n >= 0; --n) {
    series = series * inv2 + DD(coef[n][0]) / DD(coef[n][1]);
  }
  series = series / big;

  DD result = (big - 0.5) * log(big) - big + half_log_two_pi + series;
  for (int k = 0; k < m; ++k) {
    result = result - log(x + static_cast<double>(k));
  }
  return result;
}

void check_bessel_domain(double alpha, double x) {
  if (alpha <= -1.0) throw DomainError("bessel: requires alpha > -1");
  if (x < 0.0) throw DomainError("bessel: requires x >= 0");
  if (!std::isfinite(x)) throw DomainError("bessel: non-finite argument");
}

}  // namespace detail
}  // namespace bpmax
