#pragma once

// Foundational special functions: complex log-gamma / digamma on the right
// half plane, the Riemann-Siegel theta function, and Lambert W_0.

#include <cmath>

#include "critline/bernoulli.hpp"
#include "critline/errors.hpp"
#include "critline/mpreal.hpp"
#include "critline/phase.hpp"

namespace critline {

// log Gamma(z) for Re z > 0, continuous in Im z (real on the positive real
// axis).  Stirling series after shifting |z| above 12; the shift subtracts
// principal logs, which stay continuous in the right half plane.
template <typename T>
cplx<T> log_gamma(cplx<T> z) {
  using std::log;
  if (!(to_double(z.re) > 0.0))
    throw error(errc::domain_error, "log_gamma needs Re z > 0");
  cplx<T> shift{T(0), T(0)};
  auto abs2 = [](const cplx<T>& w) { return w.re * w.re + w.im * w.im; };
  while (to_double(abs2(z)) < 144.0) {
    shift += log(z);
    z += cplx<T>{T(1), T(0)};
  }
  const T half(0.5), one(1);
  cplx<T> lz = log(z);
  cplx<T> res = (z - cplx<T>{half, T(0)}) * lz - z;
  res.re += half * log(T(2) * const_pi<T>());
  cplx<T> zinv = cplx<T>{one, T(0)} / z;
  cplx<T> zinv2 = zinv * zinv;
  cplx<T> zpow = zinv;
  for (int k = 1; k <= 15; ++k) {
    T coeff = bernoulli_2k<T>(k) / (T(2 * k) * T(2 * k - 1));
    res += cplx<T>{coeff, T(0)} * zpow;
    zpow *= zinv2;
  }
  return res - shift;
}

// digamma, same domain and technique
template <typename T>
cplx<T> digamma(cplx<T> z) {
  using std::log;
  if (!(to_double(z.re) > 0.0))
    throw error(errc::domain_error, "digamma needs Re z > 0");
  cplx<T> shift{T(0), T(0)};
  auto abs2 = [](const cplx<T>& w) { return w.re * w.re + w.im * w.im; };
  const cplx<T> one{T(1), T(0)};
  while (to_double(abs2(z)) < 144.0) {
    shift += one / z;
    z += one;
  }
  cplx<T> res = log(z) - cplx<T>{T(0.5), T(0)} / z;
  cplx<T> zinv2 = one / (z * z);
  cplx<T> zpow = zinv2;
  for (int k = 1; k <= 15; ++k) {
    res -= cplx<T>{bernoulli_2k<T>(k) / T(2 * k), T(0)} * zpow;
    zpow *= zinv2;
  }
  return res - shift;
}

enum class theta_mode { exact, stirling_leading };

// Riemann-Siegel theta.  exact: Im log Gamma(1/4 + it/2) - t log sqrt(pi).
// stirling_leading: (t/2) log(t/(2 pi e)) - pi/8, the leading asymptotic.
template <typename T>
T theta_impl(const T& t, theta_mode mode = theta_mode::exact) {
  using std::log;
  if (!(to_double(t) > 0.0)) throw error(errc::domain_error, "theta needs t > 0");
  const T pi = const_pi<T>();
  if (mode == theta_mode::stirling_leading) {
    T e = exp(T(1));
    return t / T(2) * log(t / (T(2) * pi * e)) - pi / T(8);
  }
  cplx<T> z{T(0.25), t / T(2)};
  return log_gamma(z).im - t * (log(pi) / T(2));
}

inline double theta(double t, theta_mode mode = theta_mode::exact) {
  // phases matter to ~1e-11 rad at the largest sweep heights, so the
  // double-mode evaluation runs in long double internally
  return static_cast<double>(theta_impl<long double>(t, mode));
}

// wide-precision theta for phase-critical callers (value is ~t log t, the
// caller reduces mod 2 pi at full carrier precision)
template <typename T>
typename phase_policy<T>::wide theta_wide(const T& t) {
  using W = typename phase_policy<T>::wide;
  return theta_impl<W>(phase_policy<T>::widen(t), theta_mode::exact);
}

// d theta / dt = (1/2) Re psi(1/4 + it/2) - log sqrt(pi)
inline double theta_derivative(double t) {
  if (!(t > 2.0 * const_pi<double>()))
    throw error(errc::domain_error, "theta_derivative needs t > 2 pi");
  cplx<long double> z{0.25L, static_cast<long double>(t) / 2.0L};
  long double psi_re = digamma(z).re;
  return static_cast<double>(psi_re / 2.0L -
                             std::log(const_pi<long double>()) / 2.0L);
}

// Lambert W, principal branch, Halley iteration.
inline double lambert_w(double x) {
  constexpr double kInvE = 0.36787944117144232159552377016146087;
  if (x < -kInvE - 1e-12)
    throw error(errc::domain_error, "lambert_w needs x >= -1/e");
  if (x < -kInvE) x = -kInvE;
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.3235) {
    double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 1.5) {
    w = x * (1.0 + x * (-1.0 + x * (1.5 - 8.0 / 3.0 * x)));
    if (x > 0.5) w = std::log1p(x);  // series leaves its radius
  } else if (x < 10.0) {
    w = std::log1p(x);
  } else {
    double l1 = std::log(x), l2 = std::log(l1);
    w = l1 - l2 + l2 / l1;
  }

  for (int it = 0; it < 24; ++it) {
    double ew = std::exp(w);
    double f = w * ew - x;
    if (std::abs(f) <= 1e-13 * std::max(std::abs(x), 1e-300)) break;
    double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
    w -= f / denom;
  }
  return w;
}

}  // namespace critline
