#pragma once

// Phase bookkeeping for oscillatory sums.  Arguments like t*log(n) reach
// ~5e7 in the sweeps we run, so reducing them mod 2*pi in plain double
// would lose ~8 significant digits of phase.  The double pipeline therefore
// carries phases in x87 long double (64-bit mantissa); the extended
// pipeline carries them in mp_real.

#include <cmath>
#include <cstdint>

#include "critline/mpreal.hpp"

namespace critline {

template <>
inline long double const_pi<long double>() {
  return 3.14159265358979323846264338327950288L;
}

template <typename T>
struct phase_policy;

template <>
struct phase_policy<double> {
  using wide = long double;
  static wide log_uint(std::uint64_t n) { return std::log(static_cast<wide>(n)); }
  static wide log_real(double x) { return std::log(static_cast<wide>(x)); }
  static wide widen(double x) { return x; }
  static double narrow(wide x) { return static_cast<double>(x); }
  // reduce into [-pi, pi) and return as double; safe once reduced
  static double mod_2pi(wide x) {
    const wide two_pi = 2.0L * const_pi<long double>();
    wide r = std::fmod(x, two_pi);
    if (r >= const_pi<long double>()) r -= two_pi;
    if (r < -const_pi<long double>()) r += two_pi;
    return static_cast<double>(r);
  }
};

template <>
struct phase_policy<mp_real> {
  using wide = mp_real;
  static wide log_uint(std::uint64_t n) { return log(mp_real(static_cast<long>(n))); }
  static wide log_real(const mp_real& x) { return log(x); }
  static wide widen(const mp_real& x) { return x; }
  static mp_real narrow(const wide& x) { return x; }
  static mp_real mod_2pi(const wide& x) {
    mp_real two_pi = mp_real(2) * mp_real::pi();
    mp_real r = fmod(x, two_pi);
    if (r >= mp_real::pi()) r -= two_pi;
    if (r < -mp_real::pi()) r += two_pi;
    return r;
  }
};

}  // namespace critline
