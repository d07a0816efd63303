#pragma once

// Euler-Maclaurin evaluation of zeta(s) and the Hurwitz zeta(s, x).
// Practical for |Im s| up to ~1e5; the Riemann-Siegel path takes over on
// the critical line at large height.

#include <cmath>
#include <cstdint>
#include <vector>

#include "critline/bernoulli.hpp"
#include "critline/errors.hpp"
#include "critline/mpreal.hpp"
#include "critline/phase.hpp"

namespace critline {

namespace detail {

// cached log(n) in phase precision; grows on demand, one copy per thread
inline const long double* log_table(std::uint64_t upto) {
  thread_local std::vector<long double> table{0.0L, 0.0L};  // [0] unused
  while (table.size() <= upto)
    table.push_back(std::log(static_cast<long double>(table.size())));
  return table.data();
}

template <typename T>
int default_em_terms(const T& t) {
  double td = std::abs(to_double(t));
  return static_cast<int>(std::max(12.0, std::ceil(2.0 * td)));
}

}  // namespace detail

// zeta(s) with sum length N (0 = auto: max(12, 2|Im s|)) and 8 Bernoulli
// correction terms.  Throws at the pole.
template <typename T>
cplx<T> zeta_em(const cplx<T>& s, int terms = 0) {
  using std::exp; using std::log; using std::sin; using std::cos;
  using P = typename phase_policy<T>::wide;
  const T sigma = s.re, t = s.im;
  if (std::abs(to_double(sigma) - 1.0) < 1e-12 &&
      std::abs(to_double(t)) < 1e-12)
    throw error(errc::pole, "zeta has a pole at s = 1");

  const int N = terms > 0 ? terms : detail::default_em_terms(t);
  const P t_wide = phase_policy<T>::widen(t);

  cplx<T> sum{T(0), T(0)};
  if constexpr (std::is_same_v<T, double>) {
    const long double* lg = detail::log_table(static_cast<std::uint64_t>(N));
    for (int n = 1; n < N; ++n) {
      double mag = std::exp(-sigma * static_cast<double>(lg[n]));
      double ph = phase_policy<double>::mod_2pi(-t_wide * lg[n]);
      sum.re += mag * std::cos(ph);
      sum.im += mag * std::sin(ph);
    }
  } else {
    for (int n = 1; n < N; ++n) {
      T ln = phase_policy<T>::log_uint(static_cast<std::uint64_t>(n));
      T mag = exp(-sigma * ln);
      T ph = phase_policy<T>::mod_2pi(-t_wide * ln);
      sum.re += mag * cos(ph);
      sum.im += mag * sin(ph);
    }
  }

  // N^{-s} computed once, with the phase reduced in wide precision
  const P logN = phase_policy<T>::log_uint(static_cast<std::uint64_t>(N));
  const T magN = exp(-sigma * phase_policy<T>::narrow(logN));
  const T phN = phase_policy<T>::mod_2pi(-t_wide * logN);
  const cplx<T> N_pow_ms{magN * cos(phN), magN * sin(phN)};
  const cplx<T> Nc{T(N), T(0)};
  const cplx<T> one{T(1), T(0)};

  cplx<T> res = sum;
  res += Nc * N_pow_ms / (s - one);   // integral tail N^{1-s}/(s-1)
  res += N_pow_ms / cplx<T>{T(2), T(0)};

  // correction terms B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
  cplx<T> rising = one;
  cplx<T> npow = N_pow_ms * Nc;  // N^{-s+1}
  const cplx<T> Ninv2 = one / (Nc * Nc);
  T fact(1);
  for (int k = 1; k <= 8; ++k) {
    rising *= (k == 1) ? s : (s + cplx<T>{T(2 * k - 3), T(0)}) *
                                 (s + cplx<T>{T(2 * k - 2), T(0)});
    fact *= T(2 * k) * T(2 * k - 1);
    npow *= Ninv2;  // N^{-s-2k+1}
    res += cplx<T>{bernoulli_2k<T>(k) / fact, T(0)} * rising * npow;
  }
  return res;
}

inline cplxd zeta_em_d(double sigma, double t, int terms = 0) {
  return zeta_em<double>(cplxd{sigma, t}, terms);
}

// Hurwitz zeta(s, x) for 0 < x <= 1, same Euler-Maclaurin scheme.
// `log_offsets` may supply precomputed log(n + x) values (index n).
template <typename T>
cplx<T> hurwitz_em(const cplx<T>& s, const T& x, int terms = 0,
                   const long double* log_offsets = nullptr) {
  using std::exp; using std::log; using std::sin; using std::cos;
  const T sigma = s.re, t = s.im;
  if (!(to_double(x) > 0.0 && to_double(x) <= 1.0))
    throw error(errc::domain_error, "hurwitz_em needs 0 < x <= 1");
  if (std::abs(to_double(sigma) - 1.0) < 1e-12 &&
      std::abs(to_double(t)) < 1e-12)
    throw error(errc::pole, "hurwitz zeta has a pole at s = 1");

  const int M = terms > 0 ? terms : detail::default_em_terms(t);
  const auto t_wide = phase_policy<T>::widen(t);

  cplx<T> sum{T(0), T(0)};
  for (int n = 0; n < M; ++n) {
    typename phase_policy<T>::wide ln;
    if constexpr (std::is_same_v<T, double>) {
      ln = log_offsets ? log_offsets[n]
                       : std::log(static_cast<long double>(n) +
                                  static_cast<long double>(x));
    } else {
      ln = phase_policy<T>::log_real(T(n) + x);
    }
    T mag = exp(-sigma * phase_policy<T>::narrow(ln));
    T ph = phase_policy<T>::mod_2pi(-t_wide * ln);
    sum.re += mag * cos(ph);
    sum.im += mag * sin(ph);
  }

  const T Mx = T(M) + x;
  const auto logMx = phase_policy<T>::log_real(Mx);
  const T magM = exp(-sigma * phase_policy<T>::narrow(logMx));
  const T phM = phase_policy<T>::mod_2pi(-t_wide * logMx);
  const cplx<T> M_pow_ms{magM * cos(phM), magM * sin(phM)};
  const cplx<T> Mc{Mx, T(0)};
  const cplx<T> one{T(1), T(0)};

  cplx<T> res = sum;
  res += Mc * M_pow_ms / (s - one);
  res += M_pow_ms / cplx<T>{T(2), T(0)};

  cplx<T> rising = one;
  cplx<T> mpow = M_pow_ms * Mc;
  const cplx<T> Minv2 = one / (Mc * Mc);
  T fact(1);
  for (int k = 1; k <= 8; ++k) {
    rising *= (k == 1) ? s : (s + cplx<T>{T(2 * k - 3), T(0)}) *
                                 (s + cplx<T>{T(2 * k - 2), T(0)});
    fact *= T(2 * k) * T(2 * k - 1);
    mpow *= Minv2;
    res += cplx<T>{bernoulli_2k<T>(k) / fact, T(0)} * rising * mpow;
  }
  return res;
}

}  // namespace critline
