#pragma once

// Minimal MPFR value type for the extended-precision verification mode,
// plus a small complex template usable with either double or mp_real.
// 192 bits of mantissa gives ~57 significant digits.

#include <mpfr.h>

#include <cmath>
#include <complex>
#include <string>
#include <utility>

namespace critline {

class mp_real {
 public:
  static constexpr mpfr_prec_t kPrec = 192;

  mp_real() { mpfr_init2(v_, kPrec); mpfr_set_zero(v_, 1); }
  mp_real(double x) { mpfr_init2(v_, kPrec); mpfr_set_d(v_, x, MPFR_RNDN); }
  mp_real(long x) { mpfr_init2(v_, kPrec); mpfr_set_si(v_, x, MPFR_RNDN); }
  mp_real(int x) : mp_real(static_cast<long>(x)) {}
  explicit mp_real(const std::string& s) {
    mpfr_init2(v_, kPrec);
    mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN);
  }
  mp_real(const mp_real& o) { mpfr_init2(v_, kPrec); mpfr_set(v_, o.v_, MPFR_RNDN); }
  mp_real(mp_real&& o) noexcept {
    mpfr_init2(v_, kPrec);
    mpfr_swap(v_, o.v_);
  }
  mp_real& operator=(const mp_real& o) {
    if (this != &o) mpfr_set(v_, o.v_, MPFR_RNDN);
    return *this;
  }
  mp_real& operator=(mp_real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~mp_real() { mpfr_clear(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  friend mp_real operator+(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend mp_real operator-(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend mp_real operator*(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend mp_real operator/(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  mp_real operator-() const { mp_real r; mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }
  mp_real& operator+=(const mp_real& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  mp_real& operator-=(const mp_real& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  mp_real& operator*=(const mp_real& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  mp_real& operator/=(const mp_real& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const mp_real& a, const mp_real& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const mp_real& a, const mp_real& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const mp_real& a, const mp_real& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const mp_real& a, const mp_real& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const mp_real& a, const mp_real& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator!=(const mp_real& a, const mp_real& b) { return !mpfr_equal_p(a.v_, b.v_); }

#define CRITLINE_MP_UNARY(name, fn)                          \
  friend mp_real name(const mp_real& a) {                    \
    mp_real r; fn(r.v_, a.v_, MPFR_RNDN); return r;          \
  }
  CRITLINE_MP_UNARY(sqrt, mpfr_sqrt)
  CRITLINE_MP_UNARY(log, mpfr_log)
  CRITLINE_MP_UNARY(exp, mpfr_exp)
  CRITLINE_MP_UNARY(sin, mpfr_sin)
  CRITLINE_MP_UNARY(cos, mpfr_cos)
  CRITLINE_MP_UNARY(abs, mpfr_abs)
  CRITLINE_MP_UNARY(floor, mpfr_floor)
  CRITLINE_MP_UNARY(round, mpfr_round)
#undef CRITLINE_MP_UNARY

  friend mp_real atan2(const mp_real& y, const mp_real& x) {
    mp_real r; mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN); return r;
  }
  friend mp_real pow(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_pow(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend mp_real fmod(const mp_real& a, const mp_real& b) {
    mp_real r; mpfr_fmod(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  static mp_real pi() { mp_real r; mpfr_const_pi(r.raw(), MPFR_RNDN); return r; }

 private:
  mpfr_t v_;
};

// --- scalar helpers usable with both double and mp_real -------------------

template <typename T>
inline T const_pi();
template <>
inline double const_pi<double>() { return 3.14159265358979323846264338327950288; }
template <>
inline mp_real const_pi<mp_real>() { return mp_real::pi(); }

inline double to_double(double x) { return x; }
inline double to_double(const mp_real& x) { return x.to_double(); }

// --- lightweight complex (std::complex is only specified for builtins) ----

template <typename T>
struct cplx {
  T re{}, im{};

  cplx() = default;
  cplx(T r) : re(std::move(r)) {}
  cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

  friend cplx operator+(const cplx& a, const cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend cplx operator-(const cplx& a, const cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend cplx operator*(const cplx& a, const cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend cplx operator/(const cplx& a, const cplx& b) {
    T d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  cplx operator-() const { return {-re, -im}; }
  cplx& operator+=(const cplx& b) { re += b.re; im += b.im; return *this; }
  cplx& operator-=(const cplx& b) { re -= b.re; im -= b.im; return *this; }
  cplx& operator*=(const cplx& b) { *this = *this * b; return *this; }

  friend cplx conj(const cplx& a) { return {a.re, -a.im}; }
  friend T abs(const cplx& a) {
    using std::sqrt;
    return sqrt(a.re * a.re + a.im * a.im);
  }
  friend T arg(const cplx& a) {
    using std::atan2;
    return atan2(a.im, a.re);
  }
  friend cplx log(const cplx& a) {
    using std::log;
    return {log(abs(a)), arg(a)};
  }
  friend cplx exp(const cplx& a) {
    using std::exp; using std::sin; using std::cos;
    T m = exp(a.re);
    return {m * cos(a.im), m * sin(a.im)};
  }
};

using cplxd = cplx<double>;

inline std::complex<double> to_std(const cplxd& z) { return {z.re, z.im}; }
inline std::complex<double> to_std(const cplx<mp_real>& z) {
  return {z.re.to_double(), z.im.to_double()};
}
inline cplxd from_std(std::complex<double> z) { return {z.real(), z.imag()}; }

}  // namespace critline
