#pragma once

// Minimal complex arithmetic over an arbitrary real scalar, so that complex
// coordinate maps can be differentiated with Dual numbers. std::complex is
// only specified for floating-point types.

#include <cmath>
#include <complex>

namespace ghlab {

template <typename S>
struct Cplx {
  S re{};
  S im{};

  Cplx() = default;
  Cplx(const S& r, const S& i) : re(r), im(i) {}
  explicit Cplx(const S& r) : re(r), im(S(0.0)) {}

  static Cplx polar(const S& mod, const S& arg) {
    using std::cos;
    using std::sin;
    return {mod * cos(arg), mod * sin(arg)};
  }
};

template <typename S>
Cplx<S> operator+(const Cplx<S>& a, const Cplx<S>& b) { return {a.re + b.re, a.im + b.im}; }
template <typename S>
Cplx<S> operator-(const Cplx<S>& a, const Cplx<S>& b) { return {a.re - b.re, a.im - b.im}; }
template <typename S>
Cplx<S> operator-(const Cplx<S>& a) { return {-a.re, -a.im}; }
template <typename S>
Cplx<S> operator*(const Cplx<S>& a, const Cplx<S>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
template <typename S>
Cplx<S> operator*(const Cplx<S>& a, const S& s) { return {a.re * s, a.im * s}; }
template <typename S>
Cplx<S> operator*(const S& s, const Cplx<S>& a) { return {a.re * s, a.im * s}; }
template <typename S>
Cplx<S> conj(const Cplx<S>& a) { return {a.re, -a.im}; }
template <typename S>
S norm(const Cplx<S>& a) { return a.re * a.re + a.im * a.im; }
template <typename S>
Cplx<S> operator/(const Cplx<S>& a, const Cplx<S>& b) {
  const S d = norm(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
template <typename S>
Cplx<S> inverse(const Cplx<S>& a) {
  const S d = norm(a);
  return {a.re / d, -a.im / d};
}
template <typename S>
Cplx<S> ipow(Cplx<S> a, int k) {
  Cplx<S> r(S(1.0), S(0.0));
  if (k < 0) {
    a = inverse(a);
    k = -k;
  }
  for (; k > 0; --k) r = r * a;
  return r;
}

/// Principal square root (cut along the negative real axis).
template <typename S>
Cplx<S> sqrt(const Cplx<S>& a) {
  using std::sqrt;
  const S m = sqrt(norm(a));
  if (m == 0.0) return {S(0.0), S(0.0)};
  if (a.re >= 0.0) {
    const S t = sqrt((m + a.re) * 0.5);
    return {t, a.im / (2.0 * t)};
  }
  S t = sqrt((m - a.re) * 0.5);
  if (a.im < 0.0) t = -t;
  return {a.im / (2.0 * t), t};
}

/// Principal logarithm.
template <typename S>
Cplx<S> log(const Cplx<S>& a) {
  using std::atan2;
  using std::log;
  return {0.5 * log(norm(a)), atan2(a.im, a.re)};
}

inline std::complex<double> to_std(const Cplx<double>& a) { return {a.re, a.im}; }
inline Cplx<double> from_std(const std::complex<double>& a) { return {a.real(), a.imag()}; }

}  // namespace ghlab
