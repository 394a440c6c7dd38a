#pragma once

// Bracketed root finding for monotone scalar functions: bisection safeguarded
// secant steps (Illinois variant of regula falsi).

#include <algorithm>
#include <cmath>
#include <limits>

#include "ghlab/errors.hpp"

namespace ghlab {

/// Root of f on [lo, hi]. Requires f(lo) * f(hi) <= 0. Stops when
/// |f(x)| <= tol * scale, with scale = max(|f(lo)|, |f(hi)|, 1), or when the
/// bracket has shrunk to rounding level.
template <typename F>
double solve_monotone(F&& f, double lo, double hi, double tol = 1e-15) {
  if (lo > hi) std::swap(lo, hi);
  double flo = f(lo);
  double fhi = f(hi);
  if (!std::isfinite(flo) || !std::isfinite(fhi))
    throw DomainError("solve_monotone: function not finite at bracket ends");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw DomainError("solve_monotone: bracket does not straddle a sign change");
  const double scale = std::max({std::abs(flo), std::abs(fhi), 1.0});
  const double eps = std::numeric_limits<double>::epsilon();
  int side = 0;
  double x = 0.5 * (lo + hi);
  for (int iter = 0; iter < 400; ++iter) {
    double width = hi - lo;
    x = (lo * fhi - hi * flo) / (fhi - flo);
    // Fall back to bisection when the secant point hugs an end.
    if (!(x > lo + 0.01 * width && x < hi - 0.01 * width)) x = 0.5 * (lo + hi);
    const double fx = f(x);
    if (std::abs(fx) <= tol * scale || fx == 0.0) return x;
    if ((fx > 0.0) == (fhi > 0.0)) {
      hi = x;
      fhi = fx;
      if (side == -1) flo *= 0.5;
      side = -1;
    } else {
      lo = x;
      flo = fx;
      if (side == 1) fhi *= 0.5;
      side = 1;
    }
    if (hi - lo <= 4 * eps * std::max({std::abs(lo), std::abs(hi), eps})) break;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ghlab

namespace ghlab {

/// Root of a strictly decreasing f on the open interval (a, b); either end may
/// be infinite. The bracket is grown from an interior point towards the ends.
template <typename F>
double solve_decreasing(F&& f, double a, double b, double tol = 1e-15) {
  double mid;
  if (std::isfinite(a) && std::isfinite(b))
    mid = 0.5 * (a + b);
  else if (std::isfinite(a))
    mid = a + 1.0;
  else if (std::isfinite(b))
    mid = b - 1.0;
  else
    mid = 0.0;
  auto walk = [&](double end, bool want_positive) {
    double x = mid;
    double step = 1.0;
    for (int it = 0; it < 2100; ++it) {
      const double fx = f(x);
      if (fx == 0.0) return x;
      if (std::isfinite(fx) && (fx > 0.0) == want_positive) return x;
      if (std::isfinite(end)) {
        x = 0.5 * (x + end);
      } else {
        x += (want_positive ? -step : step);
        step *= 2.0;
      }
    }
    throw DomainError("solve_decreasing: could not bracket the root");
  };
  const double lo = walk(a, true);
  const double hi = walk(b, false);
  return solve_monotone(f, lo, hi, tol);
}

}  // namespace ghlab
