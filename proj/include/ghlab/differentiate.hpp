#pragma once

// Exact first and second derivatives of generic callables by forward-mode
// dual numbers. A callable passed here must be generic in its scalar type:
// it receives Eigen::Matrix<S, K, 1> and returns S (or a fixed-size vector of
// S for jacobian).

#include <Eigen/Core>
#include <cmath>
#include <utility>

#include "ghlab/dual.hpp"
#include "ghlab/errors.hpp"

namespace ghlab {

template <int K>
using VecK = Eigen::Matrix<double, K, 1>;

namespace detail {

inline bool finite(double v) { return std::isfinite(v); }
template <typename T, int N>
bool finite(const Dual<T, N>& v) {
  if (!finite(v.val)) return false;
  for (const auto& x : v.d)
    if (!finite(x)) return false;
  return true;
}

template <int K>
Eigen::Matrix<Dual<double, K>, K, 1> seed(const VecK<K>& x) {
  Eigen::Matrix<Dual<double, K>, K, 1> xd;
  for (int i = 0; i < K; ++i) xd[i] = Dual<double, K>::variable(x[i], i);
  return xd;
}

}  // namespace detail

/// Value and gradient of f at x.
template <int K, typename F>
std::pair<double, VecK<K>> value_and_gradient(F&& f, const VecK<K>& x) {
  const Dual<double, K> y = f(detail::seed<K>(x));
  if (!detail::finite(y)) throw DomainError("differentiate: function is not finite at the point");
  VecK<K> g;
  for (int i = 0; i < K; ++i) g[i] = y.d[i];
  return {y.val, g};
}

template <int K, typename F>
VecK<K> gradient(F&& f, const VecK<K>& x) {
  return value_and_gradient<K>(std::forward<F>(f), x).second;
}

/// Hessian of f at x, by nested duals.
template <int K, typename F>
Eigen::Matrix<double, K, K> hessian(F&& f, const VecK<K>& x) {
  using D1 = Dual<double, K>;
  using D2 = Dual<D1, K>;
  Eigen::Matrix<D2, K, 1> xd;
  for (int i = 0; i < K; ++i) {
    xd[i] = D2(D1::variable(x[i], i));
    xd[i].d[i] = D1(1.0);
  }
  const D2 y = f(xd);
  if (!detail::finite(y)) throw DomainError("hessian: function is not finite at the point");
  Eigen::Matrix<double, K, K> h;
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) h(i, j) = y.d[i].d[j];
  return h;
}

/// Jacobian of a vector-valued f: R^K -> R^M at x; row i holds the gradient of component i.
template <int M, int K, typename F>
Eigen::Matrix<double, M, K> jacobian(F&& f, const VecK<K>& x) {
  const Eigen::Matrix<Dual<double, K>, M, 1> y = f(detail::seed<K>(x));
  Eigen::Matrix<double, M, K> jac;
  for (int i = 0; i < M; ++i) {
    if (!detail::finite(y[i])) throw DomainError("jacobian: function is not finite at the point");
    for (int j = 0; j < K; ++j) jac(i, j) = y[i].d[j];
  }
  return jac;
}

}  // namespace ghlab
