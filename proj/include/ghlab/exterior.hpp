#pragma once

// Exterior derivative of 1-forms and 2-forms on R^K given as coefficient
// fields. Partials use the fourth-order central stencil with per-axis step
// h_i = step * (1 + |x_i|), which is exact for polynomial coefficients of
// degree at most four.

#include <Eigen/Core>
#include <cmath>

#include "ghlab/errors.hpp"

namespace ghlab {

inline constexpr double kDefaultStep = 1e-5;

namespace detail {

inline void check_step(double step) {
  if (!(step > 0.0)) throw DomainError("exterior_derivative: step must be positive");
}

// Partial derivative along axis i of a field returning any Eigen object.
template <int K, typename F>
auto central_partial(F& f, const Eigen::Matrix<double, K, 1>& x, int i, double step) {
  const double h = step * (1.0 + std::abs(x[i]));
  Eigen::Matrix<double, K, 1> p = x;
  p[i] = x[i] + 2 * h;
  const auto f2 = f(p).eval();
  p[i] = x[i] + h;
  const auto f1 = f(p).eval();
  p[i] = x[i] - h;
  const auto m1 = f(p).eval();
  p[i] = x[i] - 2 * h;
  const auto m2 = f(p).eval();
  return ((8.0 * (f1 - m1) - (f2 - m2)) / (12.0 * h)).eval();
}

}  // namespace detail

/// d of a 1-form theta = sum theta_j dx^j; result(i, j) is the coefficient
/// (d theta)_{ij} = d_i theta_j - d_j theta_i of dx^i ^ dx^j.
template <int K, typename F>
Eigen::Matrix<double, K, K> exterior_derivative_1form(F&& form, const Eigen::Matrix<double, K, 1>& x,
                                                      double step = kDefaultStep) {
  detail::check_step(step);
  Eigen::Matrix<double, K, K> jac;  // jac(i, j) = d_i theta_j
  for (int i = 0; i < K; ++i) jac.row(i) = detail::central_partial<K>(form, x, i, step).transpose();
  return jac - jac.transpose();
}

/// Index of the triple (i < j < k) in lexicographic order among all triples of {0..K-1}.
inline int triple_index(int K, int i, int j, int k) {
  int idx = 0;
  for (int a = 0; a < K; ++a)
    for (int b = a + 1; b < K; ++b)
      for (int c = b + 1; c < K; ++c) {
        if (a == i && b == j && c == k) return idx;
        ++idx;
      }
  return -1;
}

/// d of a 2-form given as an antisymmetric coefficient matrix omega(j, k).
/// Returns the 3-form coefficients (d omega)_{ijk}, i < j < k, in lexicographic order.
template <int K, typename F>
Eigen::VectorXd exterior_derivative_2form(F&& form, const Eigen::Matrix<double, K, 1>& x,
                                          double step = kDefaultStep) {
  detail::check_step(step);
  Eigen::Matrix<double, K, K> partial[K];
  for (int i = 0; i < K; ++i) partial[i] = detail::central_partial<K>(form, x, i, step);
  Eigen::VectorXd out(K * (K - 1) * (K - 2) / 6);
  int idx = 0;
  for (int i = 0; i < K; ++i)
    for (int j = i + 1; j < K; ++j)
      for (int k = j + 1; k < K; ++k)
        out[idx++] = partial[i](j, k) - partial[j](i, k) + partial[k](i, j);
  return out;
}

}  // namespace ghlab
