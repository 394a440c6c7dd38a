#pragma once

// The Gibbons-Hawking metric (1/V)(dphi + A)^2 + V (dx^2 + dy^2 + dz^2), its
// hyperkahler triple of complex structures and Kahler forms, and Ricci
// curvature by finite differences. All tensors are expressed in the
// coordinate frame (dphi, dx, dy, dz).

#include <Eigen/Core>
#include <Eigen/LU>
#include <array>
#include <cmath>

#include "ghlab/charts.hpp"
#include "ghlab/differentiate.hpp"
#include "ghlab/exterior.hpp"
#include "ghlab/scalar_field.hpp"

namespace ghlab {

template <typename S>
using Vec4 = Eigen::Matrix<S, 4, 1>;
template <typename S>
using Mat4 = Eigen::Matrix<S, 4, 4>;

struct FiberPoint {
  double phi = 0.0;
  RealPoint base = RealPoint::Zero();
  Chart chart = Chart::South;

  /// Coordinates (phi, x, y, z).
  Eigen::Vector4d coords() const { return {phi, base.x(), base.y(), base.z()}; }
};

/// Wrap an angle into [0, 2 pi).
double wrap_angle(double a);

enum class ComplexStructure { J1, J2, J3 };

const char* to_string(ComplexStructure j);

/// Metric at base point p; independent of phi.
template <typename S>
Mat4<S> metric_real(const CenterConfig& config, const Vec3<S>& p, Chart chart) {
  const S v = potential(config, p);
  const Vec3<S> a = connection_unchecked(config, chart, p);
  const Vec4<S> e(S(1.0), a.x(), a.y(), a.z());
  Mat4<S> g = (e * e.transpose()) / v;
  for (int i = 1; i < 4; ++i) g(i, i) += v;
  return g;
}

Eigen::Matrix4d metric_real(const CenterConfig& config, const FiberPoint& fp);

namespace detail {

template <typename S>
Mat4<S> wedge(const Vec4<S>& a, const Vec4<S>& b) {
  return a * b.transpose() - b * a.transpose();
}

}  // namespace detail

/// Kahler form of the chosen complex structure as an antisymmetric matrix
/// omega(i, j), the coefficient of dx^i ^ dx^j (with i < j counted once):
/// J1: (dphi + A) ^ dz + V dx ^ dy,
/// J2: (dphi + A) ^ dx + V dy ^ dz,
/// J3: (dphi + A) ^ dy + V dz ^ dx.
template <typename S>
Mat4<S> kahler_form(const CenterConfig& config, const Vec3<S>& p, Chart chart,
                    ComplexStructure label = ComplexStructure::J1) {
  const S v = potential(config, p);
  const Vec3<S> a = connection_unchecked(config, chart, p);
  const Vec4<S> e(S(1.0), a.x(), a.y(), a.z());
  auto unit = [](int k) {
    Vec4<S> u = Vec4<S>::Constant(S(0.0));
    u[k] = S(1.0);
    return u;
  };
  switch (label) {
    case ComplexStructure::J1:
      return detail::wedge<S>(e, unit(3)) + detail::wedge<S>(unit(1), unit(2)) * v;
    case ComplexStructure::J2:
      return detail::wedge<S>(e, unit(1)) + detail::wedge<S>(unit(2), unit(3)) * v;
    case ComplexStructure::J3:
      break;
  }
  return detail::wedge<S>(e, unit(2)) + detail::wedge<S>(unit(3), unit(1)) * v;
}

Eigen::Matrix4d kahler_form(const CenterConfig& config, const FiberPoint& fp,
                            ComplexStructure label = ComplexStructure::J1);

/// Matrix of J acting on tangent vectors (columns are images of d/dphi, d/dx, d/dy, d/dz).
/// Built on the orthonormal frame E0 = sqrt(V) d/dphi, E_i = (d/dx_i - A_i d/dphi) / sqrt(V):
/// J1 sends E0 -> E3, E1 -> E2; J2 sends E0 -> E1, E2 -> E3; J3 sends E0 -> E2, E3 -> E1.
Eigen::Matrix4d complex_structure(const CenterConfig& config, const FiberPoint& fp, ComplexStructure label);

/// Residual of d(omega) for the chosen Kahler form: the four 3-form coefficients.
Eigen::Vector4d kahler_form_differential(const CenterConfig& config, const FiberPoint& fp,
                                         ComplexStructure label, double step = kDefaultStep);

struct RicciResult {
  Eigen::Matrix4d ricci;
  double max_abs;
};

/// Ricci tensor of a metric field g(x) on R^4. `metric` must be generic in its
/// scalar: Vec4<S> -> Mat4<S>. First derivatives are exact (dual numbers);
/// second derivatives are fourth-order central differences of those with step h.
template <typename MetricFn>
RicciResult ricci_from_metric(MetricFn&& metric, const Eigen::Vector4d& x, double h) {
  if (!(h > 0.0)) throw DomainError("ricci: step must be positive");
  using D = Dual<double, 4>;
  // dg[c](a, b) = d_c g_ab
  auto first = [&](const Eigen::Vector4d& at, Eigen::Matrix4d& g0, std::array<Eigen::Matrix4d, 4>& dg) {
    const Mat4<D> gd = metric(detail::seed<4>(at));
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        if (!detail::finite(gd(a, b))) throw DomainError("ricci: metric not finite");
        g0(a, b) = gd(a, b).val;
        for (int c = 0; c < 4; ++c) dg[c](a, b) = gd(a, b).d[c];
      }
  };
  Eigen::Matrix4d g;
  std::array<Eigen::Matrix4d, 4> dg;
  first(x, g, dg);
  // d2g[e][c] = d_e d_c g
  std::array<std::array<Eigen::Matrix4d, 4>, 4> d2g;
  for (int e = 0; e < 4; ++e) {
    std::array<std::array<Eigen::Matrix4d, 4>, 4> samples;
    const double offs[4] = {2 * h, h, -h, -2 * h};
    for (int s = 0; s < 4; ++s) {
      Eigen::Vector4d p = x;
      p[e] += offs[s];
      Eigen::Matrix4d unused;
      first(p, unused, samples[s]);
    }
    for (int c = 0; c < 4; ++c)
      d2g[e][c] = (8.0 * (samples[1][c] - samples[2][c]) - (samples[0][c] - samples[3][c])) / (12.0 * h);
  }
  const Eigen::Matrix4d gi = g.inverse();
  std::array<Eigen::Matrix4d, 4> dgi;
  for (int e = 0; e < 4; ++e) dgi[e] = -gi * dg[e] * gi;

  // gam[a](b, c) = Gamma^a_bc ; dgam[e][a](b, c) = d_e Gamma^a_bc
  std::array<Eigen::Matrix4d, 4> gam;
  std::array<std::array<Eigen::Matrix4d, 4>, 4> dgam;
  for (int a = 0; a < 4; ++a) {
    gam[a].setZero();
    for (int e = 0; e < 4; ++e) dgam[e][a].setZero();
  }
  for (int b = 0; b < 4; ++b)
    for (int c = 0; c < 4; ++c)
      for (int d = 0; d < 4; ++d) {
        const double t = dg[b](d, c) + dg[c](d, b) - dg[d](b, c);
        for (int a = 0; a < 4; ++a) {
          gam[a](b, c) += 0.5 * gi(a, d) * t;
          for (int e = 0; e < 4; ++e) {
            const double dt = d2g[e][b](d, c) + d2g[e][c](d, b) - d2g[e][d](b, c);
            dgam[e][a](b, c) += 0.5 * (dgi[e](a, d) * t + gi(a, d) * dt);
          }
        }
      }
  Eigen::Matrix4d ric = Eigen::Matrix4d::Zero();
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double s = 0.0;
      for (int a = 0; a < 4; ++a) {
        s += dgam[a][a](b, d) - dgam[d][a](a, b);
        for (int e = 0; e < 4; ++e) s += gam[a](a, e) * gam[e](b, d) - gam[a](d, e) * gam[e](a, b);
      }
      ric(b, d) = s;
    }
  ric = 0.5 * (ric + ric.transpose()).eval();
  return {ric, ric.cwiseAbs().maxCoeff()};
}

/// Ricci tensor of the Gibbons-Hawking metric. Requires the point to keep a
/// margin of 10 * step from every center and from the chart's removed ray.
RicciResult ricci_numeric(const CenterConfig& config, const FiberPoint& fp, double step = 1e-4);

}  // namespace ghlab
