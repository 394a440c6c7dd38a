#pragma once

// Action-angle description of the torus action: moment map, moment polytope,
// metric in symplectic coordinates, the Hessian matrices G_ij / G^ij, the
// convex potential psi and its Legendre dual psi-dual.

#include <Eigen/Core>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ghlab/charts.hpp"
#include "ghlab/dual.hpp"
#include "ghlab/metric.hpp"
#include "ghlab/roots.hpp"
#include "ghlab/scalar_field.hpp"

namespace ghlab {

struct SymplecticPoint {
  double mu1 = 0.0;
  double mu2 = 0.0;
  double theta1 = 0.0;
  double theta2 = 0.0;
};

/// (mu1, mu2) = (-z, 1/2 sum_j (r_j + z - c_j)) at base point p.
template <typename S>
Eigen::Matrix<S, 2, 1> moment_components(const CenterConfig& config, const Vec3<S>& p) {
  using std::sqrt;
  const S rho2 = p.x() * p.x() + p.y() * p.y();
  S mu2(0.0);
  for (double c : config.centers()) {
    const S s = p.z() - c;
    mu2 += 0.5 * detail::r_plus(S(sqrt(rho2 + s * s)), s, rho2);
  }
  return {-p.z(), mu2};
}

/// Moment map with angles in the south-chart normalization (theta1 = phi on the
/// south chart, phi_north + n theta2 on the north chart).
SymplecticPoint moment_map(const CenterConfig& config, const FiberPoint& fp);

struct HalfPlane {
  // a * mu1 + b * mu2 + k >= 0
  double a;
  double b;
  double k;
  double eval(double mu1, double mu2) const { return a * mu1 + b * mu2 + k; }
};

/// A boundary edge L_label: a segment from `start` to `end`, or a ray from
/// `start` along `direction` when `end` is empty.
struct BoundaryPiece {
  int label;
  int halfplane;
  Eigen::Vector2d start;
  std::optional<Eigen::Vector2d> end;
  Eigen::Vector2d direction;
};

struct MomentPolytope {
  std::vector<HalfPlane> halfplanes;  // l_0 .. l_n
  std::vector<Eigen::Vector2d> vertices;  // v_1 .. v_n, v_m = l_{m-1} ∩ l_m
  std::vector<BoundaryPiece> pieces;  // L_1 .. L_{n+1}

  /// Minimum of the halfplane values; >= 0 inside.
  double min_slack(double mu1, double mu2) const;
  /// Label of the boundary piece containing (mu1, mu2) within tol, if any.
  std::optional<int> piece_containing(double mu1, double mu2, double tol) const;
  /// Index (1-based) of the vertex within tol of (mu1, mu2), if any.
  std::optional<int> vertex_at(double mu1, double mu2, double tol) const;
};

MomentPolytope build_polytope(const CenterConfig& config);

/// Minimum halfplane value of the moment polytope at (mu1, mu2).
double moment_slack(const CenterConfig& config, double mu1, double mu2);

/// rho^2 as a function of (mu1, mu2): closed forms for n <= 2, bracketed root
/// finding for n >= 3 followed by Newton steps carried out in the scalar type so
/// that dual-number derivatives are exact.
template <typename S>
S rho_squared(const CenterConfig& config, const S& mu1, const S& mu2) {
  using std::sqrt;
  const int n = config.size();
  const S z = -mu1;
  if (n == 1) return 4.0 * mu2 * (mu2 - (z - config[0]));
  if (n == 2) {
    const S s1 = z - config[0];
    const S s2 = z - config[1];
    const S den = 2.0 * mu2 - s1 - s2;
    return 4.0 * mu2 * (mu2 - s1) * (mu2 - s2) * (mu2 - s1 - s2) / (den * den);
  }
  const double zv = value_of(z);
  const double m2 = value_of(mu2);
  auto f = [&](double rho) {
    const double t = rho * rho;
    double sum = 0.0;
    for (double c : config.centers()) {
      const double s = zv - c;
      sum += detail::r_plus(std::sqrt(t + s * s), s, t);
    }
    return sum - 2.0 * m2;
  };
  double hi = 2.0 * m2 + 1.0;
  for (double c : config.centers()) hi += std::abs(zv - c);
  const double rho = solve_monotone(f, 0.0, hi, 0.0);
  S t(rho * rho);
  for (int it = 0; it < 3; ++it) {
    S fval = -2.0 * mu2;
    S fprime(0.0);
    for (double c : config.centers()) {
      const S s = z - c;
      const S r = sqrt(t + s * s);
      fval += detail::r_plus(r, s, t);
      fprime += 0.5 / r;
    }
    t = t - fval / fprime;
  }
  return t;
}

/// Point of the south chart with the given action-angle coordinates.
/// Throws DegenerateError unless (mu1, mu2) is strictly inside the polytope.
FiberPoint invert_moment(const CenterConfig& config, const SymplecticPoint& sp);

/// Which printed form of the symplectic-coordinate metric to assemble.
/// Derived: signs obtained from expanding the metric (cross terms +S/V in G_ij,
///   -rho^2 S/(4V) in G^ij).
/// PrintedStatement: cross-term signs of the proposition statement (both flipped).
/// PrintedMatrix: the matrix display with rho^2 inside the squared sum of G_11.
enum class SymplecticVariant { Derived, PrintedStatement, PrintedMatrix };

const char* to_string(SymplecticVariant v);

struct GMatrices {
  Eigen::Matrix2d G;     // G_ij
  Eigen::Matrix2d Ginv;  // G^ij, closed form
};

/// S_sum = sum_j 1 / (r_j (r_j - (z - c_j))) and V, rho^2 at p.
struct AxisSums {
  double v;
  double rho2;
  double s;
  /// sum_j (r_j + z - c_j) / r_j
  double p;
};

AxisSums axis_sums(const CenterConfig& config, const RealPoint& p);

/// Throws DegenerateError on the axis (rho = 0).
GMatrices g_matrices(const CenterConfig& config, const FiberPoint& fp,
                     SymplecticVariant variant = SymplecticVariant::Derived);

/// Metric in the frame (dmu1, dmu2, dtheta1, dtheta2): blockdiag(G/2, 2 G^-1).
Eigen::Matrix4d metric_symplectic(const CenterConfig& config, const SymplecticPoint& sp,
                                  SymplecticVariant variant = SymplecticVariant::Derived);

/// Jacobian of (phi, x, y, z) -> (mu1, mu2, theta1, theta2) on the south chart.
Eigen::Matrix4d symplectic_jacobian(const CenterConfig& config, const FiberPoint& fp);

/// metric_real transported to the symplectic frame through the coordinate Jacobian.
Eigen::Matrix4d metric_real_in_symplectic_frame(const CenterConfig& config, const FiberPoint& fp);

/// Constants C1, C2 of the linear terms C1 mu1 + C2 mu2 in psi and psi-dual.
struct HessianPotentials {
  CenterConfig config;
  double C1 = 0.0;
  double C2 = 0.0;

  /// Constants (n, 2), for which psi-dual equals the Legendre transform of psi
  /// (the transform is blind to the linear terms of psi).
  static HessianPotentials legendre_matched(const CenterConfig& config) {
    return {config, static_cast<double>(config.size()), 2.0};
  }
};

template <typename S>
S complex_potential(const HessianPotentials& pot, const S& mu1, const S& mu2) {
  using std::log;
  using std::sqrt;
  const S t = rho_squared(pot.config, mu1, mu2);
  const S z = -mu1;
  S psi(0.0);
  for (double c : pot.config.centers()) {
    const S s = z - c;
    const S r = sqrt(t + s * s);
    const S rp = detail::r_plus(r, s, t);
    const S rm = detail::r_minus(r, s, t);
    psi += 0.5 * (rp * log(rp) + rm * log(rm));
  }
  return psi + pot.C1 * mu1 + pot.C2 * mu2;
}

template <typename S>
S kahler_potential(const HessianPotentials& pot, const S& mu1, const S& mu2) {
  using std::log;
  using std::sqrt;
  const S t = rho_squared(pot.config, mu1, mu2);
  const S z = -mu1;
  S out(0.0);
  for (double c : pot.config.centers()) {
    const S s = z - c;
    out -= c * log(detail::r_minus(S(sqrt(t + s * s)), s, t));
  }
  return out + pot.C1 * mu1 + pot.C2 * mu2;
}

/// psi at an interior point. Throws DegenerateError on or outside the boundary.
double complex_potential(const HessianPotentials& pot, const SymplecticPoint& sp);
double kahler_potential(const HessianPotentials& pot, const SymplecticPoint& sp);

/// Exact gradient and Hessian of psi in (mu1, mu2).
Eigen::Vector2d complex_potential_gradient(const HessianPotentials& pot, const SymplecticPoint& sp);
Eigen::Matrix2d complex_potential_hessian(const HessianPotentials& pot, const SymplecticPoint& sp);

/// mu . grad(psi) - psi.
double legendre_transform(const HessianPotentials& pot, const SymplecticPoint& sp);

/// Canonical coordinates on a resolved cone: y_1..y_n >= 0 with sum y >= b.
struct CanonicalConeCoords {
  std::vector<double> y;
  double b = 0.0;
};

struct ConeValue {
  double value;
  /// |imaginary part| of the root-of-unity sum (zero in exact arithmetic).
  double imag_residue;
};

/// sum_i y_i (ln y_i - 1) - y (ln y - 1) + 1/n sum_j (y - b xi^j)(log(y - b xi^j) - 1),
/// with y = sum_i y_i and xi = exp(2 pi i / n); the additive constant is zero.
ConeValue resolved_cone_potential(const CanonicalConeCoords& yc);

/// Real part of the resolved cone potential, generic in its scalar for Hessians.
template <typename S>
S resolved_cone_potential_real(const std::vector<S>& y, double b) {
  using std::atan2;
  using std::log;
  const int n = static_cast<int>(y.size());
  S sum(0.0);
  S total(0.0);
  for (const S& yi : y) {
    sum += yi * (log(yi) - 1.0);
    total += yi;
  }
  sum -= total * (log(total) - 1.0);
  S roots(0.0);
  for (int j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * j / n;
    const S p = total - b * std::cos(th);
    const double q = -b * std::sin(th);
    const S lm = 0.5 * log(p * p + q * q) - 1.0;
    const S arg = atan2(S(q), p);
    roots += p * lm - q * arg;
  }
  return sum + roots / static_cast<double>(n);
}

/// Two-center cone potential in canonical coordinates:
/// y1 log y1 + y2 log y2 - y log y + 1/2 (y - b) log(y - b) + 1/2 (y + b) log(y + b).
template <typename S>
S eguchi_hanson_cone_potential(const S& y1, const S& y2, double b) {
  using std::log;
  const S y = y1 + y2;
  return y1 * log(y1) + y2 * log(y2) - y * log(y) + 0.5 * (y - b) * log(y - b) + 0.5 * (y + b) * log(y + b);
}

}  // namespace ghlab
