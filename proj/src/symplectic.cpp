#include "ghlab/symplectic.hpp"

#include <Eigen/LU>
#include <complex>
#include <limits>
#include <numbers>

#include "ghlab/differentiate.hpp"

namespace ghlab {

SymplecticPoint moment_map(const CenterConfig& config, const FiberPoint& fp) {
  require_admissible(config, fp.chart, fp.base);
  const Eigen::Vector2d mu = moment_components<double>(config, fp.base);
  const double theta2 = angle(fp.base);
  double theta1 = fp.phi;
  if (fp.chart == Chart::North) theta1 += config.size() * theta2;
  return {mu[0], mu[1], wrap_angle(theta1), theta2};
}

double moment_slack(const CenterConfig& config, double mu1, double mu2) {
  double slack = mu2;
  double csum = 0.0;
  for (int m = 1; m <= config.size(); ++m) {
    csum += config[m - 1];
    slack = std::min(slack, m * mu1 + mu2 + csum);
  }
  return slack;
}

MomentPolytope build_polytope(const CenterConfig& config) {
  const int n = config.size();
  MomentPolytope poly;
  poly.halfplanes.push_back({0.0, 1.0, 0.0});
  double csum = 0.0;
  for (int m = 1; m <= n; ++m) {
    csum += config[m - 1];
    poly.halfplanes.push_back({static_cast<double>(m), 1.0, csum});
  }
  // v_m solves l_{m-1} = l_m = 0: subtracting gives mu1 = -c_m.
  for (int m = 1; m <= n; ++m) {
    const HalfPlane& l = poly.halfplanes[m];
    // + 0.0 turns -0.0 into 0.0 for the emitters.
    const double mu1 = -config[m - 1] + 0.0;
    poly.vertices.emplace_back(mu1, -(l.a * mu1 + l.k) + 0.0);
  }
  poly.pieces.push_back({1, 0, poly.vertices.front(), std::nullopt, Eigen::Vector2d(1.0, 0.0)});
  for (int k = 2; k <= n; ++k) {
    const Eigen::Vector2d a = poly.vertices[k - 2];
    const Eigen::Vector2d b = poly.vertices[k - 1];
    poly.pieces.push_back({k, k - 1, a, b, (b - a).normalized()});
  }
  poly.pieces.push_back(
      {n + 1, n, poly.vertices.back(), std::nullopt, Eigen::Vector2d(-1.0, static_cast<double>(n)).normalized()});
  return poly;
}

double MomentPolytope::min_slack(double mu1, double mu2) const {
  double s = std::numeric_limits<double>::infinity();
  for (const HalfPlane& h : halfplanes) s = std::min(s, h.eval(mu1, mu2));
  return s;
}

std::optional<int> MomentPolytope::piece_containing(double mu1, double mu2, double tol) const {
  const Eigen::Vector2d q(mu1, mu2);
  for (const BoundaryPiece& piece : pieces) {
    const HalfPlane& h = halfplanes[piece.halfplane];
    if (std::abs(h.eval(mu1, mu2)) / std::hypot(h.a, h.b) > tol) continue;
    const double t = (q - piece.start).dot(piece.direction);
    if (t < -tol) continue;
    if (piece.end && t > (*piece.end - piece.start).norm() + tol) continue;
    return piece.label;
  }
  return std::nullopt;
}

std::optional<int> MomentPolytope::vertex_at(double mu1, double mu2, double tol) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if ((vertices[i] - Eigen::Vector2d(mu1, mu2)).norm() <= tol) return static_cast<int>(i) + 1;
  return std::nullopt;
}

FiberPoint invert_moment(const CenterConfig& config, const SymplecticPoint& sp) {
  if (!(moment_slack(config, sp.mu1, sp.mu2) > 0.0))
    throw DegenerateError("invert_moment: (mu1, mu2) is not strictly inside the moment polytope");
  const double t = rho_squared(config, sp.mu1, sp.mu2);
  const double rho = std::sqrt(std::max(t, 0.0));
  FiberPoint fp;
  fp.phi = wrap_angle(sp.theta1);
  fp.base = RealPoint(rho * std::cos(sp.theta2), rho * std::sin(sp.theta2), -sp.mu1);
  fp.chart = Chart::South;
  return fp;
}

const char* to_string(SymplecticVariant v) {
  switch (v) {
    case SymplecticVariant::Derived:
      return "derived";
    case SymplecticVariant::PrintedStatement:
      return "printed-statement";
    case SymplecticVariant::PrintedMatrix:
      break;
  }
  return "printed-matrix";
}

AxisSums axis_sums(const CenterConfig& config, const RealPoint& p) {
  AxisSums out{0.0, p.x() * p.x() + p.y() * p.y(), 0.0, 0.0};
  for (double c : config.centers()) {
    const double s = p.z() - c;
    const double r = std::sqrt(out.rho2 + s * s);
    if (r == 0.0) throw DomainError("axis_sums: point coincides with a center");
    out.v += 0.5 / r;
    out.s += 1.0 / (r * detail::r_minus(r, s, out.rho2));
    out.p += detail::r_plus(r, s, out.rho2) / r;
  }
  return out;
}

GMatrices g_matrices(const CenterConfig& config, const FiberPoint& fp, SymplecticVariant variant) {
  require_admissible(config, fp.chart, fp.base);
  const AxisSums a = axis_sums(config, fp.base);
  if (!(a.rho2 > 0.0)) throw DegenerateError("g_matrices: point on the axis, the Hessian matrices degenerate");
  const double v = a.v;
  const double p = a.rho2 * a.s;
  double sign = 1.0;
  double g11 = 2 * v + a.rho2 * a.s * a.s / (2 * v);
  if (variant == SymplecticVariant::PrintedStatement) sign = -1.0;
  if (variant == SymplecticVariant::PrintedMatrix) g11 = 2 * v + a.rho2 * p * p / (2 * v);
  GMatrices out;
  out.G << g11, sign * a.s / v, sign * a.s / v, 2.0 / (v * a.rho2);
  out.Ginv << 1.0 / (2 * v), -sign * p / (4 * v), -sign * p / (4 * v), v * a.rho2 / 2 + p * p / (8 * v);
  return out;
}

Eigen::Matrix4d metric_symplectic(const CenterConfig& config, const SymplecticPoint& sp, SymplecticVariant variant) {
  const GMatrices gm = g_matrices(config, invert_moment(config, sp), variant);
  Eigen::Matrix4d g = Eigen::Matrix4d::Zero();
  g.topLeftCorner<2, 2>() = 0.5 * gm.G;
  g.bottomRightCorner<2, 2>() = 2.0 * gm.Ginv;
  return g;
}

Eigen::Matrix4d symplectic_jacobian(const CenterConfig& config, const FiberPoint& fp) {
  require_admissible(config, fp.chart, fp.base);
  auto forward = [&](const auto& q) {
    using S = typename std::decay_t<decltype(q)>::Scalar;
    using std::atan2;
    const Eigen::Matrix<S, 2, 1> mu = moment_components<S>(config, Vec3<S>(q[1], q[2], q[3]));
    S theta1 = q[0];
    const S theta2 = atan2(q[2], q[1]);
    if (fp.chart == Chart::North) theta1 = theta1 + static_cast<double>(config.size()) * theta2;
    return Eigen::Matrix<S, 4, 1>(mu[0], mu[1], theta1, theta2);
  };
  return jacobian<4, 4>(forward, fp.coords());
}

Eigen::Matrix4d metric_real_in_symplectic_frame(const CenterConfig& config, const FiberPoint& fp) {
  const Eigen::Matrix4d jinv = symplectic_jacobian(config, fp).inverse();
  return jinv.transpose() * metric_real(config, fp) * jinv;
}

namespace {

void require_interior(const HessianPotentials& pot, const SymplecticPoint& sp) {
  if (!(moment_slack(pot.config, sp.mu1, sp.mu2) > 0.0))
    throw DegenerateError("potential: (mu1, mu2) is not strictly inside the moment polytope");
}

}  // namespace

double complex_potential(const HessianPotentials& pot, const SymplecticPoint& sp) {
  require_interior(pot, sp);
  return complex_potential<double>(pot, sp.mu1, sp.mu2);
}

double kahler_potential(const HessianPotentials& pot, const SymplecticPoint& sp) {
  require_interior(pot, sp);
  return kahler_potential<double>(pot, sp.mu1, sp.mu2);
}

Eigen::Vector2d complex_potential_gradient(const HessianPotentials& pot, const SymplecticPoint& sp) {
  require_interior(pot, sp);
  auto f = [&](const auto& m) { return complex_potential(pot, m[0], m[1]); };
  return gradient<2>(f, Eigen::Vector2d(sp.mu1, sp.mu2));
}

Eigen::Matrix2d complex_potential_hessian(const HessianPotentials& pot, const SymplecticPoint& sp) {
  require_interior(pot, sp);
  auto f = [&](const auto& m) { return complex_potential(pot, m[0], m[1]); };
  return hessian<2>(f, Eigen::Vector2d(sp.mu1, sp.mu2));
}

double legendre_transform(const HessianPotentials& pot, const SymplecticPoint& sp) {
  require_interior(pot, sp);
  auto f = [&](const auto& m) { return complex_potential(pot, m[0], m[1]); };
  const auto [psi, grad] = value_and_gradient<2>(f, Eigen::Vector2d(sp.mu1, sp.mu2));
  return sp.mu1 * grad[0] + sp.mu2 * grad[1] - psi;
}

ConeValue resolved_cone_potential(const CanonicalConeCoords& yc) {
  const int n = static_cast<int>(yc.y.size());
  if (n < 2) throw DomainError("resolved_cone_potential: need at least two coordinates");
  double total = 0.0;
  for (double v : yc.y) {
    if (!(v > 0.0)) throw DegenerateError("resolved_cone_potential: coordinates must be positive");
    total += v;
  }
  if (!(total > yc.b)) throw DegenerateError("resolved_cone_potential: sum of coordinates must exceed b");
  double imag = 0.0;
  for (int j = 0; j < n; ++j) {
    const std::complex<double> w = total - yc.b * std::polar(1.0, 2.0 * std::numbers::pi * j / n);
    imag += (w * (std::log(w) - 1.0)).imag();
  }
  return {resolved_cone_potential_real<double>(yc.y, yc.b), std::abs(imag / n)};
}

}  // namespace ghlab
