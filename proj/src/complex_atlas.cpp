#include "ghlab/complex_atlas.hpp"

#include <Eigen/LU>
#include <cmath>
#include <limits>
#include <string>

#include "ghlab/differentiate.hpp"
#include "ghlab/roots.hpp"

namespace ghlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_patch(int patch, int n) {
  if (patch < 1 || patch > n)
    throw DomainError("patch index " + std::to_string(patch) + " outside 1.." + std::to_string(n));
}

Complex ipow(Complex a, int k) {
  if (k == 0) return 1.0;
  return to_std(ghlab::ipow(from_std(a), k));
}

}  // namespace

double south_phi(const CenterConfig& config, const FiberPoint& fp) {
  require_admissible(config, fp.chart, fp.base);
  if (fp.chart == Chart::South) return fp.phi;
  return wrap_angle(fp.phi + config.size() * angle(fp.base));
}

GlobalComplex to_global(const CenterConfig& config, const FiberPoint& fp) {
  const double phi = south_phi(config, fp);
  const double m = std::sqrt(z1_modulus_squared<double>(config, fp.base));
  return {std::polar(m, phi), Complex(fp.base.x(), fp.base.y())};
}

FiberPoint from_global_n1(Complex z1, Complex z2, double c1) {
  const double a = std::norm(z1);
  if (!(a > 0.0)) throw ChartError("from_global_n1: z1 = 0 lies on the removed ray");
  const double s = 0.5 * (std::norm(z2) / a - a);
  return {wrap_angle(std::arg(z1)), RealPoint(z2.real(), z2.imag(), c1 + s), Chart::South};
}

SqrtAux sqrt_aux(const CenterConfig& config, Complex z1, Complex z2) {
  if (config.size() != 2) throw DomainError("sqrt_aux: requires exactly two centers");
  const double a = std::norm(z1);
  const double b = std::norm(z2);
  const double c = config[1] - config[0];
  return {(a + b) * (a + b) + c * c * a};
}

TwoCenterInverse from_global_n2(const CenterConfig& config, Complex z1, Complex z2) {
  const double R = sqrt_aux(config, z1, z2).R;
  const double a = std::norm(z1);
  const double b = std::norm(z2);
  if (!(a > 0.0)) throw ChartError("from_global_n2: z1 = 0 lies on the removed ray");
  const double m = std::sqrt(a);
  const double c = config[1] - config[0];
  const double sq = std::sqrt(R);
  const double ratio = (a - b) / (2 * (a + b));
  const double s1 = 0.5 * c - ratio * sq / m;
  TwoCenterInverse out;
  out.point = {wrap_angle(std::arg(z1)), RealPoint(z2.real(), z2.imag(), config[0] + s1), Chart::South};
  out.r1 = -c * ratio + sq / (2 * m);
  out.r2 = c * ratio + sq / (2 * m);
  const double ab2 = (a + b) * (a + b);
  out.v = 2 * m * ab2 * sq / (ab2 * ab2 + 4 * a * a * b * c * c);
  return out;
}

double height_from_global_value(const CenterConfig& config, double m1sq, double rho2) {
  if (!(m1sq > 0.0)) throw ChartError("height_from_global: z1 = 0 lies on the removed ray");
  if (config.size() == 1) return config[0] + 0.5 * (rho2 / m1sq - m1sq);
  const double target = std::log(m1sq);
  auto g = [&](double z) {
    double sum = -target;
    for (double c : config.centers()) {
      const double s = z - c;
      sum += std::log(detail::r_minus(std::sqrt(rho2 + s * s), s, rho2));
    }
    return sum;
  };
  // On the axis only z < c_1 is reachable with z1 != 0.
  const double hi = rho2 > 0.0 ? kInf : config.front();
  return solve_decreasing(g, -kInf, hi);
}

FiberPoint from_global(const CenterConfig& config, Complex z1, Complex z2) {
  if (config.size() == 1) return from_global_n1(z1, z2, config[0]);
  if (config.size() == 2) return from_global_n2(config, z1, z2).point;
  const double z = height_from_global_value(config, std::norm(z1), std::norm(z2));
  return {wrap_angle(std::arg(z1)), RealPoint(z2.real(), z2.imag(), z), Chart::South};
}

PatchPoint to_patch(const GlobalComplex& g, int patch, int n) {
  require_patch(patch, n);
  if (g.z1 == 0.0) throw DegenerateError("to_patch: z1 = 0, patch 1 is undefined");
  PatchPoint p{1, g.z2 / g.z1, g.z1};
  while (p.patch < patch) {
    if (p.alpha == 0.0)
      throw DegenerateError("to_patch: transition " + std::to_string(p.patch) + " -> " +
                            std::to_string(p.patch + 1) + " singular (alpha = 0)");
    p = next_patch(p);
  }
  return p;
}

GlobalComplex from_patch(const PatchPoint& p) {
  if (p.patch < 1) throw DomainError("from_patch: patch index must be positive");
  return {ipow(p.alpha, p.patch - 1) * ipow(p.beta, p.patch), p.alpha * p.beta};
}

PatchPoint next_patch(const PatchPoint& p) {
  if (p.alpha == 0.0) throw DegenerateError("next_patch: alpha = 0");
  return {p.patch + 1, p.alpha * p.alpha * p.beta, 1.0 / p.alpha};
}

const char* to_string(ComplexVariant v) {
  return v == ComplexVariant::Derived ? "derived" : "printed-statement";
}

Eigen::Matrix2cd metric_complex_global(const CenterConfig& config, const FiberPoint& fp, ComplexVariant variant) {
  const GlobalComplex g = to_global(config, fp);
  if (g.z1 == 0.0) throw DegenerateError("metric_complex: z1 = 0");
  const AxisSums a = axis_sums(config, fp.base);
  const double sign = variant == ComplexVariant::Derived ? -1.0 : 1.0;
  const Complex cross = sign * a.s * g.z2 / (2 * a.v * g.z1);
  Eigen::Matrix2cd h;
  h << 1.0 / (a.v * std::norm(g.z1)), cross, std::conj(cross), a.v + a.rho2 * a.s * a.s / (4 * a.v);
  return h;
}

Eigen::Matrix2cd metric_complex(const CenterConfig& config, const FiberPoint& fp, int patch, ComplexVariant variant) {
  require_patch(patch, config.size());
  const PatchPoint w = to_patch(to_global(config, fp), patch, config.size());
  const Complex al = w.alpha;
  const Complex be = w.beta;
  // dz = K dw with z1 = alpha^(i-1) beta^i, z2 = alpha beta.
  Eigen::Matrix2cd K;
  const Complex k11 = patch == 1 ? Complex(0.0) : double(patch - 1) * ipow(al, patch - 2) * ipow(be, patch);
  K << k11, double(patch) * ipow(al, patch - 1) * ipow(be, patch - 1), be, al;
  return K.transpose() * metric_complex_global(config, fp, variant) * K.conjugate();
}

Eigen::Matrix2cd hermitian_from_real(const Eigen::Matrix4d& g) {
  Eigen::Matrix2cd h;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const int xa = 2 * a, ya = 2 * a + 1, xb = 2 * b, yb = 2 * b + 1;
      h(a, b) = 0.5 * Complex(g(xa, xb) + g(ya, yb), g(xa, yb) - g(ya, xb));
    }
  return h;
}

Eigen::Matrix2cd metric_real_in_patch_frame(const CenterConfig& config, const FiberPoint& fp, int patch) {
  require_patch(patch, config.size());
  FiberPoint south = fp;
  south.phi = south_phi(config, fp);
  south.chart = Chart::South;
  auto forward = [&](const auto& q) {
    using S = typename std::decay_t<decltype(q)>::Scalar;
    const auto [al, be] = patch_coords<S>(config, Vec4<S>(q), patch);
    return Eigen::Matrix<S, 4, 1>(al.re, al.im, be.re, be.im);
  };
  const Eigen::Matrix4d jinv = jacobian<4, 4>(forward, south.coords()).inverse();
  return hermitian_from_real(jinv.transpose() * metric_real(config, south) * jinv);
}

Eigen::Matrix2cd ddbar_from_real_hessian(const Eigen::Matrix4d& h) {
  // Mixed partials from nested duals differ in the last bits; use the symmetric part.
  return 0.5 * hermitian_from_real(0.5 * (h + h.transpose()));
}

Eigen::Matrix2cd ddbar_kahler_potential(const CenterConfig& config, const PatchPoint& p) {
  require_patch(p.patch, config.size());
  auto f = [&](const auto& v) {
    using S = typename std::decay_t<decltype(v)>::Scalar;
    return kahler_potential_on_patch<S>(config, Cplx<S>(v[0], v[1]), Cplx<S>(v[2], v[3]), p.patch);
  };
  const Eigen::Vector4d x(p.alpha.real(), p.alpha.imag(), p.beta.real(), p.beta.imag());
  return ddbar_from_real_hessian(hessian<4>(f, x));
}

PatchPoint torus_act(double t1, double t2, const PatchPoint& p) {
  const int i = p.patch;
  return {i, p.alpha * std::polar(1.0, i * t2 - t1), p.beta * std::polar(1.0, t1 - (i - 1) * t2)};
}

const char* to_string(Axis a) { return a == Axis::Alpha ? "alpha" : "beta"; }

BoundaryHit boundary_map(const CenterConfig& config, int patch, Axis axis, Complex sample, double tol) {
  const int n = config.size();
  require_patch(patch, n);
  if (sample == 0.0) {
    // Fixed point of the torus action: z = c_i on the axis.
    const double z = config[patch - 1];
    double mu2 = 0.0;
    for (int j = 0; j < patch - 1; ++j) mu2 += z - config[j];
    return {-z, mu2, std::nullopt, patch};
  }
  // Near the axis with c_k < z < c_{k+1}: |z1|^2 ~ rho^(2k) F_k(z), and the
  // patch coordinates stay finite and nonzero only for k = i (alpha-axis) or
  // k = i - 1 (beta-axis), with |alpha_i|^2 = 1 / F_i or |beta_i|^2 = F_{i-1}.
  const int k = axis == Axis::Alpha ? patch : patch - 1;
  const double target = axis == Axis::Alpha ? -std::log(std::norm(sample)) : std::log(std::norm(sample));
  auto log_f = [&](double z) {
    double out = -target;
    for (int j = 0; j < n; ++j) {
      if (j < k)
        out -= std::log(2 * (z - config[j]));
      else
        out += std::log(2 * (config[j] - z));
    }
    return out;
  };
  const double lo = k == 0 ? -kInf : config[k - 1];
  const double hi = k == n ? kInf : config[k];
  const double z = solve_decreasing(log_f, lo, hi);
  double mu2 = 0.0;
  for (int j = 0; j < k; ++j) mu2 += z - config[j];
  const MomentPolytope poly = build_polytope(config);
  return {-z, mu2, poly.piece_containing(-z, mu2, tol), std::nullopt};
}

}  // namespace ghlab
