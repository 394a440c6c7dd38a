#pragma once

// Hessian complex coordinates z1 = prod_j (r_j - (z - c_j))^{1/2} e^{i phi},
// z2 = x + i y on the south chart, the n-patch atlas
// (alpha_1, beta_1) = (z2 / z1, z1), (alpha_{i+1}, beta_{i+1}) = (alpha_i^2 beta_i, 1 / alpha_i),
// and the metric in these coordinates.

#include <Eigen/Core>
#include <complex>
#include <optional>

#include "ghlab/cplx.hpp"
#include "ghlab/metric.hpp"
#include "ghlab/symplectic.hpp"

namespace ghlab {

using Complex = std::complex<double>;

struct GlobalComplex {
  Complex z1;
  Complex z2;
};

struct PatchPoint {
  int patch = 1;  // 1..n
  Complex alpha;
  Complex beta;
};

/// |z1|^2 = prod_j (r_j - (z - c_j)) at p.
template <typename S>
S z1_modulus_squared(const CenterConfig& config, const Vec3<S>& p) {
  using std::sqrt;
  const S rho2 = p.x() * p.x() + p.y() * p.y();
  S prod(1.0);
  for (double c : config.centers()) {
    const S s = p.z() - c;
    prod *= detail::r_minus(S(sqrt(rho2 + s * s)), s, rho2);
  }
  return prod;
}

/// (z1, z2) at coordinates q = (phi, x, y, z) of the south chart.
template <typename S>
std::pair<Cplx<S>, Cplx<S>> global_coords(const CenterConfig& config, const Vec4<S>& q) {
  using std::sqrt;
  const S m = sqrt(z1_modulus_squared(config, Vec3<S>(q[1], q[2], q[3])));
  return {Cplx<S>::polar(m, q[0]), Cplx<S>(q[1], q[2])};
}

/// (alpha_i, beta_i) = (z2^i / z1, z1 / z2^(i-1)) at coordinates q of the south chart.
template <typename S>
std::pair<Cplx<S>, Cplx<S>> patch_coords(const CenterConfig& config, const Vec4<S>& q, int patch) {
  const auto [z1, z2] = global_coords(config, q);
  return {ipow(z2, patch) / z1, z1 * ipow(z2, 1 - patch)};
}

/// South-chart fiber coordinate of fp (phi on the south chart, phi + n theta on the north chart).
double south_phi(const CenterConfig& config, const FiberPoint& fp);

GlobalComplex to_global(const CenterConfig& config, const FiberPoint& fp);

/// Single center at height c1 (default 0).
FiberPoint from_global_n1(Complex z1, Complex z2, double c1 = 0.0);

/// R = (|z1|^2 + |z2|^2)^2 + (c2 - c1)^2 |z1|^2 for two centers.
struct SqrtAux {
  double R;
};

SqrtAux sqrt_aux(const CenterConfig& config, Complex z1, Complex z2);

/// Two centers, closed form. Also reports V from its closed expression in (z1, z2).
struct TwoCenterInverse {
  FiberPoint point;
  double r1;
  double r2;
  double v;
};

TwoCenterInverse from_global_n2(const CenterConfig& config, Complex z1, Complex z2);

/// Any number of centers: closed forms for n <= 2, monotone root finding in z otherwise.
FiberPoint from_global(const CenterConfig& config, Complex z1, Complex z2);

/// Height z with prod_j (r_j - (z - c_j)) = m1sq at cylindrical radius^2 rho2.
double height_from_global_value(const CenterConfig& config, double m1sq, double rho2);

/// Same, refined by Newton steps in the scalar type so derivatives are exact.
template <typename S>
S height_from_global(const CenterConfig& config, const S& m1sq, const S& rho2) {
  using std::log;
  using std::sqrt;
  S z(height_from_global_value(config, value_of(m1sq), value_of(rho2)));
  const S target = log(m1sq);
  for (int it = 0; it < 3; ++it) {
    S g = -target;
    S inv_r(0.0);
    for (double c : config.centers()) {
      const S s = z - c;
      const S r = sqrt(rho2 + s * s);
      g += log(detail::r_minus(r, s, rho2));
      inv_r += 1.0 / r;
    }
    z = z + g / inv_r;
  }
  return z;
}

PatchPoint to_patch(const GlobalComplex& g, int patch, int n);
GlobalComplex from_patch(const PatchPoint& p);
/// alpha_{i+1} = alpha_i^2 beta_i, beta_{i+1} = 1 / alpha_i.
PatchPoint next_patch(const PatchPoint& p);

/// Which form of the (z1, z2) metric coefficients to assemble: the cross term of
/// the derivation (negative) or the sign printed in the theorem statement.
enum class ComplexVariant { Derived, PrintedStatement };

const char* to_string(ComplexVariant v);

/// Hermitian coefficients h with g(X, X) = sum_ab h_ab dw_a(X) conj(dw_b(X)),
/// w = (alpha_i, beta_i) of the requested patch.
Eigen::Matrix2cd metric_complex(const CenterConfig& config, const FiberPoint& fp, int patch,
                                ComplexVariant variant = ComplexVariant::Derived);

/// Same coefficients in the (dz1, dz2) frame.
Eigen::Matrix2cd metric_complex_global(const CenterConfig& config, const FiberPoint& fp,
                                       ComplexVariant variant = ComplexVariant::Derived);

/// Real 4x4 metric in coordinates (Re w1, Im w1, Re w2, Im w2) converted to Hermitian form.
Eigen::Matrix2cd hermitian_from_real(const Eigen::Matrix4d& g);

/// metric_real pushed to the patch frame through the Jacobian of (phi, x, y, z) -> (alpha, beta).
Eigen::Matrix2cd metric_real_in_patch_frame(const CenterConfig& config, const FiberPoint& fp, int patch);

/// psi-dual (constants (n, 2)) as a function of the patch coordinates.
template <typename S>
S kahler_potential_on_patch(const CenterConfig& config, const Cplx<S>& alpha, const Cplx<S>& beta, int patch) {
  using std::log;
  using std::sqrt;
  const Cplx<S> z1 = ipow(alpha, patch - 1) * ipow(beta, patch);
  const Cplx<S> z2 = alpha * beta;
  const S rho2 = norm(z2);
  const S z = height_from_global(config, norm(z1), rho2);
  const auto pot = HessianPotentials::legendre_matched(config);
  S out = pot.C1 * (-z);
  for (double c : config.centers()) {
    const S s = z - c;
    const S r = sqrt(rho2 + s * s);
    out -= c * log(detail::r_minus(r, s, rho2));
    out += 0.5 * pot.C2 * detail::r_plus(r, s, rho2);
  }
  return out;
}

/// d dbar of a real function u of (Re w1, Im w1, Re w2, Im w2) from its real Hessian.
Eigen::Matrix2cd ddbar_from_real_hessian(const Eigen::Matrix4d& h);

/// d dbar psi-dual at a patch point, by nested dual numbers.
Eigen::Matrix2cd ddbar_kahler_potential(const CenterConfig& config, const PatchPoint& p);

/// (e^{i t1}, e^{i t2}) acting on patch i:
/// alpha_i -> e^{i (i t2 - t1)} alpha_i, beta_i -> e^{i (t1 - (i - 1) t2)} beta_i.
PatchPoint torus_act(double t1, double t2, const PatchPoint& p);

enum class Axis { Alpha, Beta };

const char* to_string(Axis a);

struct BoundaryHit {
  double mu1;
  double mu2;
  std::optional<int> piece;   // boundary edge label L_k
  std::optional<int> vertex;  // set for the fixed point (sample = 0)
};

/// Moment image of the axis point of patch i (alpha = sample, beta = 0 for the
/// alpha-axis; alpha = 0, beta = sample for the beta-axis), obtained as the
/// limit rho -> 0, and the boundary edge containing it.
BoundaryHit boundary_map(const CenterConfig& config, int patch, Axis axis, Complex sample, double tol = 1e-8);

}  // namespace ghlab
