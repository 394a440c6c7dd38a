#pragma once

// Multi-center harmonic potential V = 1/2 sum_j 1/r_j on R^3 with centers on
// the z-axis, and its first-order companions.

#include <Eigen/Core>
#include <cmath>
#include <vector>

#include "ghlab/errors.hpp"
#include "ghlab/tolerances.hpp"

namespace ghlab {

using RealPoint = Eigen::Vector3d;

template <typename S>
using Vec3 = Eigen::Matrix<S, 3, 1>;

/// Heights c_1 < ... < c_n of the monopole centers (0, 0, c_j).
class CenterConfig {
 public:
  explicit CenterConfig(std::vector<double> centers, double scale = 1.0);

  int size() const { return static_cast<int>(centers_.size()); }
  double operator[](int j) const { return centers_[j]; }
  const std::vector<double>& centers() const { return centers_; }
  double front() const { return centers_.front(); }
  double back() const { return centers_.back(); }
  /// Length scale used only for step-size heuristics and proximity flags.
  double scale() const { return scale_; }
  CenterConfig shifted(double dz) const;

 private:
  std::vector<double> centers_;
  double scale_;
};

struct Radii {
  std::vector<double> r;
  double rho;
};

Radii radii(const CenterConfig& config, const RealPoint& p);

/// Distance from p to the nearest center.
double nearest_center_distance(const CenterConfig& config, const RealPoint& p);

template <typename S>
S potential(const CenterConfig& config, const Vec3<S>& p) {
  using std::sqrt;
  const S rho2 = p.x() * p.x() + p.y() * p.y();
  S v(0.0);
  for (double c : config.centers()) {
    const S dz = p.z() - c;
    const S r2 = rho2 + dz * dz;
    if (r2 == 0.0) throw DomainError("potential: point coincides with a center");
    v += 0.5 / sqrt(r2);
  }
  return v;
}

double potential(const CenterConfig& config, const RealPoint& p);

struct HarmonicCheck {
  double residual;
  /// Set when the point lies within tolerances.proximity * scale of a center.
  bool near_center;
};

/// |Laplacian V| by fourth-order central differences of exact gradients.
HarmonicCheck check_harmonic(const CenterConfig& config, const RealPoint& p,
                             const Tolerances& tol = kDefaultTolerances);

/// Hodge star of dV as coefficients of (dy^dz, dz^dx, dx^dy).
Eigen::Vector3d star_dV(const CenterConfig& config, const RealPoint& p);

/// The contribution of the single center j to star_dV, i.e. *d(1/(2 r_j)).
Eigen::Vector3d star_dV_center(const CenterConfig& config, int j, const RealPoint& p);

}  // namespace ghlab
