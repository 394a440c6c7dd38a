#pragma once

// Stereographic charts around each center and the monopole connection on the
// south chart U (the axis ray z >= c_1 removed) and the north chart
// (the axis ray z <= c_n removed).

#include <Eigen/Core>
#include <cmath>

#include "ghlab/dual.hpp"
#include "ghlab/errors.hpp"
#include "ghlab/scalar_field.hpp"
#include "ghlab/tolerances.hpp"

namespace ghlab {

enum class Chart { South, North };

const char* to_string(Chart c);

/// Distance from p to the ray removed by `chart`.
double removed_ray_distance(const CenterConfig& config, Chart chart, const RealPoint& p);

bool admissible(const CenterConfig& config, Chart chart, const RealPoint& p,
                double margin = kDefaultTolerances.chart_margin);

/// Throws ChartError when p is within `margin` of the removed ray.
void require_admissible(const CenterConfig& config, Chart chart, const RealPoint& p,
                        double margin = kDefaultTolerances.chart_margin);

struct StereoCoords {
  double u;
  double v;
  Chart chart;
};

/// Stereographic coordinates of the direction from center j to p.
/// South projects from the upward pole, North from the downward pole.
StereoCoords stereo(const CenterConfig& config, Chart chart, int j, const RealPoint& p);

/// Inverse of stereo: the point at distance r_j from center j in the direction encoded by s.
RealPoint stereo_inverse(const CenterConfig& config, int j, const StereoCoords& s, double r_j);

namespace detail {

// r - s with s = z - c_j, computed without cancellation when s > 0.
template <typename S>
S r_minus(const S& r, const S& s, const S& rho2) {
  return s > 0.0 ? rho2 / (r + s) : r - s;
}
// r + s, computed without cancellation when s < 0.
template <typename S>
S r_plus(const S& r, const S& s, const S& rho2) {
  return s < 0.0 ? rho2 / (r - s) : r + s;
}

}  // namespace detail

/// Connection term of center j as (dx, dy, dz) coefficients.
/// South: -1/2 (x dy - y dx) / (r_j (r_j - (z - c_j))).
/// North: +1/2 (x dy - y dx) / (r_j (r_j + (z - c_j))).
template <typename S>
Vec3<S> connection_term(const CenterConfig& config, Chart chart, int j, const Vec3<S>& p) {
  using std::sqrt;
  const S rho2 = p.x() * p.x() + p.y() * p.y();
  const S s = p.z() - config[j];
  const S r = sqrt(rho2 + s * s);
  S k;
  if (chart == Chart::South)
    k = -0.5 / (r * detail::r_minus(r, s, rho2));
  else
    k = 0.5 / (r * detail::r_plus(r, s, rho2));
  return Vec3<S>(-k * p.y(), k * p.x(), S(0.0));
}

/// The full connection form, summed over the centers, without admissibility checks.
template <typename S>
Vec3<S> connection_unchecked(const CenterConfig& config, Chart chart, const Vec3<S>& p) {
  Vec3<S> a(S(0.0), S(0.0), S(0.0));
  for (int j = 0; j < config.size(); ++j) a += connection_term(config, chart, j, p);
  return a;
}

template <typename S>
Vec3<S> connection(const CenterConfig& config, Chart chart, const Vec3<S>& p) {
  const RealPoint pv(value_of(p.x()), value_of(p.y()), value_of(p.z()));
  require_admissible(config, chart, pv);
  return connection_unchecked(config, chart, p);
}

Eigen::Vector3d connection(const CenterConfig& config, Chart chart, const RealPoint& p);

/// Principal argument of x + iy in (-pi, pi].
double angle(const RealPoint& p);

/// (north - south connection) evaluated on the angular field -y d/dx + x d/dy; equals n.
double gauge_difference(const CenterConfig& config, const RealPoint& p,
                        double margin = kDefaultTolerances.chart_margin);

}  // namespace ghlab
