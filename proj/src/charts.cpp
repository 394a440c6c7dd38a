#include "ghlab/charts.hpp"

#include <cmath>

namespace ghlab {

const char* to_string(Chart c) { return c == Chart::South ? "south" : "north"; }

double removed_ray_distance(const CenterConfig& config, Chart chart, const RealPoint& p) {
  const double rho = std::hypot(p.x(), p.y());
  if (chart == Chart::South) {
    const double c = config.front();
    return p.z() >= c ? rho : std::hypot(rho, p.z() - c);
  }
  const double c = config.back();
  return p.z() <= c ? rho : std::hypot(rho, p.z() - c);
}

bool admissible(const CenterConfig& config, Chart chart, const RealPoint& p, double margin) {
  return removed_ray_distance(config, chart, p) > margin;
}

void require_admissible(const CenterConfig& config, Chart chart, const RealPoint& p, double margin) {
  if (!admissible(config, chart, p, margin))
    throw ChartError(std::string("point lies on the ray removed by the ") + to_string(chart) + " chart");
}

StereoCoords stereo(const CenterConfig& config, Chart chart, int j, const RealPoint& p) {
  if (j < 0 || j >= config.size()) throw DomainError("stereo: center index out of range");
  require_admissible(config, chart, p);
  const double rho2 = p.x() * p.x() + p.y() * p.y();
  const double s = p.z() - config[j];
  const double r = std::sqrt(rho2 + s * s);
  if (r == 0.0) throw DomainError("stereo: point coincides with a center");
  const double den = chart == Chart::South ? detail::r_minus(r, s, rho2) : detail::r_plus(r, s, rho2);
  return {p.x() / den, p.y() / den, chart};
}

RealPoint stereo_inverse(const CenterConfig& config, int j, const StereoCoords& st, double r_j) {
  const double q = st.u * st.u + st.v * st.v;
  const double k = 2.0 / (1.0 + q);
  const double nz = st.chart == Chart::South ? (q - 1.0) / (q + 1.0) : (1.0 - q) / (1.0 + q);
  return {r_j * k * st.u, r_j * k * st.v, config[j] + r_j * nz};
}

Eigen::Vector3d connection(const CenterConfig& config, Chart chart, const RealPoint& p) {
  return connection<double>(config, chart, p);
}

double angle(const RealPoint& p) { return std::atan2(p.y(), p.x()); }

double gauge_difference(const CenterConfig& config, const RealPoint& p, double margin) {
  const double rho = std::hypot(p.x(), p.y());
  if (rho <= margin) throw ChartError("gauge_difference: point lies on the z-axis");
  const Eigen::Vector3d diff = connection(config, Chart::North, p) - connection(config, Chart::South, p);
  // The angular field -y d/dx + x d/dy has d(theta) = 1.
  return -p.y() * diff.x() + p.x() * diff.y();
}

}  // namespace ghlab
