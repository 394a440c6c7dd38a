#include "ghlab/metric.hpp"

#include <cmath>
#include <numbers>

namespace ghlab {

double wrap_angle(double a) {
  const double two_pi = 2 * std::numbers::pi;
  double w = std::fmod(a, two_pi);
  if (w < 0) w += two_pi;
  if (w >= two_pi) w -= two_pi;
  return w;
}

const char* to_string(ComplexStructure j) {
  switch (j) {
    case ComplexStructure::J1:
      return "J1";
    case ComplexStructure::J2:
      return "J2";
    case ComplexStructure::J3:
      break;
  }
  return "J3";
}

Eigen::Matrix4d metric_real(const CenterConfig& config, const FiberPoint& fp) {
  require_admissible(config, fp.chart, fp.base);
  return metric_real<double>(config, fp.base, fp.chart);
}

Eigen::Matrix4d kahler_form(const CenterConfig& config, const FiberPoint& fp, ComplexStructure label) {
  require_admissible(config, fp.chart, fp.base);
  return kahler_form<double>(config, fp.base, fp.chart, label);
}

Eigen::Matrix4d complex_structure(const CenterConfig& config, const FiberPoint& fp, ComplexStructure label) {
  require_admissible(config, fp.chart, fp.base);
  const double v = potential(config, fp.base);
  const Eigen::Vector3d a = connection_unchecked(config, fp.chart, Vec3<double>(fp.base));
  const double sv = std::sqrt(v);
  // Columns of frame are E0..E3 in the coordinate basis; coframe is its inverse.
  Eigen::Matrix4d frame = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d coframe = Eigen::Matrix4d::Zero();
  frame(0, 0) = sv;
  coframe(0, 0) = 1.0 / sv;
  for (int i = 1; i < 4; ++i) {
    frame(i, i) = 1.0 / sv;
    frame(0, i) = -a[i - 1] / sv;
    coframe(i, i) = sv;
    coframe(0, i) = a[i - 1] / sv;
  }
  Eigen::Matrix4d jf = Eigen::Matrix4d::Zero();
  auto rot = [&](int from, int to) {
    jf(to, from) = 1.0;
    jf(from, to) = -1.0;
  };
  switch (label) {
    case ComplexStructure::J1:
      rot(0, 3);
      rot(1, 2);
      break;
    case ComplexStructure::J2:
      rot(0, 1);
      rot(2, 3);
      break;
    case ComplexStructure::J3:
      rot(0, 2);
      rot(3, 1);
      break;
  }
  return frame * jf * coframe;
}

Eigen::Vector4d kahler_form_differential(const CenterConfig& config, const FiberPoint& fp,
                                         ComplexStructure label, double step) {
  require_admissible(config, fp.chart, fp.base);
  auto omega = [&](const Eigen::Vector4d& q) {
    const RealPoint b(q[1], q[2], q[3]);
    require_admissible(config, fp.chart, b);
    return kahler_form<double>(config, b, fp.chart, label);
  };
  return exterior_derivative_2form<4>(omega, fp.coords(), step);
}

RicciResult ricci_numeric(const CenterConfig& config, const FiberPoint& fp, double step) {
  const double margin = 10.0 * step;
  if (removed_ray_distance(config, fp.chart, fp.base) < margin || nearest_center_distance(config, fp.base) < margin)
    throw DomainError("ricci_numeric: point is within 10 steps of a singular locus");
  auto g = [&](const auto& q) {
    using S = typename std::decay_t<decltype(q)>::Scalar;
    return metric_real<S>(config, Vec3<S>(q[1], q[2], q[3]), fp.chart);
  };
  return ricci_from_metric(g, fp.coords(), step);
}

}  // namespace ghlab
