#include "ghlab/scalar_field.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "ghlab/differentiate.hpp"

namespace ghlab {

CenterConfig::CenterConfig(std::vector<double> centers, double scale)
    : centers_(std::move(centers)), scale_(scale) {
  if (centers_.empty()) throw DomainError("CenterConfig: at least one center is required");
  for (std::size_t j = 0; j < centers_.size(); ++j) {
    if (!std::isfinite(centers_[j])) throw DomainError("CenterConfig: centers must be finite");
    if (j > 0 && !(centers_[j] > centers_[j - 1]))
      throw DomainError("CenterConfig: centers must be strictly increasing (index " + std::to_string(j) + ")");
  }
  if (!(scale_ > 0.0) || !std::isfinite(scale_)) throw DomainError("CenterConfig: scale must be positive");
}

CenterConfig CenterConfig::shifted(double dz) const {
  std::vector<double> c = centers_;
  for (double& v : c) v += dz;
  return CenterConfig(std::move(c), scale_);
}

Radii radii(const CenterConfig& config, const RealPoint& p) {
  Radii out;
  const double rho2 = p.x() * p.x() + p.y() * p.y();
  out.rho = std::sqrt(rho2);
  out.r.reserve(config.size());
  for (double c : config.centers()) {
    const double dz = p.z() - c;
    const double r = std::sqrt(rho2 + dz * dz);
    if (r == 0.0) throw DomainError("radii: point coincides with a center");
    out.r.push_back(r);
  }
  return out;
}

double nearest_center_distance(const CenterConfig& config, const RealPoint& p) {
  double d = std::numeric_limits<double>::infinity();
  const double rho2 = p.x() * p.x() + p.y() * p.y();
  for (double c : config.centers()) d = std::min(d, std::sqrt(rho2 + (p.z() - c) * (p.z() - c)));
  return d;
}

double potential(const CenterConfig& config, const RealPoint& p) { return potential<double>(config, p); }

HarmonicCheck check_harmonic(const CenterConfig& config, const RealPoint& p, const Tolerances& tol) {
  const double dmin = nearest_center_distance(config, p);
  if (dmin == 0.0) throw DomainError("check_harmonic: point coincides with a center");
  const bool near = dmin < tol.proximity * config.scale();
  const double h = tol.harmonic_step_fraction * dmin;
  auto v = [&](const auto& q) { return potential(config, q); };
  auto grad = [&](const RealPoint& q) { return gradient<3>(v, q); };
  double lap = 0.0;
  for (int i = 0; i < 3; ++i) {
    RealPoint q = p;
    q[i] = p[i] + 2 * h;
    const double f2 = grad(q)[i];
    q[i] = p[i] + h;
    const double f1 = grad(q)[i];
    q[i] = p[i] - h;
    const double m1 = grad(q)[i];
    q[i] = p[i] - 2 * h;
    const double m2 = grad(q)[i];
    lap += (8.0 * (f1 - m1) - (f2 - m2)) / (12.0 * h);
  }
  return {std::abs(lap), near};
}

Eigen::Vector3d star_dV_center(const CenterConfig& config, int j, const RealPoint& p) {
  const Eigen::Vector3d d(p.x(), p.y(), p.z() - config[j]);
  const double r = d.norm();
  if (r == 0.0) throw DomainError("star_dV: point coincides with a center");
  return -0.5 * d / (r * r * r);
}

Eigen::Vector3d star_dV(const CenterConfig& config, const RealPoint& p) {
  Eigen::Vector3d out = Eigen::Vector3d::Zero();
  for (int j = 0; j < config.size(); ++j) out += star_dV_center(config, j, p);
  return out;
}

}  // namespace ghlab
