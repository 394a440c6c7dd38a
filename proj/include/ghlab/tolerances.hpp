#pragma once

namespace ghlab {

/// Every numeric threshold used by the library and the verification suites.
struct Tolerances {
  /// Relative finite-difference step, scaled by (1 + |coordinate|).
  double fd_step = 1e-5;
  /// Finite-difference step for curvature.
  double ricci_step = 1e-4;
  /// Harmonicity check step, as a fraction of the distance to the nearest center.
  double harmonic_step_fraction = 3e-4;
  /// Distance to a center (relative to config scale) that raises the proximity flag.
  double proximity = 1e-6;
  /// Distance to a removed ray below which a point is rejected by a chart.
  double chart_margin = 1e-9;
  /// Shell test |q| <= shell for the imaginary phase parameter.
  double shell = 1e-12;
  /// Root finder tolerance on |f|, relative to the bracket scale.
  double root = 1e-15;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace ghlab
