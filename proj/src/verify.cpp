#include "ghlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <limits>
#include <numbers>

#include "ghlab/complex_atlas.hpp"
#include "ghlab/differentiate.hpp"
#include "ghlab/exterior.hpp"
#include "ghlab/metric.hpp"
#include "ghlab/phase.hpp"
#include "ghlab/symplectic.hpp"

namespace ghlab {

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::mt19937_64 split_stream(std::uint64_t seed, std::string_view name) {
  const std::uint64_t k = fnv1a(name);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(k >> 32)};
  return std::mt19937_64(seq);
}

namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
 public:
  Sampler(const RunConfig& rc, std::mt19937_64 rng) : rc_(rc), rng_(std::move(rng)) {}

  // Bit-level conversion keeps streams identical across standard libraries.
  double uniform(double a, double b) { return a + (b - a) * static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double angle() { return uniform(0.0, 2 * kPi); }

  // Base point in a box around the centers, at least `center_gap` from every
  // center and `axis_gap` from the z-axis.
  RealPoint base(double center_gap, double axis_gap) {
    const CenterConfig& cfg = rc_.centers;
    const double L = std::max(1.0, cfg.scale());
    for (;;) {
      RealPoint p(uniform(-2 * L, 2 * L), uniform(-2 * L, 2 * L), uniform(cfg.front() - 2 * L, cfg.back() + 2 * L));
      if (std::hypot(p.x(), p.y()) < axis_gap) continue;
      if (nearest_center_distance(cfg, p) < center_gap) continue;
      return p;
    }
  }

  FiberPoint fiber(double center_gap, double axis_gap, Chart chart = Chart::South) {
    const RealPoint p = base(center_gap, axis_gap);
    return {angle(), p, chart};
  }

  Complex polar(double rmin, double rmax) { return std::polar(uniform(rmin, rmax), angle()); }

 private:
  const RunConfig& rc_;
  std::mt19937_64 rng_;
};

struct Acc {
  int points = 0;
  double max = 0.0;

  void add(double r) {
    ++points;
    if (std::isnan(r))
      max = std::numeric_limits<double>::infinity();
    else
      max = std::max(max, r);
  }
};

struct Outcome {
  Acc acc;
  std::string note;
};

template <typename A, typename B>
double rel_diff(const A& a, const B& b) {
  return (a - b).cwiseAbs().maxCoeff() / std::max(1.0, b.cwiseAbs().maxCoeff());
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double angular_gap(double a, double b) {
  const double d = wrap_angle(a - b);
  return std::min(d, 2 * kPi - d);
}

HessianPotentials potentials(const RunConfig& rc) {
  HessianPotentials pot = HessianPotentials::legendre_matched(rc.centers);
  if (rc.C1) pot.C1 = *rc.C1;
  if (rc.C2) pot.C2 = *rc.C2;
  return pot;
}

// ---- harmonic ----

Outcome harmonic_laplacian(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 100; ++k) o.acc.add(check_harmonic(rc.centers, s.base(0.2, 0.0), rc.tolerances).residual);
  return o;
}

// ---- connection ----

Outcome monopole(const RunConfig& rc, Sampler& s, Chart chart) {
  Outcome o;
  for (int k = 0; k < 100; ++k) {
    const RealPoint p = s.base(0.2, 0.1);
    auto form = [&](const RealPoint& q) { return connection(rc.centers, chart, q); };
    const Eigen::Matrix3d F = exterior_derivative_1form<3>(form, p, rc.tolerances.fd_step);
    const Eigen::Vector3d dv = star_dV(rc.centers, p);
    o.acc.add(Eigen::Vector3d(F(1, 2) + dv.x(), F(2, 0) + dv.y(), F(0, 1) + dv.z()).cwiseAbs().maxCoeff());
  }
  return o;
}

Outcome monopole_south(const RunConfig& rc, Sampler& s) { return monopole(rc, s, Chart::South); }
Outcome monopole_north(const RunConfig& rc, Sampler& s) { return monopole(rc, s, Chart::North); }

std::vector<double> gauge_samples(const RunConfig& rc, Sampler& s) {
  std::vector<double> v;
  for (int k = 0; k < 100; ++k) v.push_back(gauge_difference(rc.centers, s.base(0.2, 0.1)));
  return v;
}

Outcome gauge_quantization(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (double g : gauge_samples(rc, s)) o.acc.add(std::abs(g - rc.centers.size()));
  return o;
}

Outcome gauge_variance(const RunConfig& rc, Sampler& s) {
  const std::vector<double> v = gauge_samples(rc, s);
  double mean = 0.0;
  for (double g : v) mean += g;
  mean /= v.size();
  double var = 0.0;
  for (double g : v) var += (g - mean) * (g - mean);
  Outcome o;
  o.acc.points = static_cast<int>(v.size());
  o.acc.max = var / v.size();
  o.note = "mean " + fmt("%.15g", mean);
  return o;
}

// ---- kahler ----

Outcome kahler_closed(const RunConfig& rc, Sampler& s, ComplexStructure j) {
  Outcome o;
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1, k % 2 ? Chart::North : Chart::South);
    o.acc.add(kahler_form_differential(rc.centers, fp, j, rc.tolerances.fd_step).cwiseAbs().maxCoeff());
  }
  return o;
}

Outcome kahler_closed_j1(const RunConfig& rc, Sampler& s) { return kahler_closed(rc, s, ComplexStructure::J1); }
Outcome kahler_closed_j2(const RunConfig& rc, Sampler& s) { return kahler_closed(rc, s, ComplexStructure::J2); }
Outcome kahler_closed_j3(const RunConfig& rc, Sampler& s) { return kahler_closed(rc, s, ComplexStructure::J3); }

Outcome kahler_square(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const Eigen::Matrix4d minus_identity = -Eigen::Matrix4d::Identity();
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1, k % 2 ? Chart::North : Chart::South);
    for (int a = 0; a < 3; ++a) {
      const Eigen::Matrix4d J = complex_structure(rc.centers, fp, static_cast<ComplexStructure>(a));
      // Rounding in J J grows with the square of the entries of J.
      const double scale = std::max(1.0, J.cwiseAbs().maxCoeff());
      o.acc.add((J * J - minus_identity).cwiseAbs().maxCoeff() / (scale * scale));
    }
  }
  return o;
}

Outcome kahler_compatibility(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1, k % 2 ? Chart::North : Chart::South);
    const Eigen::Matrix4d g = metric_real(rc.centers, fp);
    Eigen::Matrix4d J[3];
    double r = 0.0;
    for (int a = 0; a < 3; ++a) {
      const auto label = static_cast<ComplexStructure>(a);
      J[a] = complex_structure(rc.centers, fp, label);
      r = std::max(r, rel_diff(Eigen::Matrix4d(J[a].transpose() * g * J[a]), g));
      r = std::max(r, rel_diff(Eigen::Matrix4d(J[a].transpose() * g), kahler_form(rc.centers, fp, label)));
    }
    r = std::max(r, rel_diff(Eigen::Matrix4d(J[0] * J[1]), J[2]));
    o.acc.add(r);
  }
  return o;
}

// ---- hessian ----

Outcome hessian_psi_vs_g(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const HessianPotentials pot = potentials(rc);
  for (int k = 0; k < 50; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    const Eigen::Matrix2d h = complex_potential_hessian(pot, moment_map(rc.centers, fp));
    o.acc.add((h - g_matrices(rc.centers, fp).G).cwiseAbs().maxCoeff());
  }
  return o;
}

Outcome hessian_g_ginv(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 50; ++k) {
    const GMatrices gm = g_matrices(rc.centers, s.fiber(0.2, 0.1));
    o.acc.add((gm.G * gm.Ginv - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff());
  }
  return o;
}

Outcome hessian_pullback(const RunConfig& rc, Sampler& s) {
  Outcome o;
  double printed_statement = 0.0;
  double printed_matrix = 0.0;
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    const SymplecticPoint sp = moment_map(rc.centers, fp);
    const Eigen::Matrix4d pulled = metric_real_in_symplectic_frame(rc.centers, fp);
    o.acc.add(rel_diff(metric_symplectic(rc.centers, sp), pulled));
    printed_statement = std::max(
        printed_statement, rel_diff(metric_symplectic(rc.centers, sp, SymplecticVariant::PrintedStatement), pulled));
    printed_matrix = std::max(printed_matrix,
                              rel_diff(metric_symplectic(rc.centers, sp, SymplecticVariant::PrintedMatrix), pulled));
  }
  o.note = "derived signs; printed-statement residual " + fmt("%.3e", printed_statement) +
           ", printed-matrix residual " + fmt("%.3e", printed_matrix);
  return o;
}

Outcome hessian_moment_roundtrip(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 50; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    const FiberPoint back = invert_moment(rc.centers, moment_map(rc.centers, fp));
    o.acc.add(std::max((back.base - fp.base).cwiseAbs().maxCoeff(), angular_gap(back.phi, fp.phi)));
  }
  return o;
}

Outcome hessian_polytope(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const MomentPolytope poly = build_polytope(rc.centers);
  for (int k = 0; k < 10000; ++k) {
    const Eigen::Vector2d mu = moment_components<double>(rc.centers, s.base(0.0, 0.0));
    o.acc.add(std::max(0.0, -poly.min_slack(mu[0], mu[1])));
  }
  return o;
}

// ---- legendre ----

Outcome legendre_transform_check(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const HessianPotentials pot = potentials(rc);
  const HessianPotentials dual = HessianPotentials::legendre_matched(rc.centers);
  for (int k = 0; k < 50; ++k) {
    const SymplecticPoint sp = moment_map(rc.centers, s.fiber(0.2, 0.1));
    const double expect = kahler_potential(dual, sp);
    o.acc.add(std::abs(legendre_transform(pot, sp) - expect) / std::max(1.0, std::abs(expect)));
  }
  o.note = "psi-dual constants (n, 2)";
  return o;
}

Outcome legendre_cone_two_center(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const double b = rc.centers[1] - rc.centers[0];
  for (int k = 0; k < 20; ++k) {
    double y1, y2;
    do {
      y1 = s.uniform(0.1, 3.0 + std::abs(b));
      y2 = s.uniform(0.1, 3.0 + std::abs(b));
    } while (y1 + y2 < b + 0.1);
    const Eigen::Vector2d y(y1, y2);
    const Eigen::Matrix2d he = hessian<2>([&](const auto& v) { return eguchi_hanson_cone_potential(v[0], v[1], b); }, y);
    const Eigen::Matrix2d hg = hessian<2>(
        [&](const auto& v) {
          using S = typename std::decay_t<decltype(v)>::Scalar;
          return resolved_cone_potential_real<S>(std::vector<S>{v[0], v[1]}, b);
        },
        y);
    o.acc.add(rel_diff(hg, he));
  }
  return o;
}

Outcome legendre_cone_imaginary(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const int n = rc.centers.size();
  for (int k = 0; k < 50; ++k) {
    CanonicalConeCoords yc;
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      yc.y.push_back(s.uniform(0.1, 3.0));
      total += yc.y.back();
    }
    yc.b = s.uniform(0.0, 0.9 * total);
    o.acc.add(resolved_cone_potential(yc).imag_residue);
  }
  return o;
}

// ---- atlas ----

Outcome atlas_pullback(const RunConfig& rc, Sampler& s) {
  Outcome o;
  double printed = 0.0;
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    for (int i = 1; i <= rc.centers.size(); ++i) {
      const Eigen::Matrix2cd pulled = metric_real_in_patch_frame(rc.centers, fp, i);
      o.acc.add(rel_diff(metric_complex(rc.centers, fp, i), pulled));
      printed = std::max(printed,
                         rel_diff(metric_complex(rc.centers, fp, i, ComplexVariant::PrintedStatement), pulled));
    }
  }
  o.note = "derived cross sign; printed-statement residual " + fmt("%.3e", printed);
  return o;
}

Outcome atlas_ddbar(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    const GlobalComplex g = to_global(rc.centers, fp);
    for (int i = 1; i <= rc.centers.size(); ++i) {
      const Eigen::Matrix2cd h = metric_complex(rc.centers, fp, i);
      const Eigen::Matrix2cd k2 = 2.0 * ddbar_kahler_potential(rc.centers, to_patch(g, i, rc.centers.size()));
      o.acc.add(rel_diff(k2, h));
    }
  }
  return o;
}

Outcome atlas_roundtrip(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const int n = rc.centers.size();
  for (int k = 0; k < 50; ++k) {
    const FiberPoint fp = s.fiber(0.2, 0.1);
    const GlobalComplex g = to_global(rc.centers, fp);
    const FiberPoint back = from_global(rc.centers, g.z1, g.z2);
    double r = std::max((back.base - fp.base).cwiseAbs().maxCoeff(), angular_gap(back.phi, fp.phi));
    for (int i = 1; i <= n; ++i) {
      const GlobalComplex g2 = from_patch(to_patch(g, i, n));
      r = std::max(r, std::abs(g2.z1 - g.z1) / std::max(1.0, std::abs(g.z1)));
      r = std::max(r, std::abs(g2.z2 - g.z2) / std::max(1.0, std::abs(g.z2)));
    }
    o.acc.add(r);
  }
  return o;
}

Outcome atlas_boundary(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const int n = rc.centers.size();
  const MomentPolytope poly = build_polytope(rc.centers);
  auto off_piece = [&](const BoundaryHit& hit, int label) {
    if (!hit.piece || *hit.piece != label) return std::numeric_limits<double>::infinity();
    const HalfPlane& h = poly.halfplanes[poly.pieces[label - 1].halfplane];
    return std::abs(h.eval(hit.mu1, hit.mu2)) / std::hypot(h.a, h.b);
  };
  for (int k = 0; k < 10; ++k)
    for (int i = 1; i <= n; ++i) {
      o.acc.add(off_piece(boundary_map(rc.centers, i, Axis::Alpha, s.polar(0.1, 3.0)), i + 1));
      o.acc.add(off_piece(boundary_map(rc.centers, i, Axis::Beta, s.polar(0.1, 3.0)), i));
    }
  for (int i = 1; i <= n; ++i) {
    const BoundaryHit hit = boundary_map(rc.centers, i, Axis::Alpha, 0.0);
    const double d = hit.vertex && *hit.vertex == i
                         ? (poly.vertices[i - 1] - Eigen::Vector2d(hit.mu1, hit.mu2)).norm()
                         : std::numeric_limits<double>::infinity();
    o.acc.add(d);
  }
  return o;
}

Outcome atlas_flat(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 50; ++k)
    o.acc.add(rel_diff(metric_complex(rc.centers, s.fiber(0.2, 0.1), 1), Eigen::Matrix2cd::Identity().eval()));
  return o;
}

Outcome atlas_torus(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const int n = rc.centers.size();
  for (int k = 0; k < 20; ++k) {
    const GlobalComplex g = to_global(rc.centers, s.fiber(0.2, 0.1));
    const double t1 = s.angle();
    const double t2 = s.angle();
    for (int i = 1; i <= n; ++i) {
      const PatchPoint w = to_patch(g, i, n);
      const PatchPoint wt = torus_act(t1, t2, w);
      const double a = kahler_potential_on_patch<double>(rc.centers, from_std(w.alpha), from_std(w.beta), i);
      const double b = kahler_potential_on_patch<double>(rc.centers, from_std(wt.alpha), from_std(wt.beta), i);
      o.acc.add(std::abs(a - b) / std::max(1.0, std::abs(a)));
    }
  }
  return o;
}

// ---- ricci ----

Outcome ricci_flat(const RunConfig& rc, Sampler& s) {
  Outcome o;
  for (int k = 0; k < 10; ++k)
    o.acc.add(ricci_numeric(rc.centers, s.fiber(0.3, 0.2), rc.tolerances.ricci_step).max_abs);
  o.note = "step " + fmt("%.1e", rc.tolerances.ricci_step);
  return o;
}

// ---- phase ----

double phase_real_c(const RunConfig& rc) {
  return rc.centers.size() >= 2 ? rc.centers[1] - rc.centers[0] : 1.0;
}

constexpr double kPhaseB = 1.0;
// Shell margin |q| >= 0.05 for the 1e-12 invariants (hermitian, torus).
constexpr double kInvariantShellGap = 0.05;

double shell_function(double b, Complex alpha, Complex beta) {
  const double u = 1.0 + std::norm(alpha);
  return std::norm(beta) * u * u - b * b;
}

Outcome phase_classification(const RunConfig& rc, Sampler& s) {
  Outcome o;
  auto expect_imaginary = [&](double b, Complex al, Complex be) {
    const double q = shell_function(b, al, be);
    if (std::abs(q) <= kShellTolerance) return PhaseClass::OnShell;
    return q > 0 ? PhaseClass::OutsideShell : PhaseClass::InsideShell;
  };
  for (int k = 0; k < 1000; ++k) {
    const Complex al = s.polar(0.0, 2.0);
    const Complex be = s.polar(0.0, 3.0);
    int wrong = 0;
    wrong += classify({Complex(0.0, kPhaseB)}, al, be) != expect_imaginary(kPhaseB, al, be);
    wrong += classify({Complex(0.0, -kPhaseB)}, al, be) != expect_imaginary(kPhaseB, al, be);
    wrong += classify({Complex(phase_real_c(rc), 0.0)}, al, be) != PhaseClass::RealKahler;
    wrong += classify({Complex(0.5, 0.5)}, al, be) != PhaseClass::Complexified;
    wrong += classify({Complex(0.0)}, al, 0.0) != PhaseClass::Degenerate;
    wrong += classify({Complex(0.0)}, al, be) != PhaseClass::RealKahler;
    // exactly on the shell: |beta| (1 + |alpha|^2) = b
    const Complex on = std::polar(kPhaseB / (1.0 + std::norm(al)), s.angle());
    wrong += classify({Complex(0.0, kPhaseB)}, al, on) != expect_imaginary(kPhaseB, al, on);
    o.acc.add(wrong);
  }
  return o;
}

// Random point at least `gap` away from the shell on the requested side. Near
// the shell, entries of the form grow like 1 / sqrt(|q|) and rounding grows with them.
std::pair<Complex, Complex> phase_point(Sampler& s, bool outside, double gap = 1e-3) {
  for (;;) {
    const Complex al = s.polar(0.0, 2.0);
    const Complex be = s.polar(0.01, 3.0);
    const double q = shell_function(kPhaseB, al, be);
    if (outside ? q > gap : q < -gap) return {al, be};
  }
}

Outcome phase_case1_real(const RunConfig&, Sampler& s) {
  Outcome o;
  const PhaseParameter p{Complex(0.0, kPhaseB)};
  for (int k = 0; k < 200; ++k) {
    const auto [al, be] = phase_point(s, true);
    const MomentValue m = family_moment(p, al, be);
    const Complex psi = family_potential(p, al, be);
    o.acc.add(std::max({std::abs(psi.imag()), std::abs(m.mu1.imag()), std::abs(m.mu2.imag())}));
  }
  return o;
}

Outcome phase_case2_imaginary(const RunConfig&, Sampler& s) {
  Outcome o;
  const PhaseParameter p{Complex(0.0, kPhaseB)};
  for (int k = 0; k < 200; ++k) {
    const auto [al, be] = phase_point(s, false);
    const MomentValue m = family_moment(p, al, be);
    const Complex psi = family_potential(p, al, be);
    const FamilyForm f = family_kahler_form(p, al, be);
    const double anti = (f.ddbar + f.ddbar.adjoint()).cwiseAbs().maxCoeff() / std::max(1.0, f.ddbar.cwiseAbs().maxCoeff());
    o.acc.add(std::max({std::abs(psi.real()), std::abs(m.mu1.real()), std::abs(m.mu2.real()), anti}));
  }
  o.note = "form: hermitian part of d dbar psi";
  return o;
}

Outcome phase_real_c_vs_atlas(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const CenterConfig two({rc.centers[0], rc.centers[1]});
  const PhaseParameter p{Complex(two[1] - two[0], 0.0)};
  for (int k = 0; k < 20; ++k) {
    const Complex al = s.polar(0.0, 2.0);
    const Complex be = s.polar(0.05, 3.0);
    const GlobalComplex g = from_patch({1, al, be});
    const FiberPoint fp = from_global(two, g.z1, g.z2);
    o.acc.add(rel_diff(Eigen::Matrix2cd(2.0 * family_kahler_form(p, al, be).ddbar), metric_complex(two, fp, 1)));
  }
  return o;
}

Outcome phase_moment_body(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const double c = std::abs(phase_real_c(rc));
  const PhaseParameter p{Complex(c, 0.0)};
  for (int k = 0; k < 10000; ++k) {
    const MomentValue m = family_moment(p, s.polar(0.0, 3.0), s.polar(0.0, 3.0));
    const double m1 = m.mu1.real(), m2 = m.mu2.real();
    o.acc.add(std::max(0.0, -std::min({m2, m2 + m1 - c / 2, m2 + 2 * m1})));
  }
  return o;
}

Outcome phase_case1_cone(const RunConfig&, Sampler& s) {
  Outcome o;
  const PhaseParameter p{Complex(0.0, kPhaseB)};
  int implied = 0;
  for (int k = 0; k < 10000; ++k) {
    const auto [al, be] = phase_point(s, true, 0.0);
    const MomentValue m = family_moment(p, al, be);
    const double m1 = m.mu1.real(), m2 = m.mu2.real();
    const double first = m2, middle = m2 + m1, third = m2 + 2 * m1;
    double r = std::max(0.0, -std::min({first, middle, third}));
    if (first >= 0.0 && third >= 0.0) {
      ++implied;
      r = std::max(r, std::max(0.0, -middle));
    }
    o.acc.add(r);
  }
  o.note = std::to_string(implied) + " samples test the implied middle inequality";
  return o;
}

Outcome phase_hermitian(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const PhaseParameter params[] = {{Complex(phase_real_c(rc), 0.0)}, {Complex(0.0, kPhaseB)}, {Complex(0.0)}};
  for (int k = 0; k < 100; ++k)
    for (const PhaseParameter& p : params) {
      const auto [al, be] = phase_point(s, k % 2 == 0, kInvariantShellGap);
      const FamilyForm f = family_kahler_form(p, al, be);
      o.acc.add((f.hermitian - f.hermitian.adjoint()).cwiseAbs().maxCoeff() /
                std::max(1.0, f.hermitian.cwiseAbs().maxCoeff()));
    }
  return o;
}

Outcome phase_torus(const RunConfig& rc, Sampler& s) {
  Outcome o;
  const PhaseParameter params[] = {{Complex(phase_real_c(rc), 0.0)}, {Complex(0.0, kPhaseB)}};
  for (int k = 0; k < 100; ++k)
    for (const PhaseParameter& p : params) {
      const auto [al, be] = phase_point(s, k % 2 == 0, kInvariantShellGap);
      const Complex a0 = std::abs(al), b0 = std::abs(be);
      const Complex psi = family_potential(p, al, be), psi0 = family_potential(p, a0, b0);
      const MomentValue m = family_moment(p, al, be), m0 = family_moment(p, a0, b0);
      const Eigen::Matrix2d f = family_kahler_form(p, al, be).ddbar.cwiseAbs();
      const Eigen::Matrix2d f0 = family_kahler_form(p, a0, b0).ddbar.cwiseAbs();
      const double scale = std::max({1.0, std::abs(psi0), std::abs(m0.mu1), std::abs(m0.mu2)});
      o.acc.add(std::max({std::abs(psi - psi0) / scale, std::abs(m.mu1 - m0.mu1) / scale,
                          std::abs(m.mu2 - m0.mu2) / scale, rel_diff(f, f0)}));
    }
  return o;
}

Outcome phase_shell_limit(const RunConfig&, Sampler& s) {
  Outcome o;
  const PhaseParameter p{Complex(0.0, kPhaseB)};
  double at_1e6 = 0.0;
  for (int k = 0; k < 50; ++k) {
    const Complex al = s.polar(0.0, 2.0);
    const double shell = kPhaseB / (1.0 + std::norm(al));
    const double arg = s.angle();
    for (double side : {1.0, -1.0}) {
      auto size = [&](double d) {
        const MomentValue m = family_moment(p, al, std::polar(shell * (1.0 + side * d), arg));
        return std::hypot(std::abs(m.mu1), std::abs(m.mu2));
      };
      const double big = size(1e-6);
      const double small = size(1e-10);
      at_1e6 = std::max(at_1e6, big);
      o.acc.add(std::abs(std::log(big / small) / std::log(1e4) - 0.5));
    }
  }
  o.note = "residual is |exponent - 1/2| of |mu| ~ distance^exponent; max |mu| at relative distance 1e-6: " +
           fmt("%.3e", at_1e6);
  return o;
}

struct CheckSpec {
  const char* name;
  const char* suite;
  const char* identity;
  double tolerance;
  int min_n;
  int max_n;
  Outcome (*run)(const RunConfig&, Sampler&);
};

constexpr int kAny = 1 << 20;

const std::vector<CheckSpec>& registry() {
  static const std::vector<CheckSpec> r = {
      {"harmonic.laplacian", "harmonic", "Laplacian of V vanishes away from the centers", 1e-8, 1, kAny,
       harmonic_laplacian},
      {"connection.monopole.south", "connection", "d(alpha) = -*dV on the south chart", 1e-7, 1, kAny,
       monopole_south},
      {"connection.monopole.north", "connection", "d(alpha) = -*dV on the north chart", 1e-7, 1, kAny,
       monopole_north},
      {"connection.gauge_quantization", "connection", "north minus south connection is n dtheta", 1e-10, 1, kAny,
       gauge_quantization},
      {"connection.gauge_variance", "connection", "variance of the gauge difference over samples", 1e-18, 1, kAny,
       gauge_variance},
      {"kahler.closed.J1", "kahler", "d(omega_1) = 0", 1e-6, 1, kAny, kahler_closed_j1},
      {"kahler.closed.J2", "kahler", "d(omega_2) = 0", 1e-6, 1, kAny, kahler_closed_j2},
      {"kahler.closed.J3", "kahler", "d(omega_3) = 0", 1e-6, 1, kAny, kahler_closed_j3},
      {"kahler.compatibility", "kahler", "J_k orthogonal, omega_k = g(J_k., .), J1 J2 = J3", 1e-10, 1, kAny,
       kahler_compatibility},
      {"kahler.square", "kahler", "J_k^2 = -1", 1e-12, 1, kAny, kahler_square},
      {"hessian.psi_vs_G", "hessian", "Hess(psi) in (mu1, mu2) equals G_ij", 1e-8, 1, kAny, hessian_psi_vs_g},
      {"hessian.G_Ginv", "hessian", "G_ij G^jk = identity", 1e-10, 1, kAny, hessian_g_ginv},
      {"hessian.pullback", "hessian", "metric transported to action-angle coordinates is blockdiag(G/2, 2 G^-1)",
       1e-8, 1, kAny, hessian_pullback},
      {"hessian.moment_roundtrip", "hessian", "invert_moment(moment_map(p)) = p", 1e-9, 1, kAny,
       hessian_moment_roundtrip},
      {"hessian.polytope", "hessian", "moment image lies in the polytope", 1e-9, 1, kAny, hessian_polytope},
      {"legendre.transform", "legendre", "mu . grad(psi) - psi = psi-dual", 1e-9, 1, kAny, legendre_transform_check},
      {"legendre.cone_two_center", "legendre", "two-center and root-of-unity cone potentials share the Hessian",
       1e-8, 2, 2, legendre_cone_two_center},
      {"legendre.cone_imaginary", "legendre", "root-of-unity sum of the cone potential is real", 1e-10, 2, kAny,
       legendre_cone_imaginary},
      {"atlas.pullback", "atlas", "metric transported to each patch equals the complex Hermitian form", 1e-8, 1,
       kAny, atlas_pullback},
      {"atlas.ddbar", "atlas", "Hermitian form equals 2 d dbar psi-dual on each patch", 1e-8, 1, kAny, atlas_ddbar},
      {"atlas.roundtrip", "atlas", "complex-chart and patch inversions reproduce their inputs", 1e-9, 1, kAny,
       atlas_roundtrip},
      {"atlas.boundary", "atlas", "alpha_i-axis maps to L_(i+1), beta_i-axis to L_i, origin to v_i", 1e-8, 1, kAny,
       atlas_boundary},
      {"atlas.flat", "atlas", "single-center patch metric is the identity", 1e-9, 1, 1, atlas_flat},
      {"atlas.torus", "atlas", "psi-dual is invariant under the torus action", 1e-12, 1, kAny, atlas_torus},
      {"ricci.flat", "ricci", "Ricci tensor vanishes", 1e-4, 2, kAny, ricci_flat},
      {"ricci.flat_single", "ricci", "Ricci tensor vanishes (single center)", 1e-6, 1, 1, ricci_flat},
      {"phase.classification", "phase", "labels follow the shell inequality", 0.0, 1, kAny, phase_classification},
      {"phase.case1_real", "phase", "outside the shell potential and moments are real", 1e-12, 1, kAny,
       phase_case1_real},
      {"phase.case2_imaginary", "phase", "inside the shell potential, moments and form are purely imaginary", 1e-10,
       1, kAny, phase_case2_imaginary},
      {"phase.real_c_vs_atlas", "phase", "real-c family form is half the two-center patch metric", 1e-8, 2, kAny,
       phase_real_c_vs_atlas},
      {"phase.moment_body", "phase", "real-c moment image satisfies its three inequalities", 1e-9, 1, kAny,
       phase_moment_body},
      {"phase.case1_cone", "phase", "outside-shell moment image lies in the cone; middle inequality implied", 1e-9, 1,
       kAny, phase_case1_cone},
      {"phase.hermitian", "phase", "family form is Hermitian up to the phase unit", 1e-12, 1, kAny, phase_hermitian},
      {"phase.torus", "phase", "family outputs depend on |alpha|, |beta| only", 1e-12, 1, kAny, phase_torus},
      {"phase.shell_limit", "phase", "family moments vanish like sqrt(distance) at the shell", 1e-3, 1, kAny,
       phase_shell_limit},
  };
  return r;
}

CheckRecord run_check(const CheckSpec& spec, const RunConfig& rc) {
  CheckRecord rec{spec.name, spec.identity, 0, 0.0, spec.tolerance, false, ""};
  Sampler sampler(rc, split_stream(rc.seed, spec.name));
  try {
    const Outcome o = spec.run(rc, sampler);
    rec.points = o.acc.points;
    rec.max_residual = o.acc.max;
    rec.note = o.note;
    rec.pass = o.acc.max <= spec.tolerance;
  } catch (const std::exception& e) {
    rec.max_residual = std::numeric_limits<double>::infinity();
    rec.note = std::string("error: ") + e.what();
  }
  return rec;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"harmonic", "connection", "kahler", "hessian", "legendre",
                                                 "atlas",    "ricci",      "phase",  "all"};
  return names;
}

std::vector<std::string> check_names(const std::string& suite, int n) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite '" + suite + "'");
  std::vector<std::string> out;
  for (const CheckSpec& c : registry())
    if ((suite == "all" || suite == c.suite) && n >= c.min_n && n <= c.max_n) out.push_back(c.name);
  std::sort(out.begin(), out.end());
  return out;
}

Report verify_suite(const RunConfig& config, const std::string& suite) {
  const std::vector<std::string> names = check_names(suite, config.centers.size());
  std::vector<std::future<CheckRecord>> jobs;
  for (const std::string& name : names) {
    const auto it = std::find_if(registry().begin(), registry().end(),
                                 [&](const CheckSpec& c) { return name == c.name; });
    jobs.push_back(std::async(std::launch::async, run_check, std::cref(*it), std::cref(config)));
  }
  Report report{suite, config.centers.centers(), config.seed, {}};
  for (auto& j : jobs) report.checks.push_back(j.get());
  return report;
}

}  // namespace ghlab
