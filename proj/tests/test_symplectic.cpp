#include <gtest/gtest.h>

#include <numeric>

#include "ghlab/differentiate.hpp"
#include "ghlab/symplectic.hpp"
#include "test_support.hpp"

using namespace ghlab;
using testing_support::Rng;

namespace {

const std::vector<std::vector<double>> kConfigs = {{0.0}, {0.0, 1.0}, {-1.0, 0.5, 2.0}};

// Moment map straight from its definition, without the library's stable forms.
Eigen::Vector2d reference_moment(const CenterConfig& cfg, const RealPoint& p) {
  double mu2 = 0.0;
  for (double c : cfg.centers()) {
    const double s = p.z() - c;
    mu2 += 0.5 * (std::hypot(std::hypot(p.x(), p.y()), s) + s);
  }
  return {-p.z(), mu2};
}

}  // namespace

TEST(Moment, Examples) {
  const CenterConfig one({0.0});
  SymplecticPoint sp = moment_map(one, FiberPoint{0.0, RealPoint(0, 0, -2), Chart::South});
  EXPECT_DOUBLE_EQ(sp.mu1, 2.0);
  EXPECT_DOUBLE_EQ(sp.mu2, 0.0);
  sp = moment_map(one, FiberPoint{0.0, RealPoint(3, 4, 0), Chart::South});
  EXPECT_DOUBLE_EQ(sp.mu1, 0.0);
  EXPECT_DOUBLE_EQ(sp.mu2, 2.5);
  sp = moment_map(CenterConfig({0.0, 1.0}), FiberPoint{0.0, RealPoint(1e-3, 0, 2), Chart::North});
  EXPECT_NEAR(sp.mu1, -2.0, 1e-15);
  EXPECT_NEAR(sp.mu2, 3.0, 1e-6);
}

TEST(Moment, MatchesDefinitionAndAnglesAgreeAcrossCharts) {
  Rng rng(3);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 100; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      const SymplecticPoint sp = moment_map(cfg, fp);
      const Eigen::Vector2d ref = reference_moment(cfg, fp.base);
      EXPECT_NEAR(sp.mu1, ref[0], 1e-12);
      EXPECT_NEAR(sp.mu2, ref[1], 1e-12 * (1 + ref[1]));
      // The same point on the north chart: phi_north = phi_south - n theta.
      FiberPoint north = fp;
      north.chart = Chart::North;
      north.phi = fp.phi - cfg.size() * angle(fp.base);
      const SymplecticPoint spn = moment_map(cfg, north);
      EXPECT_NEAR(std::remainder(spn.theta1 - sp.theta1, 2 * M_PI), 0.0, 1e-12);
      EXPECT_NEAR(std::remainder(spn.theta2 - sp.theta2, 2 * M_PI), 0.0, 1e-12);
    }
  }
}

TEST(Moment, HamiltonianForTheTorusAction) {
  // d mu_i = -omega(X_i, .) with X_1 = d/dphi, X_2 = -y d/dx + x d/dy, omega the J1 form.
  Rng rng(4);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 30; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      auto mu = [&](const auto& q) {
        using S = typename std::decay_t<decltype(q)>::Scalar;
        return moment_components<S>(cfg, Vec3<S>(q[1], q[2], q[3]));
      };
      const Eigen::Matrix<double, 2, 4> dmu = jacobian<2, 4>(mu, fp.coords());
      const Eigen::Matrix4d w = kahler_form(cfg, fp, ComplexStructure::J1);
      const Eigen::Vector4d x1(1, 0, 0, 0), x2(0, -fp.base.y(), fp.base.x(), 0);
      EXPECT_LT((dmu.row(0).transpose() + w.transpose() * x1).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_LT((dmu.row(1).transpose() + w.transpose() * x2).cwiseAbs().maxCoeff(), 1e-9);
    }
  }
}

TEST(Polytope, SingleCenterCone) {
  const MomentPolytope p = build_polytope(CenterConfig({0.0}));
  ASSERT_EQ(p.halfplanes.size(), 2u);
  ASSERT_EQ(p.vertices.size(), 1u);
  EXPECT_EQ(p.vertices[0], Eigen::Vector2d(0, 0));
  EXPECT_DOUBLE_EQ(p.min_slack(1.0, 0.0), 0.0);
  EXPECT_LT(p.min_slack(-1.0, 0.5), 0.0);
  EXPECT_EQ(p.piece_containing(3.0, 0.0, 1e-9), 1);
  EXPECT_EQ(p.piece_containing(-3.0, 3.0, 1e-9), 2);
}

TEST(Polytope, TwoCentersHalfplanesAndVertices) {
  const MomentPolytope p = build_polytope(CenterConfig({0.0, 1.0}));
  ASSERT_EQ(p.halfplanes.size(), 3u);
  const double expected[3][3] = {{0, 1, 0}, {1, 1, 0}, {2, 1, 1}};
  for (int m = 0; m < 3; ++m) {
    EXPECT_DOUBLE_EQ(p.halfplanes[m].a, expected[m][0]);
    EXPECT_DOUBLE_EQ(p.halfplanes[m].b, expected[m][1]);
    EXPECT_DOUBLE_EQ(p.halfplanes[m].k, expected[m][2]);
  }
  ASSERT_EQ(p.vertices.size(), 2u);
  EXPECT_EQ(p.vertices[0], Eigen::Vector2d(0, 0));
  EXPECT_EQ(p.vertices[1], Eigen::Vector2d(-1, 1));
  EXPECT_EQ(p.vertex_at(-1.0, 1.0, 1e-12), 2);
  ASSERT_EQ(p.pieces.size(), 3u);
}

TEST(Polytope, PiecesOfTwoGeneralCenters) {
  // L1 = {(m, 0) : m >= -c1}, L2 = {(m, -m - c1) : -c2 <= m <= -c1}, L3 = {(m, -2m - c1 - c2) : m <= -c2}.
  const double c1 = -0.4, c2 = 1.3;
  const MomentPolytope p = build_polytope(CenterConfig({c1, c2}));
  EXPECT_EQ(p.piece_containing(-c1 + 2.0, 0.0, 1e-12), 1);
  EXPECT_EQ(p.piece_containing(-0.5 * (c1 + c2), 0.5 * (c2 - c1), 1e-12), 2);
  EXPECT_EQ(p.piece_containing(-c2 - 1.0, -2 * (-c2 - 1.0) - c1 - c2, 1e-12), 3);
  EXPECT_EQ(p.pieces[1].start, Eigen::Vector2d(-c1, 0.0));
  ASSERT_TRUE(p.pieces[1].end.has_value());
  EXPECT_NEAR((*p.pieces[1].end - Eigen::Vector2d(-c2, c2 - c1)).norm(), 0.0, 1e-15);
  EXPECT_FALSE(p.pieces[2].end.has_value());
}

TEST(Polytope, ContainsTheMomentImage) {
  const CenterConfig cfg({-1.0, 0.0, 0.5, 2.0});
  const MomentPolytope p = build_polytope(cfg);
  Rng rng(5);
  for (int k = 0; k < 10000; ++k) {
    const RealPoint q(rng.uniform(-3, 3), rng.uniform(-3, 3), rng.uniform(-4, 5));
    const Eigen::Vector2d m = reference_moment(cfg, q);
    EXPECT_GE(p.min_slack(m[0], m[1]), -1e-9);
  }
}

TEST(InvertMoment, ClosedFormsAgreeWithRootFinding) {
  // n = 1: rho^2 = 4 mu2 (mu2 + mu1).
  EXPECT_DOUBLE_EQ(rho_squared(CenterConfig({0.0}), 1.0, 1.0), 8.0);
  const CenterConfig two({0.0, 1.0});
  Rng rng(6);
  for (int k = 0; k < 100; ++k) {
    const RealPoint q = rng.base(two);
    const Eigen::Vector2d m = reference_moment(two, q);
    const double closed = rho_squared(two, m[0], m[1]);
    const double rho = solve_monotone(
        [&](double r) {
          double s = 0.0;
          for (double c : two.centers()) s += std::hypot(r, q.z() - c) + q.z() - c;
          return s - 2.0 * m[1];
        },
        0.0, 10.0);
    EXPECT_NEAR(closed, rho * rho, 1e-10 * (1 + closed));
  }
}

TEST(InvertMoment, RoundTrips) {
  Rng rng(7);
  for (const auto& c : {std::vector<double>{0.0}, std::vector<double>{0.0, 1.0}, std::vector<double>{-1.0, 0.5, 2.0},
                        std::vector<double>{-2.0, -0.5, 0.3, 1.0, 2.5}}) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 100; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      const SymplecticPoint sp = moment_map(cfg, fp);
      const FiberPoint back = invert_moment(cfg, sp);
      EXPECT_LT((back.base - fp.base).cwiseAbs().maxCoeff(), 1e-9);
      EXPECT_NEAR(std::remainder(back.phi - fp.phi, 2 * M_PI), 0.0, 1e-12);
      const SymplecticPoint again = moment_map(cfg, back);
      EXPECT_NEAR(again.mu1, sp.mu1, 1e-9);
      EXPECT_NEAR(again.mu2, sp.mu2, 1e-9);
    }
  }
  EXPECT_THROW(invert_moment(CenterConfig({0.0}), SymplecticPoint{1.0, 0.0, 0, 0}), DegenerateError);
  EXPECT_THROW(invert_moment(CenterConfig({0.0}), SymplecticPoint{-2.0, 1.0, 0, 0}), DegenerateError);
}

TEST(GMatrices, SingleCenterValueAndInverse) {
  const CenterConfig one({0.0});
  const FiberPoint fp = invert_moment(one, SymplecticPoint{1.0, 1.0, 0.0, 0.0});
  const GMatrices g = g_matrices(one, fp);
  EXPECT_NEAR(g.G(1, 1), 1.5, 1e-12);
  // Independently: G_22 = 2 / (V rho^2) with r = 2 mu2 + mu1 = 3, rho^2 = 8.
  EXPECT_NEAR(g.G(1, 1), 2.0 / ((0.5 / 3.0) * 8.0), 1e-12);
  EXPECT_THROW(g_matrices(one, FiberPoint{0.0, RealPoint(0, 0, -1), Chart::South}), DegenerateError);
}

TEST(GMatrices, InverseConvexAndAlgebraicBridge) {
  Rng rng(8);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 100; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      const GMatrices g = g_matrices(cfg, fp);
      EXPECT_LT((g.G * g.Ginv - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_GT(g.G(0, 0), 0.0);
      EXPECT_GT(g.G.determinant(), 0.0);
      const AxisSums a = axis_sums(cfg, fp.base);
      EXPECT_NEAR(a.p, a.rho2 * a.s, 1e-10 * (1 + std::abs(a.p)));
    }
  }
}

TEST(GMatrices, PullbackSelectsTheDerivedSigns) {
  Rng rng(9);
  for (const auto& c : {std::vector<double>{0.0}, std::vector<double>{0.0, 1.0}}) {
    const CenterConfig cfg(c);
    double worst_printed = 0.0;
    for (int k = 0; k < 20; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      const SymplecticPoint sp = moment_map(cfg, fp);
      // Jacobian by finite differences of the moment map, independent of symplectic_jacobian.
      Eigen::Matrix4d jac;
      for (int i = 0; i < 4; ++i)
        for (int out = 0; out < 4; ++out)
          jac(out, i) = testing_support::fd_partial<4>(
              [&](const Eigen::Vector4d& q) {
                const SymplecticPoint s = moment_map(cfg, FiberPoint{q[0], RealPoint(q[1], q[2], q[3]), Chart::South});
                const double v[4] = {s.mu1, s.mu2, s.theta1, s.theta2};
                return v[out];
              },
              fp.coords(), i, 1e-5);
      const Eigen::Matrix4d ji = jac.inverse();
      const Eigen::Matrix4d pulled = ji.transpose() * metric_real(cfg, fp) * ji;
      const Eigen::Matrix4d derived = metric_symplectic(cfg, sp);
      EXPECT_LT((pulled - derived).cwiseAbs().maxCoeff(), 1e-6 * (1 + derived.cwiseAbs().maxCoeff()));
      EXPECT_LT((metric_real_in_symplectic_frame(cfg, fp) - derived).cwiseAbs().maxCoeff(),
                1e-8 * (1 + derived.cwiseAbs().maxCoeff()));
      worst_printed = std::max(
          worst_printed, (metric_symplectic(cfg, sp, SymplecticVariant::PrintedStatement) - derived).cwiseAbs().maxCoeff());
    }
    EXPECT_GT(worst_printed, 1e-3);
  }
}

TEST(GMatrices, SymplecticFormIsCanonical) {
  const CenterConfig cfg({-0.5, 0.5});
  Rng rng(10);
  Eigen::Matrix4d canonical = Eigen::Matrix4d::Zero();
  canonical(0, 2) = 1.0;
  canonical(1, 3) = 1.0;
  canonical -= canonical.transpose().eval();
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = rng.fiber(cfg);
    const Eigen::Matrix4d ji = symplectic_jacobian(cfg, fp).inverse();
    const Eigen::Matrix4d w = ji.transpose() * kahler_form(cfg, fp, ComplexStructure::J1) * ji;
    EXPECT_LT((w - canonical).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Potentials, SingleCenterValues) {
  const CenterConfig one({0.0});
  const SymplecticPoint sp{1.0, 1.0, 0.0, 0.0};
  // 1/2 sum (r+ log r+ + r- log r-) with r+ = 2 mu2, r- = 2 (mu1 + mu2): 1/2 (2 log 2 + 4 log 4).
  const double psi = complex_potential(HessianPotentials{one, 0.0, 0.0}, sp);
  EXPECT_NEAR(psi, 5.0 * std::log(2.0), 1e-14);
  // The same function written as mu2 log mu2 + (mu1 + mu2) log(mu1 + mu2) differs by log 2 (mu1 + 2 mu2).
  EXPECT_NEAR(psi - std::log(2.0) * (sp.mu1 + 2.0 * sp.mu2), 2.0 * std::log(2.0), 1e-14);
  EXPECT_NEAR(kahler_potential(HessianPotentials::legendre_matched(one), sp), 3.0, 1e-14);
  EXPECT_THROW(complex_potential(HessianPotentials{one, 0.0, 0.0}, SymplecticPoint{1.0, 0.0, 0, 0}), DegenerateError);
}

TEST(Potentials, HessianIsGAndGradientHasLogForm) {
  Rng rng(11);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    const HessianPotentials pot{cfg, 0.7, -1.1};
    const HessianPotentials shifted{cfg, 0.7 + 5.0, -1.1 - 3.0};
    for (int k = 0; k < 50; ++k) {
      const FiberPoint fp = rng.fiber(cfg);
      const SymplecticPoint sp = moment_map(cfg, fp);
      const Eigen::Matrix2d h = complex_potential_hessian(pot, sp);
      EXPECT_LT((h - g_matrices(cfg, fp).G).cwiseAbs().maxCoeff(), 1e-8 * (1 + h.cwiseAbs().maxCoeff()));
      EXPECT_LT((complex_potential_hessian(shifted, sp) - h).cwiseAbs().maxCoeff(), 1e-12 * (1 + h.cwiseAbs().maxCoeff()));
      EXPECT_GT(h.determinant(), 0.0);
      EXPECT_GT(h.trace(), 0.0);
      const Eigen::Vector2d grad = complex_potential_gradient(pot, sp);
      const Radii r = radii(cfg, fp.base);
      double expected1 = 0.0;
      for (int j = 0; j < cfg.size(); ++j) expected1 += std::log(r.r[j] - (fp.base.z() - cfg[j]));
      // Each x log x contributes log x + 1; the constant parts add up to (n, 2).
      EXPECT_NEAR(grad[0] - pot.C1 - cfg.size(), expected1, 1e-9);
      EXPECT_NEAR(grad[1] - pot.C2 - 2.0, 2.0 * std::log(r.rho), 1e-9);
      // dual-number gradient against finite differences of psi
      auto psi = [&](const Eigen::Vector2d& m) { return complex_potential(pot, SymplecticPoint{m[0], m[1], 0, 0}); };
      const Eigen::Vector2d m(sp.mu1, sp.mu2);
      for (int i = 0; i < 2; ++i)
        EXPECT_NEAR(grad[i], testing_support::fd_partial<2>(psi, m, i, 1e-5), 1e-6 * std::max(1.0, std::abs(grad[i])));
    }
  }
}

TEST(Potentials, LegendreDuality) {
  Rng rng(12);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    const HessianPotentials matched = HessianPotentials::legendre_matched(cfg);
    for (int k = 0; k < 50; ++k) {
      const SymplecticPoint sp = moment_map(cfg, rng.fiber(cfg));
      // The transform only sees psi up to its linear part, so psi may carry any constants.
      const double lhs = legendre_transform(HessianPotentials{cfg, -0.3, 0.8}, sp);
      EXPECT_NEAR(lhs, kahler_potential(matched, sp), 1e-9 * (1 + std::abs(lhs)));
    }
  }
  // n = 1: psi-dual = mu2 + (mu2 + mu1); n = 2 constants are (2, 2).
  const HessianPotentials two = HessianPotentials::legendre_matched(CenterConfig({0.0, 1.0}));
  EXPECT_EQ(two.C1, 2.0);
  EXPECT_EQ(two.C2, 2.0);
}

TEST(Cone, TwoCentersAffineDifference) {
  Rng rng(13);
  const double b = 1.3;
  for (int k = 0; k < 20; ++k) {
    Eigen::Vector2d y;
    do {
      y = Eigen::Vector2d(rng.uniform(0.1, 3.0), rng.uniform(0.1, 3.0));
    } while (y.sum() <= b + 0.1);
    const Eigen::Matrix2d h81 = hessian<2>([&](const auto& v) { return eguchi_hanson_cone_potential(v[0], v[1], b); }, y);
    const Eigen::Matrix2d h82 = hessian<2>(
        [&](const auto& v) {
          using S = typename std::decay_t<decltype(v)>::Scalar;
          return resolved_cone_potential_real(std::vector<S>{v[0], v[1]}, b);
        },
        y);
    EXPECT_LT((h81 - h82).cwiseAbs().maxCoeff() / h81.cwiseAbs().maxCoeff(), 1e-8);
  }
}

TEST(Cone, ReducesAtZeroParameterAndHasNoImaginaryResidue) {
  const CanonicalConeCoords flat{{0.5, 1.5, 2.0}, 0.0};
  double expected = 0.0;
  for (double y : flat.y) expected += y * (std::log(y) - 1.0);
  EXPECT_NEAR(resolved_cone_potential(flat).value, expected, 1e-13);
  Rng rng(14);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k < 50; ++k) {
      CanonicalConeCoords yc;
      yc.b = rng.uniform(0.1, 2.0);
      do {
        yc.y.clear();
        for (int i = 0; i < n; ++i) yc.y.push_back(rng.uniform(0.05, 3.0));
      } while (std::accumulate(yc.y.begin(), yc.y.end(), 0.0) <= yc.b + 0.05);
      const ConeValue v = resolved_cone_potential(yc);
      EXPECT_LT(v.imag_residue, 1e-10);
      std::vector<double> y = yc.y;
      EXPECT_NEAR(v.value, resolved_cone_potential_real(y, yc.b), 1e-12 * (1 + std::abs(v.value)));
    }
}
