#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include "ghlab/metric.hpp"
#include "test_support.hpp"

using namespace ghlab;
using testing_support::Rng;

namespace {

const std::vector<std::vector<double>> kConfigs = {{0.0}, {0.0, 1.0}, {-1.0, 0.5, 2.0}};

// Independent assembly: (1/V)(dphi + A)^2 + V |dx|^2 from potential and connection.
Eigen::Matrix4d reference_metric(const CenterConfig& cfg, const FiberPoint& fp) {
  const double v = potential(cfg, fp.base);
  const Eigen::Vector3d a = connection(cfg, fp.chart, fp.base);
  const Eigen::Vector4d e(1.0, a.x(), a.y(), a.z());
  Eigen::Matrix4d g = e * e.transpose() / v;
  g.bottomRightCorner<3, 3>() += v * Eigen::Matrix3d::Identity();
  return g;
}

}  // namespace

TEST(Metric, SingleCenterOnNegativeAxis) {
  const CenterConfig cfg({0.0});
  const Eigen::Matrix4d g = metric_real(cfg, FiberPoint{0.0, RealPoint(0, 0, -1), Chart::South});
  Eigen::Matrix4d expected = Eigen::Vector4d(2.0, 0.5, 0.5, 0.5).asDiagonal();
  EXPECT_EQ(g, expected);
}

TEST(Metric, PositiveDefiniteWithDeterminantVSquared) {
  Rng rng(1);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 100; ++k) {
      const FiberPoint fp = rng.fiber(cfg, k % 2 ? Chart::North : Chart::South);
      const Eigen::Matrix4d g = metric_real(cfg, fp);
      EXPECT_LT((g - reference_metric(cfg, fp)).cwiseAbs().maxCoeff(), 1e-14 * g.cwiseAbs().maxCoeff());
      const Eigen::Vector4d ev = Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d>(g).eigenvalues();
      EXPECT_GT(ev.minCoeff(), 0.0);
      const double v = potential(cfg, fp.base);
      EXPECT_NEAR(g.determinant(), v * v, 1e-10 * v * v);
    }
  }
}

TEST(Metric, RotationAndFiberTranslationInvariance) {
  const CenterConfig cfg({-1.0, 0.5, 2.0});
  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    FiberPoint fp = rng.fiber(cfg);
    const double t = rng.angle();
    Eigen::Matrix4d T = Eigen::Matrix4d::Identity();
    T.block<2, 2>(1, 1) << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    FiberPoint moved = fp;
    moved.phi += 1.234;
    moved.base = T.bottomRightCorner<3, 3>() * fp.base;
    const Eigen::Matrix4d g = metric_real(cfg, fp);
    const Eigen::Matrix4d rotated = T.transpose() * metric_real(cfg, moved) * T;
    EXPECT_LT((rotated - g).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(Kahler, SingleCenterForm) {
  const CenterConfig cfg({0.0});
  const Eigen::Matrix4d w = kahler_form(cfg, FiberPoint{0.0, RealPoint(0, 0, -1), Chart::South});
  Eigen::Matrix4d expected = Eigen::Matrix4d::Zero();
  expected(0, 3) = 1.0;
  expected(1, 2) = 0.5;
  expected -= expected.transpose().eval();
  EXPECT_EQ(w, expected);
}

TEST(Kahler, ClosedForAllThreeStructures) {
  Rng rng(6);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 30; ++k) {
      const FiberPoint fp = rng.fiber(cfg, k % 2 ? Chart::North : Chart::South);
      for (auto j : {ComplexStructure::J1, ComplexStructure::J2, ComplexStructure::J3})
        EXPECT_LT(kahler_form_differential(cfg, fp, j).cwiseAbs().maxCoeff(), 1e-6) << to_string(j);
    }
  }
}

TEST(Kahler, ClosednessByIndependentStencil) {
  // d omega through the generic two-form derivative with a different step.
  const CenterConfig cfg({0.0, 1.0});
  Rng rng(9);
  for (int k = 0; k < 20; ++k) {
    const FiberPoint fp = rng.fiber(cfg);
    auto omega = [&](const Eigen::Vector4d& q) {
      return kahler_form(cfg, FiberPoint{q[0], RealPoint(q[1], q[2], q[3]), Chart::South}, ComplexStructure::J2);
    };
    EXPECT_LT(exterior_derivative_2form<4>(omega, fp.coords(), 3e-4).cwiseAbs().maxCoeff(), 1e-6);
  }
}

TEST(ComplexStructures, QuaternionicAndCompatible) {
  Rng rng(12);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 20; ++k) {
      const FiberPoint fp = rng.fiber(cfg, k % 2 ? Chart::North : Chart::South);
      const Eigen::Matrix4d g = metric_real(cfg, fp);
      Eigen::Matrix4d J[3];
      for (int a = 0; a < 3; ++a) {
        const auto label = static_cast<ComplexStructure>(a);
        J[a] = complex_structure(cfg, fp, label);
        const double scale = std::max(1.0, J[a].cwiseAbs().maxCoeff());
        EXPECT_LT((J[a] * J[a] + Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff(), 1e-12 * scale * scale);
        const Eigen::Vector4d x = Eigen::Vector4d::Random(), y = Eigen::Vector4d::Random();
        EXPECT_NEAR((J[a] * x).dot(g * (J[a] * y)), x.dot(g * y), 1e-10 * g.norm());
        // omega(X, Y) = g(JX, Y)
        EXPECT_NEAR(x.dot(kahler_form(cfg, fp, label) * y), (J[a] * x).dot(g * y), 1e-10 * g.norm());
        // tamed: omega(X, JX) = g(JX, JX) > 0
        EXPECT_GT(x.dot(kahler_form(cfg, fp, label) * (J[a] * x)), 0.0);
      }
      EXPECT_LT((J[0] * J[1] - J[2]).cwiseAbs().maxCoeff(), 1e-10 * std::max(1.0, J[2].cwiseAbs().maxCoeff()));
    }
  }
}

TEST(ComplexStructures, HolomorphicFormsOfJ1) {
  // dx + i dy and (dphi + A) + i V dz satisfy theta(J1 X) = i theta(X).
  const CenterConfig cfg({-0.5, 0.7});
  Rng rng(14);
  const std::complex<double> I(0.0, 1.0);
  for (int k = 0; k < 30; ++k) {
    const FiberPoint fp = rng.fiber(cfg);
    const Eigen::Matrix4cd J = complex_structure(cfg, fp, ComplexStructure::J1).cast<std::complex<double>>();
    const Eigen::Vector3d a = connection(cfg, fp.chart, fp.base);
    const double v = potential(cfg, fp.base);
    Eigen::RowVector4cd t1(0.0, 1.0, I, 0.0);
    Eigen::RowVector4cd t2(1.0, a.x(), a.y(), a.z() + I * v);
    EXPECT_LT((t1 * J - I * t1).cwiseAbs().maxCoeff(), 1e-10);
    EXPECT_LT((t2 * J - I * t2).cwiseAbs().maxCoeff(), 1e-10 * (1 + t2.cwiseAbs().maxCoeff()));
  }
}

TEST(Ricci, EuclideanIsExactlyFlat) {
  auto flat = [](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    return Mat4<S>(Mat4<S>::Identity());
  };
  EXPECT_EQ(ricci_from_metric(flat, Eigen::Vector4d(0.1, 0.2, 0.3, 0.4), 1e-3).max_abs, 0.0);
}

TEST(Ricci, RoundSphereProductIsNotFlat) {
  // S^2 x R^2 in (theta, phi, u, v): Ric = g on the sphere factor, so the check is not vacuous.
  auto metric = [](const auto& x) {
    using S = typename std::decay_t<decltype(x)>::Scalar;
    using std::sin;
    Mat4<S> g = Mat4<S>::Identity();
    const S s = sin(x[0]);
    g(1, 1) = s * s;
    return g;
  };
  const RicciResult r = ricci_from_metric(metric, Eigen::Vector4d(1.0, 0.3, 0.0, 0.0), 1e-3);
  EXPECT_NEAR(r.ricci(0, 0), 1.0, 1e-8);
  EXPECT_NEAR(r.ricci(1, 1), std::sin(1.0) * std::sin(1.0), 1e-8);
  EXPECT_NEAR(r.ricci(2, 2), 0.0, 1e-10);
}

TEST(Ricci, GibbonsHawkingIsRicciFlat) {
  Rng rng(21);
  for (const auto& c : kConfigs) {
    const CenterConfig cfg(c);
    for (int k = 0; k < 5; ++k) {
      const FiberPoint fp{rng.angle(), rng.base(cfg, 0.4), Chart::South};
      EXPECT_LT(ricci_numeric(cfg, fp, 1e-4).max_abs, cfg.size() == 1 ? 1e-6 : 1e-4);
    }
  }
}

TEST(Ricci, RejectsPointsTooCloseToACenter) {
  const CenterConfig cfg({0.0});
  EXPECT_THROW(ricci_numeric(cfg, FiberPoint{0.0, RealPoint(1e-4, 0, -1e-4), Chart::South}, 1e-4), DomainError);
}
