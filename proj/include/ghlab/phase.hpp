#pragma once

// Phase change of the two-center family on O(-2) in the patch coordinates
// (alpha, beta) = (alpha_1, beta_1), as the parameter c runs over C:
//   psi_c = c log((A - c) / (1 + |alpha|^2)) + A,  A = sqrt(|beta|^2 (1 + |alpha|^2)^2 + c^2).
// For c = b i the shell |beta| (1 + |alpha|^2) = |b| separates a real Kahler
// region (outside) from a purely imaginary one (inside).

#include <Eigen/Core>
#include <complex>
#include <iosfwd>
#include <optional>
#include <vector>

#include "ghlab/cplx.hpp"
#include "ghlab/errors.hpp"

namespace ghlab {

using Complex = std::complex<double>;

struct PhaseParameter {
  Complex c;

  bool is_real() const { return c.imag() == 0.0; }
  bool is_imaginary() const { return c.real() == 0.0 && c.imag() != 0.0; }
  /// T = c^2; real whenever c is real or purely imaginary.
  Complex temperature() const { return c * c; }
};

enum class PhaseClass { RealKahler, Degenerate, OutsideShell, InsideShell, OnShell, Complexified };

const char* to_string(PhaseClass k);

/// Absolute tolerance on |beta|^2 (1 + |alpha|^2)^2 - b^2 for the on-shell label.
inline constexpr double kShellTolerance = 1e-12;

PhaseClass classify(const PhaseParameter& param, Complex alpha, Complex beta);

namespace detail {

/// Potential on a fixed branch, generic in the real scalar of (alpha, beta).
/// With `drop_log_beta`, the pluriharmonic term c log|beta|^2 (present for c > 0
/// and inside the shell) is left out; d dbar is unchanged and no longer has to
/// cancel entries of size c / |beta|^2.
template <typename S>
Cplx<S> family_potential_branch(PhaseClass cls, Complex c, const Cplx<S>& alpha, const Cplx<S>& beta,
                                bool drop_log_beta = false) {
  using std::atan;
  using std::log;
  using std::sqrt;
  const S u = 1.0 + norm(alpha);
  const S s = norm(beta) * u * u;
  switch (cls) {
    case PhaseClass::RealKahler: {
      const double a = c.real();
      if (a == 0.0) return Cplx<S>(sqrt(s));
      const S A = sqrt(s + a * a);
      if (a > 0.0 && drop_log_beta) return Cplx<S>(a * log(u / (A + a)) + A);
      const S am = a > 0.0 ? s / (A + a) : A - a;
      return Cplx<S>(a * log(am / u) + A);
    }
    case PhaseClass::OutsideShell: {
      const double b = std::abs(c.imag());
      const S A = sqrt(s - b * b);
      return Cplx<S>(A - b * atan(A / b));
    }
    case PhaseClass::InsideShell: {
      const double b = std::abs(c.imag());
      const S D = sqrt(b * b - s);
      // b - D = s / (b + D)
      if (drop_log_beta) return Cplx<S>(S(0.0), b * log(u / (b + D)) + D);
      return Cplx<S>(S(0.0), b * log(s / ((b + D) * u)) + D);
    }
    case PhaseClass::Complexified: {
      const Cplx<S> cc{S(c.real()), S(c.imag())};
      const Cplx<S> A = sqrt(Cplx<S>(s) + cc * cc);
      const Cplx<S> uc(u);
      return cc * log((A - cc) / uc) + A;
    }
    case PhaseClass::Degenerate:
    case PhaseClass::OnShell:
      break;
  }
  throw DomainError("family_potential: not defined at this point");
}

}  // namespace detail

/// Potential with additive constants dropped (see README): Case 1 returns
/// A - b atan(A / b), Case 2 returns i (b log((b - D) / (1 + |alpha|^2)) + D),
/// D = sqrt(b^2 - |beta|^2 (1 + |alpha|^2)^2). A negative b is replaced by |b|.
/// Throws on the shell, for c = 0 with beta = 0, and where the log diverges (beta = 0, c != 0).
Complex family_potential(const PhaseParameter& param, Complex alpha, Complex beta);

struct FamilyForm {
  /// K_ab = d_a dbar_b psi, so that omega = i sum K_ab dw_a ^ dw-bar_b, w = (alpha, beta).
  Eigen::Matrix2cd ddbar;
  /// 1 in the real phases, i inside the shell; ddbar = unit * hermitian.
  Complex unit;
  Eigen::Matrix2cd hermitian;
};

FamilyForm family_kahler_form(const PhaseParameter& param, Complex alpha, Complex beta);

struct MomentValue {
  Complex mu1;
  Complex mu2;
};

/// mu1 = (1 - |alpha|^2) / (2 (1 + |alpha|^2)) sqrt(q), mu2 = |alpha|^2 / (1 + |alpha|^2) sqrt(q),
/// q = |beta|^2 (1 + |alpha|^2)^2 + c^2, principal square root.
MomentValue family_moment(const PhaseParameter& param, Complex alpha, Complex beta);

struct ScanGrid {
  double abs_alpha_min;
  double abs_alpha_max;
  double abs_beta_min;
  double abs_beta_max;
  int resolution;
};

struct PhaseRow {
  double abs_alpha;
  double abs_beta;
  PhaseClass cls;
  std::optional<MomentValue> moment;
  std::optional<Complex> potential;
};

/// Row-major over |alpha| (outer) and |beta| (inner). Cells on the shell or
/// at a degenerate point are labeled but not evaluated.
std::vector<PhaseRow> phase_scan(const PhaseParameter& param, const ScanGrid& grid);

void write_phase_csv(std::ostream& out, const std::vector<PhaseRow>& rows);

}  // namespace ghlab
