#include "ghlab/phase.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <thread>

#include "ghlab/complex_atlas.hpp"
#include "ghlab/differentiate.hpp"

namespace ghlab {

const char* to_string(PhaseClass k) {
  switch (k) {
    case PhaseClass::RealKahler:
      return "real-kahler";
    case PhaseClass::Degenerate:
      return "degenerate";
    case PhaseClass::OutsideShell:
      return "outside-shell";
    case PhaseClass::InsideShell:
      return "inside-shell";
    case PhaseClass::OnShell:
      return "on-shell";
    case PhaseClass::Complexified:
      break;
  }
  return "complexified";
}

PhaseClass classify(const PhaseParameter& param, Complex alpha, Complex beta) {
  if (param.c == 0.0) return beta == 0.0 ? PhaseClass::Degenerate : PhaseClass::RealKahler;
  if (param.is_real()) return PhaseClass::RealKahler;
  if (!param.is_imaginary()) return PhaseClass::Complexified;
  const double u = 1.0 + std::norm(alpha);
  const double b = param.c.imag();
  const double q = std::norm(beta) * u * u - b * b;
  if (std::abs(q) <= kShellTolerance) return PhaseClass::OnShell;
  return q > 0.0 ? PhaseClass::OutsideShell : PhaseClass::InsideShell;
}

namespace {

PhaseClass require_evaluable(const PhaseParameter& param, Complex alpha, Complex beta, const char* what) {
  const PhaseClass cls = classify(param, alpha, beta);
  if (cls == PhaseClass::OnShell) throw DomainError(std::string(what) + ": point lies on the shell");
  if (cls == PhaseClass::Degenerate) throw DegenerateError(std::string(what) + ": c = 0 and beta = 0");
  return cls;
}

}  // namespace

Complex family_potential(const PhaseParameter& param, Complex alpha, Complex beta) {
  const PhaseClass cls = require_evaluable(param, alpha, beta, "family_potential");
  const Complex out =
      to_std(detail::family_potential_branch<double>(cls, param.c, from_std(alpha), from_std(beta)));
  if (!std::isfinite(out.real()) || !std::isfinite(out.imag()))
    throw DomainError("family_potential: logarithmic singularity at beta = 0");
  return out;
}

FamilyForm family_kahler_form(const PhaseParameter& param, Complex alpha, Complex beta) {
  const PhaseClass cls = require_evaluable(param, alpha, beta, "family_kahler_form");
  const Eigen::Vector4d x(alpha.real(), alpha.imag(), beta.real(), beta.imag());
  auto part = [&](bool imag) {
    return hessian<4>(
        [&](const auto& v) {
          using S = typename std::decay_t<decltype(v)>::Scalar;
          const Cplx<S> psi =
              detail::family_potential_branch<S>(cls, param.c, Cplx<S>(v[0], v[1]), Cplx<S>(v[2], v[3]), true);
          return imag ? psi.im : psi.re;
        },
        x);
  };
  FamilyForm out;
  out.ddbar = ddbar_from_real_hessian(part(false)) + Complex(0.0, 1.0) * ddbar_from_real_hessian(part(true));
  out.unit = cls == PhaseClass::InsideShell ? Complex(0.0, 1.0) : Complex(1.0);
  out.hermitian = out.ddbar / out.unit;
  return out;
}

MomentValue family_moment(const PhaseParameter& param, Complex alpha, Complex beta) {
  const PhaseClass cls = classify(param, alpha, beta);
  if (cls == PhaseClass::OnShell) throw DomainError("family_moment: point lies on the shell");
  const double a2 = std::norm(alpha);
  const double u = 1.0 + a2;
  const Complex root = std::sqrt(std::norm(beta) * u * u + param.c * param.c);
  return {(1.0 - a2) / (2.0 * u) * root, a2 / u * root};
}

std::vector<PhaseRow> phase_scan(const PhaseParameter& param, const ScanGrid& grid) {
  const bool finite = std::isfinite(grid.abs_alpha_min) && std::isfinite(grid.abs_alpha_max) &&
                      std::isfinite(grid.abs_beta_min) && std::isfinite(grid.abs_beta_max);
  if (grid.resolution < 2 || !finite || grid.abs_alpha_min > grid.abs_alpha_max ||
      grid.abs_beta_min > grid.abs_beta_max || grid.abs_alpha_min < 0.0 || grid.abs_beta_min < 0.0)
    throw DomainError("phase_scan: empty or invalid grid (need 0 <= min <= max and resolution >= 2)");
  const int res = grid.resolution;
  std::vector<PhaseRow> rows(static_cast<std::size_t>(res) * res);
  auto fill_row = [&](int i) {
    const double a = grid.abs_alpha_min + (grid.abs_alpha_max - grid.abs_alpha_min) * i / (res - 1);
    for (int j = 0; j < res; ++j) {
      const double b = grid.abs_beta_min + (grid.abs_beta_max - grid.abs_beta_min) * j / (res - 1);
      PhaseRow& row = rows[static_cast<std::size_t>(i) * res + j];
      row.abs_alpha = a;
      row.abs_beta = b;
      row.cls = classify(param, a, b);
      if (row.cls == PhaseClass::OnShell || row.cls == PhaseClass::Degenerate) continue;
      row.moment = family_moment(param, a, b);
      try {
        row.potential = family_potential(param, a, b);
      } catch (const DomainError&) {
        // log singularity on the zero section; the cell keeps its label and moments
      }
    }
  };
  const int workers = std::clamp(static_cast<int>(std::thread::hardware_concurrency()), 1, res);
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < res; i += workers) fill_row(i);
    });
  for (std::thread& t : pool) t.join();
  return rows;
}

void write_phase_csv(std::ostream& out, const std::vector<PhaseRow>& rows) {
  const auto old_precision = out.precision(17);
  out << "abs_alpha,abs_beta,class,re_mu1,im_mu1,re_mu2,im_mu2,re_psi,im_psi\n";
  for (const PhaseRow& r : rows) {
    out << r.abs_alpha << ',' << r.abs_beta << ',' << to_string(r.cls);
    if (r.moment)
      out << ',' << r.moment->mu1.real() << ',' << r.moment->mu1.imag() << ',' << r.moment->mu2.real() << ','
          << r.moment->mu2.imag();
    else
      out << ",nan,nan,nan,nan";
    if (r.potential)
      out << ',' << r.potential->real() << ',' << r.potential->imag();
    else
      out << ",nan,nan";
    out << '\n';
  }
  out.precision(old_precision);
}

}  // namespace ghlab
