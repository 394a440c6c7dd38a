// gh-lab: evaluate and verify multi-center Gibbons-Hawking geometry.
//
//   gh-lab eval --centers 0,1 --point 0.3,0.2,-0.5 --rep real
//   gh-lab polytope --centers 0,1 --format csv
//   gh-lab potential --centers 0 --mu 1,1 --kind psi-dual
//   gh-lab phase-scan --b 1 --grid 0,2,0,2,41
//   gh-lab verify --centers 0,1 --suite all --seed 7 --report out.json
//
// Exit status: 0 ok, 1 usage or domain error, 2 verification failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "ghlab/complex_atlas.hpp"
#include "ghlab/io.hpp"
#include "ghlab/phase.hpp"
#include "ghlab/symplectic.hpp"
#include "ghlab/verify.hpp"

using namespace ghlab;

namespace {

struct Options {
  std::string config_path;
  std::string centers;
  std::optional<double> C1;
  std::optional<double> C2;
  std::optional<std::uint64_t> seed;
  std::string output;

  std::string point;
  std::string rep = "real";
  std::string chart = "south";
  std::string format = "json";
  std::string mu;
  std::string kind = "psi";
  double b = 0.0;
  double a = 0.0;
  std::string grid;
  std::string suite = "all";
  std::string report;
};

// Config file first, then flags on top.
RunConfig resolve(const Options& o) {
  RunConfig rc = o.config_path.empty() ? RunConfig{} : load_run_config(o.config_path);
  if (!o.centers.empty()) rc.centers = CenterConfig(parse_number_list(o.centers, "--centers"));
  if (o.C1) rc.C1 = o.C1;
  if (o.C2) rc.C2 = o.C2;
  if (o.seed) rc.seed = *o.seed;
  if (!o.output.empty()) rc.output_path = o.output;
  return rc;
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(rc.output_path);
  if (!out) throw DomainError("cannot write " + rc.output_path);
  out << text;
}

int cmd_eval(const Options& o) {
  const RunConfig rc = resolve(o);
  const std::vector<double> p = parse_number_list(o.point, "--point");
  if (p.size() != 3 && p.size() != 4) throw ConfigError("--point: expected x,y,z or x,y,z,phi");
  FiberPoint fp{p.size() == 4 ? p[3] : 0.0, RealPoint(p[0], p[1], p[2]), Chart::South};
  if (o.chart == "north")
    fp.chart = Chart::North;
  else if (o.chart != "south")
    throw ConfigError("--chart: expected south or north");
  std::ostringstream out;
  if (o.rep == "real") {
    out << "{\"rep\": \"real\", \"frame\": [\"dphi\", \"dx\", \"dy\", \"dz\"], \"matrix\": "
        << matrix_json(Eigen::MatrixXd(metric_real(rc.centers, fp))) << "}\n";
  } else if (o.rep == "symplectic") {
    const SymplecticPoint sp = moment_map(rc.centers, fp);
    out << "{\"rep\": \"symplectic\", \"frame\": [\"dmu1\", \"dmu2\", \"dtheta1\", \"dtheta2\"], \"point\": ["
        << sp.mu1 << ", " << sp.mu2 << ", " << sp.theta1 << ", " << sp.theta2 << "], \"matrix\": "
        << matrix_json(Eigen::MatrixXd(metric_symplectic(rc.centers, sp))) << "}\n";
  } else if (o.rep.rfind("complex:", 0) == 0) {
    int patch = 0;
    try {
      patch = std::stoi(o.rep.substr(8));
    } catch (const std::exception&) {
      throw ConfigError("--rep: expected complex:<patch>");
    }
    out << "{\"rep\": \"complex\", \"patch\": " << patch << ", \"entries\": \"[re, im]\", \"matrix\": "
        << matrix_json(Eigen::MatrixXcd(metric_complex(rc.centers, fp, patch))) << "}\n";
  } else {
    throw ConfigError("--rep: expected real, symplectic or complex:<patch>");
  }
  emit(rc, out.str());
  return 0;
}

int cmd_polytope(const Options& o) {
  const RunConfig rc = resolve(o);
  const MomentPolytope poly = build_polytope(rc.centers);
  if (o.format == "json") {
    emit(rc, polytope_json(rc.centers, poly));
  } else if (o.format == "csv") {
    std::ostringstream out;
    write_polytope_csv(out, poly);
    emit(rc, out.str());
  } else {
    throw ConfigError("--format: expected json or csv");
  }
  return 0;
}

int cmd_potential(const Options& o) {
  const RunConfig rc = resolve(o);
  const std::vector<double> mu = parse_number_list(o.mu, "--mu");
  if (mu.size() != 2) throw ConfigError("--mu: expected m1,m2");
  HessianPotentials pot{rc.centers, 0.0, 0.0};
  if (o.kind == "psi-dual")
    pot = HessianPotentials::legendre_matched(rc.centers);
  else if (o.kind != "psi")
    throw ConfigError("--kind: expected psi or psi-dual");
  if (rc.C1) pot.C1 = *rc.C1;
  if (rc.C2) pot.C2 = *rc.C2;
  const SymplecticPoint sp{mu[0], mu[1], 0.0, 0.0};
  const double v = o.kind == "psi" ? complex_potential(pot, sp) : kahler_potential(pot, sp);
  std::ostringstream out;
  out.precision(17);
  out << v << "\n";
  emit(rc, out.str());
  return 0;
}

int cmd_phase_scan(const Options& o) {
  RunConfig rc;
  rc.output_path = o.output;
  const std::vector<double> g = parse_number_list(o.grid, "--grid");
  if (g.size() != 5) throw ConfigError("--grid: expected amin,amax,bmin,bmax,res");
  if (g[4] != static_cast<int>(g[4])) throw ConfigError("--grid: resolution must be an integer");
  const ScanGrid grid{g[0], g[1], g[2], g[3], static_cast<int>(g[4])};
  std::ostringstream out;
  write_phase_csv(out, phase_scan({Complex(o.a, o.b)}, grid));
  emit(rc, out.str());
  return 0;
}

int cmd_verify(const Options& o) {
  const RunConfig rc = resolve(o);
  const Report report = verify_suite(rc, o.suite);
  std::cout << report_text(report);
  const std::string path = !o.report.empty() ? o.report : rc.output_path;
  if (!path.empty()) {
    std::ofstream out(path);
    if (!out) throw DomainError("cannot write " + path);
    out << report_json(report);
  }
  return report.all_pass() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gibbons-Hawking geometry lab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "JSON run configuration (flags override it)");
    sub->add_option("--centers", o.centers, "comma-separated, strictly increasing center heights");
    sub->add_option("--C1", o.C1, "linear constant C1 of the potentials");
    sub->add_option("--C2", o.C2, "linear constant C2 of the potentials");
    sub->add_option("--output", o.output, "write to this file instead of stdout");
  };

  CLI::App* eval = app.add_subcommand("eval", "metric at a point in a chosen representation");
  common(eval);
  eval->add_option("--point", o.point, "x,y,z[,phi]")->required();
  eval->add_option("--rep", o.rep, "real | symplectic | complex:<patch>");
  eval->add_option("--chart", o.chart, "south | north");

  CLI::App* polytope = app.add_subcommand("polytope", "moment polytope halfplanes and vertices");
  common(polytope);
  polytope->add_option("--format", o.format, "json | csv");

  CLI::App* potential = app.add_subcommand("potential", "psi or psi-dual at (mu1, mu2)");
  common(potential);
  potential->add_option("--mu", o.mu, "m1,m2")->required();
  potential->add_option("--kind", o.kind, "psi | psi-dual");

  CLI::App* scan = app.add_subcommand("phase-scan", "phase classification over an (|alpha|, |beta|) grid");
  scan->add_option("--b", o.b, "imaginary part of c")->required();
  scan->add_option("--a", o.a, "real part of c");
  scan->add_option("--grid", o.grid, "amin,amax,bmin,bmax,res")->required();
  scan->add_option("--output", o.output, "write CSV to this file instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  common(verify);
  verify->add_option("--suite", o.suite, "harmonic | connection | kahler | hessian | legendre | atlas | ricci | phase | all");
  verify->add_option("--seed", o.seed, "random seed");
  verify->add_option("--report", o.report, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*eval) return cmd_eval(o);
    if (*polytope) return cmd_polytope(o);
    if (*potential) return cmd_potential(o);
    if (*scan) return cmd_phase_scan(o);
    if (*verify) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "gh-lab: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
