#include "ghlab/io.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <sstream>

namespace ghlab {

using nlohmann::json;

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

double number_field(const json& j, const std::string& field) {
  if (!j.is_number()) throw ConfigError("field '" + field + "': expected a number, got " + std::string(j.type_name()));
  return j.get<double>();
}

// Residuals may be infinite; JSON has no literal for that.
json finite_or_string(double v) {
  if (std::isfinite(v)) return v;
  return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

RunConfig parse_run_config(const std::string& text, const std::string& source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(source + ":" + line_col(text, e.byte == 0 ? 0 : e.byte - 1) + ": malformed JSON (" +
                      e.what() + ")");
  }
  if (!j.is_object()) throw ConfigError(source + ": top level must be an object");
  RunConfig rc;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& key = it.key();
      const json& v = it.value();
      if (key == "centers") {
        if (!v.is_array() || v.empty()) throw ConfigError("field 'centers': expected a non-empty array of numbers");
        std::vector<double> c;
        for (std::size_t i = 0; i < v.size(); ++i) c.push_back(number_field(v[i], "centers[" + std::to_string(i) + "]"));
        try {
          rc.centers = CenterConfig(c);
        } catch (const DomainError& e) {
          throw ConfigError(std::string("field 'centers': ") + e.what());
        }
      } else if (key == "C1") {
        rc.C1 = number_field(v, key);
      } else if (key == "C2") {
        rc.C2 = number_field(v, key);
      } else if (key == "seed") {
        if (!v.is_number_integer() || v.get<long long>() < 0)
          throw ConfigError("field 'seed': expected a non-negative integer");
        rc.seed = v.get<std::uint64_t>();
      } else if (key == "output_path") {
        if (!v.is_string()) throw ConfigError("field 'output_path': expected a string");
        rc.output_path = v.get<std::string>();
      } else if (key == "tolerances") {
        if (!v.is_object()) throw ConfigError("field 'tolerances': expected an object");
        Tolerances& t = rc.tolerances;
        for (auto tt = v.begin(); tt != v.end(); ++tt) {
          const std::string name = "tolerances." + tt.key();
          const double x = number_field(tt.value(), name);
          if (!(x > 0.0)) throw ConfigError("field '" + name + "': must be positive");
          if (tt.key() == "fd_step") t.fd_step = x;
          else if (tt.key() == "ricci_step") t.ricci_step = x;
          else if (tt.key() == "harmonic_step_fraction") t.harmonic_step_fraction = x;
          else if (tt.key() == "proximity") t.proximity = x;
          else if (tt.key() == "chart_margin") t.chart_margin = x;
          else if (tt.key() == "shell") t.shell = x;
          else if (tt.key() == "root") t.root = x;
          else throw ConfigError("field '" + name + "': unknown tolerance");
        }
      } else {
        throw ConfigError("field '" + key + "': unknown field");
      }
    }
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return rc;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_run_config(ss.str(), path);
}

std::vector<double> parse_number_list(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError(what + ": '" + item + "' is not a number");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ConfigError(what + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError(what + ": empty list");
  return out;
}

std::string report_json(const Report& report) {
  json j;
  j["suite"] = report.suite;
  j["centers"] = report.centers;
  j["seed"] = report.seed;
  j["pass"] = report.all_pass();
  json checks = json::array();
  for (const CheckRecord& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"identity", c.identity},
                      {"points", c.points},
                      {"max_residual", finite_or_string(c.max_residual)},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass},
                      {"note", c.note}});
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

std::string report_text(const Report& report) {
  std::size_t w = 5;
  for (const CheckRecord& c : report.checks) w = std::max(w, c.name.size());
  std::ostringstream out;
  out << "suite " << report.suite << ", centers [";
  for (std::size_t i = 0; i < report.centers.size(); ++i) out << (i ? ", " : "") << report.centers[i];
  out << "], seed " << report.seed << "\n";
  out << std::left << std::setw(static_cast<int>(w)) << "check" << "  " << std::setw(6) << "points" << "  "
      << std::setw(10) << "residual" << "  " << std::setw(10) << "tolerance" << "  status\n";
  for (const CheckRecord& c : report.checks) {
    out << std::left << std::setw(static_cast<int>(w)) << c.name << "  " << std::right << std::setw(6) << c.points
        << "  " << std::setw(10) << sci(c.max_residual) << "  " << std::setw(10) << sci(c.tolerance) << "  "
        << (c.pass ? "pass" : "FAIL");
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  }
  out << (report.all_pass() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

std::string polytope_json(const CenterConfig& config, const MomentPolytope& poly) {
  json j;
  j["centers"] = config.centers();
  json hp = json::array();
  for (const HalfPlane& h : poly.halfplanes) hp.push_back({{"a", h.a}, {"b", h.b}, {"k", h.k}});
  j["halfplanes"] = hp;
  json vs = json::array();
  for (const Eigen::Vector2d& v : poly.vertices) vs.push_back({v.x(), v.y()});
  j["vertices"] = vs;
  json edges = json::array();
  for (const BoundaryPiece& p : poly.pieces) {
    json e{{"label", p.label},
           {"halfplane", p.halfplane},
           {"start", {p.start.x(), p.start.y()}},
           {"direction", {p.direction.x(), p.direction.y()}}};
    e["end"] = p.end ? json{p.end->x(), p.end->y()} : json(nullptr);
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

void write_polytope_csv(std::ostream& out, const MomentPolytope& poly) {
  const auto old = out.precision(17);
  out << "kind,index,a,b,k,mu1,mu2\n";
  for (std::size_t m = 0; m < poly.halfplanes.size(); ++m) {
    const HalfPlane& h = poly.halfplanes[m];
    out << "halfplane," << m << ',' << h.a << ',' << h.b << ',' << h.k << ",,\n";
  }
  for (std::size_t m = 0; m < poly.vertices.size(); ++m)
    out << "vertex," << m + 1 << ",,,," << poly.vertices[m].x() << ',' << poly.vertices[m].y() << '\n';
  out.precision(old);
}

std::string matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(row);
  }
  return rows.dump();
}

std::string matrix_json(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back({m(i, k).real(), m(i, k).imag()});
    rows.push_back(row);
  }
  return rows.dump();
}

}  // namespace ghlab
