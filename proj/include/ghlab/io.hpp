#pragma once

// Config ingestion and emitters for reports, polytopes and matrices.

#include <Eigen/Core>
#include <iosfwd>
#include <string>
#include <vector>

#include "ghlab/errors.hpp"
#include "ghlab/symplectic.hpp"
#include "ghlab/verify.hpp"

namespace ghlab {

/// Malformed input; the message carries the line/column or field at fault.
class ConfigError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Parses a JSON run configuration:
/// {"centers": [..], "C1": x, "C2": x, "seed": k, "output_path": "...",
///  "tolerances": {"fd_step": .., "ricci_step": .., ...}}.
/// `source` names the input in diagnostics.
RunConfig parse_run_config(const std::string& text, const std::string& source = "config");

RunConfig load_run_config(const std::string& path);

/// "a,b,c" -> {a, b, c}; `what` names the option in diagnostics.
std::vector<double> parse_number_list(const std::string& text, const std::string& what);

std::string report_json(const Report& report);
std::string report_text(const Report& report);

std::string polytope_json(const CenterConfig& config, const MomentPolytope& poly);
void write_polytope_csv(std::ostream& out, const MomentPolytope& poly);

std::string matrix_json(const Eigen::MatrixXd& m);
std::string matrix_json(const Eigen::MatrixXcd& m);

}  // namespace ghlab
