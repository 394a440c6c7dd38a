#pragma once

// Registry of numerical identity checks grouped into suites, with seeded,
// per-check random streams so that reports are reproducible.

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ghlab/scalar_field.hpp"
#include "ghlab/tolerances.hpp"

namespace ghlab {

struct RunConfig {
  CenterConfig centers{std::vector<double>{0.0}};
  std::optional<double> C1;
  std::optional<double> C2;
  Tolerances tolerances = kDefaultTolerances;
  std::uint64_t seed = 0;
  std::string output_path;
};

struct CheckRecord {
  std::string name;
  std::string identity;
  int points = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string suite;
  std::vector<double> centers;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;  // sorted by name

  bool all_pass() const;
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view s);

/// Random stream for one check: mt19937_64 seeded from (seed, fnv1a(name)).
std::mt19937_64 split_stream(std::uint64_t seed, std::string_view name);

const std::vector<std::string>& suite_names();

/// Names of the checks in `suite` that apply to a configuration with n centers.
std::vector<std::string> check_names(const std::string& suite, int n);

/// Runs every applicable check of the suite in parallel. Throws DomainError for an unknown suite.
Report verify_suite(const RunConfig& config, const std::string& suite);

}  // namespace ghlab
