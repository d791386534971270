#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "uq2/algebra.hpp"
#include "uq2/report.hpp"

namespace uq2 {

struct ConfigError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  double abs_q = 0.5;
  double theta = 0.6180339887498949;
  int l2_max = 10;
  int k_min = -16;
  int k_max = 16;
  int m_max = 60;
  int fourier_order = 64;
  double tol = 1e-10;
  std::vector<std::string> suites;  // empty selects all
  std::uint64_t seed = 20240601;
  std::string out = "reports";
  int workers = 2;

  void validate() const;  // throws ConfigError
  std::vector<std::pair<std::string, double>> params() const;
};

const std::vector<std::string>& suite_names();

// Twenty non-scalar monomials of degree <= 2, in a fixed order.
std::vector<Monomial> witness_test_set();

// Runs one suite; exceptions are captured in Report::error.
Report run_suite(const std::string& name, const RunConfig& cfg);
// Runs the selected suites on up to cfg.workers threads; reports come back in selection order.
std::vector<Report> run_suites(const RunConfig& cfg);

}  // namespace uq2
