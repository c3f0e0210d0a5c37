#pragma once

#include <string>
#include <vector>

#include "kled/rational.hpp"

namespace kled {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  double worst = 0.0;  // worst observed error (or mismatch count for table checks)
  double tolerance = 0.0;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckOutcome> checks;
  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
};

struct VerifyOptions {
  double duality_tol = 1e-9;
  double gradient_tol = 1e-6;
  double cumulant_tol = 1e-4;
  double normalization_tol = 1e-6;
  double mle_tol = 1e-6;
  // When nonempty, restricts the beta-parameterized suites to these values.
  std::vector<Exponent> betas;
};

// The representative exponents exercised by default: {-1, 0, 1/2, 1, 4/3, 3/2, 2}.
std::vector<Exponent> default_beta_set();

SuiteReport run_duality_suite(const VerifyOptions& opt = {});
SuiteReport run_gradient_suite(const VerifyOptions& opt = {});
SuiteReport run_table_suite(const VerifyOptions& opt = {});
SuiteReport run_normalization_suite(const VerifyOptions& opt = {});
SuiteReport run_mle_suite(const VerifyOptions& opt = {});

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const VerifyOptions& opt = {});
std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt = {});

}  // namespace kled
