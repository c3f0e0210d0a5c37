#pragma once

#include <functional>

namespace kled {

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

// Adaptive Simpson quadrature on [a, b] with absolute tolerance and an
// evaluation cap (default 10^6).
IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol = 1e-10, long max_evals = 1000000);

struct SeriesResult {
  double value = 0.0;
  long terms = 0;
  bool converged = false;
  bool diverged = false;
};

// Sum of term(0) + term(1) + ... for eventually-decreasing nonnegative terms;
// stops when terms fall below rel_tol * |partial sum| and keep decreasing.
SeriesResult sum_series(const std::function<double(long)>& term, double rel_tol = 1e-14,
                        long max_terms = 10000000);

}  // namespace kled
