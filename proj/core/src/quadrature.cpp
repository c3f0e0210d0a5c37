#include "kled/quadrature.hpp"

#include <cmath>

namespace kled {

namespace {

struct SimpsonState {
  const std::function<double(double)>* f;
  long evals = 0;
  long max_evals = 0;
  bool capped = false;

  double eval(double x) {
    ++evals;
    if (evals > max_evals) capped = true;
    return (*f)(x);
  }
};

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb, double whole,
             double tol, int depth, double& err_acc) {
  if (st.capped) return whole;
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = st.eval(lm), frm = st.eval(rm);
  double left = simpson(fa, flm, fm, a, m);
  double right = simpson(fm, frm, fb, m, b);
  double err = (left + right - whole) / 15.0;
  if (depth <= 0 || std::abs(err) <= tol) {
    err_acc += std::abs(err);
    return left + right + err;
  }
  return adapt(st, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, err_acc) +
         adapt(st, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, err_acc);
}

}  // namespace

IntegrationResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                     double abs_tol, long max_evals) {
  IntegrationResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }
  SimpsonState st{&f, 0, max_evals, false};
  double fa = st.eval(a), fb = st.eval(b), fm = st.eval(0.5 * (a + b));
  double whole = simpson(fa, fm, fb, a, b);
  double err_acc = 0.0;
  out.value = adapt(st, a, b, fa, fm, fb, whole, abs_tol, 48, err_acc);
  out.error_estimate = err_acc;
  out.evaluations = st.evals;
  out.converged = !st.capped && std::isfinite(out.value);
  return out;
}

SeriesResult sum_series(const std::function<double(long)>& term, double rel_tol, long max_terms) {
  SeriesResult out;
  double prev = 0.0;
  int small_run = 0;
  for (long k = 0; k < max_terms; ++k) {
    double t = term(k);
    out.value += t;
    ++out.terms;
    if (!std::isfinite(out.value) || out.value > 1e300) {
      out.diverged = true;
      return out;
    }
    double scale = std::max(1e-300, std::abs(out.value));
    if (std::abs(t) <= rel_tol * scale && std::abs(t) <= std::abs(prev)) {
      if (++small_run >= 4) {
        out.converged = true;
        return out;
      }
    } else {
      small_run = 0;
    }
    prev = t;
  }
  return out;
}

}  // namespace kled
