#include "kled/verify.hpp"

#include <cmath>
#include <functional>
#include <random>

#include "kled/divergence.hpp"
#include "kled/errors.hpp"
#include "kled/extfun.hpp"
#include "kled/kled.hpp"
#include "kled/logistic.hpp"
#include "tables_reference.hpp"

namespace kled {

std::vector<Exponent> default_beta_set() {
  return {exponent_from(Rational(-1, 1)), exponent_from(Rational(0, 1)),
          exponent_from(Rational(1, 2)),  exponent_from(Rational(1, 1)),
          exponent_from(Rational(4, 3)),  exponent_from(Rational(3, 2)),
          exponent_from(Rational(2, 1))};
}

namespace {

std::vector<Exponent> beta_set(const VerifyOptions& opt) {
  return opt.betas.empty() ? default_beta_set() : opt.betas;
}

std::vector<double> interior_grid(const DomainInterval& dom, int n) {
  std::vector<double> xs;
  xs.reserve(n);
  DomainInterval in = dom.interior();
  if (in.kind == IntervalKind::All) {
    for (int i = 0; i < n; ++i) xs.push_back(-4.0 + 8.0 * i / (n - 1));
    return xs;
  }
  // geometric grid in (0.05, 6), mirrored for negative half lines
  double sgn = in.upper() <= 0.0 ? -1.0 : 1.0;
  double off = in.kind == IntervalKind::BelowThreshold ? in.upper() : 0.0;
  if (off != 0.0) sgn = -1.0;
  for (int i = 0; i < n; ++i) {
    double t = std::exp(std::log(0.05) + (std::log(6.0) - std::log(0.05)) * i / (n - 1));
    xs.push_back(off + sgn * t);
  }
  return xs;
}

double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
  return r;
}

// k-th order central difference stencil with half-integer offsets.
double kth_central_diff(const std::function<double(double)>& f, double x, int k, double h) {
  double acc = 0.0;
  for (int j = 0; j <= k; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    acc += sign * binom(k, j) * f(x + (k / 2.0 - j) * h);
  }
  return acc / std::pow(h, k);
}

double golden_min(const std::function<double(double)>& f, double a, double b, int iters = 220) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++i) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

CheckOutcome make_outcome(const std::string& name, double worst, double tol,
                          std::string detail = "") {
  CheckOutcome c;
  c.name = name;
  c.worst = worst;
  c.tolerance = tol;
  c.passed = worst <= tol;
  c.detail = std::move(detail);
  return c;
}

}  // namespace

SuiteReport run_duality_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  rep.suite = "duality";
  for (const Exponent& beta : beta_set(opt)) {
    LegendrePair pair = make_legendre_pair(beta);
    auto xs = interior_grid(pair.dom_phi, 12);
    double worst = 0.0;
    for (double x : xs) {
      for (double y : xs) {
        double lhs = bregman(pair, x, y, Side::Phi);
        double rhs = bregman(pair, grad_phi(y, pair), grad_phi(x, pair), Side::Psi);
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
      }
    }
    rep.checks.push_back(make_outcome("duality beta=" + beta.rat.str(), worst, opt.duality_tol));
  }
  return rep;
}

SuiteReport run_gradient_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  rep.suite = "gradient";
  for (const Exponent& beta : beta_set(opt)) {
    LegendrePair pair = make_legendre_pair(beta);
    double worst_phi = 0.0, worst_psi = 0.0;
    for (double x : interior_grid(pair.dom_phi, 9)) {
      double h = 1e-6 * std::max(0.05, std::abs(x));
      double fd = central_diff([&](double t) { return phi(t, pair); }, x, h);
      double g = grad_phi(x, pair);
      worst_phi = std::max(worst_phi, std::abs(fd - g) / std::max(1.0, std::abs(g)));
    }
    for (double t : interior_grid(pair.dom_psi, 9)) {
      double h = 1e-6 * std::max(0.05, std::abs(t));
      double fd = central_diff([&](double u) { return psi(u, pair); }, t, h);
      double g = grad_psi(t, pair);
      worst_psi = std::max(worst_psi, std::abs(fd - g) / std::max(1.0, std::abs(g)));
    }
    rep.checks.push_back(
        make_outcome("grad Phi beta=" + beta.rat.str(), worst_phi, opt.gradient_tol));
    rep.checks.push_back(
        make_outcome("grad Psi beta=" + beta.rat.str(), worst_psi, opt.gradient_tol));

    // cumulants against nested central differences, orders k <= 4; the step
    // scales with |theta| because the derivative ratios of the power forms do
    try {
      KledModel model = make_model(beta, 1.0);
      double worst_c = 0.0;
      for (int k = 2; k <= 4; ++k) {
        if (!model.order.covers(k) && !eta_is_zero(k, beta)) continue;
        for (double t : interior_grid(cumulant_domain(beta, k, model.branch), 5)) {
          // the power forms are not smooth at 0 and their derivative ratios
          // scale like 1/t^2, so the step follows |t|; the exp family is
          // shift invariant and takes a fixed step; identically-zero orders
          // difference a polynomial, where a large step kills the roundoff
          if (!beta.is(1) && std::abs(t) < 0.3) continue;
          double h = eta_is_zero(k, beta) ? 0.5
                     : beta.is(1)         ? 3e-3
                                          : 3e-3 * std::abs(t);
          bool stencil_ok = true;
          for (int j = 0; j <= k; ++j) {
            if (!model.pair.dom_psi.interior_contains(t + (k / 2.0 - j) * h)) stencil_ok = false;
          }
          if (!stencil_ok) continue;
          double fd =
              kth_central_diff([&](double u) { return psi(u, model.pair); }, t, k, h);
          double exact = kth_cumulant(t, k, model);
          worst_c = std::max(worst_c, std::abs(fd - exact) / std::max(1.0, std::abs(exact)));
        }
      }
      rep.checks.push_back(
          make_outcome("cumulants k<=4 beta=" + beta.rat.str(), worst_c, opt.cumulant_tol));
    } catch (const DomainError&) {
      // no model with power variance for this exponent
    }
  }

  // extended logistic loss derivative sweeps
  double worst_g = 0.0, worst_h = 0.0;
  auto probe = [&](const LogisticParams& params) {
    LogisticClass cls = legendre_class(params);
    double top = cls.domain.kind == IntervalKind::BelowThreshold ? cls.domain.threshold : 3.0;
    for (double off : {0.3, 1.0, 3.0, 6.0}) {
      double theta = top - off;
      double h = 1e-6 * std::max(1.0, std::abs(theta));
      double fg = central_diff([&](double u) { return loss(u, params); }, theta, h);
      double g = loss_grad(theta, params);
      worst_g = std::max(worst_g, std::abs(fg - g) / std::max(1.0, std::abs(g)));
      double fh = central_diff([&](double u) { return loss_grad(u, params); }, theta, h);
      double hh = loss_hess(theta, params);
      worst_h = std::max(worst_h, std::abs(fh - hh) / std::max(1.0, std::abs(hh)));
    }
  };
  for (double c : {1.0, 4.0}) {
    for (int ai = 11; ai <= 19; ai += 2) {
      probe(make_logistic_params(exponent_from(Rational(ai, 10)), exponent_from(Rational(7, 10)),
                                 c));
    }
    for (int bi = -1; bi <= 7; bi += 2) {
      probe(make_logistic_params(exponent_from(Rational(11, 10)), exponent_from(Rational(bi, 10)),
                                 c));
    }
  }
  probe(make_logistic_params(exponent_from(1), exponent_from(1), 1.0));
  probe(make_logistic_params(exponent_from(2), exponent_from(1), 1.0));
  rep.checks.push_back(make_outcome("logistic loss_grad sweep", worst_g, opt.gradient_tol));
  rep.checks.push_back(make_outcome("logistic loss_hess sweep", worst_h, opt.gradient_tol));
  return rep;
}

SuiteReport run_table_suite(const VerifyOptions&) {
  SuiteReport rep;
  rep.suite = "tables";

  auto tally = [&](const std::string& name, long mismatches, long total, std::string detail) {
    CheckOutcome c = make_outcome(name, static_cast<double>(mismatches), 0.0, std::move(detail));
    c.detail += " (" + std::to_string(total) + " rows)";
    rep.checks.push_back(c);
  };

  {
    long bad = 0, total = 0;
    std::string detail;
    for (const auto& row : ref::extfun_domain_rows()) {
      ++total;
      Exponent beta = exponent_from(row.beta);
      if (domain_exp(beta, row.branch).str() != row.dom_exp ||
          domain_log(beta, row.branch).str() != row.dom_log) {
        ++bad;
        detail += "beta=" + row.beta.str() + " ";
      }
    }
    tally("exp/log domains", bad, total, detail);
  }
  {
    long bad = 0, total = 0;
    std::string detail;
    for (const auto& row : ref::pair_domain_rows()) {
      ++total;
      Exponent beta = exponent_from(row.beta);
      if (domain_phi(beta, row.branch).str() != row.dom_phi ||
          domain_psi(beta, row.branch).str() != row.dom_psi) {
        ++bad;
        detail += "beta=" + row.beta.str() + " ";
      }
    }
    tally("Phi/Psi domains", bad, total, detail);
  }
  {
    long bad = 0, total = 0;
    std::string detail;
    for (const auto& row : ref::quasi_rows()) {
      ++total;
      QuasiDomain q = quasi_domain(exponent_from(row.beta), row.branch);
      if (q.omega_l.str() != row.omega_l || q.omega_r.str() != row.omega_r) {
        ++bad;
        detail += "beta=" + row.beta.str() + " ";
      }
    }
    tally("quasi-likelihood domains", bad, total, detail);
  }
  {
    long bad = 0, total = 0;
    std::string detail;
    for (const auto& row : ref::cumulant_domain_rows()) {
      ++total;
      if (cumulant_domain(exponent_from(row.beta), row.k, row.branch).str() != row.dom) {
        ++bad;
        detail += "beta=" + row.beta.str() + ",k=" + std::to_string(row.k) + " ";
      }
    }
    tally("cumulant domains k<=5", bad, total, detail);
  }
  {
    long bad = 0, total = 0;
    std::string detail;
    for (const auto& row : ref::characterization_rows()) {
      ++total;
      KledRow got = kled_classification(exponent_from(row.beta));
      bool ok = got.distribution == row.distribution && got.support == row.support &&
                got.dom_phi == row.dom_phi && got.dom_psi == row.dom_psi &&
                got.dom_grad1 == row.dom_grad1 && got.dom_grad2 == row.dom_grad2 &&
                got.dom_gradK == row.dom_gradK && got.tweedie_dom_psi == row.tweedie_dom_psi &&
                got.order.str() == row.order;
      if (!ok) {
        ++bad;
        detail += "beta=" + row.beta.str() + " ";
      }
    }
    tally("family characterization", bad, total, detail);
  }
  return rep;
}

SuiteReport run_normalization_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  rep.suite = "normalization";
  const double tol = opt.normalization_tol;

  for (double s2 : {1.0, 2.0}) {
    KledModel normal = make_model(exponent_from(2), s2);
    auto z = normalize(normal, 0.0, BaseWeightKind::Trivial);
    double expect = std::sqrt(2.0 * M_PI * s2);
    rep.checks.push_back(make_outcome("normal sqrt(2 pi s2), s2=" + format_real(s2),
                                      z.ok() ? std::abs(z.value - expect) : 1e300, tol));
  }
  {
    KledModel poisson = make_model(exponent_from(1), 1.0);
    for (double theta : {0.0, 1.0}) {
      auto z = normalize(poisson, theta, BaseWeightKind::PoissonFactorial);
      double expect = std::exp(std::exp(theta));
      rep.checks.push_back(make_outcome("poisson e^lambda, theta=" + format_real(theta),
                                        z.ok() ? std::abs(z.value - expect) : 1e300, tol));
    }
  }
  {
    struct GammaCase {
      double s2, theta;
    };
    for (auto [s2, theta] : {GammaCase{1.0, -1.0}, GammaCase{1.0, -2.0}, GammaCase{0.5, -1.0}}) {
      KledModel gamma = make_model(exponent_from(0), s2);
      auto z = normalize(gamma, theta, BaseWeightKind::GammaShape);
      double expect = std::tgamma(1.0 / s2) * std::pow(s2 / (-theta), 1.0 / s2);
      rep.checks.push_back(
          make_outcome("gamma normalizer s2=" + format_real(s2) + " theta=" + format_real(theta),
                       z.ok() ? std::abs(z.value - expect) : 1e300, tol));
    }
  }
  {
    KledModel ig = make_model(exponent_from(-1), 1.0);
    auto z = normalize(ig, -0.5, BaseWeightKind::InverseGaussian);
    double expect = std::exp(-std::sqrt(1.0));  // e^{Psi(theta)} with Psi = -sqrt(-2 theta)
    rep.checks.push_back(make_outcome("inverse Gaussian constant",
                                      z.ok() ? std::abs(z.value - expect) : 1e300, tol));

    auto levy = normalize(ig, 0.0, BaseWeightKind::Trivial);
    CheckOutcome c;
    c.name = "Levy boundary detected non-normalizable";
    c.passed = levy.status == NormalizationResult::Status::NotNormalizable;
    c.worst = c.passed ? 0.0 : 1.0;
    c.detail = levy.note;
    rep.checks.push_back(c);
  }
  return rep;
}

SuiteReport run_mle_suite(const VerifyOptions& opt) {
  SuiteReport rep;
  rep.suite = "mle";
  std::mt19937 rng(20240915);

  auto run_case = [&](const Exponent& beta, std::vector<double> obs, const char* label) {
    KledModel model = make_model(beta, 1.0);
    MleResult mle = mle_theta(obs, model);
    auto objective = [&](double theta) {
      double acc = 0.0;
      for (double b : obs) acc += canonical(model.pair, b, theta);
      return acc;
    };
    double center = mle.theta_hat.value();
    DomainInterval in = model.pair.dom_psi.interior();
    double lo = center - 2.0, hi = center + 2.0;
    if (in.upper() < 1e300) hi = std::min(hi, in.upper() - 1e-9);
    if (in.lower() > -1e300) lo = std::max(lo, in.lower() + 1e-9);
    double numeric = golden_min(objective, lo, hi);
    rep.checks.push_back(make_outcome(std::string("mle vs numeric ") + label,
                                      std::abs(numeric - center), opt.mle_tol));
  };

  {
    std::normal_distribution<double> d(1.3, 0.8);
    std::vector<double> obs(400);
    for (auto& b : obs) b = d(rng);
    run_case(exponent_from(2), obs, "normal");
  }
  {
    std::poisson_distribution<int> d(2.5);
    std::vector<double> obs(400);
    for (auto& b : obs) b = d(rng);
    run_case(exponent_from(1), obs, "poisson");
  }
  {
    std::gamma_distribution<double> d(2.0, 1.5);
    std::vector<double> obs(400);
    for (auto& b : obs) b = d(rng);
    run_case(exponent_from(0), obs, "gamma");
  }
  {
    std::gamma_distribution<double> d(1.5, 1.0);
    std::vector<double> obs(300);
    for (auto& b : obs) b = d(rng) + 0.05;
    run_case(exponent_from(Rational(1, 2)), obs, "compound");
    run_case(exponent_from(Rational(-1, 1)), obs, "inverse gaussian");
  }
  {
    std::normal_distribution<double> d(0.4, 1.1);
    std::vector<double> obs(300);
    for (auto& b : obs) b = d(rng);
    run_case(exponent_from(Rational(4, 3)), obs, "extended normal 4/3");
  }

  // boundary datasets: the sign of the infinity follows the one-sided gradient
  {
    KledModel m = make_model(exponent_from(Rational(1, 2)), 1.0);
    std::vector<double> zeros(5, 0.0);
    MleResult r = mle_theta(zeros, m);
    CheckOutcome c;
    c.name = "boundary -inf (beta=1/2, all-zero)";
    c.passed = r.theta_hat.is_neg_inf() && r.boundary;
    c.worst = c.passed ? 0.0 : 1.0;
    rep.checks.push_back(c);
  }
  {
    KledModel m = make_model(exponent_from(Rational(2, 3)), 1.0, Branch::Negative);
    std::vector<double> zeros(5, 0.0);
    MleResult r = mle_theta(zeros, m);
    CheckOutcome c;
    c.name = "boundary +inf (beta=2/3, negative branch, all-zero)";
    c.passed = r.theta_hat.is_pos_inf() && r.boundary;
    c.worst = c.passed ? 0.0 : 1.0;
    rep.checks.push_back(c);
  }
  return rep;
}

std::vector<std::string> suite_names() {
  return {"duality", "gradient", "tables", "normalization", "mle"};
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opt) {
  if (name == "duality") return run_duality_suite(opt);
  if (name == "gradient") return run_gradient_suite(opt);
  if (name == "tables") return run_table_suite(opt);
  if (name == "normalization") return run_normalization_suite(opt);
  if (name == "mle") return run_mle_suite(opt);
  throw InvalidParams("unknown suite: " + name);
}

std::vector<SuiteReport> run_all_suites(const VerifyOptions& opt) {
  std::vector<SuiteReport> out;
  for (const auto& name : suite_names()) out.push_back(run_suite(name, opt));
  return out;
}

}  // namespace kled
