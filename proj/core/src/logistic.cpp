#include "kled/logistic.hpp"

#include <cmath>

#include "kled/errors.hpp"
#include "kled/extfun.hpp"

namespace kled {

LogisticParams make_logistic_params(const Exponent& alpha, const Exponent& beta, double c) {
  if (c <= 0) throw InvalidParams("extended logistic loss requires c > 0");
  if (!(beta.value <= alpha.value) || !(alpha.value <= 2.0)) {
    throw InvalidParams("extended logistic loss requires beta <= alpha <= 2");
  }
  return LogisticParams{alpha, beta, c};
}

LogisticClass legendre_class(const LogisticParams& params) {
  const Exponent& a = params.alpha;
  const Exponent& b = params.beta;
  if (params.c <= 0 || b.value > a.value || a.value > 2.0) return {LogisticCase::Invalid, {}};
  if (a.is(1) && b.is(1)) return {LogisticCase::BernoulliCase, DomainInterval::all()};
  if (a.is(2) && b.is(1)) return {LogisticCase::PoissonCase, DomainInterval::all()};
  if (b.value < 1.0 && b.value < a.value) {
    return {LogisticCase::BridgeCase, DomainInterval::below(shift_constant(b, params.c))};
  }
  return {LogisticCase::Invalid, {}};
}

namespace {

double softplus(double theta) {
  return theta > 0 ? theta + std::log1p(std::exp(-theta)) : std::log1p(std::exp(theta));
}

LogisticClass checked_class(const LogisticParams& params) {
  LogisticClass cls = legendre_class(params);
  if (cls.kind == LogisticCase::Invalid) {
    throw InvalidParams("parameters outside the admissible extended logistic cases");
  }
  return cls;
}

double exp_raw(double theta, const LogisticParams& params) {
  return exp_ext_raw(theta, {params.beta, params.c, Branch::Positive});
}

}  // namespace

double loss(double theta, const LogisticParams& params) {
  LogisticClass cls = checked_class(params);
  if (!cls.domain.contains(theta)) throw DomainError("theta outside dom(f_{alpha,beta,c})");
  switch (cls.kind) {
    case LogisticCase::BernoulliCase: return softplus(theta);
    case LogisticCase::PoissonCase: return params.c * std::exp(theta);
    default: break;
  }
  double e = exp_raw(theta, params);
  return log_ext_raw(params.c + e, {params.alpha, params.c, Branch::Positive});
}

double loss_grad(double theta, const LogisticParams& params) {
  LogisticClass cls = checked_class(params);
  if (!cls.domain.interior_contains(theta)) {
    throw DomainError("theta outside dom(f_{alpha,beta,c})");
  }
  switch (cls.kind) {
    case LogisticCase::BernoulliCase: return 1.0 / (1.0 + std::exp(-theta));
    case LogisticCase::PoissonCase: return params.c * std::exp(theta);
    default: break;
  }
  double e = exp_raw(theta, params);
  return std::pow(e, 2.0 - params.beta.value) /
         std::pow(params.c + e, 2.0 - params.alpha.value);
}

double loss_hess(double theta, const LogisticParams& params) {
  LogisticClass cls = checked_class(params);
  if (!cls.domain.interior_contains(theta)) {
    throw DomainError("theta outside dom(f_{alpha,beta,c})");
  }
  switch (cls.kind) {
    case LogisticCase::BernoulliCase: {
      double s = 1.0 / (1.0 + std::exp(-theta));
      return s * (1.0 - s);
    }
    case LogisticCase::PoissonCase: return params.c * std::exp(theta);
    default: break;
  }
  double a = params.alpha.value, b = params.beta.value, c = params.c;
  double e = exp_raw(theta, params);
  return ((a - b) + (2.0 - b) * c / e) * std::pow(e, 4.0 - 2.0 * b) /
         std::pow(c + e, 3.0 - a);
}

double log_density_logistic(double b, double theta, const LogisticParams& params, double sigma2) {
  if (sigma2 <= 0) throw InvalidParams("log_density_logistic requires sigma2 > 0");
  LogisticClass cls = checked_class(params);
  if (cls.kind == LogisticCase::BernoulliCase && b != 0.0 && b != 1.0) {
    throw DomainError("Bernoulli support is {0,1}");
  }
  if (cls.kind == LogisticCase::PoissonCase && (b < 0.0 || std::floor(b) != b)) {
    throw DomainError("Poisson support is Z+");
  }
  return (b * theta - loss(theta, params)) / sigma2;
}

double transformed_loss(double c_label, double x, const LegendrePair& pair) {
  double shifted = c_label + grad_psi(x, pair);
  if (!pair.dom_phi.interior_contains(shifted)) {
    throw DomainError("c + grad Psi(x) outside int(dom Phi)");
  }
  return grad_phi(shifted, pair);
}

double psi_K(double theta, int K) {
  if (K < 2 || K % 2 != 0) {
    throw DomainError("psi_K requires an even K >= 2 (beta = K/(K-1) in R_e)");
  }
  double m = static_cast<double>(K - 1);
  return m / K * std::pow(theta / m, K);
}

ExtendedReal solve_theta_for_mean(const LogisticParams& params, double mu) {
  LogisticClass cls = checked_class(params);
  if (cls.kind == LogisticCase::BernoulliCase) {
    if (mu < 0.0 || mu > 1.0) throw DomainError("Bernoulli mean must lie in [0,1]");
    if (mu == 0.0) return ExtendedReal::neg_inf();
    if (mu == 1.0) return ExtendedReal::pos_inf();
    return std::log(mu / (1.0 - mu));
  }
  if (mu < 0.0) throw DomainError("mean must be nonnegative");
  if (mu == 0.0) return ExtendedReal::neg_inf();
  if (cls.kind == LogisticCase::PoissonCase) return std::log(mu / params.c);

  // BridgeCase: loss_grad is strictly increasing from 0 to +inf on
  // (-inf, c_{2-beta}); safeguarded Newton with a bisection fallback.
  double hi = cls.domain.threshold;
  double lo = hi - 1.0;
  while (loss_grad(lo, params) > mu) lo = hi - 2.0 * (hi - lo);
  double up = hi - 1e-3 * (hi - lo);
  while (loss_grad(up, params) < mu) up = hi - 0.5 * (hi - up);
  double theta = 0.5 * (lo + up);
  for (int it = 0; it < 200; ++it) {
    double g = loss_grad(theta, params) - mu;
    if (std::abs(g) <= 1e-10 * std::max(1.0, std::abs(mu))) return theta;
    if (g > 0) {
      up = theta;
    } else {
      lo = theta;
    }
    double step = g / loss_hess(theta, params);
    double next = theta - step;
    if (!(next > lo) || !(next < up)) next = 0.5 * (lo + up);
    theta = next;
  }
  return theta;
}

}  // namespace kled
