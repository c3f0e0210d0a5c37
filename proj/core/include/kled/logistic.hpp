#pragma once

#include "kled/domain.hpp"
#include "kled/extended_real.hpp"
#include "kled/legendre.hpp"
#include "kled/rational.hpp"

namespace kled {

/**
 * Parameters of the convex extended logistic loss
 *
 *   f_{alpha,beta,c}(theta) = ln_{2-alpha,c}(c + exp_{2-beta,c}(theta)),
 *
 * with c > 0 and beta <= alpha <= 2. c is kept explicit (raw forms) because
 * the threshold c_{2-beta} = c^{beta-1}/(1-beta) sets the domain.
 */
struct LogisticParams {
  Exponent alpha;
  Exponent beta;
  double c = 1.0;
};

LogisticParams make_logistic_params(const Exponent& alpha, const Exponent& beta, double c);

enum class LogisticCase {
  BernoulliCase,  // alpha = beta = 1: log(1 + e^theta), dom R
  PoissonCase,    // alpha = 2, beta = 1: c e^theta, dom R
  BridgeCase,     // beta < alpha <= 2, beta < 1: dom (-inf, c_{2-beta})
  Invalid,
};

struct LogisticClass {
  LogisticCase kind = LogisticCase::Invalid;
  DomainInterval domain;
};

// Decides which convexity/analyticity case the parameters fall in, with the
// resulting effective domain.
LogisticClass legendre_class(const LogisticParams& params);

double loss(double theta, const LogisticParams& params);

// Mean mu = (exp_{2-beta,c}(theta))^{2-beta} / (c + exp_{2-beta,c}(theta))^{2-alpha};
// sigmoid and c e^theta in the two degenerate cases.
double loss_grad(double theta, const LogisticParams& params);

// Second derivative [(alpha-beta) + (2-beta) c/E] E^{4-2beta}/(c+E)^{3-alpha}
// with E = exp_{2-beta,c}(theta); strictly positive on the domain.
double loss_hess(double theta, const LogisticParams& params);

// Unnormalized log density (b theta - f_{alpha,beta,c}(theta))/sigma2.
// Bernoulli support {0,1}, Poisson support Z+; the bridge support between
// them is not asserted.
double log_density_logistic(double b, double theta, const LogisticParams& params, double sigma2);

// Legendre-transformed loss L(c,x) = argmax_z <c,z> - D_Psi(z|x)
//                                  = grad Phi(c + grad Psi(x)).
double transformed_loss(double c_label, double x, const LegendrePair& pair);

// Psi for beta = K/(K-1): ((K-1)/K) (theta/(K-1))^K, K even.
double psi_K(double theta, int K);

// Inverts the strictly increasing mean map loss_grad(theta) = mu with a
// safeguarded Newton/bisection iteration (tolerance 1e-10). Boundary means
// (e.g. Bernoulli mu in {0,1}) give +/-infinity.
ExtendedReal solve_theta_for_mean(const LogisticParams& params, double mu);

}  // namespace kled
