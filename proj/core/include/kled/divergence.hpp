#pragma once

#include "kled/extended_real.hpp"
#include "kled/legendre.hpp"

namespace kled {

/**
 * Bregman divergence D_f(x|y) = f(x) - f(y) - <x-y, grad f(y)> for the
 * chosen side of the pair.
 *
 * y on the boundary of dom f returns +infinity instead of erroring so that
 * estimation paths can detect boundary solutions; y outside dom f throws.
 */
double bregman(const LegendrePair& pair, double x, double y, Side side = Side::Phi);

/**
 * Canonical divergence d_Phi(x;theta) = Phi(x) + Psi(theta) - x theta,
 * evaluated with the constant-free closed forms.
 *
 * For beta != 0 this equals D_Phi(x|grad Psi(theta)); at beta = 0 the two
 * differ by the additive constant 1 because the constant-free Psi is the
 * conjugate of Phi only up to a constant there. Minimizers are unaffected.
 * theta may sit on the boundary of dom Psi (non-open canonical domains).
 */
double canonical(const LegendrePair& pair, double x, double theta);

// d_Phi(b;theta) with roles (b, theta) in dom Phi x dom Psi.
double bregman_beta(double b, double theta, const LegendrePair& pair);

// d_Psi(theta;b) with roles (theta, b) in dom Psi x int(dom Phi); the same
// symmetric expression with swapped argument roles.
double bregman_tweedie(double theta, double b, const LegendrePair& pair);

/**
 * beta-divergence D_beta(b|u) = integral_u^b x^{beta-2}(b-x) dx in closed
 * form. For beta <= 2 the admissible (b,u) region coincides with the
 * quasi-likelihood domain; for beta > 2 the nonnegativity rule
 * x^{beta-2} >= 0 applies (full plane for R_e, right half line otherwise).
 */
double beta_divergence(double b, double u, const Exponent& beta,
                       Branch branch = Branch::Positive);

struct QuasiDomain {
  DomainInterval omega_l;  // observations b
  DomainInterval omega_r;  // means mu
};

// Effective domain of the quasi-likelihood with power variance V(x) = x^{2-beta};
// empty for beta > 2, where no such quasi-likelihood exists.
QuasiDomain quasi_domain(const Exponent& beta, Branch branch = Branch::Positive);

// Q(b;mu) = -D_beta(b|mu)/sigma^2 <= 0 on quasi_domain(beta).
double quasi_likelihood(double b, double mu, const Exponent& beta, double sigma2,
                        Branch branch = Branch::Positive);

/**
 * argmin over theta of the canonical divergence d_Phi(b_avg;theta) in the
 * extended reals: grad Phi(b_avg) when b_avg is interior, +/-infinity (sign
 * from the one-sided gradient limit) when b_avg sits on the boundary.
 */
ExtendedReal extended_argmin(const LegendrePair& pair, double b_avg);

// Fisher information 1/(sigma^2 mu^{2-beta}); requires V(mu) > 0.
double fisher_information(const Exponent& beta, double sigma2, double mu);

// dom V = { mu : V(mu) = mu^{2-beta} >= 0 }.
DomainInterval variance_function_domain(const Exponent& beta);

enum class DivergenceFamily {
  GenericBregman,
  CanonicalForm,
  BregmanBeta,
  BregmanTweedie,
  BetaDivergence,
  QuasiLikelihood,
};

struct DivergenceSpec {
  DivergenceFamily family = DivergenceFamily::GenericBregman;
  LegendrePair pair;
  double sigma2 = 1.0;      // quasi-likelihood only
  Side side = Side::Phi;    // GenericBregman only
};

double evaluate(const DivergenceSpec& spec, double first, double second);

const char* family_name(DivergenceFamily f);

}  // namespace kled
