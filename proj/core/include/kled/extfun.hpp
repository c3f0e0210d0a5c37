#pragma once

#include "kled/domain.hpp"
#include "kled/rational.hpp"

namespace kled {

/**
 * Parameters of the extended exponential exp_{2-beta} and extended logarithm
 * ln_{2-beta}, the deformed exp/log pair that generalizes exp/ln.
 *
 * The equivalence-class forms (c dropped) are the library default; the raw
 * c-parameterized forms are separate operations since the shift constant
 * c_{2-beta} = c^{beta-1}/(1-beta) matters for the extended logistic loss.
 */
struct ExtFunParams {
  Exponent beta;
  double c = 1.0;
  Branch branch = Branch::Positive;
};

// Bijection domains of exp_{2-beta} and ln_{2-beta}. The branch resolves the
// dual R--/R++ regions that exist for beta < 1 in R_e.
DomainInterval domain_exp(const Exponent& beta, Branch branch = Branch::Positive);
DomainInterval domain_log(const Exponent& beta, Branch branch = Branch::Positive);

inline DomainInterval domain_exp(const ExtFunParams& p) { return domain_exp(p.beta, p.branch); }
inline DomainInterval domain_log(const ExtFunParams& p) { return domain_log(p.beta, p.branch); }

// c_{2-beta} = c^{beta-1}/(1-beta); requires beta != 1, c > 0.
double shift_constant(const Exponent& beta, double c);

// exp_{2-beta}(x): exp(x) when beta = 1, ((beta-1)x)^{1/(beta-1)} otherwise.
double exp_ext(double x, const ExtFunParams& p);

// Raw form exp_{2-beta,c}(x) = (c^{beta-1} + (beta-1)x)^{1/(beta-1)},
// with exp_{1,c}(x) = c exp(x). Equals exp_ext shifted by c_{2-beta}.
double exp_ext_raw(double x, const ExtFunParams& p);

// ln_{2-beta}(x): ln(x) when beta = 1, x^{beta-1}/(beta-1) otherwise.
double log_ext(double x, const ExtFunParams& p);

// Raw form ln_{2-beta,c}; inverse of exp_ext_raw on the bijection domains.
double log_ext_raw(double x, const ExtFunParams& p);

}  // namespace kled
