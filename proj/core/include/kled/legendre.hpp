#pragma once

#include <string>
#include <vector>

#include "kled/domain.hpp"
#include "kled/extfun.hpp"
#include "kled/rational.hpp"

namespace kled {

enum class Side { Phi, Psi };

/**
 * Conjugate base-function pair for a power exponent beta:
 *
 *   Phi(x) = -log x | x log x - x | x^beta/(beta(beta-1))      (mean side)
 *   Psi(t) = -ln(-t) | exp(t) | ((beta-1)t)^{beta/(beta-1)}/beta (canonical side)
 *
 * with grad Phi = ln_{2-beta} and grad Psi = exp_{2-beta} mutually inverse on
 * the domain interiors. All constant terms are dropped, so conjugacy holds up
 * to an additive constant (exactly, except the -1 offset at beta = 0).
 *
 * For beta in (1,2) outside R_e the pair is still constructible on the
 * reduced (R+, R+) domains for grid evaluation, but `legendre` is false:
 * the gradient stays finite at 0, so steepness fails there.
 */
struct LegendrePair {
  Exponent beta;
  Branch branch = Branch::Positive;
  DomainInterval dom_phi;
  DomainInterval dom_psi;
  bool legendre = true;
};

DomainInterval domain_phi(const Exponent& beta, Branch branch = Branch::Positive);
DomainInterval domain_psi(const Exponent& beta, Branch branch = Branch::Positive);

// Throws InvalidParams when no admissible domain exists for beta/branch
// (e.g. a negative branch outside the dual R_e cases).
LegendrePair make_legendre_pair(const Exponent& beta, Branch branch = Branch::Positive);

double phi(double x, const LegendrePair& pair);
double psi(double theta, const LegendrePair& pair);

// grad Phi = ln_{2-beta}, grad Psi = exp_{2-beta}; arguments must be interior.
double grad_phi(double x, const LegendrePair& pair);
double grad_psi(double theta, const LegendrePair& pair);

// Conjugate of the chosen side, computed through the partner's closed form
// (constant-free convention).
double conjugate_value(const LegendrePair& pair, Side side, double x);

struct GridSpec {
  double lo = -8.0;
  double hi = 8.0;
  int count = 257;
};

struct PropertyCheck {
  bool passed = false;
  double observed = 0.0;
  std::string detail;
};

/**
 * Numeric audit of the Legendre properties on a grid: strict convexity
 * (positive second divided differences), steepness (gradient diverging along
 * sequences approaching each finite boundary point), a fitted linear-minorant
 * coercivity estimate, and the mutual-inverse gradient identity.
 *
 * This is an auditor, not a prover; tolerances are documented in the checks.
 */
struct LegendreVerifyReport {
  PropertyCheck convexity_phi, convexity_psi;
  PropertyCheck steepness_phi, steepness_psi;
  PropertyCheck coercivity_phi, coercivity_psi;  // informational, not part of all_passed
  PropertyCheck gradient_inverse;
  bool coercivity_phi_expected = false;  // 0 in int(dom Psi)
  bool coercivity_psi_expected = false;  // 0 in int(dom Phi)

  bool all_passed() const {
    return convexity_phi.passed && convexity_psi.passed && steepness_phi.passed &&
           steepness_psi.passed && gradient_inverse.passed;
  }
};

LegendreVerifyReport verify_legendre(const LegendrePair& pair, const GridSpec& box = {});

}  // namespace kled
