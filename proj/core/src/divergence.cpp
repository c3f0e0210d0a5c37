#include "kled/divergence.hpp"

#include <cmath>
#include <limits>

#include "kled/errors.hpp"

namespace kled {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

double bregman(const LegendrePair& pair, double x, double y, Side side) {
  const DomainInterval& dom = side == Side::Phi ? pair.dom_phi : pair.dom_psi;
  if (!dom.contains(x) || !dom.contains(y)) {
    throw DomainError("bregman arguments outside dom(f)");
  }
  if (!dom.interior_contains(y)) return kInf;  // boundary second argument
  if (side == Side::Phi) {
    return phi(x, pair) - phi(y, pair) - (x - y) * grad_phi(y, pair);
  }
  return psi(x, pair) - psi(y, pair) - (x - y) * grad_psi(y, pair);
}

double canonical(const LegendrePair& pair, double x, double theta) {
  if (!pair.dom_phi.contains(x)) throw DomainError("canonical: x outside dom(Phi)");
  if (!pair.dom_psi.contains(theta)) throw DomainError("canonical: theta outside dom(Psi)");
  return phi(x, pair) + psi(theta, pair) - x * theta;
}

double bregman_beta(double b, double theta, const LegendrePair& pair) {
  return canonical(pair, b, theta);
}

double bregman_tweedie(double theta, double b, const LegendrePair& pair) {
  if (!pair.dom_psi.contains(theta)) throw DomainError("tweedie: theta outside dom(Psi)");
  if (!pair.dom_phi.interior_contains(b)) throw DomainError("tweedie: b outside int(dom(Phi))");
  return psi(theta, pair) + phi(b, pair) - theta * b;
}

QuasiDomain quasi_domain(const Exponent& beta, Branch branch) {
  double b = beta.value;
  if (b > 2.0) return {DomainInterval::empty(), DomainInterval::empty()};
  bool dual = beta.is_even() && branch == Branch::Negative;
  if (b > 1.0) {
    // the R_e rows extend to the whole line; no separate negative region
    if (beta.is_even()) return {DomainInterval::all(), DomainInterval::all()};
    return {DomainInterval::non_neg(), DomainInterval::non_neg()};
  }
  if (b > 0.0 || beta.is(1)) {
    if (dual && !beta.is(1)) return {DomainInterval::non_pos(), DomainInterval::neg()};
    return {DomainInterval::non_neg(), DomainInterval::pos()};
  }
  // beta <= 0
  if (dual) return {DomainInterval::neg(), DomainInterval::neg()};
  return {DomainInterval::pos(), DomainInterval::pos()};
}

namespace {

// Admissible (b,u) region of the beta-divergence itself: the quasi domain for
// beta <= 2, and the x^{beta-2} >= 0 region for beta > 2.
bool beta_div_admits(double b, double u, const Exponent& beta, Branch branch) {
  if (beta.value > 2.0) {
    if (beta.is_even()) return true;
    return b >= 0.0 && u >= 0.0;
  }
  QuasiDomain q = quasi_domain(beta, branch);
  return q.omega_l.contains(b) && q.omega_r.contains(u);
}

}  // namespace

double beta_divergence(double b, double u, const Exponent& beta, Branch branch) {
  if (!beta_div_admits(b, u, beta, branch)) {
    throw DomainError("(b,u) outside the beta-divergence domain");
  }
  if (beta.is(0)) {
    double r = b / u;
    return r - std::log(r) - 1.0;
  }
  if (beta.is(1)) {
    double blog = b == 0.0 ? 0.0 : b * std::log(b / u);
    return blog - (b - u);
  }
  Exponent bm1 = beta.minus_int(1);
  double bv = beta.value;
  double term1 =
      b == 0.0 ? 0.0 : b * (signed_power(b, bm1) - signed_power(u, bm1)) / bm1.value;
  double term2 = ((b == 0.0 ? 0.0 : signed_power(b, beta)) - signed_power(u, beta)) / bv;
  return term1 - term2;
}

double quasi_likelihood(double b, double mu, const Exponent& beta, double sigma2, Branch branch) {
  if (sigma2 <= 0) throw InvalidParams("quasi-likelihood requires sigma2 > 0");
  if (beta.value > 2.0) {
    throw DomainError("the quasi-likelihood domain does not exist for beta > 2");
  }
  QuasiDomain q = quasi_domain(beta, branch);
  if (!q.omega_l.contains(b) || !q.omega_r.contains(mu)) {
    throw DomainError("(b,mu) outside the quasi-likelihood domain");
  }
  return -beta_divergence(b, mu, beta, branch) / sigma2;
}

ExtendedReal extended_argmin(const LegendrePair& pair, double b_avg) {
  if (!pair.dom_phi.contains(b_avg)) throw DomainError("b_avg outside dom(Phi)");
  if (pair.dom_phi.interior_contains(b_avg)) return grad_phi(b_avg, pair);
  // Boundary point (always 0 here). For beta <= 1 the gradient blows up and
  // the one-sided sign decides the infinity; the reduced non-steep pairs
  // (beta > 1 outside R_e) have the finite limit ln_{2-beta}(0) = 0.
  if (pair.beta.value > 1.0) return 0.0;
  double dir = pair.dom_phi.interior_contains(b_avg + 1e-3) ? 1.0 : -1.0;
  double g = grad_phi(b_avg + dir * 1e-3, pair);
  return g > 0 ? ExtendedReal::pos_inf() : ExtendedReal::neg_inf();
}

DomainInterval variance_function_domain(const Exponent& beta) {
  if (beta.value <= 2.0) {
    return beta.is_even() ? DomainInterval::all() : DomainInterval::non_neg();
  }
  return beta.is_even() ? DomainInterval::neg() : DomainInterval::pos();
}

double fisher_information(const Exponent& beta, double sigma2, double mu) {
  if (sigma2 <= 0) throw InvalidParams("Fisher information requires sigma2 > 0");
  if (!variance_function_domain(beta).contains(mu)) {
    throw DomainError("mu outside dom(V)");
  }
  double v = signed_power(mu, beta.sub_from_int(2));
  if (v == 0.0) throw DomainError("V(mu) = 0: Fisher information undefined");
  return 1.0 / (sigma2 * v);
}

double evaluate(const DivergenceSpec& spec, double first, double second) {
  switch (spec.family) {
    case DivergenceFamily::GenericBregman: return bregman(spec.pair, first, second, spec.side);
    case DivergenceFamily::CanonicalForm: return canonical(spec.pair, first, second);
    case DivergenceFamily::BregmanBeta: return bregman_beta(first, second, spec.pair);
    case DivergenceFamily::BregmanTweedie: return bregman_tweedie(first, second, spec.pair);
    case DivergenceFamily::BetaDivergence:
      return beta_divergence(first, second, spec.pair.beta, spec.pair.branch);
    case DivergenceFamily::QuasiLikelihood:
      return quasi_likelihood(first, second, spec.pair.beta, spec.sigma2, spec.pair.branch);
  }
  throw InvalidParams("unknown divergence family");
}

const char* family_name(DivergenceFamily f) {
  switch (f) {
    case DivergenceFamily::GenericBregman: return "bregman";
    case DivergenceFamily::CanonicalForm: return "canonical";
    case DivergenceFamily::BregmanBeta: return "bregman-beta";
    case DivergenceFamily::BregmanTweedie: return "bregman-tweedie";
    case DivergenceFamily::BetaDivergence: return "beta-divergence";
    case DivergenceFamily::QuasiLikelihood: return "quasi-likelihood";
  }
  return "?";
}

}  // namespace kled
