#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kled/divergence.hpp"
#include "kled/extended_real.hpp"
#include "kled/legendre.hpp"
#include "kled/quadrature.hpp"

namespace kled {

// Number of derivative orders of Psi whose domain is the whole canonical
// line; infinite for the classic families (beta <= 1 and beta = 2).
struct CumulantOrder {
  bool infinite = false;
  int k = 0;

  static CumulantOrder inf() { return {true, 0}; }
  static CumulantOrder finite(int kk) { return {false, kk}; }
  bool covers(int order) const { return infinite || order <= k; }
  bool operator==(const CumulantOrder& o) const {
    return infinite == o.infinite && (infinite || k == o.k);
  }
  std::string str() const { return infinite ? "inf" : std::to_string(k); }
};

// Throws DomainError when no model with power variance exists for beta
// (beta > 2 outside R_e, or beta in (1,2) outside R_e unless beta = K/(K-1)).
CumulantOrder cumulant_order(const Exponent& beta);

// eta(k, beta) = prod_{j=1}^{k-2} (j+1 - j beta); the k-th cumulant prefactor.
double eta_value(int k, const Exponent& beta);
bool eta_is_zero(int k, const Exponent& beta);

// Domain of the k-th derivative of Psi, by order and branch.
DomainInterval cumulant_domain(const Exponent& beta, int k, Branch branch = Branch::Positive);

enum class MeasureKind { Lebesgue, Counting };

enum class BaseWeightKind {
  Trivial,           // p1(b) = exp(-Phi(b)/sigma2); trivial p0 = 1
  PoissonFactorial,  // p1(b) = 1/b! on the counting support
  GammaShape,        // p1(b) = b^{1/sigma2 - 1}
  InverseGaussian,   // p1(b) = (2 pi sigma2 b^3)^{-1/2} exp(-1/(2 b sigma2))
};

namespace detail {
struct NormalizationCache;
}

/**
 * A Legendre exponential dispersion model with K cumulants: exponent beta,
 * dispersion sigma2, branch, support with its measure kind, and the base
 * function pair. Immutable after construction; the normalization cache is
 * the only mutable state and is safe under concurrent read/insert.
 */
struct KledModel {
  Exponent beta;
  double sigma2 = 1.0;
  Branch branch = Branch::Positive;
  LegendrePair pair;
  DomainInterval support;
  MeasureKind measure = MeasureKind::Lebesgue;
  CumulantOrder order;

  bool contains_observation(double b) const;

  std::shared_ptr<detail::NormalizationCache> cache;
};

KledModel make_model(const Exponent& beta, double sigma2, Branch branch = Branch::Positive);

/**
 * k-th cumulant of Psi at theta: eta(k,beta) ((beta-1) theta)^{H(beta,k)}
 * with H(beta,k) = 1/(beta-1) - (k-1); k = 1 is exp_{2-beta}(theta), and
 * beta = 1 gives exp(theta) for every k. Orders above the model's K throw,
 * except in the terminating families where eta vanishes and the value is 0.
 */
double kth_cumulant(double theta, int k, const KledModel& model);

double mean(const KledModel& model, double theta);             // grad Psi(theta)
double variance(const KledModel& model, double theta);         // sigma2 grad^2 Psi(theta)

// (b theta - Psi(theta) - Phi(b)) / sigma2 = -d_Phi(b;theta)/sigma2.
double log_density_unnormalized(double b, double theta, const KledModel& model);

struct NormalizationResult {
  enum class Status { Ok, NotNormalizable, Failure };
  Status status = Status::Failure;
  double value = 0.0;
  long evaluations = 0;
  std::string note;

  bool ok() const { return status == Status::Ok; }
};

/**
 * Partition value Z(theta) = integral (or sum) of exp(<b,theta>/sigma2) p1(b)
 * over the support, for the chosen base weight p1. A normalized density then
 * is exp(<b,theta>/sigma2) p1(b) / Z(theta). Detects divergent integrals
 * (e.g. the Levy boundary case theta = 0 with the trivial weight) and reports
 * NotNormalizable instead of erroring.
 */
NormalizationResult normalize(const KledModel& model, double theta,
                              BaseWeightKind weight = BaseWeightKind::Trivial);

// Same with a caller-supplied log base weight log p1(b); not cached.
NormalizationResult normalize(const KledModel& model, double theta,
                              const std::function<double(double)>& log_base_weight);

// Levy density (2 pi sigma2 b^3)^{-1/2} exp(-1/(2 b sigma2)): the inverse
// Gaussian family at the canonical boundary theta = 0.
double density_levy(double b, double sigma2);

struct MleResult {
  ExtendedReal theta_hat;
  double b_avg = 0.0;
  bool boundary = false;
};

// Closed-form maximum likelihood: theta_hat = ln_{2-beta}(b_avg), extended
// to +/-infinity when b_avg sits on the boundary of dom(Phi).
MleResult mle_theta(std::span<const double> observations, const KledModel& model);

// True iff both the first and second cumulants vanish at theta.
bool degenerate_at(const KledModel& model, double theta);

/**
 * Scaled reparameterization theta1 = theta/sigma2 with
 * Psi_1(t) = Psi(sigma2 t)/sigma2; mean and variance are preserved:
 * grad Psi_1(theta1) = grad Psi(theta) and hess Psi_1(theta1) = var.
 */
struct AdditiveReparam {
  double theta1 = 0.0;
  double sigma2 = 1.0;
  LegendrePair pair;
  std::string description;

  double psi1(double t) const;
  double grad_psi1(double t) const;
  double hess_psi1(double t) const;
};

AdditiveReparam reparameterize_additive(const KledModel& model, double theta);

// exp(-D_Psi(b|mu)/sigma2) over a mu grid; the extended normal family curves
// for beta in (1,inf) within R_e.
std::vector<std::pair<double, double>> curve_extended_normal(double b_fixed,
                                                             const Exponent& beta, double sigma2,
                                                             const std::vector<double>& mu_grid);

// One row of the family characterization: distribution name, support, and
// the effective domains per derivative order ("-" marks non-existence).
struct KledRow {
  std::string distribution;
  std::string beta_condition;
  std::string support;
  std::string dom_phi;
  std::string dom_psi;
  std::string dom_grad1;
  std::string dom_grad2;
  std::string dom_gradK;
  std::string tweedie_dom_psi;
  CumulantOrder order;
};

KledRow kled_classification(const Exponent& beta);

}  // namespace kled
