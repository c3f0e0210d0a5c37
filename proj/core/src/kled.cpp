#include "kled/kled.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "kled/errors.hpp"
#include "kled/extfun.hpp"

namespace kled {

namespace detail {
struct NormalizationCache {
  std::mutex mu;
  std::map<std::pair<double, int>, NormalizationResult> entries;
};
}  // namespace detail

namespace {

long long rational_floor(const Rational& r) {
  long long q = r.num / r.den;
  if (r.num % r.den != 0 && r.num < 0) --q;
  return q;
}

}  // namespace

CumulantOrder cumulant_order(const Exponent& beta) {
  double b = beta.value;
  if (b <= 1.0 || beta.is(2)) return CumulantOrder::inf();
  if (b > 2.0) {
    if (beta.is_even()) return CumulantOrder::finite(1);
    throw DomainError("no model with power variance exists for beta > 2 outside R_e");
  }
  // 1 < beta < 2: K is the largest k with ((beta-1)theta)^{H(beta,k)} entire,
  // i.e. K = floor(beta/(beta-1)); requires an exact rational.
  if (!beta.exact) {
    throw DomainError("cumulant order for beta in (1,2) requires an exact rational exponent");
  }
  Rational r = beta.rat / (beta.rat - Rational::integer(1));
  if (beta.is_even()) return CumulantOrder::finite(static_cast<int>(rational_floor(r)));
  if (r.is_integer()) {
    // beta = K/(K-1) outside R_e: grad^K Psi is the constant eta(K,beta) on
    // the reduced positive branch.
    return CumulantOrder::finite(static_cast<int>(r.num));
  }
  throw DomainError("no model with power variance exists for beta in (1,2) outside R_e");
}

double eta_value(int k, const Exponent& beta) {
  double out = 1.0;
  for (int j = 1; j <= k - 2; ++j) {
    out *= (j + 1) - j * beta.value;
  }
  return out;
}

bool eta_is_zero(int k, const Exponent& beta) {
  if (!beta.exact) return false;
  for (int j = 1; j <= k - 2; ++j) {
    if (beta.rat * Rational::integer(j) == Rational::integer(j + 1)) return true;
  }
  return false;
}

DomainInterval cumulant_domain(const Exponent& beta, int k, Branch branch) {
  if (k < 1) throw InvalidParams("cumulant order must be >= 1");
  if (beta.is(1)) return DomainInterval::all();
  double b = beta.value;
  if (b > 1.0) {
    if (!beta.exact) throw DomainError("cumulant domain for beta > 1 requires an exact rational");
    Rational r = beta.rat / (beta.rat - Rational::integer(1));
    Rational kk = Rational::integer(k);
    if (beta.is_even()) {
      if (kk <= r) return DomainInterval::all();
      return branch == Branch::Positive ? DomainInterval::pos() : DomainInterval::neg();
    }
    // reduced positive branch for beta = K/(K-1) outside R_e
    if (!r.is_integer()) throw DomainError("no cumulant domain for beta in (1,2) outside R_e");
    if (kk == r) return DomainInterval::all();
    if (kk < r) return DomainInterval::non_neg();
    return DomainInterval::pos();
  }
  // beta < 1: open half line on the branch side, all orders
  if (beta.is_even() && branch == Branch::Negative) return DomainInterval::pos();
  return DomainInterval::neg();
}

bool KledModel::contains_observation(double b) const {
  // Membership is by the interval support: with a dispersion parameter the
  // counting families live on a scaled lattice, so integrality is not
  // enforced here. The counting kind only drives series normalization.
  return support.contains(b);
}

KledModel make_model(const Exponent& beta, double sigma2, Branch branch) {
  if (sigma2 <= 0) throw InvalidParams("dispersion sigma2 must be positive");
  KledModel m;
  m.beta = beta;
  m.sigma2 = sigma2;
  m.branch = branch;
  m.order = cumulant_order(beta);
  m.pair = make_legendre_pair(beta, branch);
  m.support = m.pair.dom_phi;
  m.measure = beta.is(1) ? MeasureKind::Counting : MeasureKind::Lebesgue;
  m.cache = std::make_shared<detail::NormalizationCache>();
  return m;
}

double kth_cumulant(double theta, int k, const KledModel& model) {
  if (k < 1) throw InvalidParams("cumulant order must be >= 1");
  const Exponent& beta = model.beta;
  if (beta.is(1)) return std::exp(theta);
  if (k == 1) return exp_ext(theta, {beta, 1.0, model.branch});
  if (eta_is_zero(k, beta)) {
    // terminating family: all higher derivatives vanish identically
    if (!model.pair.dom_psi.contains(theta)) throw DomainError("theta outside dom(Psi)");
    return 0.0;
  }
  if (!model.order.covers(k)) {
    throw DomainError("order " + std::to_string(k) + " exceeds the model's cumulant order " +
                      model.order.str());
  }
  if (!cumulant_domain(beta, k, model.branch).contains(theta)) {
    throw DomainError("theta outside dom(grad^k Psi)");
  }
  Exponent bm1 = beta.minus_int(1);
  Exponent h = bm1.reciprocal().minus_int(k - 1);  // H(beta, k)
  return eta_value(k, beta) * signed_power(bm1.value * theta, h);
}

double mean(const KledModel& model, double theta) {
  if (!model.pair.dom_psi.interior_contains(theta)) {
    throw DomainError("mean requires theta in int(dom Psi)");
  }
  return kth_cumulant(theta, 1, model);
}

double variance(const KledModel& model, double theta) {
  return model.sigma2 * kth_cumulant(theta, 2, model);
}

double log_density_unnormalized(double b, double theta, const KledModel& model) {
  if (!model.contains_observation(b)) throw DomainError("b outside the model support");
  if (!model.pair.dom_psi.contains(theta)) throw DomainError("theta outside dom(Psi)");
  return (b * theta - psi(theta, model.pair) - phi(b, model.pair)) / model.sigma2;
}

namespace {

std::function<double(double)> log_base_weight_for(const KledModel& model, BaseWeightKind kind) {
  double s2 = model.sigma2;
  LegendrePair pair = model.pair;
  switch (kind) {
    case BaseWeightKind::Trivial:
      return [pair, s2](double b) { return -phi(b, pair) / s2; };
    case BaseWeightKind::PoissonFactorial:
      return [](double b) { return -std::lgamma(b + 1.0); };
    case BaseWeightKind::GammaShape:
      return [s2](double b) { return (1.0 / s2 - 1.0) * std::log(b); };
    case BaseWeightKind::InverseGaussian:
      return [s2](double b) {
        return -0.5 * std::log(2.0 * M_PI * s2 * b * b * b) - 1.0 / (2.0 * b * s2);
      };
  }
  throw InvalidParams("unknown base weight");
}

NormalizationResult integrate_lebesgue(const KledModel& model, double theta,
                                       const std::function<double(double)>& log_w) {
  NormalizationResult out;
  const DomainInterval& sup = model.support;
  auto g = [&](double b) -> double {
    if (!sup.contains(b)) return 0.0;
    double lg = b * theta / model.sigma2 + log_w(b);
    return std::exp(lg);
  };

  // Center near the integrand peak: the mean when theta is interior.
  double center;
  if (model.pair.dom_psi.interior_contains(theta)) {
    center = kth_cumulant(theta, 1, model);
  } else {
    center = sup.interior_contains(1.0) ? 1.0 : -1.0;
  }
  if (!sup.interior_contains(center)) center = sup.interior_contains(1.0) ? 1.0 : -1.0;
  double peak = g(center);
  if (!(peak > 0) || !std::isfinite(peak)) {
    // fall back to a coarse scan for a usable peak
    for (double probe : {1e-3, 1e-2, 0.1, 0.5, 1.0, 2.0, 8.0, 32.0}) {
      for (double sgn : {1.0, -1.0}) {
        double x = sgn * probe;
        if (sup.interior_contains(x) && g(x) > peak) {
          peak = g(x);
          center = x;
        }
      }
    }
  }
  if (!(peak > 0) || !std::isfinite(peak)) {
    out.status = NormalizationResult::Status::Failure;
    out.note = "could not locate a positive integrand value";
    return out;
  }

  const double cut = 1e-16 * peak;
  // Expand each unbounded end until the integrand decays below the cut; a
  // tail that refuses to decay (e.g. theta = 0 in the Levy case) means the
  // integral diverges.
  auto expand = [&](double dir) -> std::pair<double, bool> {
    double step = 1.0;
    double x = center;
    for (int i = 0; i < 80; ++i) {
      x = center + dir * step;
      if ((dir > 0 && sup.upper() < 1e300 && x >= sup.upper()) ||
          (dir < 0 && sup.lower() > -1e300 && x <= sup.lower())) {
        return {dir > 0 ? sup.upper() : sup.lower(), true};
      }
      double v = g(x);
      if (v < cut) return {x, true};
      peak = std::max(peak, v);
      if (std::abs(x) > 1e15) return {x, false};
      step *= 2.0;
    }
    return {x, false};
  };

  double lo = sup.lower(), hi = sup.upper();
  bool lo_ok = true, hi_ok = true;
  if (hi > 1e300) std::tie(hi, hi_ok) = expand(+1.0);
  if (lo < -1e300) std::tie(lo, lo_ok) = expand(-1.0);
  if (!lo_ok || !hi_ok) {
    out.status = NormalizationResult::Status::NotNormalizable;
    out.note = "integrand does not decay along the support";
    return out;
  }

  // Integrate the rescaled integrand for a scale-free tolerance.
  double scale = peak;
  IntegrationResult ir = integrate_adaptive([&](double b) { return g(b) / scale; }, lo, hi,
                                            1e-12 * std::max(1.0, hi - lo), 2000000);
  out.evaluations = ir.evaluations;
  if (!ir.converged) {
    out.status = NormalizationResult::Status::Failure;
    out.note = "quadrature did not converge";
    return out;
  }
  out.status = NormalizationResult::Status::Ok;
  out.value = ir.value * scale;
  return out;
}

NormalizationResult sum_counting(const KledModel& model, double theta,
                                 const std::function<double(double)>& log_w) {
  NormalizationResult out;
  SeriesResult sr = sum_series(
      [&](long k) {
        double b = static_cast<double>(k);
        return std::exp(b * theta / model.sigma2 + log_w(b));
      },
      1e-16, 1000000);
  out.evaluations = sr.terms;
  if (sr.diverged) {
    out.status = NormalizationResult::Status::NotNormalizable;
    out.note = "series diverges";
    return out;
  }
  if (!sr.converged) {
    out.status = NormalizationResult::Status::Failure;
    out.note = "series did not converge within the term cap";
    return out;
  }
  out.status = NormalizationResult::Status::Ok;
  out.value = sr.value;
  return out;
}

}  // namespace

NormalizationResult normalize(const KledModel& model, double theta,
                              const std::function<double(double)>& log_base_weight) {
  if (!model.pair.dom_psi.contains(theta)) throw DomainError("theta outside dom(Psi)");
  if (model.measure == MeasureKind::Counting) {
    return sum_counting(model, theta, log_base_weight);
  }
  return integrate_lebesgue(model, theta, log_base_weight);
}

NormalizationResult normalize(const KledModel& model, double theta, BaseWeightKind weight) {
  if (model.cache) {
    std::lock_guard<std::mutex> lock(model.cache->mu);
    auto it = model.cache->entries.find({theta, static_cast<int>(weight)});
    if (it != model.cache->entries.end()) return it->second;
  }
  NormalizationResult out = normalize(model, theta, log_base_weight_for(model, weight));
  if (model.cache && out.ok()) {
    std::lock_guard<std::mutex> lock(model.cache->mu);
    model.cache->entries.insert({{theta, static_cast<int>(weight)}, out});
  }
  return out;
}

double density_levy(double b, double sigma2) {
  if (sigma2 <= 0) throw InvalidParams("density_levy requires sigma2 > 0");
  if (b <= 0) throw DomainError("density_levy requires b > 0");
  return std::exp(-1.0 / (2.0 * b * sigma2)) / std::sqrt(2.0 * M_PI * sigma2 * b * b * b);
}

MleResult mle_theta(std::span<const double> observations, const KledModel& model) {
  if (observations.empty()) throw InvalidParams("no observations");
  double sum = 0.0;
  for (size_t i = 0; i < observations.size(); ++i) {
    if (!model.contains_observation(observations[i])) {
      throw DomainError("observation " + std::to_string(i + 1) + " outside the model support");
    }
    sum += observations[i];
  }
  MleResult out;
  out.b_avg = sum / static_cast<double>(observations.size());
  if (!model.pair.dom_phi.contains(out.b_avg)) {
    throw DomainError("sample mean outside dom(Phi)");
  }
  out.theta_hat = extended_argmin(model.pair, out.b_avg);
  out.boundary = !model.pair.dom_phi.interior_contains(out.b_avg);
  return out;
}

bool degenerate_at(const KledModel& model, double theta) {
  if (!model.pair.dom_psi.contains(theta)) return false;
  if (model.beta.is(1)) return false;
  // grad Psi = ((beta-1) theta)^{1/(beta-1)} and grad^2 Psi vanish together
  // exactly at theta = 0 when both power exponents are positive, i.e. for
  // 1 < beta < 2.
  return theta == 0.0 && model.beta.value > 1.0 && model.beta.value < 2.0;
}

double AdditiveReparam::psi1(double t) const { return psi(sigma2 * t, pair) / sigma2; }

double AdditiveReparam::grad_psi1(double t) const {
  return exp_ext(sigma2 * t, {pair.beta, 1.0, pair.branch});
}

double AdditiveReparam::hess_psi1(double t) const {
  const Exponent& beta = pair.beta;
  if (beta.is(1)) return sigma2 * std::exp(sigma2 * t);
  Exponent bm1 = beta.minus_int(1);
  Exponent h = bm1.reciprocal().minus_int(1);
  return sigma2 * eta_value(2, beta) * signed_power(bm1.value * sigma2 * t, h);
}

AdditiveReparam reparameterize_additive(const KledModel& model, double theta) {
  if (!model.pair.dom_psi.contains(theta)) throw DomainError("theta outside dom(Psi)");
  AdditiveReparam out;
  out.theta1 = theta / model.sigma2;
  out.sigma2 = model.sigma2;
  out.pair = model.pair;
  out.description = "psi1(t) = psi(" + format_real(model.sigma2) + "*t)/" +
                    format_real(model.sigma2);
  return out;
}

std::vector<std::pair<double, double>> curve_extended_normal(double b_fixed,
                                                             const Exponent& beta, double sigma2,
                                                             const std::vector<double>& mu_grid) {
  if (!(beta.value > 1.0) || !beta.is_even()) {
    throw InvalidParams("extended normal curves require beta > 1 in R_e");
  }
  if (sigma2 <= 0) throw InvalidParams("sigma2 must be positive");
  LegendrePair pair = make_legendre_pair(beta);
  std::vector<std::pair<double, double>> out;
  out.reserve(mu_grid.size());
  for (double mu : mu_grid) {
    out.emplace_back(mu, std::exp(-bregman(pair, b_fixed, mu, Side::Psi) / sigma2));
  }
  return out;
}

namespace {

std::string dual_str(DomainInterval pos_side, DomainInterval neg_side) {
  return pos_side.str() + "/" + neg_side.str();
}

}  // namespace

KledRow kled_classification(const Exponent& beta) {
  double b = beta.value;
  if (b > 1.0 && b < 2.0 && !beta.is_even()) {
    throw DomainError("no characterization row for beta in (1,2) outside R_e");
  }
  KledRow row;
  row.order = cumulant_order(beta);  // rejects the remaining inadmissible cases

  bool dual = beta.is_even() && b < 1.0 && !beta.is(0);
  auto phi_str = dual ? dual_str(domain_phi(beta, Branch::Positive),
                                 domain_phi(beta, Branch::Negative))
                      : domain_phi(beta).str();
  auto psi_str = dual ? dual_str(domain_psi(beta, Branch::Positive),
                                 domain_psi(beta, Branch::Negative))
                      : domain_psi(beta).str();
  auto grad_str = [&](int k) {
    if (dual) {
      return dual_str(cumulant_domain(beta, k, Branch::Positive),
                      cumulant_domain(beta, k, Branch::Negative));
    }
    return cumulant_domain(beta, k).str();
  };

  row.dom_phi = phi_str;
  row.dom_psi = psi_str;
  row.dom_grad1 = grad_str(1);

  if (b > 2.0) {
    row.distribution = "-";
    row.beta_condition = "beta > 2 (R_e)";
    row.support = "R";
    row.dom_grad2 = "-";
    row.dom_gradK = "-";
    row.tweedie_dom_psi = "-";
    return row;
  }
  if (beta.is(2)) {
    row.distribution = "Gaussian";
    row.beta_condition = "beta = 2";
    row.support = "R";
    row.dom_grad2 = "R";
    row.dom_gradK = "-";
    row.tweedie_dom_psi = "R";
    return row;
  }
  if (b > 1.0) {
    Rational r = beta.rat / (beta.rat - Rational::integer(1));
    row.distribution = "-";
    row.beta_condition = r.is_integer() ? "beta = K/(K-1) (R_e)" : "1 < beta < 2 (R_e)";
    row.support = "R";
    row.dom_grad2 = grad_str(2);
    row.dom_gradK = grad_str(row.order.k);
    row.tweedie_dom_psi = "-";
    return row;
  }
  if (beta.is(1)) {
    row.distribution = "Poisson";
    row.beta_condition = "beta = 1";
    row.support = "Z+";
    row.dom_grad2 = "R";
    row.dom_gradK = "R";
    row.tweedie_dom_psi = "R";
    return row;
  }
  row.dom_grad2 = grad_str(2);
  row.dom_gradK = grad_str(2);
  row.tweedie_dom_psi = psi_str;
  if (b > 0.0) {
    row.distribution = "Compound Poisson-Gamma";
    row.beta_condition = beta.is_even() ? "0 < beta < 1 (R_e)" : "0 < beta < 1 (not R_e)";
    row.support = "R+";
    return row;
  }
  if (beta.is(0)) {
    row.distribution = "Gamma";
    row.beta_condition = "beta = 0";
    row.support = "R++";
    return row;
  }
  if (beta.is(-1)) {
    row.distribution = "Inverse Gaussian";
    row.beta_condition = "beta = -1";
    row.support = "R++";
    return row;
  }
  row.distribution = "Positive stable";
  row.beta_condition = beta.is_even() ? "beta < 0 (R_e)" : "beta < 0 (not R_e)";
  row.support = "R++";
  return row;
}

}  // namespace kled
