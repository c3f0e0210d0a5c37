#include "kled/legendre.hpp"

#include <algorithm>
#include <cmath>

#include "kled/errors.hpp"
#include "kled/extended_real.hpp"

namespace kled {

DomainInterval domain_phi(const Exponent& beta, Branch branch) {
  double b = beta.value;
  if (branch == Branch::Negative) {
    if (!beta.is_even() || b >= 1.0 || beta.is(0)) {
      throw InvalidParams("negative branch exists only for beta < 1 in R_e (beta != 0)");
    }
    return b > 0.0 ? DomainInterval::non_pos() : DomainInterval::neg();
  }
  if (b > 1.0 && beta.is_even()) return DomainInterval::all();
  if (b > 1.0) return DomainInterval::non_neg();  // reduced extension, not Legendre
  if (b > 0.0 || beta.is(1)) return DomainInterval::non_neg();
  return DomainInterval::pos();
}

DomainInterval domain_psi(const Exponent& beta, Branch branch) {
  double b = beta.value;
  if (branch == Branch::Negative) {
    if (!beta.is_even() || b >= 1.0 || beta.is(0)) {
      throw InvalidParams("negative branch exists only for beta < 1 in R_e (beta != 0)");
    }
    return b > 0.0 ? DomainInterval::pos() : DomainInterval::non_neg();
  }
  if (beta.is(1)) return DomainInterval::all();
  if (b > 1.0 && beta.is_even()) return DomainInterval::all();
  if (b > 1.0) return DomainInterval::non_neg();  // reduced extension, not Legendre
  if (b >= 0.0) return DomainInterval::neg();
  return DomainInterval::non_pos();
}

LegendrePair make_legendre_pair(const Exponent& beta, Branch branch) {
  LegendrePair pair;
  pair.beta = beta;
  pair.branch = branch;
  pair.dom_phi = domain_phi(beta, branch);
  pair.dom_psi = domain_psi(beta, branch);
  pair.legendre = !(beta.value > 1.0 && !beta.is_even());
  return pair;
}

double phi(double x, const LegendrePair& pair) {
  if (!pair.dom_phi.contains(x)) throw DomainError("argument outside dom(Phi)");
  const Exponent& b = pair.beta;
  if (b.is(0)) return -std::log(x);
  if (b.is(1)) return x == 0.0 ? 0.0 : x * std::log(x) - x;
  return signed_power(x, b) / (b.value * (b.value - 1.0));
}

double psi(double theta, const LegendrePair& pair) {
  if (!pair.dom_psi.contains(theta)) throw DomainError("argument outside dom(Psi)");
  const Exponent& b = pair.beta;
  if (b.is(0)) return -std::log(-theta);
  if (b.is(1)) return std::exp(theta);
  Exponent bm1 = b.minus_int(1);
  return signed_power(bm1.value * theta, b.div(bm1)) / b.value;
}

double grad_phi(double x, const LegendrePair& pair) {
  if (!pair.dom_phi.interior_contains(x)) {
    throw DomainError("gradient of Phi requires an interior argument");
  }
  return log_ext(x, {pair.beta, 1.0, pair.branch});
}

double grad_psi(double theta, const LegendrePair& pair) {
  if (!pair.dom_psi.interior_contains(theta)) {
    throw DomainError("gradient of Psi requires an interior argument");
  }
  return exp_ext(theta, {pair.beta, 1.0, pair.branch});
}

double conjugate_value(const LegendrePair& pair, Side side, double x) {
  return side == Side::Phi ? psi(x, pair) : phi(x, pair);
}

namespace {

// Clip [lo, hi] to the interior of dom, backing off the finite ends.
void clip_to_interior(const DomainInterval& dom, double& lo, double& hi) {
  const double pad = 1e-6;
  DomainInterval in = dom.interior();
  if (in.lower() > -1e300) lo = std::max(lo, in.lower() + pad);
  if (in.upper() < 1e300) hi = std::min(hi, in.upper() - pad);
}

PropertyCheck check_convexity(const std::vector<double>& xs, const std::vector<double>& fs) {
  PropertyCheck out;
  double worst = 1e300;
  for (size_t i = 1; i + 1 < xs.size(); ++i) {
    double h1 = xs[i] - xs[i - 1];
    double h2 = xs[i + 1] - xs[i];
    double second = 2.0 * (fs[i - 1] / (h1 * (h1 + h2)) - fs[i] / (h1 * h2) +
                           fs[i + 1] / (h2 * (h1 + h2)));
    worst = std::min(worst, second);
  }
  out.observed = worst;
  out.passed = worst > 0.0;
  out.detail = "min second divided difference = " + format_real(worst);
  return out;
}

// Steepness: the gradient magnitude must diverge along a sequence approaching
// each finite boundary point. Accept |grad| > 1e8 at distance 1e-8 outright;
// otherwise require monotone, non-contracting growth across decades of
// approach (catches both power-law and logarithmic blowup, rejects plateaus
// and gradients with a finite boundary limit).
template <typename Grad>
PropertyCheck check_steepness(const DomainInterval& dom, const Grad& grad) {
  PropertyCheck out;
  auto bps = dom.finite_boundary_points();
  if (bps.empty()) {
    out.passed = true;
    out.detail = "no finite boundary point";
    return out;
  }
  out.passed = true;
  for (double p : bps) {
    double dir = dom.interior_contains(p + 1e-3) ? 1.0 : -1.0;
    double g4 = std::abs(grad(p + dir * 1e-4));
    double g6 = std::abs(grad(p + dir * 1e-6));
    double g8 = std::abs(grad(p + dir * 1e-8));
    double d1 = g6 - g4, d2 = g8 - g6;
    bool steep = g8 > 1e8 ||
                 (d1 > 0.1 * std::max(1.0, g4) && d2 >= 0.5 * d1);
    out.observed = g8;
    out.detail += "|grad| at 1e-4/1e-6/1e-8 from " + format_real(p) + ": " + format_real(g4) +
                  ", " + format_real(g6) + ", " + format_real(g8) + "; ";
    if (!steep) out.passed = false;
  }
  return out;
}

// Linear-minorant fit f(x) >= a1|x| + a2 with a1 > 0, estimated from the
// growth between the middle and the far end of the grid along each unbounded
// direction of the domain.
PropertyCheck check_coercivity(const DomainInterval& dom, const std::vector<double>& xs,
                               const std::vector<double>& fs) {
  PropertyCheck out;
  double slope = 1e300;
  bool any_unbounded_end = false;
  size_t n = xs.size();
  if (dom.upper() > 1e300) {
    any_unbounded_end = true;
    slope = std::min(slope, (fs.back() - fs[n / 2]) / (std::abs(xs.back()) - std::abs(xs[n / 2])));
  }
  if (dom.lower() < -1e300) {
    any_unbounded_end = true;
    slope =
        std::min(slope, (fs.front() - fs[n / 2]) / (std::abs(xs.front()) - std::abs(xs[n / 2])));
  }
  if (!any_unbounded_end) {
    out.passed = true;
    out.detail = "domain bounded within grid box";
    return out;
  }
  out.observed = slope;
  out.passed = slope > 1e-12;
  double a1 = std::max(slope, 1e-12);
  double a2 = 1e300;
  for (size_t i = 0; i < n; ++i) a2 = std::min(a2, fs[i] - a1 * std::abs(xs[i]));
  out.detail = "fitted a1 = " + format_real(slope) + ", a2 = " + format_real(a2);
  return out;
}

}  // namespace

LegendreVerifyReport verify_legendre(const LegendrePair& pair, const GridSpec& box) {
  if (box.count < 8) throw InvalidParams("verify grid needs at least 8 points");
  LegendreVerifyReport rep;

  auto grid_for = [&](const DomainInterval& dom) {
    double lo = box.lo, hi = box.hi;
    clip_to_interior(dom, lo, hi);
    std::vector<double> xs(box.count);
    for (int i = 0; i < box.count; ++i) {
      xs[i] = lo + (hi - lo) * i / double(box.count - 1);
    }
    return xs;
  };

  auto xs = grid_for(pair.dom_phi);
  auto ts = grid_for(pair.dom_psi);
  std::vector<double> fphi(xs.size()), fpsi(ts.size());
  for (size_t i = 0; i < xs.size(); ++i) fphi[i] = phi(xs[i], pair);
  for (size_t i = 0; i < ts.size(); ++i) fpsi[i] = psi(ts[i], pair);

  rep.convexity_phi = check_convexity(xs, fphi);
  rep.convexity_psi = check_convexity(ts, fpsi);
  rep.steepness_phi =
      check_steepness(pair.dom_phi, [&](double x) { return grad_phi(x, pair); });
  rep.steepness_psi =
      check_steepness(pair.dom_psi, [&](double t) { return grad_psi(t, pair); });
  rep.coercivity_phi = check_coercivity(pair.dom_phi, xs, fphi);
  rep.coercivity_psi = check_coercivity(pair.dom_psi, ts, fpsi);
  rep.coercivity_phi_expected = pair.dom_psi.interior_contains(0.0);
  rep.coercivity_psi_expected = pair.dom_phi.interior_contains(0.0);

  PropertyCheck inv;
  inv.passed = true;
  double worst = 0.0;
  for (double x : xs) {
    double back = grad_psi(grad_phi(x, pair), pair);
    double rel = std::abs(back - x) / std::max(1.0, std::abs(x));
    worst = std::max(worst, rel);
  }
  for (double t : ts) {
    double back = grad_phi(grad_psi(t, pair), pair);
    double rel = std::abs(back - t) / std::max(1.0, std::abs(t));
    worst = std::max(worst, rel);
  }
  inv.observed = worst;
  inv.passed = worst <= 1e-10;
  inv.detail = "max relative roundtrip error = " + format_real(worst);
  rep.gradient_inverse = inv;
  return rep;
}

}  // namespace kled
