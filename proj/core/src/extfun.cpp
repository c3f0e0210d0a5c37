#include "kled/extfun.hpp"

#include <cmath>

#include "kled/errors.hpp"

namespace kled {

DomainInterval domain_exp(const Exponent& beta, Branch branch) {
  if (beta.is(1)) return DomainInterval::all();
  if (beta.value > 1.0) {
    return beta.is_even() ? DomainInterval::all() : DomainInterval::non_neg();
  }
  // beta < 1: dual regions only for R_e
  if (beta.is_even() && branch == Branch::Negative) return DomainInterval::pos();
  return DomainInterval::neg();
}

DomainInterval domain_log(const Exponent& beta, Branch branch) {
  if (beta.is(1)) return DomainInterval::pos();
  if (beta.value > 1.0) {
    return beta.is_even() ? DomainInterval::all() : DomainInterval::non_neg();
  }
  if (beta.is_even() && branch == Branch::Negative) return DomainInterval::neg();
  return DomainInterval::pos();
}

double shift_constant(const Exponent& beta, double c) {
  if (c <= 0) throw InvalidParams("shift constant requires c > 0");
  if (beta.is(1)) throw InvalidParams("shift constant undefined for beta = 1");
  return std::pow(c, beta.value - 1.0) / (1.0 - beta.value);
}

double exp_ext(double x, const ExtFunParams& p) {
  if (!domain_exp(p).contains(x)) {
    throw DomainError("argument outside dom(exp_{2-beta})");
  }
  if (p.beta.is(1)) return std::exp(x);
  Exponent bm1 = p.beta.minus_int(1);
  return signed_power(bm1.value * x, bm1.reciprocal());
}

double exp_ext_raw(double x, const ExtFunParams& p) {
  if (p.c <= 0) throw InvalidParams("exp_ext_raw requires c > 0");
  if (p.beta.is(1)) return p.c * std::exp(x);
  return exp_ext(x - shift_constant(p.beta, p.c), p);
}

double log_ext(double x, const ExtFunParams& p) {
  if (!domain_log(p).contains(x)) {
    throw DomainError("argument outside dom(ln_{2-beta})");
  }
  if (p.beta.is(1)) return std::log(x);
  Exponent bm1 = p.beta.minus_int(1);
  return signed_power(x, bm1) / bm1.value;
}

double log_ext_raw(double x, const ExtFunParams& p) {
  if (p.c <= 0) throw InvalidParams("log_ext_raw requires c > 0");
  if (p.beta.is(1)) return std::log(x) - std::log(p.c);
  return log_ext(x, p) + shift_constant(p.beta, p.c);
}

}  // namespace kled
