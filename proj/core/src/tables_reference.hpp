#pragma once

// Hand-maintained reference transcriptions of the published domain
// characterizations, kept deliberately independent of the code paths that
// compute the same domains. Used by the table verification suite.

#include <vector>

#include "kled/domain.hpp"
#include "kled/rational.hpp"

namespace kled::ref {

struct ExtFunDomainRow {
  Rational beta;
  Branch branch;
  const char* dom_exp;
  const char* dom_log;
};
std::vector<ExtFunDomainRow> extfun_domain_rows();

struct PairDomainRow {
  Rational beta;
  Branch branch;
  const char* dom_phi;
  const char* dom_psi;
};
std::vector<PairDomainRow> pair_domain_rows();

struct QuasiRow {
  Rational beta;
  Branch branch;
  const char* omega_l;
  const char* omega_r;
};
std::vector<QuasiRow> quasi_rows();

struct CumulantDomainRow {
  Rational beta;
  Branch branch;
  int k;
  const char* dom;
};
std::vector<CumulantDomainRow> cumulant_domain_rows();  // orders k <= 5

struct CharacterizationRow {
  Rational beta;
  const char* distribution;
  const char* support;
  const char* dom_phi;
  const char* dom_psi;
  const char* dom_grad1;
  const char* dom_grad2;
  const char* dom_gradK;
  const char* tweedie_dom_psi;
  const char* order;  // "inf" or the integer K
};
std::vector<CharacterizationRow> characterization_rows();

}  // namespace kled::ref
