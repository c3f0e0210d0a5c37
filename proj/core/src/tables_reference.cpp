#include "tables_reference.hpp"

namespace kled::ref {

namespace {
constexpr Branch P = Branch::Positive;
constexpr Branch N = Branch::Negative;
}  // namespace

std::vector<ExtFunDomainRow> extfun_domain_rows() {
  return {
      // beta = 1
      {{1, 1}, P, "R", "R++"},
      // beta > 1, R_e
      {{8, 3}, P, "R", "R"},
      {{16, 9}, P, "R", "R"},
      {{2, 1}, P, "R", "R"},
      // beta > 1, outside R_e
      {{3, 2}, P, "R+", "R+"},
      {{5, 2}, P, "R+", "R+"},
      // beta < 1, R_e (dual regions)
      {{2, 3}, P, "R--", "R++"},
      {{2, 3}, N, "R++", "R--"},
      {{-2, 5}, P, "R--", "R++"},
      {{-2, 5}, N, "R++", "R--"},
      // beta < 1, outside R_e
      {{1, 2}, P, "R--", "R++"},
      {{3, 5}, P, "R--", "R++"},
      {{-1, 1}, P, "R--", "R++"},
  };
}

std::vector<PairDomainRow> pair_domain_rows() {
  return {
      // entire region
      {{8, 3}, P, "R", "R"},
      {{2, 1}, P, "R", "R"},
      {{4, 3}, P, "R", "R"},
      {{16, 9}, P, "R", "R"},
      // beta = 1
      {{1, 1}, P, "R+", "R"},
      // positive data region
      {{1, 2}, P, "R+", "R--"},
      {{3, 5}, P, "R+", "R--"},
      {{2, 3}, P, "R+", "R--"},
      {{0, 1}, P, "R++", "R--"},
      {{-1, 1}, P, "R++", "R-"},
      {{-1, 3}, P, "R++", "R-"},
      {{-2, 5}, P, "R++", "R-"},
      // negative data region (R_e duals)
      {{2, 3}, N, "R-", "R++"},
      {{-2, 5}, N, "R--", "R+"},
      // reduced extension rows (not of Legendre type)
      {{3, 2}, P, "R+", "R+"},
  };
}

std::vector<QuasiRow> quasi_rows() {
  return {
      // 1 < beta <= 2
      {{3, 2}, P, "R+", "R+"},
      {{7, 4}, P, "R+", "R+"},
      // 1 < beta <= 2, R_e
      {{16, 9}, P, "R", "R"},
      {{2, 1}, P, "R", "R"},
      // 0 < beta <= 1
      {{1, 1}, P, "R+", "R++"},
      {{1, 2}, P, "R+", "R++"},
      {{2, 3}, P, "R+", "R++"},
      // 0 < beta < 1, R_e
      {{2, 3}, N, "R-", "R--"},
      // beta <= 0
      {{0, 1}, P, "R++", "R++"},
      {{-1, 1}, P, "R++", "R++"},
      {{-2, 5}, P, "R++", "R++"},
      // beta <= 0, R_e
      {{0, 1}, N, "R--", "R--"},
      {{-2, 5}, N, "R--", "R--"},
      // beta > 2: no domain
      {{3, 1}, P, "(empty)", "(empty)"},
      {{5, 2}, P, "(empty)", "(empty)"},
  };
}

std::vector<CumulantDomainRow> cumulant_domain_rows() {
  return {
      // beta = 1: R for every order
      {{1, 1}, P, 1, "R"}, {{1, 1}, P, 2, "R"}, {{1, 1}, P, 3, "R"},
      {{1, 1}, P, 4, "R"}, {{1, 1}, P, 5, "R"},
      // beta = 2
      {{2, 1}, P, 1, "R"}, {{2, 1}, P, 2, "R"}, {{2, 1}, P, 3, "R++"},
      {{2, 1}, P, 4, "R++"}, {{2, 1}, P, 5, "R++"},
      // beta = 16/9: full line up to order 2 (16/9 < 2), half line beyond (16/9 > 3/2)
      {{16, 9}, P, 1, "R"}, {{16, 9}, P, 2, "R"}, {{16, 9}, P, 3, "R++"},
      {{16, 9}, P, 4, "R++"}, {{16, 9}, P, 5, "R++"},
      {{16, 9}, N, 3, "R--"},
      // beta = 4/3: full line up to order 4 (constant there), half line beyond
      {{4, 3}, P, 1, "R"}, {{4, 3}, P, 2, "R"}, {{4, 3}, P, 3, "R"},
      {{4, 3}, P, 4, "R"}, {{4, 3}, P, 5, "R++"},
      // beta = 8/3 (> 2): only the mean is entire
      {{8, 3}, P, 1, "R"}, {{8, 3}, P, 2, "R++"}, {{8, 3}, P, 3, "R++"},
      {{8, 3}, P, 4, "R++"}, {{8, 3}, P, 5, "R++"},
      {{8, 3}, N, 2, "R--"},
      // beta < 1: the branch half line for every order
      {{1, 2}, P, 1, "R--"}, {{1, 2}, P, 3, "R--"}, {{1, 2}, P, 5, "R--"},
      {{3, 5}, P, 2, "R--"},
      {{2, 3}, P, 1, "R--"}, {{2, 3}, N, 1, "R++"}, {{2, 3}, N, 4, "R++"},
      {{0, 1}, P, 1, "R--"}, {{0, 1}, P, 5, "R--"},
      {{-1, 1}, P, 1, "R--"}, {{-1, 1}, P, 2, "R--"}, {{-1, 1}, P, 5, "R--"},
      {{-2, 5}, N, 3, "R++"},
  };
}

std::vector<CharacterizationRow> characterization_rows() {
  return {
      {{8, 3}, "-", "R", "R", "R", "R", "-", "-", "-", "1"},
      {{2, 1}, "Gaussian", "R", "R", "R", "R", "R", "-", "R", "inf"},
      {{16, 9}, "-", "R", "R", "R", "R", "R", "R", "-", "2"},
      {{14, 9}, "-", "R", "R", "R", "R", "R", "R", "-", "2"},
      {{4, 3}, "-", "R", "R", "R", "R", "R", "R", "-", "4"},
      {{1, 1}, "Poisson", "Z+", "R+", "R", "R", "R", "R", "R", "inf"},
      {{1, 2}, "Compound Poisson-Gamma", "R+", "R+", "R--", "R--", "R--", "R--", "R--", "inf"},
      {{3, 5}, "Compound Poisson-Gamma", "R+", "R+", "R--", "R--", "R--", "R--", "R--", "inf"},
      {{2, 3}, "Compound Poisson-Gamma", "R+", "R+/R-", "R--/R++", "R--/R++", "R--/R++",
       "R--/R++", "R--/R++", "inf"},
      {{0, 1}, "Gamma", "R++", "R++", "R--", "R--", "R--", "R--", "R--", "inf"},
      {{-1, 1}, "Inverse Gaussian", "R++", "R++", "R-", "R--", "R--", "R--", "R-", "inf"},
      {{-1, 3}, "Positive stable", "R++", "R++", "R-", "R--", "R--", "R--", "R-", "inf"},
      {{-1, 2}, "Positive stable", "R++", "R++", "R-", "R--", "R--", "R--", "R-", "inf"},
      {{-2, 5}, "Positive stable", "R++", "R++/R--", "R-/R+", "R--/R++", "R--/R++", "R--/R++",
       "R-/R+", "inf"},
  };
}

}  // namespace kled::ref
