#pragma once

#include <biham/poisson.hpp>

#include <string>
#include <vector>

namespace biham {

// F(lambda) = sum_k coeffs[k] * lambda^k, a Casimir family of lambda*P1 + P2.
struct LambdaFamily {
  std::vector<RationalFunction> coeffs;
  std::string orientation = "lambda*P1 + P2";

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

Certificate family_check(const BihamStructure& b, const LambdaFamily& f);

// Rank of the gradients of every coefficient of every family at m.
std::size_t w1_span_dim(const std::vector<LambdaFamily>& families, const Point& m);

enum class CriterionOutcome { KroneckerCertified, HomogeneousIndicated, Inconclusive };
const char* to_string(CriterionOutcome o);

struct CriterionVerdict {
  CriterionOutcome outcome = CriterionOutcome::Inconclusive;
  std::vector<int> type;  // Kronecker block dimensions, decreasing
  std::string reason;
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t w1 = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::size_t> corank_profile;
  std::string provenance;
  bool conjectural = false;
  std::string decomposition;
  bool decomposition_agrees = true;
};

CriterionVerdict kronecker_criterion(const BihamStructure& b, const std::vector<LambdaFamily>& families,
                                     const Point& m);

enum class LaxOutcome { NotApplicable, WeakLax, Lax, KroneckerConcluded };
const char* to_string(LaxOutcome o);

struct LaxVerdict {
  LaxOutcome outcome = LaxOutcome::NotApplicable;
  std::size_t rank = 0;           // number of coefficients of the map
  std::size_t gradient_rank = 0;  // rank of their gradients at m
  std::size_t action_dimension = 0;
  std::vector<int> type;
  std::string detail;
};

// Neighbours m +- e_i/10, used to sample the constant-corank hypothesis.
std::vector<Point> nearby_points(const Point& m);

LaxVerdict lax_check(const BihamStructure& b, const LambdaFamily& l, const Point& m);

}  // namespace biham
