#pragma once

#include <biham/casimir.hpp>

#include <string>
#include <vector>

namespace biham {

struct LenardChain {
  std::vector<RationalFunction> functions;  // H_0 ... H_n
  bool anchored = false;
};

// H_i = f_{d-i}; anchored when P1 grad H_0 = 0 holds exactly.
LenardChain chain_from_family(const BihamStructure& b, const LambdaFamily& f);

// P2 grad H_i + P1 grad H_{i+1} = 0 for all i, and P1 grad H_0 = 0 when anchored.
Certificate verify_chain(const BihamStructure& b, const LenardChain& c);

Certificate involution_check(const std::vector<RationalFunction>& funcs, const BihamStructure& b);

enum class IntegrabilityOutcome { StrictlyLenardIntegrable, Insufficient, JordanObstructed };
const char* to_string(IntegrabilityOutcome o);

struct IntegrabilityVerdict {
  IntegrabilityOutcome outcome = IntegrabilityOutcome::Insufficient;
  std::size_t independent = 0;
  std::size_t action_dimension = 0;
  std::string pencil_type;
  // Whether every chain gradient lies in the span of the kernel-family coefficients at m.
  bool gradients_in_kronecker_part = true;
};

IntegrabilityVerdict integrability_verdict(const BihamStructure& b, const std::vector<LenardChain>& chains,
                                           const Point& m);

}  // namespace biham
