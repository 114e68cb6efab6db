#include <biham/errors.hpp>
#include <biham/lenard.hpp>

namespace biham {

LenardChain chain_from_family(const BihamStructure& b, const LambdaFamily& f) {
  LenardChain c;
  c.functions.assign(f.coeffs.rbegin(), f.coeffs.rend());
  c.anchored = !c.functions.empty() && is_casimir(b.p1, c.functions.front()).passed;
  return c;
}

Certificate verify_chain(const BihamStructure& b, const LenardChain& c) {
  if (c.functions.empty()) return Certificate::fail("chain", "empty chain");
  if (c.anchored) {
    Certificate a = is_casimir(b.p1, c.functions.front());
    if (!a) return Certificate::fail("chain", "anchor H_0 is not a Casimir of P1: " + a.detail);
  }
  for (std::size_t i = 0; i + 1 < c.functions.size(); ++i) {
    auto u = hamiltonian_vector(b.p2, c.functions[i]);
    auto w = hamiltonian_vector(b.p1, c.functions[i + 1]);
    for (std::size_t j = 0; j < u.size(); ++j) {
      RationalFunction r = u[j] + w[j];
      if (!r.is_zero())
        return Certificate::fail("chain", "recurrence fails at i=" + std::to_string(i) + " component " +
                                              b.p1.vars()[j] + " residual " + r.to_string());
    }
  }
  return Certificate::pass("chain", std::to_string(c.functions.size()) + " functions");
}

Certificate involution_check(const std::vector<RationalFunction>& funcs, const BihamStructure& b) {
  for (std::size_t i = 0; i < funcs.size(); ++i)
    for (std::size_t j = i + 1; j < funcs.size(); ++j)
      for (int which : {1, 2}) {
        RationalFunction r = bracket_of(which == 1 ? b.p1 : b.p2, funcs[i], funcs[j]);
        if (!r.is_zero())
          return Certificate::fail("involution", "{f" + std::to_string(i) + ", f" + std::to_string(j) + "}_" +
                                                     std::to_string(which) + " = " + r.to_string());
      }
  return Certificate::pass("involution", std::to_string(funcs.size()) + " functions");
}

const char* to_string(IntegrabilityOutcome o) {
  switch (o) {
    case IntegrabilityOutcome::StrictlyLenardIntegrable: return "StrictlyLenardIntegrable";
    case IntegrabilityOutcome::Insufficient: return "Insufficient";
    case IntegrabilityOutcome::JordanObstructed: return "JordanObstructed";
  }
  return "?";
}

IntegrabilityVerdict integrability_verdict(const BihamStructure& b, const std::vector<LenardChain>& chains,
                                           const Point& m) {
  IntegrabilityVerdict v;
  const std::size_t n = b.dim();
  std::vector<Rational> rows;
  std::size_t count = 0;
  for (const auto& c : chains)
    for (const auto& h : c.functions) {
      for (const auto& g : gradient(h, n)) rows.push_back(g.evaluate(m));
      ++count;
    }
  const Matrix grads(count, n, rows);
  v.independent = count ? mat_rank(grads) : 0;

  const SkewPencil pencil = pencil_at(b, m);
  const PencilType t = decompose(pencil);
  v.pencil_type = t.to_string();
  v.action_dimension = action_dimension(t);

  std::vector<Rational> span;
  std::size_t span_rows = 0;
  for (const auto& w : minimal_kernel_basis(pencil)) {
    std::size_t deg = 0;
    for (const auto& p : w) deg = std::max<std::size_t>(deg, p.is_zero() ? 0 : static_cast<std::size_t>(p.degree()));
    for (std::size_t e = 0; e <= deg; ++e) {
      for (const auto& p : w) span.push_back(p.coeff(e));
      ++span_rows;
    }
  }
  const std::size_t base_rank = span_rows ? mat_rank(Matrix(span_rows, n, span)) : 0;
  std::vector<Rational> joint = span;
  joint.insert(joint.end(), rows.begin(), rows.end());
  const std::size_t joint_rows = span_rows + count;
  v.gradients_in_kronecker_part = (joint_rows ? mat_rank(Matrix(joint_rows, n, joint)) : 0) == base_rank;

  if (t.has_jordan()) v.outcome = IntegrabilityOutcome::JordanObstructed;
  else if (v.independent == v.action_dimension) v.outcome = IntegrabilityOutcome::StrictlyLenardIntegrable;
  else v.outcome = IntegrabilityOutcome::Insufficient;
  return v;
}

}  // namespace biham
