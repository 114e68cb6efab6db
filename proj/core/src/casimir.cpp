#include <biham/casimir.hpp>
#include <biham/errors.hpp>

#include <algorithm>
#include <numeric>

namespace biham {

Certificate family_check(const BihamStructure& b, const LambdaFamily& f) {
  const std::size_t d = f.degree();
  if (f.coeffs.empty()) return Certificate::fail("family", "empty family");
  if (f.coeffs.back().is_zero()) return Certificate::fail("family", "leading coefficient vanishes identically");
  std::vector<std::vector<RationalFunction>> h1, h2;
  for (const auto& c : f.coeffs) {
    h1.push_back(hamiltonian_vector(b.p1, c));
    h2.push_back(hamiltonian_vector(b.p2, c));
  }
  // Coefficient of lambda^k: P1 grad f_{k-1} + P2 grad f_k.
  for (std::size_t k = 0; k <= d + 1; ++k)
    for (std::size_t j = 0; j < b.dim(); ++j) {
      RationalFunction r(Poly::constant(b.ring(), 0));
      if (k >= 1) r += h1[k - 1][j];
      if (k <= d) r += h2[k][j];
      if (!r.is_zero())
        return Certificate::fail("family", "lambda^" + std::to_string(k) + " component " + b.p1.vars()[j] +
                                               " residual " + r.to_string());
    }
  return Certificate::pass("family", "degree " + std::to_string(d));
}

std::size_t w1_span_dim(const std::vector<LambdaFamily>& families, const Point& m) {
  const std::size_t n = m.size();
  std::vector<Rational> rows;
  std::size_t count = 0;
  for (const auto& f : families)
    for (const auto& c : f.coeffs) {
      for (const auto& g : gradient(c, n)) rows.push_back(g.evaluate(m));
      ++count;
    }
  if (count == 0) return 0;
  return mat_rank(Matrix(count, n, std::move(rows)));
}

const char* to_string(CriterionOutcome o) {
  switch (o) {
    case CriterionOutcome::KroneckerCertified: return "KroneckerCertified";
    case CriterionOutcome::HomogeneousIndicated: return "HomogeneousIndicated";
    case CriterionOutcome::Inconclusive: return "Inconclusive";
  }
  return "?";
}

const char* to_string(LaxOutcome o) {
  switch (o) {
    case LaxOutcome::NotApplicable: return "NotApplicable";
    case LaxOutcome::WeakLax: return "WeakLax";
    case LaxOutcome::Lax: return "Lax";
    case LaxOutcome::KroneckerConcluded: return "KroneckerConcluded";
  }
  return "?";
}

CriterionVerdict kronecker_criterion(const BihamStructure& b, const std::vector<LambdaFamily>& families,
                                     const Point& m) {
  CriterionVerdict v;
  const SkewPencil pencil = pencil_at(b, m);
  v.n = b.dim();
  v.corank_profile = corank_profile(pencil);
  v.r = *std::min_element(v.corank_profile.begin(), v.corank_profile.end());
  v.w1 = w1_span_dim(families, m);
  for (const auto& f : families) v.degrees.push_back(f.degree());
  const PencilType t = decompose(pencil);
  v.decomposition = t.to_string();

  auto inconclusive = [&](std::string why) {
    v.outcome = CriterionOutcome::Inconclusive;
    v.reason = std::move(why);
    v.provenance = "none";
    return v;
  };
  if (families.empty()) return inconclusive("no Casimir families supplied");

  // Twice the bounds avoids halves: 2*w1 >= n + r, 2*d < n.
  const bool w1_ok = 2 * v.w1 >= v.n + v.r;

  if (families.size() == 1 && v.r == 1) {
    if (!w1_ok) return inconclusive("dim W1 >= (n+r)/2 fails");
    if (2 * v.degrees[0] >= v.n) return inconclusive("degree bound d < dim M/2 fails");
    v.outcome = CriterionOutcome::KroneckerCertified;
    v.type = {static_cast<int>(v.n)};
    v.provenance = "single-family degree criterion (theorem)";
    v.reason = "dim W1 >= (n+1)/2, d < n/2, corank 1";
    if (t.has_jordan() || t.kronecker_dims() != v.type)
      throw Error(ErrorKind::InternalInconsistency,
                  "criterion certifies (" + std::to_string(v.n) + ") but the pencil decomposes as " + v.decomposition);
    return v;
  }

  if (families.size() < v.r) return inconclusive("number of families >= generic corank fails");
  std::size_t sum = 0;
  for (auto d : v.degrees) sum += 2 * d + 1;
  if (sum > v.n) return inconclusive("degree sum bound sum(2d+1) <= dim M fails");
  if (!w1_ok) return inconclusive("dim W1 >= (n+r)/2 fails");
  v.outcome = CriterionOutcome::HomogeneousIndicated;
  for (auto d : v.degrees) v.type.push_back(static_cast<int>(2 * d + 1));
  std::sort(v.type.rbegin(), v.type.rend());
  v.conjectural = true;
  v.provenance = "multi-family type conjecture (conjectural)";
  v.reason = "dim W1 >= (n+r)/2, sum(2d+1) <= n, families >= r";
  v.decomposition_agrees = !t.has_jordan() && t.kronecker_dims() == v.type;
  return v;
}

std::vector<Point> nearby_points(const Point& m) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int s : {1, -1}) {
      Point q = m;
      q[i] += Rational(s, 10);
      out.push_back(std::move(q));
    }
  return out;
}

LaxVerdict lax_check(const BihamStructure& b, const LambdaFamily& l, const Point& m) {
  LaxVerdict v;
  v.rank = l.coeffs.size();
  Certificate fc = family_check(b, l);
  if (!fc) {
    v.detail = fc.detail;
    return v;
  }
  v.outcome = LaxOutcome::WeakLax;
  v.gradient_rank = w1_span_dim({l}, m);
  const SkewPencil pencil = pencil_at(b, m);
  const PencilType t = decompose(pencil);
  v.action_dimension = action_dimension(t);
  if (v.gradient_rank != v.rank || v.action_dimension != v.rank) {
    v.detail = "gradient rank " + std::to_string(v.gradient_rank) + ", action dimension " +
               std::to_string(v.action_dimension) + ", map rank " + std::to_string(v.rank);
    return v;
  }
  v.outcome = LaxOutcome::Lax;
  if (generic_corank(pencil) != 1) {
    v.detail = "generic corank " + std::to_string(generic_corank(pencil)) + " at m";
    return v;
  }
  std::size_t sampled = 1;
  for (const auto& q : nearby_points(m)) {
    std::size_t c;
    try {
      c = generic_corank(pencil_at(b, q));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::PoleAtPoint) continue;
      throw;
    }
    if (c != 1) {
      v.detail = "generic corank " + std::to_string(c) + " at nearby point " + to_string(q);
      return v;
    }
    ++sampled;
  }
  v.outcome = LaxOutcome::KroneckerConcluded;
  v.type = {static_cast<int>(b.dim())};
  v.detail = "corank 1 at m and " + std::to_string(sampled - 1) + " nearby points";
  return v;
}

}  // namespace biham
