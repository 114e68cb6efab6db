#pragma once

#include <biham/casimir.hpp>
#include <biham/lenard.hpp>
#include <biham/series.hpp>

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// Outcomes a catalog entry is expected to produce at its generic points.
struct Expectations {
  std::string pencil_type;
  std::optional<CriterionOutcome> criterion;
  std::optional<IntegrabilityOutcome> integrability;
};

struct ModelSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> parameters;
  BihamStructure structure;
  std::vector<LambdaFamily> families;
  // The generic locus is where every listed polynomial is nonzero.
  std::vector<Poly> genericity;
  Expectations expected;

  std::string identity() const;
  bool is_generic(const Point& m) const;
};

ModelSpec flat_kronecker(int k);
ModelSpec jordan_model(int k, const MuLabel& mu);
ModelSpec open_toda(int k);
ModelSpec periodic_toda(int k);
// Coefficients in lambda of Tr(m_k ... m_1) at v + shift_sign * lambda * v0, lowest power first.
std::vector<Poly> periodic_trace(int k, int shift_sign);
// f is a polynomial in the variables (x, y).
ModelSpec m_f(const Poly& f);
// eta is a polynomial in the single variable t.
ModelSpec two_family(const Poly& eta);
// alpha holds the (e, h, f) coordinates of the shift element.
ModelSpec sl2_shift(const std::array<Rational, 3>& alpha);

// "name" or "name:key=value,key=value".
ModelSpec make_model(const std::string& spec);
std::vector<std::string> catalog_names();
std::string catalog_description(const std::string& name);

// Six-dimensional pair of two three-dimensional Kronecker pairings coupled through W by eps.
SkewPencil epsilon_pencil(const Rational& eps);

// Open Toda helpers on V_{2k+1}: the tridiagonal matrix and the run polynomials det(lambda - block).
Matrix toda_tridiagonal(int k, const Point& v);
std::vector<UPoly> run_polynomials(int k, const Point& v);
bool s_generic(int k, const Point& v);

// f - f(center) in local coordinates (x - x0, y - y0) for the two_family model centred at (L0, y0).
Series two_family_local_function(const Poly& eta, const Rational& l0, const Rational& y0, int order);

// Fixed-step RK4 for dPsi/dx = -Phi(x, Psi)/lambda with Phi = f_x/f_y, from (x0, y0) to x = 0.
double mf_casimir_numeric(const Poly& f, const Rational& lambda, const Rational& x0, const Rational& y0, int steps);

}  // namespace biham
