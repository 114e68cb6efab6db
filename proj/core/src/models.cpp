#include <biham/errors.hpp>
#include <biham/models.hpp>
#include <biham/parse.hpp>

#include <array>
#include <cmath>
#include <map>
#include <sstream>

namespace biham {

namespace {

Ring numbered_ring(const std::string& prefix, int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return make_ring(std::move(names));
}

// Bracket table builder that refuses to define one pair twice.
class Table {
 public:
  explicit Table(Ring ring) : ring_(std::move(ring)) {}

  void put(std::size_t i, std::size_t j, const Poly& value) { put(i, j, RationalFunction(value)); }
  void put(std::size_t i, std::size_t j, const RationalFunction& value) {
    if (i == j) throw Error(ErrorKind::InternalInconsistency, "diagonal bracket");
    auto key = i < j ? std::make_pair(i, j) : std::make_pair(j, i);
    RationalFunction v = i < j ? value : -value;
    if (entries_.count(key)) throw Error(ErrorKind::InternalInconsistency, "bracket defined twice");
    entries_.emplace(key, v);
  }
  PoissonStructure build() const { return PoissonStructure(ring_, entries_); }

 private:
  Ring ring_;
  std::map<std::pair<std::size_t, std::size_t>, RationalFunction> entries_;
};

// Polynomials in lambda with coefficients in a ring, lowest power first.
using LPoly = std::vector<Poly>;

LPoly lmul(const LPoly& a, const LPoly& b) {
  if (a.empty() || b.empty()) return {};
  LPoly r(a.size() + b.size() - 1, Poly(a[0].ring()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

LPoly ladd(const LPoly& a, const LPoly& b) {
  LPoly r = a.size() >= b.size() ? a : b;
  const LPoly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  return r;
}

LPoly lneg(LPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

void trim(LPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

LambdaFamily family_of(const LPoly& coeffs, std::string orientation) {
  LambdaFamily f;
  for (const auto& c : coeffs) f.coeffs.emplace_back(c);
  f.orientation = std::move(orientation);
  return f;
}

void require_families(const ModelSpec& m) {
  for (const auto& f : m.families) {
    Certificate c = family_check(m.structure, f);
    if (!c) throw Error(ErrorKind::InternalInconsistency, m.identity() + " family fails: " + c.detail);
  }
}

std::string kron_type(std::vector<int> dims) {
  PencilType t;
  for (int d : dims) {
    t.blocks.push_back(Block{BlockKind::Kronecker, (d + 1) / 2, {}});
    t.n += static_cast<std::size_t>(d);
  }
  canonicalize(t);
  return t.to_string();
}

}  // namespace

std::string ModelSpec::identity() const {
  std::string s = name;
  for (std::size_t i = 0; i < parameters.size(); ++i)
    s += (i ? "," : ":") + parameters[i].first + "=" + parameters[i].second;
  return s;
}

bool ModelSpec::is_generic(const Point& m) const {
  for (const auto& g : genericity)
    if (g.evaluate(m) == 0) return false;
  for (const auto& d : structure.p1.excluded_loci())
    if (d.evaluate(m) == 0) return false;
  for (const auto& d : structure.p2.excluded_loci())
    if (d.evaluate(m) == 0) return false;
  return true;
}

ModelSpec flat_kronecker(int k) {
  if (k < 1) throw Error(ErrorKind::Validation, "flat_kronecker needs k >= 1");
  const int n = 2 * k - 1;
  Ring ring = numbered_ring("x", n);
  Table t1(ring), t2(ring);
  for (int l = 0; l + 1 < k; ++l) {
    t1.put(2 * l, 2 * l + 1, Poly::constant(ring, 1));
    t2.put(2 * l + 1, 2 * l + 2, Poly::constant(ring, 1));
  }
  ModelSpec m;
  m.name = "flat_kronecker";
  m.parameters = {{"k", std::to_string(k)}};
  m.structure = {t1.build(), t2.build()};
  LPoly fam;
  for (int l = 0; l < k; ++l) fam.push_back(Poly::variable(ring, static_cast<std::size_t>(2 * l)));
  m.families = {family_of(fam, "lambda*P1 + P2")};
  m.genericity = {Poly::constant(ring, 1)};
  m.expected = {kron_type({n}), CriterionOutcome::KroneckerCertified, IntegrabilityOutcome::StrictlyLenardIntegrable};
  require_families(m);
  return m;
}

ModelSpec jordan_model(int k, const MuLabel& mu) {
  if (k < 1) throw Error(ErrorKind::Validation, "jordan_model needs k >= 1");
  Ring ring = numbered_ring("x", 2 * k);
  Table t1(ring), t2(ring);
  // Upper-right block J (mu on the diagonal, 1 above) or the identity.
  auto jordan = [&](Table& t, const Rational& eigen) {
    for (int i = 0; i < k; ++i) {
      if (eigen != 0) t.put(i, k + i, Poly::constant(ring, eigen));
      if (i + 1 < k) t.put(i, k + i + 1, Poly::constant(ring, 1));
    }
  };
  auto ident = [&](Table& t) {
    for (int i = 0; i < k; ++i) t.put(i, k + i, Poly::constant(ring, 1));
  };
  if (mu.infinite) {
    ident(t1);
    jordan(t2, 0);
  } else {
    jordan(t1, mu.value);
    ident(t2);
  }
  ModelSpec m;
  m.name = "jordan_model";
  m.parameters = {{"k", std::to_string(k)}, {"mu", mu.to_string()}};
  m.structure = {t1.build(), t2.build()};
  m.families = {family_of({Poly::constant(ring, 1)}, "lambda*P1 + P2")};
  m.genericity = {Poly::constant(ring, 1)};
  Block b{BlockKind::Jordan, k, mu.infinite ? BinaryForm({0, 1}) : (mu.value == 0 ? BinaryForm::l2() : BinaryForm({1 / mu.value, 1}))};
  PencilType t;
  t.blocks = {b};
  t.n = static_cast<std::size_t>(2 * k);
  m.expected = {t.to_string(), CriterionOutcome::Inconclusive, IntegrabilityOutcome::JordanObstructed};
  require_families(m);
  return m;
}

ModelSpec open_toda(int k) {
  if (k < 1) throw Error(ErrorKind::Validation, "open_toda needs k >= 1");
  const int n = 2 * k + 1;
  Ring ring = numbered_ring("v", n);
  auto v = [&](int i) { return Poly::variable(ring, static_cast<std::size_t>(i)); };
  Table t1(ring), t2(ring);
  for (int l = 0; l <= k; ++l) {
    const int e = 2 * l;
    if (e + 1 < n) {
      t1.put(e, e + 1, -v(e + 1));
      t2.put(e, e + 1, -(v(e) * v(e + 1)));
    }
    if (e - 1 >= 0) {
      t1.put(e, e - 1, v(e - 1));
      t2.put(e, e - 1, v(e) * v(e - 1));
    }
    if (e + 2 < n) t2.put(e, e + 2, Rational(-2) * v(e + 1).pow(2));
  }
  for (int l = 1; l < k; ++l) t2.put(2 * l - 1, 2 * l + 1, Rational(-1, 2) * (v(2 * l - 1) * v(2 * l + 1)));

  // det(iota(v) + lambda) by the continuant recurrence, minus lambda^(k+1).
  const Poly one = Poly::constant(ring, 1);
  LPoly prev{one}, cur{v(0), one};
  for (int l = 1; l <= k; ++l) {
    LPoly diag{v(2 * l), one};
    LPoly next = ladd(lmul(diag, cur), lneg(lmul({v(2 * l - 1).pow(2)}, prev)));
    prev = std::move(cur);
    cur = std::move(next);
  }
  cur.back() -= one;
  trim(cur);

  ModelSpec m;
  m.name = "open_toda";
  m.parameters = {{"k", std::to_string(k)}};
  m.structure = {t1.build(), t2.build()};
  m.families = {family_of(cur, "lambda*P1 + P2, F(v) = det(iota(v) + lambda) - lambda^(k+1)")};
  for (int l = 0; l < k; ++l) m.genericity.push_back(v(2 * l + 1));
  m.expected = {kron_type({n}), CriterionOutcome::KroneckerCertified, IntegrabilityOutcome::StrictlyLenardIntegrable};
  require_families(m);
  return m;
}

std::vector<Poly> periodic_trace(int k, int shift_sign) {
  if (k < 3) throw Error(ErrorKind::UnsupportedPeriod, "periodic_toda needs k >= 3");
  const int n = 2 * k;
  Ring ring = numbered_ring("v", n);
  auto idx = [&](int i) { return ((i % n) + n) % n; };
  auto v = [&](int i) { return Poly::variable(ring, static_cast<std::size_t>(idx(i))); };
  const Poly zero = Poly::constant(ring, 0), one = Poly::constant(ring, 1);
  auto w = [&](int i) { return idx(i) % 2 == 0 ? LPoly{v(i), Poly::constant(ring, shift_sign)} : LPoly{v(i)}; };
  using M2 = std::array<LPoly, 4>;
  M2 acc{LPoly{one}, LPoly{zero}, LPoly{zero}, LPoly{one}};
  for (int l = 1; l <= k; ++l) {
    M2 t{LPoly{zero}, w(2 * l + 1), lneg(w(2 * l - 1)), lneg(w(2 * l))};
    acc = M2{ladd(lmul(t[0], acc[0]), lmul(t[1], acc[2])), ladd(lmul(t[0], acc[1]), lmul(t[1], acc[3])),
             ladd(lmul(t[2], acc[0]), lmul(t[3], acc[2])), ladd(lmul(t[2], acc[1]), lmul(t[3], acc[3]))};
  }
  LPoly tr = ladd(acc[0], acc[3]);
  trim(tr);
  return tr;
}

ModelSpec periodic_toda(int k) {
  if (k < 3) throw Error(ErrorKind::UnsupportedPeriod, "periodic_toda needs k >= 3");
  const int n = 2 * k;
  Ring ring = numbered_ring("v", n);
  auto idx = [&](int i) { return ((i % n) + n) % n; };
  auto v = [&](int i) { return Poly::variable(ring, static_cast<std::size_t>(idx(i))); };
  Table t1(ring), t2(ring);
  for (int l = 0; l < k; ++l) {
    const int e = 2 * l;
    t1.put(idx(e), idx(e + 1), -v(e + 1));
    t2.put(idx(e), idx(e + 1), -(v(e) * v(e + 1)));
    t1.put(idx(e), idx(e - 1), v(e - 1));
    t2.put(idx(e), idx(e - 1), v(e) * v(e - 1));
    t2.put(idx(e), idx(e + 2), Rational(-2) * v(e + 1).pow(2));
    t2.put(idx(e - 1), idx(e + 1), Rational(-1, 2) * (v(e - 1) * v(e + 1)));
  }
  ModelSpec m;
  m.name = "periodic_toda";
  m.parameters = {{"k", std::to_string(k)}};
  m.structure = {t1.build(), t2.build()};

  const Poly one = Poly::constant(ring, 1);
  auto trace_family = [&](int sign) {
    LPoly tr = periodic_trace(k, sign);
    // The top coefficient is the constant +-1; removing it leaves degree k - 1.
    tr.pop_back();
    trim(tr);
    return tr;
  };
  LPoly g = trace_family(1);
  LambdaFamily fam = family_of(g, "lambda*P1 + P2, shift v + lambda*v0");
  if (!family_check(m.structure, fam)) {
    g = trace_family(-1);
    for (std::size_t j = 1; j < g.size(); j += 2) g[j] = -g[j];
    fam = family_of(g, "lambda*P1 + P2, shift v - lambda*v0 with lambda -> -lambda");
  }
  Poly nprod = one;
  for (int l = 0; l < k; ++l) nprod *= v(2 * l + 1);
  m.families = {fam, family_of({nprod}, "lambda*P1 + P2")};
  for (int l = 0; l < k; ++l) m.genericity.push_back(v(2 * l + 1));
  m.expected = {kron_type({n - 1, 1}), CriterionOutcome::HomogeneousIndicated,
                IntegrabilityOutcome::StrictlyLenardIntegrable};
  require_families(m);
  return m;
}

ModelSpec m_f(const Poly& f) {
  Ring ring = make_ring({"x", "y", "z"});
  Poly g = f.in_ring(ring);
  Poly fx = g.derivative(0), fy = g.derivative(1);
  if (g.degree_in(2) != 0) throw Error(ErrorKind::Validation, "f must depend on x and y only");
  if (fx.is_zero() || fy.is_zero()) throw Error(ErrorKind::DegenerateFunction, "both partial derivatives of f must be nonzero");
  Table t1(ring), t2(ring);
  t1.put(0, 2, fy);
  t2.put(1, 2, -fx);
  ModelSpec m;
  m.name = "m_f";
  m.parameters = {{"f", g.to_string()}};
  m.structure = {t1.build(), t2.build()};
  m.genericity = {fx, fy};
  const bool linear = g.degree() <= 1;
  if (linear) {
    // For f = a x + b y the family lambda*b*y + a*x is exact.
    m.families = {family_of({fx * Poly::variable(ring, 0), fy * Poly::variable(ring, 1)}, "lambda*P1 + P2")};
  }
  m.expected = {kron_type({3}), linear ? CriterionOutcome::KroneckerCertified : CriterionOutcome::Inconclusive,
                linear ? IntegrabilityOutcome::StrictlyLenardIntegrable : IntegrabilityOutcome::Insufficient};
  require_families(m);
  return m;
}

namespace {

struct TwoFamilyParts {
  Ring ring;
  Poly x, f, eta, zeta, deta;
};

// eta(t) -> zeta with zeta' = -t*eta', zeta(0) = 0; x = L^2 y + zeta(L); f = (L-1)^2 y + zeta(L) + eta(L).
TwoFamilyParts two_family_parts(const Poly& eta_t, Ring ring) {
  if (eta_t.nvars() > 1) throw Error(ErrorKind::Validation, "eta must be a polynomial in one variable");
  if (eta_t.degree() < 1) throw Error(ErrorKind::DegenerateModel, "eta must have degree >= 1");
  Ring tr = eta_t.nvars() ? eta_t.ring() : make_ring({"t"});
  Poly eta = eta_t.in_ring(tr);
  Poly t = Poly::variable(tr, 0);
  Poly integrand = -(t * eta.derivative(0));
  Poly::Terms zt;
  for (const auto& [mono, c] : integrand.terms()) zt.emplace(Monomial{mono[0] + 1}, c / (mono[0] + 1));
  Poly zeta(tr, zt);
  Poly L = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
  std::vector<Poly> sub{L};
  TwoFamilyParts p;
  p.ring = ring;
  p.eta = eta.compose(sub);
  p.zeta = zeta.compose(sub);
  p.deta = eta.derivative(0).compose(sub);
  p.x = L * L * y + p.zeta;
  Poly lm1 = L - Poly::constant(ring, 1);
  p.f = lm1 * lm1 * y + p.zeta + p.eta;
  return p;
}

}  // namespace

ModelSpec two_family(const Poly& eta_t) {
  Ring ring = make_ring({"L", "y", "z"});
  TwoFamilyParts p = two_family_parts(eta_t, ring);
  const Poly L = Poly::variable(ring, 0), y = Poly::variable(ring, 1);
  const RationalFunction xl(p.x.derivative(0)), xy(p.x.derivative(1));
  const RationalFunction gl(p.f.derivative(0)), gy(p.f.derivative(1));
  // Chain rule from (x, y) to (L, y): L_x = 1/x_L, L_y = -x_y/x_L.
  const RationalFunction fx = gl / xl;
  const RationalFunction fy = gy - gl * xy / xl;
  const RationalFunction lx = RationalFunction(1) / xl;
  const RationalFunction ly = -(xy / xl);
  Table t1(ring), t2(ring);
  t1.put(0, 2, lx * fy);
  t2.put(0, 2, -(ly * fx));
  t2.put(1, 2, -fx);
  ModelSpec m;
  m.name = "two_family";
  m.parameters = {{"eta", eta_t.to_string()}};
  m.structure = {t1.build(), t2.build()};
  // (lambda - L)^2 y + zeta(L) + lambda*eta(L)
  m.families = {family_of({L * L * y + p.zeta, Rational(-2) * (L * y) + p.eta, y}, "lambda*P1 + P2")};
  m.genericity = {p.x.derivative(0), L, L - Poly::constant(ring, 1)};
  m.expected = {kron_type({3}), CriterionOutcome::Inconclusive, IntegrabilityOutcome::StrictlyLenardIntegrable};
  require_families(m);
  return m;
}

Series two_family_local_function(const Poly& eta, const Rational& l0, const Rational& y0, int order) {
  Ring ring = make_ring({"L", "y"});
  TwoFamilyParts p = two_family_parts(eta, ring);
  const Point center{l0, y0};
  Series sx = Series::from_poly(p.x, center, order);
  sx.set(0, 0, 0);
  Series sf = Series::from_poly(p.f, center, order);
  sf.set(0, 0, 0);
  Series u = series_invert(sx, 0);
  return sf.compose({u, Series::variable(2, order, 1)});
}

ModelSpec sl2_shift(const std::array<Rational, 3>& alpha) {
  auto q = [](const Rational& e, const Rational& h, const Rational& f) -> Rational { return h * h + 4 * e * f; };
  if (q(alpha[0], alpha[1], alpha[2]) == 0) throw Error(ErrorKind::NotRegular, "shift element has Q(alpha) = 0");
  Ring ring = make_ring({"e", "h", "f"});
  const Poly e = Poly::variable(ring, 0), h = Poly::variable(ring, 1), f = Poly::variable(ring, 2);
  // [h,e] = 2e, [h,f] = -2f, [e,f] = h.
  Table t1(ring), t2(ring);
  t2.put(0, 1, Rational(-2) * e);
  t2.put(0, 2, h);
  t2.put(1, 2, Rational(-2) * f);
  if (alpha[0] != 0) t1.put(0, 1, Poly::constant(ring, -2 * alpha[0]));
  if (alpha[1] != 0) t1.put(0, 2, Poly::constant(ring, alpha[1]));
  if (alpha[2] != 0) t1.put(1, 2, Poly::constant(ring, -2 * alpha[2]));
  ModelSpec m;
  m.name = "sl2_shift";
  m.parameters = {{"e", alpha[0].get_str()}, {"h", alpha[1].get_str()}, {"f", alpha[2].get_str()}};
  m.structure = {t1.build(), t2.build()};
  // Q(x + lambda*alpha) - lambda^2 Q(alpha) with Q = h^2 + 4ef.
  Poly q0 = h * h + Rational(4) * (e * f);
  Poly q1 = Rational(2 * alpha[1]) * h + Rational(4 * alpha[2]) * e + Rational(4 * alpha[0]) * f;
  m.families = {family_of({q0, q1}, "lambda*P1 + P2")};
  // x and alpha not proportional.
  Poly c0 = alpha[2] * h - alpha[1] * f, c1 = alpha[0] * f - alpha[2] * e, c2 = alpha[1] * e - alpha[0] * h;
  m.genericity = {c0 * c0 + c1 * c1 + c2 * c2};
  m.expected = {kron_type({3}), CriterionOutcome::KroneckerCertified, IntegrabilityOutcome::StrictlyLenardIntegrable};
  require_families(m);
  return m;
}

SkewPencil epsilon_pencil(const Rational& eps) {
  Matrix a(6, 6), b(6, 6);
  auto put = [](Matrix& m, std::size_t i, std::size_t j, const Rational& v) {
    m(i, j) += v;
    m(j, i) -= v;
  };
  for (std::size_t l = 0; l < 2; ++l) {
    put(a, 2 * l, 2 * l + 1, 1);
    put(b, 2 * l + 1, 2 * l + 2, 1);
  }
  put(a, 5, 1, eps);
  put(a, 5, 3, eps);
  return SkewPencil(a, b);
}

Matrix toda_tridiagonal(int k, const Point& v) {
  Matrix m(static_cast<std::size_t>(k + 1), static_cast<std::size_t>(k + 1));
  for (int l = 0; l <= k; ++l) {
    m(l, l) = v[2 * l];
    if (l < k) m(l, l + 1) = m(l + 1, l) = v[2 * l + 1];
  }
  return m;
}

std::vector<UPoly> run_polynomials(int k, const Point& v) {
  std::vector<UPoly> out;
  int start = 0;
  for (int l = 0; l <= k; ++l) {
    if (l < k && v[2 * l + 1] != 0) continue;
    // Block rows start..l: det(lambda - block) by the continuant recurrence.
    UPoly prev(1), cur(std::vector<Rational>{-v[2 * start], 1});
    for (int i = start + 1; i <= l; ++i) {
      UPoly next = UPoly(std::vector<Rational>{-v[2 * i], 1}) * cur - UPoly(Rational(v[2 * i - 1] * v[2 * i - 1])) * prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
    out.push_back(cur);
    start = l + 1;
  }
  return out;
}

bool s_generic(int k, const Point& v) {
  auto runs = run_polynomials(k, v);
  for (std::size_t i = 0; i < runs.size(); ++i)
    for (std::size_t j = i + 1; j < runs.size(); ++j)
      if (gcd(runs[i], runs[j]).degree() > 0) return false;
  return true;
}

double mf_casimir_numeric(const Poly& f, const Rational& lambda, const Rational& x0, const Rational& y0, int steps) {
  if (lambda == 0) throw Error(ErrorKind::Validation, "lambda must be nonzero");
  if (steps < 1) throw Error(ErrorKind::Validation, "steps must be positive");
  if (f.nvars() != 2) throw Error(ErrorKind::Validation, "f must be a polynomial in (x, y)");
  const Poly fx = f.derivative(0), fy = f.derivative(1);
  const double lam = lambda.get_d();
  auto rhs = [&](double x, double y) {
    const double den = fy.evaluate(std::vector<double>{x, y});
    if (!std::isfinite(den) || std::fabs(den) < 1e-12)
      throw Error(ErrorKind::SingularODE, "f_y vanishes on the integration path");
    return -fx.evaluate(std::vector<double>{x, y}) / den / lam;
  };
  double x = x0.get_d(), y = y0.get_d();
  if (x == 0.0) return y;
  const double h = -x / steps;
  for (int i = 0; i < steps; ++i) {
    const double k1 = rhs(x, y);
    const double k2 = rhs(x + h / 2, y + h / 2 * k1);
    const double k3 = rhs(x + h / 2, y + h / 2 * k2);
    const double k4 = rhs(x + h, y + h * k3);
    y += h / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    x = x0.get_d() + (i + 1) * h;
    if (!std::isfinite(y)) throw Error(ErrorKind::SingularODE, "solution diverged");
  }
  return y;
}

std::vector<std::string> catalog_names() {
  return {"flat_kronecker", "jordan_model", "open_toda", "periodic_toda", "m_f", "two_family", "sl2_shift"};
}

std::string catalog_description(const std::string& name) {
  if (name == "flat_kronecker") return "constant Kronecker block K_{2k-1}; params k (default 2)";
  if (name == "jordan_model") return "constant Jordan block J_{2k}(mu); params k (default 1), mu rational or inf (default 2)";
  if (name == "open_toda") return "open Toda on V_{2k+1}; params k (default 2)";
  if (name == "periodic_toda") return "periodic Toda on V_{2k}, k >= 3; params k (default 3)";
  if (name == "m_f") return "3-dim structure M_f on (x, y, z); params f (default x+y+x*y)";
  if (name == "two_family") return "[2]-family structure in (L, y, z); params eta in t (default t^2)";
  if (name == "sl2_shift") return "sl2 argument shift; params e, h, f of the shift element (default 0, 1, 0)";
  throw Error(ErrorKind::UnknownModel, "unknown catalog model '" + name + "'");
}

namespace {

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorKind::Validation, "parameter " + key + " expects an integer, got '" + value + "'");
}

}  // namespace

ModelSpec make_model(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  std::map<std::string, std::string> params;
  if (colon != std::string::npos) {
    std::stringstream ss(spec.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorKind::Validation, "parameter '" + item + "' lacks '='");
      params[item.substr(0, eq)] = item.substr(eq + 1);
    }
  }
  auto take = [&](const std::string& key, const std::string& fallback) {
    auto it = params.find(key);
    std::string v = it == params.end() ? fallback : it->second;
    if (it != params.end()) params.erase(it);
    return v;
  };
  ModelSpec m;
  if (name == "flat_kronecker") {
    m = flat_kronecker(parse_int("k", take("k", "2")));
  } else if (name == "jordan_model") {
    int k = parse_int("k", take("k", "1"));
    std::string mu = take("mu", "2");
    MuLabel label = (mu == "inf" || mu == "infinity") ? MuLabel{true, 0} : MuLabel{false, parse_rational(mu)};
    m = jordan_model(k, label);
  } else if (name == "open_toda") {
    m = open_toda(parse_int("k", take("k", "2")));
  } else if (name == "periodic_toda") {
    m = periodic_toda(parse_int("k", take("k", "3")));
  } else if (name == "m_f") {
    m = m_f(parse_poly(take("f", "x+y+x*y"), make_ring({"x", "y"})));
  } else if (name == "two_family") {
    m = two_family(parse_poly(take("eta", "t^2"), make_ring({"t"})));
  } else if (name == "sl2_shift") {
    m = sl2_shift({parse_rational(take("e", "0")), parse_rational(take("h", "1")), parse_rational(take("f", "0"))});
  } else {
    throw Error(ErrorKind::UnknownModel, "unknown catalog model '" + name + "'");
  }
  if (!params.empty()) throw Error(ErrorKind::Validation, "unknown parameter '" + params.begin()->first + "' for " + name);
  return m;
}

}  // namespace biham
