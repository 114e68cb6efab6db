#include <biham/errors.hpp>
#include <biham/poisson.hpp>

#include <algorithm>

namespace biham {

PoissonStructure::PoissonStructure(Ring ring)
    : ring_(std::move(ring)), n_(ring_ ? ring_->size() : 0), table_(n_ * n_, RationalFunction(Poly::constant(ring_, 0))) {}

PoissonStructure::PoissonStructure(Ring ring, const std::map<std::pair<std::size_t, std::size_t>, RationalFunction>& upper)
    : PoissonStructure(std::move(ring)) {
  for (const auto& [ij, v] : upper) {
    auto [i, j] = ij;
    if (i >= n_ || j >= n_) throw Error(ErrorKind::Validation, "bracket index out of range");
    if (i == j) {
      if (!v.is_zero()) throw Error(ErrorKind::Validation, "diagonal bracket {x_i, x_i} must vanish");
      continue;
    }
    set(i, j, v);
  }
}

void PoissonStructure::set(std::size_t i, std::size_t j, const RationalFunction& value) {
  if (i == j) {
    if (!value.is_zero()) throw Error(ErrorKind::Validation, "diagonal bracket must vanish");
    return;
  }
  RationalFunction v = value.in_ring(ring_);
  table_[i * n_ + j] = v;
  table_[j * n_ + i] = -v;
}

std::vector<Poly> PoissonStructure::excluded_loci() const {
  std::vector<Poly> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) {
      const Poly& d = (*this)(i, j).denominator();
      if (d.is_constant()) continue;
      if (std::none_of(out.begin(), out.end(), [&](const Poly& q) { return q == d; })) out.push_back(d);
    }
  return out;
}

PoissonStructure PoissonStructure::operator+(const PoissonStructure& o) const {
  if (!same_ring(ring_, o.ring_)) throw Error(ErrorKind::DimensionMismatch, "structures on different variables");
  PoissonStructure r(ring_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) r.set(i, j, (*this)(i, j) + o(i, j));
  return r;
}

PoissonStructure PoissonStructure::operator*(const Rational& s) const {
  PoissonStructure r(ring_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j) r.set(i, j, RationalFunction(s) * (*this)(i, j));
  return r;
}

bool PoissonStructure::operator==(const PoissonStructure& o) const {
  if (!same_ring(ring_, o.ring_)) return false;
  for (std::size_t k = 0; k < table_.size(); ++k)
    if (!(table_[k] == o.table_[k])) return false;
  return true;
}

Matrix bivector_at(const PoissonStructure& p, const Point& m) {
  const std::size_t n = p.dim();
  if (m.size() != n) throw Error(ErrorKind::DimensionMismatch, "point dimension");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational v = p(i, j).evaluate(m);
      out(i, j) = v;
      out(j, i) = -v;
    }
  return out;
}

RationalFunction bracket_of(const PoissonStructure& p, const RationalFunction& f, const RationalFunction& g) {
  const std::size_t n = p.dim();
  auto df = gradient(f, n), dg = gradient(g, n);
  RationalFunction acc(Poly::constant(p.ring(), 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (df[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && !dg[j].is_zero() && !p(i, j).is_zero()) acc += p(i, j) * df[i] * dg[j];
  }
  return acc;
}

std::vector<RationalFunction> hamiltonian_vector(const PoissonStructure& p, const RationalFunction& f) {
  const std::size_t n = p.dim();
  auto df = gradient(f, n);
  std::vector<RationalFunction> out(n, RationalFunction(Poly::constant(p.ring(), 0)));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      if (!df[i].is_zero() && !p(i, j).is_zero()) out[j] += p(i, j) * df[i];
  return out;
}

namespace {

// sum_l (P^{li} d_l Q^{jk} + P^{lj} d_l Q^{ki} + P^{lk} d_l Q^{ij})
RationalFunction jacobiator(const PoissonStructure& p, const PoissonStructure& q, std::size_t i, std::size_t j,
                            std::size_t k) {
  RationalFunction acc(Poly::constant(p.ring(), 0));
  const std::size_t idx[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
  for (const auto& t : idx)
    for (std::size_t l = 0; l < p.dim(); ++l) {
      const RationalFunction& a = p(l, t[0]);
      if (a.is_zero()) continue;
      RationalFunction d = q(t[1], t[2]).derivative(l);
      if (!d.is_zero()) acc += a * d;
    }
  return acc;
}

}  // namespace

Certificate jacobi_check(const PoissonStructure& p) {
  const std::size_t n = p.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalFunction r = jacobiator(p, p, i, j, k);
        if (!r.is_zero())
          return Certificate::fail("jacobi", "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                 std::to_string(k) + ") residual " + r.to_string());
      }
  return Certificate::pass("jacobi");
}

Certificate compatibility_check(const PoissonStructure& p1, const PoissonStructure& p2) {
  if (!same_ring(p1.ring(), p2.ring())) throw Error(ErrorKind::DimensionMismatch, "structures on different variables");
  const std::size_t n = p1.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalFunction r = jacobiator(p1, p2, i, j, k) + jacobiator(p2, p1, i, j, k);
        if (!r.is_zero())
          return Certificate::fail("compatibility", "triple (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                                        std::to_string(k) + ") residual " + r.to_string());
      }
  return Certificate::pass("compatibility");
}

Certificate is_casimir(const PoissonStructure& p, const RationalFunction& f) {
  auto v = hamiltonian_vector(p, f);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (!v[j].is_zero())
      return Certificate::fail("casimir", "component " + p.vars()[j] + " residual " + v[j].to_string());
  return Certificate::pass("casimir");
}

std::size_t corank_at(const PoissonStructure& p, const Point& m) { return p.dim() - mat_rank(bivector_at(p, m)); }

SkewPencil pencil_at(const BihamStructure& b, const Point& m) {
  return SkewPencil(bivector_at(b.p1, m), bivector_at(b.p2, m));
}

}  // namespace biham
