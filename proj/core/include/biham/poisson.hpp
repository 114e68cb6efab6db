#pragma once

#include <biham/matrix.hpp>
#include <biham/pencil.hpp>
#include <biham/ratfunc.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace biham {

// Outcome of an exact identity check; failure is a value, not an error.
struct Certificate {
  std::string name;
  bool passed = true;
  std::string detail;

  explicit operator bool() const noexcept { return passed; }
  static Certificate pass(std::string name, std::string detail = {}) { return {std::move(name), true, std::move(detail)}; }
  static Certificate fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }
};

// Bivector field with coefficients {x_i, x_j} stored on the full skew table.
class PoissonStructure {
 public:
  PoissonStructure() = default;
  explicit PoissonStructure(Ring ring);
  // Entries are given for i < j; the lower triangle follows by skew symmetry.
  PoissonStructure(Ring ring, const std::map<std::pair<std::size_t, std::size_t>, RationalFunction>& upper);

  std::size_t dim() const noexcept { return n_; }
  const Ring& ring() const noexcept { return ring_; }
  const std::vector<std::string>& vars() const { return *ring_; }
  const RationalFunction& operator()(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  void set(std::size_t i, std::size_t j, const RationalFunction& value);

  // Denominators whose zero loci are excluded from evaluation.
  std::vector<Poly> excluded_loci() const;

  PoissonStructure operator+(const PoissonStructure& o) const;
  PoissonStructure operator*(const Rational& s) const;
  bool operator==(const PoissonStructure& o) const;

 private:
  Ring ring_;
  std::size_t n_ = 0;
  std::vector<RationalFunction> table_;
};

struct BihamStructure {
  PoissonStructure p1;
  PoissonStructure p2;

  std::size_t dim() const { return p1.dim(); }
  const Ring& ring() const { return p1.ring(); }
};

Matrix bivector_at(const PoissonStructure& p, const Point& m);
RationalFunction bracket_of(const PoissonStructure& p, const RationalFunction& f, const RationalFunction& g);
// Components sum_i P^{ij} d_i F for each j.
std::vector<RationalFunction> hamiltonian_vector(const PoissonStructure& p, const RationalFunction& f);

Certificate jacobi_check(const PoissonStructure& p);
Certificate compatibility_check(const PoissonStructure& p1, const PoissonStructure& p2);
Certificate is_casimir(const PoissonStructure& p, const RationalFunction& f);
std::size_t corank_at(const PoissonStructure& p, const Point& m);
SkewPencil pencil_at(const BihamStructure& b, const Point& m);

}  // namespace biham
