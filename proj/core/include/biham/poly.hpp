#pragma once

#include <biham/rational.hpp>

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace biham {

// Shared ordered variable list; polynomials with equal lists interoperate.
using Ring = std::shared_ptr<const std::vector<std::string>>;

Ring make_ring(std::vector<std::string> names);
bool same_ring(const Ring& a, const Ring& b);

using Monomial = std::vector<unsigned>;

// Graded lexicographic: total degree first, then the earlier variable dominates.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  // The zero polynomial without variables; adopts the ring of its partner in arithmetic.
  Poly() = default;
  Poly(Rational c);
  Poly(int c) : Poly(Rational(c)) {}
  explicit Poly(Ring ring);
  Poly(Ring ring, Terms terms);

  static Poly constant(const Ring& ring, const Rational& c);
  static Poly variable(const Ring& ring, std::size_t index);
  static Poly variable(const Ring& ring, const std::string& name);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t nvars() const noexcept { return ring_ ? ring_->size() : 0; }
  const Terms& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  unsigned degree() const;
  unsigned degree_in(std::size_t var) const;
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o) { return *this += -o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  bool operator==(const Poly& o) const;

  Poly pow(unsigned e) const;
  Poly derivative(std::size_t var) const;
  Rational evaluate(const Point& p) const;
  double evaluate(const std::vector<double>& p) const;

  // Substitutes subs[i] for variable i; all substitutes share one ring.
  Poly compose(const std::vector<Poly>& subs) const;
  // Coefficients of var^0, var^1, ... (each free of var).
  std::vector<Poly> coefficients_in(std::size_t var) const;
  // Re-expresses the polynomial over a ring that contains all its variables.
  Poly in_ring(const Ring& target) const;

  // Positive rational multiple with coprime integer coefficients and positive leading coefficient.
  Poly primitive() const;

  std::string to_string() const;

 private:
  friend Poly with_ring(const Poly&, const Ring&);
  void adopt(const Poly& o);
  Ring ring_;
  Terms terms_;
};

Poly operator*(const Rational& s, const Poly& p);

// Quotient when b divides a exactly.
std::optional<Poly> divide_exact(const Poly& a, const Poly& b);

}  // namespace biham
