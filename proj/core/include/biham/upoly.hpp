#pragma once

#include <biham/rational.hpp>

#include <string>
#include <utility>
#include <vector>

namespace biham {

// Dense univariate polynomial over Q, coefficients stored from the constant term up.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c);
  UPoly(int c) : UPoly(Rational(c)) {}
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }
  static UPoly monomial(const Rational& c, std::size_t degree);

  bool is_zero() const noexcept { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator-() const;
  UPoly operator*(const UPoly& o) const;
  UPoly& operator+=(const UPoly& o) { return *this = *this + o; }
  UPoly& operator-=(const UPoly& o) { return *this = *this - o; }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  bool operator==(const UPoly& o) const = default;

  Rational operator()(const Rational& t) const;
  UPoly derivative() const;
  UPoly monic() const;

  std::string to_string(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly gcd(const UPoly& a, const UPoly& b);
// Exact quotient or throws when b does not divide a.
UPoly exact_quotient(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);

// Squarefree part, monic.
UPoly squarefree_part(const UPoly& p);

// Rational roots with multiplicity 1 each (distinct); integer size is capped.
std::vector<Rational> rational_roots(const UPoly& p);

}  // namespace biham
