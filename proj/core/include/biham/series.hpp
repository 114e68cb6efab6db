#pragma once

#include <biham/poly.hpp>
#include <biham/rational.hpp>

#include <string>
#include <vector>

namespace biham {

// Power series in one or two variables truncated at total degree `order`.
class Series {
 public:
  Series(int nvars, int order);

  static Series variable(int nvars, int order, int index);
  static Series constant(int nvars, int order, const Rational& c);
  // Taylor expansion of a polynomial in one or two variables about `center`.
  static Series from_poly(const Poly& f, const Point& center, int order);

  int nvars() const noexcept { return nvars_; }
  int order() const noexcept { return order_; }

  const Rational& coeff(int i, int j = 0) const;
  void set(int i, int j, Rational value);
  Rational constant_term() const { return coeff(0, 0); }

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator*(const Series& o) const;
  Series operator-() const;
  bool operator==(const Series& o) const;

  Series derivative(int var) const;
  // Antiderivative in `var` with zero constant of integration, truncated.
  Series integral(int var) const;
  // Substitutes subs[k] for variable k; substitutes need zero constant terms.
  Series compose(const std::vector<Series>& subs) const;
  // Homogeneous part of total degree d.
  Series homogeneous(int d) const;

  Poly to_poly(const Ring& ring) const;
  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>(i) * (order_ + 1) + j; }
  void check(const Series& o) const;
  int nvars_;
  int order_;
  std::vector<Rational> c_;
};

Series operator*(const Rational& s, const Series& x);

// Compositional inverse in the designated variable; the other variable (if any) is a parameter.
// Requires zero constant term and a nonzero linear coefficient in the designated variable.
Series series_invert(const Series& s, int designated = 0);

// Expands f - f(center) about center and inverts it in the designated variable.
Series series_invert(const Poly& f, const Point& center, int designated, int order);

}  // namespace biham
