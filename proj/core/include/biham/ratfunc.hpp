#pragma once

#include <biham/poly.hpp>

#include <string>
#include <vector>

namespace biham {

class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(1) {}
  RationalFunction(Poly p);
  RationalFunction(Rational c) : RationalFunction(Poly(std::move(c))) {}
  RationalFunction(int c) : RationalFunction(Rational(c)) {}
  RationalFunction(Poly num, Poly den);

  const Poly& numerator() const noexcept { return num_; }
  const Poly& denominator() const noexcept { return den_; }
  const Ring& ring() const noexcept { return num_.nvars() ? num_.ring() : den_.ring(); }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  bool operator==(const RationalFunction& o) const;

  RationalFunction pow(int e) const;
  RationalFunction derivative(std::size_t var) const;
  // Throws Error(PoleAtPoint) when the denominator vanishes at p.
  Rational evaluate(const Point& p) const;
  RationalFunction in_ring(const Ring& target) const;

  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

std::vector<RationalFunction> gradient(const RationalFunction& f, std::size_t n);

}  // namespace biham
