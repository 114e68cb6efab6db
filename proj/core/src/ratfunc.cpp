#include <biham/errors.hpp>
#include <biham/ratfunc.hpp>

namespace biham {

RationalFunction::RationalFunction(Poly p) : num_(std::move(p)), den_(1) { normalize(); }

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::Validation, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  // Bring both parts into one ring.
  Poly zero_n = num_ - num_;
  num_ = num_ + (den_ - den_);
  den_ = den_ + zero_n;
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.ring(), 1);
    return;
  }
  if (!den_.is_constant()) {
    if (auto q = divide_exact(num_, den_)) {
      num_ = *q;
      den_ = Poly::constant(num_.ring(), 1);
      return;
    }
  }
  Poly p = den_.primitive();
  Rational scale = p.leading_coefficient() / den_.leading_coefficient();
  num_ = scale * num_;
  den_ = p;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  if (o.den_.is_constant() && den_.is_constant())
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  if (auto q = divide_exact(den_, o.den_)) return RationalFunction(num_ + o.num_ * *q, den_);
  if (auto q = divide_exact(o.den_, den_)) return RationalFunction(num_ * *q + o.num_, o.den_);
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const { return *this + (-o); }

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction(num_ * o.num_);
  // Cross-cancel before multiplying to limit growth.
  Poly n1 = num_, d1 = den_, n2 = o.num_, d2 = o.den_;
  if (!d2.is_constant())
    if (auto q = divide_exact(n1, d2)) {
      n1 = *q;
      d2 = Poly(1);
    }
  if (!d1.is_constant())
    if (auto q = divide_exact(n2, d1)) {
      n2 = *q;
      d1 = Poly(1);
    }
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw Error(ErrorKind::Validation, "division by zero rational function");
  return *this * RationalFunction(o.den_, o.num_);
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return (num_ * o.den_ - o.num_ * den_).is_zero();
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(1) / pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)));
}

RationalFunction RationalFunction::derivative(std::size_t var) const {
  if (den_.is_constant()) return RationalFunction(num_.derivative(var), den_);
  Poly dd = den_.derivative(var);
  if (dd.is_zero()) return RationalFunction(num_.derivative(var), den_);
  return RationalFunction(num_.derivative(var) * den_ - num_ * dd, den_ * den_);
}

Rational RationalFunction::evaluate(const Point& p) const {
  Rational d = den_.evaluate(p);
  if (d == 0) throw Error(ErrorKind::PoleAtPoint, "denominator " + den_.to_string() + " vanishes at " + biham::to_string(p));
  return num_.evaluate(p) / d;
}

RationalFunction RationalFunction::in_ring(const Ring& target) const {
  return RationalFunction(num_.in_ring(target), den_.in_ring(target));
}

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return ((Rational(1) / den_.constant_term()) * num_).to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::vector<RationalFunction> gradient(const RationalFunction& f, std::size_t n) {
  std::vector<RationalFunction> g;
  g.reserve(n);
  for (std::size_t i = 0; i < n; ++i) g.push_back(f.derivative(i));
  return g;
}

}  // namespace biham
