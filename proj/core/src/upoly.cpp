#include <biham/errors.hpp>
#include <biham/upoly.hpp>

#include <algorithm>

namespace biham {

UPoly::UPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<Rational> r(std::max(c_.size(), o.c_.size()));
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return UPoly(std::move(r));
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (-o); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(r));
}

Rational UPoly::operator()(const Rational& t) const {
  Rational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
  if (is_zero()) return {};
  UPoly r(*this);
  const Rational lc = leading();
  for (auto& c : r.c_) c /= lc;
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rational& c = c_[i];
    if (c == 0) continue;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Validation, "polynomial division by zero");
  std::vector<Rational> r = a.coeffs();
  const auto& d = b.coeffs();
  if (r.size() < d.size()) return {UPoly(), a};
  std::vector<Rational> q(r.size() - d.size() + 1);
  const Rational lc = d.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + d.size() - 1] / lc;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= f * d[j];
  }
  r.resize(d.size() - 1);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

bool divides(const UPoly& b, const UPoly& a) { return divmod(a, b).second.is_zero(); }

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorKind::InternalInconsistency, "inexact polynomial division");
  return q;
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly(1);
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

namespace {

std::vector<Integer> positive_divisors(Integer n) {
  std::vector<Integer> small, large;
  if (n < 0) n = -n;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const UPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  UPoly q = p;
  if (q.coeff(0) == 0) {
    roots.push_back(0);
    while (q.coeff(0) == 0) q = exact_quotient(q, UPoly::x());
  }
  if (q.degree() <= 0) return roots;
  Integer l = lcm_of_denominators(q.coeffs());
  Integer a0 = Rational(q.coeff(0) * l).get_num();
  Integer an = Rational(q.leading() * l).get_num();
  // Trial division beyond this bound would dominate the cost; larger roots are left unsplit.
  const Integer cap("1000000000000");
  if (abs(a0) > cap || abs(an) > cap) return roots;
  for (const auto& num : positive_divisors(a0))
    for (const auto& den : positive_divisors(an))
      for (int sign : {1, -1}) {
        Rational r(num * sign, den);
        r.canonicalize();
        if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
        if (q(r) == 0) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace biham
