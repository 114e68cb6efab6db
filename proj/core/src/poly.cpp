#include <biham/errors.hpp>
#include <biham/poly.hpp>

#include <algorithm>
#include <numeric>

namespace biham {

Ring make_ring(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return (!a || a->empty()) && (!b || b->empty());
  return *a == *b;
}

namespace {

unsigned total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

}  // namespace

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total(a), db = total(b);
  if (da != db) return da < db;
  return a < b;
}

Poly::Poly(Rational c) {
  if (c != 0) terms_.emplace(Monomial{}, std::move(c));
}

Poly::Poly(Ring ring) : ring_(std::move(ring)) {}

Poly::Poly(Ring ring, Terms terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != nvars()) throw Error(ErrorKind::DimensionMismatch, "exponent vector length");
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
  }
}

Poly Poly::constant(const Ring& ring, const Rational& c) {
  Poly p(ring);
  if (c != 0) p.terms_.emplace(Monomial(p.nvars(), 0), c);
  return p;
}

Poly Poly::variable(const Ring& ring, std::size_t index) {
  Poly p(ring);
  if (index >= p.nvars()) throw Error(ErrorKind::Validation, "variable index out of range");
  Monomial m(p.nvars(), 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), 1);
  return p;
}

Poly Poly::variable(const Ring& ring, const std::string& name) {
  auto it = std::find(ring->begin(), ring->end(), name);
  if (it == ring->end()) throw Error(ErrorKind::Validation, "unknown variable '" + name + "'");
  return variable(ring, static_cast<std::size_t>(it - ring->begin()));
}

Poly with_ring(const Poly& p, const Ring& ring) {
  if (p.ring_ == ring) return p;
  Poly r(ring);
  std::size_t n = r.nvars();
  for (const auto& [m, c] : p.terms_) {
    if (!m.empty() && m.size() != n) throw Error(ErrorKind::DimensionMismatch, "polynomials over different rings");
    r.terms_.emplace(m.empty() ? Monomial(n, 0) : m, c);
  }
  return r;
}

// A ring-less operand is a constant and is lifted into the other operand's ring.
void Poly::adopt(const Poly& o) {
  if (same_ring(ring_, o.ring_)) {
    if (!ring_ && o.ring_) *this = with_ring(*this, o.ring_);
    return;
  }
  if (nvars() == 0) {
    *this = with_ring(*this, o.ring_);
    return;
  }
  if (o.nvars() == 0) return;
  throw Error(ErrorKind::DimensionMismatch, "polynomials over different rings");
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
}

Rational Poly::constant_term() const {
  if (terms_.empty()) return 0;
  const auto& [m, c] = *terms_.begin();
  return total(m) == 0 ? c : Rational(0);
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : total(terms_.rbegin()->first); }

unsigned Poly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.empty() ? 0u : m[var]);
  return d;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorKind::Validation, "leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorKind::Validation, "leading term of zero polynomial");
  return terms_.rbegin()->second;
}

Poly& Poly::operator+=(const Poly& o) {
  Poly rhs = o;
  adopt(rhs);
  rhs.adopt(*this);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r(*this);
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly a(*this), b(o);
  a.adopt(b);
  b.adopt(a);
  Poly r(a.ring_);
  std::size_t n = r.nvars();
  Monomial m(n);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) m[i] = (ma.empty() ? 0 : ma[i]) + (mb.empty() ? 0 : mb[i]);
      auto [it, inserted] = r.terms_.emplace(m, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  return r;
}

bool Poly::operator==(const Poly& o) const { return (*this - o).is_zero(); }

Poly operator*(const Rational& s, const Poly& p) {
  if (s == 0) return Poly(p.ring());
  Poly::Terms t = p.terms();
  for (auto& [m, c] : t) c *= s;
  return Poly(p.ring(), std::move(t));
}

Poly Poly::pow(unsigned e) const {
  Poly result = Poly::constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

Poly Poly::derivative(std::size_t var) const {
  Poly r(ring_);
  for (const auto& [m, c] : terms_) {
    if (m.empty() || m[var] == 0) continue;
    Monomial d = m;
    --d[var];
    r.terms_.emplace(std::move(d), c * m[var]);
  }
  return r;
}

Rational Poly::evaluate(const Point& p) const {
  if (p.size() != nvars() && !is_constant())
    throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t *= biham::pow(p[i], m[i]);
    acc += t;
  }
  return acc;
}

double Poly::evaluate(const std::vector<double>& p) const {
  double acc = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned k = 0; k < m[i]; ++k) t *= p[i];
    acc += t;
  }
  return acc;
}

Poly Poly::compose(const std::vector<Poly>& subs) const {
  if (subs.size() != nvars()) throw Error(ErrorKind::DimensionMismatch, "substitution count");
  Ring target;
  for (const auto& s : subs)
    if (s.nvars()) target = s.ring();
  Poly r = Poly::constant(target, 0);
  std::vector<std::vector<Poly>> powers(subs.size());
  for (const auto& [m, c] : terms_) {
    Poly t = Poly::constant(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Poly::constant(target, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * subs[i]);
      t *= pw[m[i]];
    }
    r += t;
  }
  return r;
}

std::vector<Poly> Poly::coefficients_in(std::size_t var) const {
  std::vector<Poly> out(degree_in(var) + 1, Poly(ring_));
  for (const auto& [m, c] : terms_) {
    Monomial rest = m.empty() ? Monomial(nvars(), 0) : m;
    unsigned e = rest[var];
    rest[var] = 0;
    out[e].terms_.emplace(std::move(rest), c);
  }
  return out;
}

Poly Poly::in_ring(const Ring& target) const {
  if (same_ring(ring_, target)) return with_ring(*this, target);
  std::vector<std::size_t> map(nvars());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*ring_)[i]);
    if (it == target->end()) {
      if (degree_in(i) == 0) {
        map[i] = target->size();
        continue;
      }
      throw Error(ErrorKind::Validation, "variable '" + (*ring_)[i] + "' missing from target ring");
    }
    map[i] = static_cast<std::size_t>(it - target->begin());
  }
  Poly r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) t[map[i]] = m[i];
    r += Poly(target, Terms{{t, c}});
  }
  return r;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Integer l = 1, g = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational s(l, g);
  s.canonicalize();
  if (leading_coefficient() < 0) s = -s;
  return s * *this;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += (*ring_)[i];
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::Validation, "division by zero polynomial");
  if (b.is_constant()) return (Rational(1) / b.constant_term()) * a;
  Poly r = a + Poly::constant(b.ring(), 0);
  Poly q = Poly::constant(b.ring(), 0);
  const Monomial& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Monomial& lr = r.leading_monomial();
    Monomial t(lb.size());
    for (std::size_t i = 0; i < lb.size(); ++i) {
      if (lr[i] < lb[i]) return std::nullopt;
      t[i] = lr[i] - lb[i];
    }
    Poly term(b.ring(), Poly::Terms{{t, r.leading_coefficient() / cb}});
    q += term;
    r -= term * b;
  }
  return q;
}

}  // namespace biham
