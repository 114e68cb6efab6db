#include <biham/errors.hpp>
#include <biham/series.hpp>

namespace biham {

Series::Series(int nvars, int order) : nvars_(nvars), order_(order) {
  if (nvars < 1 || nvars > 2) throw Error(ErrorKind::Validation, "series support one or two variables");
  if (order < 0) throw Error(ErrorKind::Validation, "negative truncation order");
  c_.resize(static_cast<std::size_t>(order + 1) * (order + 1));
}

Series Series::variable(int nvars, int order, int index) {
  Series s(nvars, order);
  if (order >= 1) s.set(index == 0 ? 1 : 0, index == 1 ? 1 : 0, 1);
  return s;
}

Series Series::constant(int nvars, int order, const Rational& c) {
  Series s(nvars, order);
  s.set(0, 0, c);
  return s;
}

Series Series::from_poly(const Poly& f, const Point& center, int order) {
  int n = static_cast<int>(f.nvars());
  if (n < 1 || n > 2) throw Error(ErrorKind::Validation, "series expansion needs one or two variables");
  if (center.size() != f.nvars()) throw Error(ErrorKind::DimensionMismatch, "expansion center");
  Series x = Series::constant(n, order, center[0]) + Series::variable(n, order, 0);
  Series out(n, order);
  std::vector<Series> xs{Series::constant(n, order, 1)};
  for (unsigned e = 1; e <= f.degree_in(0); ++e) xs.push_back(xs.back() * x);
  if (n == 1) {
    for (const auto& [m, c] : f.terms()) out = out + c * xs[m.empty() ? 0 : m[0]];
    return out;
  }
  Series y = Series::constant(n, order, center[1]) + Series::variable(n, order, 1);
  std::vector<Series> ys{Series::constant(n, order, 1)};
  for (unsigned e = 1; e <= f.degree_in(1); ++e) ys.push_back(ys.back() * y);
  for (const auto& [m, c] : f.terms()) {
    unsigned a = m.empty() ? 0 : m[0], b = m.empty() ? 0 : m[1];
    out = out + c * (xs[a] * ys[b]);
  }
  return out;
}

const Rational& Series::coeff(int i, int j) const {
  static const Rational zero = 0;
  if (i < 0 || j < 0 || i + j > order_ || (nvars_ == 1 && j != 0)) return zero;
  return c_[index(i, j)];
}

void Series::set(int i, int j, Rational value) {
  if (nvars_ == 1 && j != 0) throw Error(ErrorKind::Validation, "univariate series has no second variable");
  if (i + j > order_) return;
  c_[index(i, j)] = std::move(value);
}

void Series::check(const Series& o) const {
  if (nvars_ != o.nvars_ || order_ != o.order_) throw Error(ErrorKind::DimensionMismatch, "series shape");
}

Series Series::operator+(const Series& o) const {
  check(o);
  Series r(*this);
  for (std::size_t k = 0; k < c_.size(); ++k) r.c_[k] += o.c_[k];
  return r;
}

Series Series::operator-() const {
  Series r(*this);
  for (auto& v : r.c_) v = -v;
  return r;
}

Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  check(o);
  Series r(nvars_, order_);
  int jmax = nvars_ == 2 ? order_ : 0;
  for (int i1 = 0; i1 <= order_; ++i1)
    for (int j1 = 0; j1 <= jmax && i1 + j1 <= order_; ++j1) {
      const Rational& a = c_[index(i1, j1)];
      if (a == 0) continue;
      for (int i2 = 0; i1 + j1 + i2 <= order_; ++i2)
        for (int j2 = 0; j2 <= jmax && i1 + j1 + i2 + j2 <= order_; ++j2) {
          const Rational& b = o.c_[index(i2, j2)];
          if (b != 0) r.c_[index(i1 + i2, j1 + j2)] += a * b;
        }
    }
  return r;
}

bool Series::operator==(const Series& o) const {
  return nvars_ == o.nvars_ && order_ == o.order_ && c_ == o.c_;
}

Series operator*(const Rational& s, const Series& x) {
  Series r(x.nvars(), x.order());
  for (int i = 0; i <= x.order(); ++i)
    for (int j = 0; i + j <= x.order(); ++j)
      if (x.coeff(i, j) != 0) r.set(i, j, s * x.coeff(i, j));
  return r;
}

Series Series::derivative(int var) const {
  Series r(nvars_, order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      const Rational& c = coeff(i, j);
      if (c == 0) continue;
      if (var == 0 && i > 0) r.set(i - 1, j, c * i);
      if (var == 1 && j > 0) r.set(i, j - 1, c * j);
    }
  return r;
}

Series Series::integral(int var) const {
  Series r(nvars_, order_);
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j) {
      const Rational& c = coeff(i, j);
      if (c == 0) continue;
      if (var == 0) r.set(i + 1, j, c / (i + 1));
      else r.set(i, j + 1, c / (j + 1));
    }
  return r;
}

Series Series::compose(const std::vector<Series>& subs) const {
  if (static_cast<int>(subs.size()) != nvars_) throw Error(ErrorKind::DimensionMismatch, "substitution count");
  int n = subs[0].nvars(), N = subs[0].order();
  for (const auto& s : subs) {
    if (s.nvars() != n || s.order() != N) throw Error(ErrorKind::DimensionMismatch, "substitute shapes differ");
    if (s.constant_term() != 0) throw Error(ErrorKind::Validation, "substitute with nonzero constant term");
  }
  std::vector<Series> px{Series::constant(n, N, 1)}, py{Series::constant(n, N, 1)};
  for (int e = 1; e <= std::min(order_, N); ++e) px.push_back(px.back() * subs[0]);
  if (nvars_ == 2)
    for (int e = 1; e <= std::min(order_, N); ++e) py.push_back(py.back() * subs[1]);
  Series r(n, N);
  for (int i = 0; i <= std::min(order_, N); ++i)
    for (int j = 0; i + j <= std::min(order_, N); ++j) {
      const Rational& c = coeff(i, j);
      if (c == 0) continue;
      r = r + c * (nvars_ == 2 ? px[i] * py[j] : px[i]);
    }
  return r;
}

Series Series::homogeneous(int d) const {
  Series r(nvars_, order_);
  for (int i = 0; i <= d; ++i) r.set(i, d - i, coeff(i, d - i));
  return r;
}

Poly Series::to_poly(const Ring& ring) const {
  if (static_cast<int>(ring->size()) != nvars_) throw Error(ErrorKind::DimensionMismatch, "ring size");
  Poly::Terms t;
  for (int i = 0; i <= order_; ++i)
    for (int j = 0; i + j <= order_; ++j)
      if (coeff(i, j) != 0) t.emplace(nvars_ == 2 ? Monomial{unsigned(i), unsigned(j)} : Monomial{unsigned(i)}, coeff(i, j));
  return Poly(ring, std::move(t));
}

std::string Series::to_string(const std::vector<std::string>& names) const {
  std::string s = to_poly(make_ring(names)).to_string();
  return s + " + O(" + std::to_string(order_ + 1) + ")";
}

Series series_invert(const Series& s, int designated) {
  if (designated < 0 || designated >= s.nvars()) throw Error(ErrorKind::Validation, "designated variable");
  if (s.constant_term() != 0) throw Error(ErrorKind::SingularInversion, "nonzero constant term");
  const Rational a = designated == 0 ? s.coeff(1, 0) : s.coeff(0, 1);
  if (a == 0) throw Error(ErrorKind::SingularInversion, "zero linear coefficient");
  const int n = s.nvars(), N = s.order();
  const Series t = Series::variable(n, N, designated);
  Series g = (Rational(1) / a) * t;
  // Each sweep fixes at least one more degree.
  for (int it = 0; it <= N; ++it) {
    std::vector<Series> subs(n, Series(n, N));
    subs[designated] = g;
    if (n == 2) subs[1 - designated] = Series::variable(n, N, 1 - designated);
    Series next = g + (Rational(1) / a) * (t - s.compose(subs));
    if (next == g) break;
    g = next;
  }
  return g;
}

Series series_invert(const Poly& f, const Point& center, int designated, int order) {
  Series s = Series::from_poly(f, center, order);
  s.set(0, 0, 0);
  return series_invert(s, designated);
}

}  // namespace biham
