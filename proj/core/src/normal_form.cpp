#include <biham/errors.hpp>
#include <biham/normal_form.hpp>
#include <biham/ratfunc.hpp>

#include <cmath>
#include <vector>

namespace biham {

namespace {

// One-variable series s(t) as a two-variable series in the chosen variable.
Series lift(const Series& s, int var) {
  Series r(2, s.order());
  for (int i = 0; i <= s.order(); ++i) r.set(var == 0 ? i : 0, var == 0 ? 0 : i, s.coeff(i));
  return r;
}

// Restriction to the line where variable `fixed` vanishes, as a one-variable series.
Series restrict(const Series& s, int fixed) {
  Series r(1, s.order());
  for (int i = 0; i <= s.order(); ++i) r.set(i, 0, fixed == 0 ? s.coeff(0, i) : s.coeff(i, 0));
  return r;
}

// Solves u' = rhs(u), u(0) = 0 by Picard iteration.
template <class Rhs>
Series solve_autonomous(const Rhs& rhs, int order) {
  Series u(1, order);
  for (int it = 0; it <= order + 1; ++it) {
    Series next = rhs(u).integral(0);
    if (next == u) break;
    u = next;
  }
  return u;
}

}  // namespace

const char* to_string(NormalFormStatus s) {
  switch (s) {
    case NormalFormStatus::Normalized: return "Normalized";
    case NormalFormStatus::ScalingUnfixed: return "ScalingUnfixed";
  }
  return "?";
}

Series series_reciprocal(const Series& s) {
  const Rational c = s.constant_term();
  if (c == 0) throw Error(ErrorKind::SingularInversion, "series with zero constant term has no reciprocal");
  const Series one = Series::constant(s.nvars(), s.order(), 1);
  Series r = Series::constant(s.nvars(), s.order(), Rational(1) / c);
  for (int it = 0; it <= s.order() + 1; ++it) {
    Series next = r + r * (one - s * r);
    if (next == r) break;
    r = next;
  }
  return r;
}

NormalForm normal_form_phi(const Series& fin, int order) {
  if (fin.nvars() != 2) throw Error(ErrorKind::Validation, "normal form needs a series in (x, y)");
  if (order < 1) throw Error(ErrorKind::Validation, "truncation must be positive");
  const int N = std::min(order, fin.order());
  Series f(2, N);
  for (int i = 0; i <= N; ++i)
    for (int j = 0; i + j <= N; ++j)
      if (i + j > 0) f.set(i, j, fin.coeff(i, j));
  if (f.coeff(1, 0) == 0 || f.coeff(0, 1) == 0)
    throw Error(ErrorKind::NotNormalizable, "a first partial derivative of f vanishes at the origin");

  // Derivatives carry one degree less; pad back to N for composition.
  auto padded = [N](const Series& s) {
    Series r(s.nvars(), N);
    for (int i = 0; i <= std::min(N, s.order()); ++i)
      for (int j = 0; i + j <= std::min(N, s.order()); ++j) r.set(i, j, s.coeff(i, j));
    return r;
  };
  const Series fx = padded(f.derivative(0)), fy = padded(f.derivative(1));

  // b' = f_x(0, b) / f_y(0, b).
  const Series ratio_y = restrict(fx, 0) * series_reciprocal(restrict(fy, 0));
  const Series b = solve_autonomous([&](const Series& u) { return ratio_y.compose({u}); }, N);
  // a' = b'(0) f_y(a, 0) / f_x(a, 0).
  const Rational b1 = b.coeff(1);
  const Series ratio_x = b1 * (restrict(fy, 1) * series_reciprocal(restrict(fx, 1)));
  const Series a = solve_autonomous([&](const Series& u) { return ratio_x.compose({u}); }, N);
  // g inverts h(y) = f(0, b(y)).
  const Series h = restrict(f, 0).compose({b});
  const Series g = series_invert(h, 0);

  NormalForm out;
  out.phi = g.compose({f.compose({lift(a, 0), lift(b, 1)})});
  Series sum = Series::variable(2, N, 0) + Series::variable(2, N, 1);
  out.flat = out.phi == sum;
  if (out.flat) {
    out.status = NormalFormStatus::Normalized;
    out.detail = "phi = x + y through degree " + std::to_string(N);
  } else {
    // The mixed second derivative vanishes under this normalization, so phi is fixed up to scaling.
    out.status = NormalFormStatus::ScalingUnfixed;
    out.detail = "phi differs from x + y; normal form determined up to phi(Cx, Cy)/C";
  }
  return out;
}

NormalForm normal_form_phi(const Poly& f, int order) {
  if (f.nvars() != 2) throw Error(ErrorKind::Validation, "normal form needs a polynomial in (x, y)");
  return normal_form_phi(Series::from_poly(f, Point{0, 0}, order), order);
}

bool scaling_equivalent(const Series& p1, const Series& p2) {
  if (p1.nvars() != 2 || p2.nvars() != 2 || p1.order() != p2.order()) return false;
  // Ratios rho = p2_m / p1_m must equal C^(d-1) for one C.
  struct Ratio {
    Rational rho;
    int e;
  };
  std::vector<Ratio> ratios;
  for (int d = 1; d <= p1.order(); ++d)
    for (int i = 0; i <= d; ++i) {
      const Rational &u = p1.coeff(i, d - i), &v = p2.coeff(i, d - i);
      if ((u == 0) != (v == 0)) return false;
      if (u == 0) continue;
      Rational rho = v / u;
      if (d == 1) {
        if (rho != 1) return false;
        continue;
      }
      ratios.push_back({rho, d - 1});
    }
  bool positive = true, alternating = true;
  for (const auto& r : ratios) {
    positive = positive && r.rho > 0;
    alternating = alternating && ((r.e % 2 == 0) == (r.rho > 0));
  }
  if (!positive && !alternating) return false;
  for (std::size_t i = 0; i < ratios.size(); ++i)
    for (std::size_t j = i + 1; j < ratios.size(); ++j) {
      const Rational ai = abs(ratios[i].rho), aj = abs(ratios[j].rho);
      if (pow(ai, ratios[j].e) != pow(aj, ratios[i].e)) return false;
    }
  return true;
}

RationalFunction flatness_obstruction(const Poly& f) {
  if (f.nvars() != 2) throw Error(ErrorKind::Validation, "f must be a polynomial in (x, y)");
  const Poly fx = f.derivative(0), fy = f.derivative(1);
  if (fx.is_zero() || fy.is_zero()) throw Error(ErrorKind::DegenerateFunction, "a partial derivative of f vanishes identically");
  const RationalFunction q(fx, fy);
  const RationalFunction qx = q.derivative(0), qy = q.derivative(1), qxy = qx.derivative(1);
  // (log q)_xy = (q q_xy - q_x q_y) / q^2
  const RationalFunction lxy = (q * qxy - qx * qy) / (q * q);
  return RationalFunction(fx * fy) * lxy;
}

}  // namespace biham
