#include <biham/errors.hpp>
#include <biham/matrix.hpp>
#include <biham/parse.hpp>
#include <biham/ratfunc.hpp>
#include <biham/series.hpp>
#include <biham/smith.hpp>
#include <biham/upoly.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace biham;
using testing::q;

TEST_SUITE("exactalg") {
  TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-6/4").get_str() == "-3/2");
    CHECK(parse_rational(" 7 ") == 7);
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(lcm_of_denominators({q("1/4"), q("5/6"), q("3")}) == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
    CHECK(to_string(Point{1, q("-1/2")}) == "(1, -1/2)");
  }

  TEST_CASE("mat_rank examples") {
    CHECK(mat_rank(Matrix::identity(3)) == 3);
    CHECK(mat_rank(Matrix::zero(2, 2)) == 0);
    CHECK(mat_rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(mat_rank(Matrix{{0, 0, 1}, {0, 0, 2}, {1, 0, 0}}) == 2);
    CHECK(mat_rank(Matrix{{q("1/2"), q("1/3")}, {q("3/2"), 1}}) == 1);
  }

  TEST_CASE("mat_nullspace examples") {
    CHECK(mat_nullspace(Matrix::zero(2, 2)).size() == 2);
    auto ns = mat_nullspace(Matrix{{1, 2}, {2, 4}});
    REQUIRE(ns.size() == 1);
    // Span of (2, -1).
    CHECK(ns[0][0] * -1 == ns[0][1] * 2);
    CHECK(mat_nullspace(Matrix{{1, 2}, {3, 4}}).empty());
    Matrix m{{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    auto basis = mat_nullspace(m);
    CHECK(basis.size() == 2);
    for (const auto& v : basis)
      for (const auto& x : m * v) CHECK(x == 0);
  }

  TEST_CASE("determinant and products") {
    CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(Matrix{{2, 0, 0}, {0, q("1/2"), 0}, {0, 0, 3}}) == 3);
    Matrix a{{1, 2}, {3, 4}};
    CHECK(a * Matrix::identity(2) == a);
    CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
    CHECK((a - a.transpose()).is_skew());
    CHECK(direct_sum(a, Matrix{{5}}).rows() == 3);
  }

  TEST_CASE("univariate polynomials") {
    UPoly x = UPoly::x();
    UPoly p = (x - UPoly(1)) * (x - UPoly(1)) * (x + UPoly(2));
    CHECK(p.degree() == 3);
    CHECK(p(Rational(1)) == 0);
    CHECK(squarefree_part(p) == ((x - UPoly(1)) * (x + UPoly(2))).monic());
    CHECK(gcd(p, x - UPoly(1)) == x - UPoly(1));
    CHECK(divides(x + UPoly(2), p));
    CHECK_FALSE(divides(x + UPoly(3), p));
    auto roots = rational_roots(UPoly(std::vector<Rational>{q("1/2"), 1}) * (x - UPoly(3)));
    REQUIRE(roots.size() == 2);
    CHECK(std::find(roots.begin(), roots.end(), q("-1/2")) != roots.end());
    CHECK(std::find(roots.begin(), roots.end(), Rational(3)) != roots.end());
    auto [quo, rem] = divmod(p, x + UPoly(2));
    CHECK(rem.is_zero());
    CHECK(quo == (x - UPoly(1)) * (x - UPoly(1)));
  }

  TEST_CASE("multivariate polynomials") {
    Ring r = make_ring({"x", "y"});
    Poly x = Poly::variable(r, 0), y = Poly::variable(r, 1);
    Poly p = (x + y).pow(2);
    CHECK(p.to_string() == "x^2 + 2*x*y + y^2");
    CHECK(p.derivative(0) == Rational(2) * x + Rational(2) * y);
    CHECK(p.evaluate(testing::pt({"1", "2"})) == 9);
    CHECK(p.degree() == 2);
    CHECK(p.compose({y, x}) == p);
    auto quo = divide_exact(p, x + y);
    REQUIRE(quo.has_value());
    CHECK(*quo == x + y);
    CHECK_FALSE(divide_exact(p, x - y).has_value());
    CHECK((Poly(3) * x).to_string() == "3*x");
    CHECK(Poly(r).is_zero());
  }

  TEST_CASE("parser grammar") {
    Ring r = make_ring({"x", "y", "v_1"});
    CHECK(parse_poly("3/2*x^2*y - v_1^2", r).to_string() == "3/2*x^2*y - v_1^2");
    CHECK(parse_poly(" ( x + y ) ^ 2 ", r) == parse_poly("x^2+2*x*y+y^2", r));
    CHECK(parse_poly("-x", r) == Rational(-1) * Poly::variable(r, 0));
    CHECK(parse_expression("1/(x-y)", r) == RationalFunction(Poly(1), parse_poly("x-y", r)));
    CHECK(parse_expression("x^-1", r) == RationalFunction(Poly(1), Poly::variable(r, 0)));
    CHECK_THROWS_AS(parse_poly("z + 1", r), Error);
    CHECK_THROWS_AS(parse_poly("x +", r), Error);
    CHECK_THROWS_AS(parse_poly("1/x", r), Error);
    try {
      parse_poly("x + * y", r);
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Parse);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }

  TEST_CASE("rational functions") {
    Ring r = make_ring({"x", "y"});
    RationalFunction f = testing::expr("(x^2 - y^2)/(x - y)", r);
    CHECK(f.is_polynomial());
    CHECK(f == testing::expr("x + y", r));
    RationalFunction g = testing::expr("1/x + 1/y", r);
    CHECK(g == testing::expr("(x + y)/(x*y)", r));
    CHECK(g.derivative(0) == testing::expr("-1/x^2", r));
    CHECK(g.evaluate(testing::pt({"2", "3"})) == q("5/6"));
    CHECK_THROWS_AS(g.evaluate(testing::pt({"0", "3"})), Error);
    CHECK((g - g).is_zero());
  }

  TEST_CASE("smith invariant factors") {
    // Jordan pair with mu = 2: H1 = [[0,2],[-2,0]], H2 = [[0,1],[-1,0]].
    auto jf = smith_invariant_factors(linear_pencil(Matrix{{0, 2}, {-2, 0}}, Matrix{{0, 1}, {-1, 0}}));
    UPoly half(std::vector<Rational>{q("1/2"), 1});
    REQUIRE(jf.size() == 2);
    CHECK(jf[0] == half);
    CHECK(jf[1] == half);
    auto kf = smith_invariant_factors(linear_pencil(testing::kronecker_pencil(2).a(), testing::kronecker_pencil(2).b()));
    REQUIRE(kf.size() == 2);
    CHECK(kf[0] == UPoly(1));
    CHECK(kf[1] == UPoly(1));
    auto id = smith_invariant_factors(linear_pencil(Matrix::zero(3, 3), Matrix::identity(3)));
    CHECK(id == std::vector<UPoly>(3, UPoly(1)));
  }

  TEST_CASE("series inversion") {
    const int N = 5;
    Series s = Series::variable(1, N, 0);
    CHECK(series_invert(s, 0) == s);
    Series t = s + s * s;
    Series inv = series_invert(t, 0);
    CHECK(inv.coeff(1) == 1);
    CHECK(inv.coeff(2) == -1);
    CHECK(inv.coeff(3) == 2);
    CHECK(t.compose({inv}) == s);
    CHECK(series_invert(Rational(2) * s, 0) == Rational(1, 2) * s);
    CHECK_THROWS_AS(series_invert(s * s, 0), Error);
    try {
      series_invert(s * s, 0);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::SingularInversion);
    }
  }

  TEST_CASE("two-variable series with a parameter") {
    Ring r = make_ring({"x", "y"});
    Poly f = testing::poly("x + x^2*y + y", r);
    Series inv = series_invert(f, Point{0, 0}, 0, 6);
    Series fs = Series::from_poly(f, Point{0, 0}, 6);
    Series y = Series::variable(2, 6, 1);
    // f(g(t, y), y) = t.
    CHECK(fs.compose({inv, y}) == Series::variable(2, 6, 0));
    CHECK(Series::from_poly(f, Point{1, 2}, 3).constant_term() == 5);
  }
}
