#pragma once

#include <biham/models.hpp>
#include <biham/parse.hpp>
#include <biham/pencil.hpp>
#include <biham/poisson.hpp>

#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace biham;

inline Rational q(const char* s) { return parse_rational(s); }

inline RationalFunction expr(const std::string& text, const Ring& ring) { return parse_expression(text, ring); }

inline Poly poly(const std::string& text, const Ring& ring) { return parse_poly(text, ring); }

inline Point pt(std::initializer_list<const char*> xs) {
  Point p;
  for (const char* x : xs) p.push_back(parse_rational(x));
  return p;
}

// Kronecker pairing on w_0..w_{2k-2}: A(w_{2l}, w_{2l+1}) = 1, B(w_{2l+1}, w_{2l+2}) = 1.
inline SkewPencil kronecker_pencil(int k) {
  const std::size_t n = static_cast<std::size_t>(2 * k - 1);
  Matrix a(n, n), b(n, n);
  for (std::size_t l = 0; l + 1 < static_cast<std::size_t>(k); ++l) {
    a(2 * l, 2 * l + 1) = 1;
    a(2 * l + 1, 2 * l) = -1;
    b(2 * l + 1, 2 * l + 2) = 1;
    b(2 * l + 2, 2 * l + 1) = -1;
  }
  return SkewPencil(a, b);
}

inline SkewPencil jordan_pencil(int k, const MuLabel& mu) {
  ModelSpec m = jordan_model(k, mu);
  return pencil_at(m.structure, Point(m.structure.dim(), Rational(0)));
}

inline Rational random_rational(std::mt19937_64& rng, long range = 5, long den = 3) {
  Rational r(static_cast<long>(rng() % static_cast<unsigned long>(2 * range + 1)) - range,
             static_cast<long>(rng() % static_cast<unsigned long>(den)) + 1);
  r.canonicalize();
  return r;
}

inline Matrix random_invertible(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = random_rational(rng, 3, 2);
    if (determinant(p) != 0) return p;
  }
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long range = 3) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_rational(rng, range, 1);
  return m;
}

}  // namespace testing
