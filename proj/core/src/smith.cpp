#include <biham/errors.hpp>
#include <biham/smith.hpp>

namespace biham {

PolyMatrix linear_pencil(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "pencil halves");
  PolyMatrix m(a.rows(), std::vector<UPoly>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = UPoly(std::vector<Rational>{b(i, j), a(i, j)});
  return m;
}

std::vector<UPoly> smith_invariant_factors(PolyMatrix m) {
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<UPoly> factors;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Degree-minimal pivot in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (!m[i][j].is_zero() && (pi == rows || m[i][j].degree() < m[pi][pj].degree())) {
            pi = i;
            pj = j;
          }
      if (pi == rows) return factors;
      std::swap(m[t], m[pi]);
      for (auto& row : m) std::swap(row[t], row[pj]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t].is_zero()) continue;
        auto [q, r] = divmod(m[i][t], m[t][t]);
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j].is_zero()) continue;
        auto [q, r] = divmod(m[t][j], m[t][t]);
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      // The pivot must divide the whole trailing block.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(m[t][t], m[i][j])) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[bad][j];
    }
    factors.push_back(m[t][t].monic());
  }
  return factors;
}

}  // namespace biham
