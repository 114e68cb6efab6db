#include <biham/errors.hpp>
#include <biham/matrix.hpp>

#include <utility>

namespace biham {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols)
    throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows x cols");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

bool Matrix::is_skew() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  return true;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix r(*this);
  for (std::size_t k = 0; k < entries_.size(); ++k) r.entries_[k] += other.entries_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& other) const { return *this + (-other); }

Matrix Matrix::operator-() const {
  Matrix r(*this);
  for (auto& e : r.entries_) e = -e;
  return r;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix r(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) r(i, j) += a * other(k, j);
    }
  return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector product");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
  return r;
}

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

namespace {

struct Echelon {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> e;  // row-major, fraction-free
  std::vector<std::size_t> pivots;
  bool odd_swaps = false;

  Integer& at(std::size_t i, std::size_t j) { return e[i * cols + j]; }
};

// Rows are scaled to integers first; row scaling preserves rank and null space.
Echelon bareiss(const Matrix& m) {
  Echelon ech;
  ech.rows = m.rows();
  ech.cols = m.cols();
  ech.e.resize(ech.rows * ech.cols);
  for (std::size_t i = 0; i < ech.rows; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < ech.cols; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < ech.cols; ++j) {
      Integer v = m(i, j).get_num() * (l / m(i, j).get_den());
      ech.at(i, j) = v;
    }
  }
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ech.cols && r < ech.rows; ++c) {
    std::size_t p = r;
    while (p < ech.rows && ech.at(p, c) == 0) ++p;
    if (p == ech.rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < ech.cols; ++j) std::swap(ech.at(p, j), ech.at(r, j));
      ech.odd_swaps = !ech.odd_swaps;
    }
    const Integer pivot = ech.at(r, c);
    for (std::size_t i = r + 1; i < ech.rows; ++i) {
      const Integer lead = ech.at(i, c);
      for (std::size_t j = c + 1; j < ech.cols; ++j) {
        Integer v = pivot * ech.at(i, j) - lead * ech.at(r, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        ech.at(i, j) = std::move(v);
      }
      ech.at(i, c) = 0;
    }
    prev = pivot;
    ech.pivots.push_back(c);
    ++r;
  }
  return ech;
}

}  // namespace

std::size_t mat_rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss(m).pivots.size();
}

std::vector<std::vector<Rational>> mat_nullspace(const Matrix& m) {
  std::vector<std::vector<Rational>> basis;
  if (m.cols() == 0) return basis;
  Echelon ech = m.rows() ? bareiss(m) : Echelon{0, m.cols(), {}, {}, false};
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : ech.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> x(m.cols());
    x[f] = 1;
    for (std::size_t k = ech.pivots.size(); k-- > 0;) {
      std::size_t p = ech.pivots[k];
      Rational s = 0;
      for (std::size_t j = p + 1; j < m.cols(); ++j)
        if (x[j] != 0) s += Rational(ech.at(k, j)) * x[j];
      x[p] = -s / Rational(ech.at(k, p));
    }
    // Primitive integer representative for stable output.
    Integer l = lcm_of_denominators(x);
    Integer g = 0;
    for (auto& v : x) {
      v *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
    }
    if (g != 0)
      for (auto& v : x) v /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

Rational determinant(const Matrix& m) {
  if (!m.square()) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Echelon ech = bareiss(m);
  if (ech.pivots.size() < m.rows()) return 0;
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    scale *= l;
  }
  Rational d(ech.at(m.rows() - 1, m.cols() - 1), scale);
  d.canonicalize();
  return ech.odd_swaps ? Rational(-d) : d;
}

}  // namespace biham
