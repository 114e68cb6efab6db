#pragma once

#include <biham/matrix.hpp>
#include <biham/upoly.hpp>

#include <optional>
#include <string>
#include <vector>

namespace biham {

// The pencil lambda*A + B of two skew-symmetric pairings on one space.
class SkewPencil {
 public:
  SkewPencil(Matrix a, Matrix b);

  std::size_t n() const noexcept { return a_.rows(); }
  const Matrix& a() const noexcept { return a_; }
  const Matrix& b() const noexcept { return b_; }
  Matrix at(const Rational& lambda) const { return lambda * a_ + b_; }

  // Congruence transform (P^T A P, P^T B P).
  SkewPencil congruent(const Matrix& p) const;
  SkewPencil swapped() const { return SkewPencil(b_, a_); }

 private:
  Matrix a_;
  Matrix b_;
};

SkewPencil direct_sum(const SkewPencil& x, const SkewPencil& y);

// Eigenvalue label of a linear divisor; infinity is flagged separately.
struct MuLabel {
  bool infinite = false;
  Rational value;
  std::string to_string() const { return infinite ? "inf" : value.get_str(); }
  bool operator==(const MuLabel&) const = default;
};

// Homogeneous form sum_i c_i * l1^i * l2^(d-i), scaled so the last nonzero coefficient is 1.
class BinaryForm {
 public:
  BinaryForm() = default;
  explicit BinaryForm(std::vector<Rational> coeffs, bool certified = true);
  // q(l1/l2) * l2^deg q for a polynomial in lambda = l1/l2.
  static BinaryForm from_affine(const UPoly& q, bool certified = true);
  static BinaryForm l2() { return BinaryForm({1, 0}); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  // False when irreducibility over Q was not established (degree >= 4 without rational roots).
  bool certified_irreducible() const noexcept { return certified_; }
  std::optional<MuLabel> mu() const;
  BinaryForm swapped() const;
  std::string to_string() const;

  bool operator==(const BinaryForm& o) const { return c_ == o.c_; }
  bool operator<(const BinaryForm& o) const;

 private:
  std::vector<Rational> c_;
  bool certified_ = true;
};

enum class BlockKind { Kronecker, Jordan };

struct Block {
  BlockKind kind = BlockKind::Kronecker;
  int k = 1;
  BinaryForm divisor;  // Jordan only

  std::size_t dimension() const;
  std::string to_string() const;
  bool operator==(const Block& o) const;
};

struct PencilType {
  std::vector<Block> blocks;  // canonical order: Kronecker by size, then Jordan
  std::size_t n = 0;

  std::size_t kronecker_count() const;
  bool has_jordan() const;
  bool pure_kronecker() const { return !has_jordan(); }
  // Dimensions of the Kronecker blocks in decreasing order.
  std::vector<int> kronecker_dims() const;
  std::string to_string() const;
  bool operator==(const PencilType& o) const { return n == o.n && blocks == o.blocks; }
};

void canonicalize(PencilType& t);

// One polynomial kernel vector per Kronecker block; entries are polynomials in lambda.
using KernelFamily = std::vector<std::vector<UPoly>>;

std::size_t generic_corank(const SkewPencil& p);
// Corank of lambda*A + B at lambda = 0..n followed by the corank of A.
std::vector<std::size_t> corank_profile(const SkewPencil& p);
std::vector<int> minimal_indices(const SkewPencil& p);
std::vector<Block> jordan_part(const SkewPencil& p);
PencilType decompose(const SkewPencil& p);
KernelFamily kernel_family(const SkewPencil& p);
// Minimal polynomial kernel basis without the pure-Kronecker precondition.
KernelFamily minimal_kernel_basis(const SkewPencil& p);
std::size_t action_dimension(const PencilType& t);

}  // namespace biham
