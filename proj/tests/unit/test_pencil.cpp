#include <biham/errors.hpp>
#include <biham/models.hpp>
#include <biham/pencil.hpp>

#include "doctest.h"
#include "helpers.hpp"

using namespace biham;
using testing::kronecker_pencil;
using testing::q;

namespace {

const MuLabel kMu2{false, 2};

SkewPencil j22() { return SkewPencil(Matrix{{0, 2}, {-2, 0}}, Matrix{{0, 1}, {-1, 0}}); }

SkewPencil zero_pencil(std::size_t n) { return SkewPencil(Matrix::zero(n, n), Matrix::zero(n, n)); }

}  // namespace

TEST_SUITE("pencil") {
  TEST_CASE("skew validation") {
    CHECK_THROWS_AS(SkewPencil(Matrix{{1, 0}, {0, 0}}, Matrix::zero(2, 2)), Error);
    CHECK_THROWS_AS(SkewPencil(Matrix::zero(2, 2), Matrix::zero(3, 3)), Error);
  }

  TEST_CASE("generic corank") {
    CHECK(generic_corank(kronecker_pencil(2)) == 1);
    CHECK(generic_corank(zero_pencil(2)) == 2);
    CHECK(generic_corank(j22()) == 0);
  }

  TEST_CASE("minimal indices") {
    CHECK(minimal_indices(kronecker_pencil(2)) == std::vector<int>{1});
    CHECK(minimal_indices(zero_pencil(2)) == std::vector<int>{0, 0});
    CHECK(minimal_indices(j22()).empty());
    CHECK(minimal_indices(direct_sum(kronecker_pencil(3), kronecker_pencil(1))) == std::vector<int>{0, 2});
  }

  TEST_CASE("jordan part") {
    auto blocks = jordan_part(j22());
    REQUIRE(blocks.size() == 1);
    CHECK(blocks[0].k == 1);
    CHECK(blocks[0].divisor == BinaryForm::from_affine(UPoly(std::vector<Rational>{q("1/2"), 1})));
    REQUIRE(blocks[0].divisor.mu().has_value());
    CHECK(*blocks[0].divisor.mu() == kMu2);
    CHECK(jordan_part(kronecker_pencil(2)).empty());

    // A symplectic, B = 0: lambda*A is singular only at lambda = 0, the divisor l1 (label infinity).
    Matrix omega{{0, 1}, {-1, 0}};
    auto a_only = jordan_part(SkewPencil(omega, Matrix::zero(2, 2)));
    REQUIRE(a_only.size() == 1);
    CHECK(a_only[0].divisor == BinaryForm({0, 1}));
    CHECK(a_only[0].divisor.mu()->infinite);
    // A = 0, B symplectic: the divisor l2 with label 0.
    auto b_only = jordan_part(SkewPencil(Matrix::zero(2, 2), omega));
    REQUIRE(b_only.size() == 1);
    CHECK(b_only[0].divisor == BinaryForm::l2());
    CHECK(*b_only[0].divisor.mu() == MuLabel{false, 0});
  }

  TEST_CASE("two distinct linear divisors") {
    Matrix a{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}};
    Matrix b{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, -2, 0}};
    // Divisors (lambda+1) and (lambda+2) each appear twice.
    auto blocks = jordan_part(SkewPencil(a, b));
    REQUIRE(blocks.size() == 2);
    std::vector<std::string> labels;
    for (const auto& blk : blocks) labels.push_back(blk.divisor.mu()->to_string());
    std::sort(labels.begin(), labels.end());
    CHECK(labels == std::vector<std::string>{"1", "1/2"});
  }

  TEST_CASE("decompose examples") {
    SkewPencil e1 = epsilon_pencil(1), e0 = epsilon_pencil(0);
    CHECK(decompose(e1).to_string() == "{K3, K3}");
    CHECK(decompose(e0).to_string() == "{K5, K1}");
    CHECK(decompose(direct_sum(kronecker_pencil(2), j22())).to_string() == "{K3, J2(mu=2)}");
    CHECK(decompose(zero_pencil(4)).to_string() == "{K1, K1, K1, K1}");
    CHECK(decompose(testing::jordan_pencil(2, MuLabel{false, 0})).to_string() == "{J4(mu=0)}");
    CHECK(decompose(testing::jordan_pencil(3, MuLabel{true, 0})).to_string() == "{J6(mu=inf)}");
  }

  TEST_CASE("epsilon example at other nonzero values") {
    for (const char* eps : {"1/2", "2", "-1"}) CHECK(decompose(epsilon_pencil(q(eps))).to_string() == "{K3, K3}");
  }

  TEST_CASE("irreducible quadratic divisor") {
    // lambda*A + B with det = (lambda^2 + 1)^2 on a 4-dim space.
    Matrix a{{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}};
    Matrix b{{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
    PencilType t = decompose(SkewPencil(a, b));
    REQUIRE(t.blocks.size() == 1);
    CHECK(t.blocks[0].kind == BlockKind::Jordan);
    CHECK(t.blocks[0].divisor.degree() == 2);
    CHECK_FALSE(t.blocks[0].divisor.mu().has_value());
    CHECK(t.blocks[0].dimension() == 4);
  }

  TEST_CASE("kernel family") {
    KernelFamily k3 = kernel_family(kronecker_pencil(2));
    REQUIRE(k3.size() == 1);
    // w0 + lambda * w2 up to scale.
    CHECK(k3[0][1].is_zero());
    CHECK(k3[0][0].degree() == 0);
    CHECK(k3[0][2].degree() == 1);
    CHECK(k3[0][2].coeff(1) == k3[0][0].coeff(0));
    KernelFamily k1 = kernel_family(zero_pencil(1));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0][0].degree() == 0);
    KernelFamily k31 = kernel_family(direct_sum(kronecker_pencil(2), kronecker_pencil(1)));
    REQUIRE(k31.size() == 2);
    std::vector<long> degrees;
    for (const auto& w : k31) {
      long d = 0;
      for (const auto& c : w) d = std::max(d, c.degree());
      degrees.push_back(d);
    }
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<long>{0, 1});
    try {
      kernel_family(j22());
      FAIL("no error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::NotPureKronecker);
    }
  }

  TEST_CASE("action dimension") {
    CHECK(action_dimension(decompose(kronecker_pencil(3))) == 3);
    CHECK(action_dimension(decompose(direct_sum(kronecker_pencil(2), kronecker_pencil(1)))) == 3);
    CHECK(action_dimension(decompose(j22())) == 1);
  }

  TEST_CASE("swap symmetry") {
    SkewPencil p = direct_sum(kronecker_pencil(3), j22());
    PencilType t = decompose(p), s = decompose(p.swapped());
    CHECK(t.kronecker_dims() == s.kronecker_dims());
    std::vector<BinaryForm> dt, ds;
    for (const auto& b : t.blocks)
      if (b.kind == BlockKind::Jordan) dt.push_back(b.divisor.swapped());
    for (const auto& b : s.blocks)
      if (b.kind == BlockKind::Jordan) ds.push_back(b.divisor);
    CHECK(dt == ds);
  }

  TEST_CASE("pure Kronecker pencils have constant corank") {
    SkewPencil p = direct_sum(kronecker_pencil(3), kronecker_pencil(2));
    for (std::size_t c : corank_profile(p)) CHECK(c == 2);
  }
}
