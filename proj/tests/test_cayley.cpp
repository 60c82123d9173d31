#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gdual/cayley.hpp"
#include "gdual/error.hpp"

using namespace gdual;

namespace {

constexpr int kQ8_i = 2;
constexpr int kQ8_j = 4;

bool is_permutation_matrix(const CMatrix& m) {
  for (int r = 0; r < m.rows(); ++r) {
    int row_ones = 0;
    for (int c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      if (v == cplx{1.0, 0.0})
        ++row_ones;
      else if (v != cplx{})
        return false;
    }
    if (row_ones != 1) return false;
  }
  for (int c = 0; c < m.cols(); ++c) {
    int col_ones = 0;
    for (int r = 0; r < m.rows(); ++r)
      if (m(r, c) == cplx{1.0, 0.0}) ++col_ones;
    if (col_ones != 1) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("cayley") {

TEST_CASE("representation axioms hold exhaustively on S3") {
  const FiniteGroup s3 = symmetric_group(3);
  const PermutationRep rep = cayley_natural(s3);

  CHECK((rep.matrix(s3.identity) - CMatrix::identity(6)).max_abs() == 0.0);
  for (int g = 0; g < 6; ++g) CHECK(is_permutation_matrix(rep.matrix(g)));

  // Homomorphism over all 36 pairs, faithfulness over all distinct pairs.
  for (int g = 0; g < 6; ++g) {
    for (int h = 0; h < 6; ++h) {
      const CMatrix lhs = rep.matrix(g) * rep.matrix(h);
      CHECK((lhs - rep.matrix(s3.mul(g, h))).max_abs() == 0.0);
      if (g != h) CHECK((rep.matrix(g) - rep.matrix(h)).max_abs() == 1.0);
    }
  }
}

TEST_CASE("agree_nonzero is the diagonal of the element-pair grid") {
  for (const FiniteGroup& g : {quaternion_group(), symmetric_group(3)}) {
    const PermutationRep rep = cayley_natural(g);
    for (int x = 0; x < g.order; ++x)
      for (int y = 0; y < g.order; ++y) CHECK(agree_nonzero(rep, x, y) == (x == y));
  }
}

TEST_CASE("coset-enumerated pi(a) is block diagonal with shift blocks") {
  const FiniteGroup q8 = quaternion_group();
  const PermutationRep rep = cayley(q8, coset_enumeration(q8, kQ8_i, kQ8_j));
  const CMatrix a = rep.matrix(kQ8_i);

  // Two 4x4 blocks, each with ones on the wrapped superdiagonal.
  CMatrix shift(4, 4);
  for (int i = 0; i < 4; ++i) shift(i, (i + 1) % 4) = 1.0;
  CHECK((block(a, 1, 1, 4) - shift).max_abs() == 0.0);
  CHECK((block(a, 2, 2, 4) - shift).max_abs() == 0.0);
  CHECK(nonzero_count(block(a, 1, 2, 4)) == 0);
  CHECK(nonzero_count(block(a, 2, 1, 4)) == 0);

  // Elements outside <a> have all-zero diagonal blocks; pi(b) is supported
  // on the off-diagonal blocks with full rows.
  const CMatrix b = rep.matrix(kQ8_j);
  CHECK(nonzero_count(block(b, 1, 1, 4)) == 0);
  CHECK(nonzero_count(block(b, 2, 2, 4)) == 0);
  CHECK(nonzero_count(block(b, 1, 2, 4)) == 4);

  const CMatrix e = rep.matrix(q8.identity);
  CHECK(nonzero_count(block(e, 1, 1, 4)) == 4);
}

TEST_CASE("pi(h) block diagonal for h in H, zero diagonal blocks otherwise") {
  const FiniteGroup s3 = symmetric_group(3);
  const int a = 3, b = 2;
  const PermutationRep rep = cayley(s3, coset_enumeration(s3, a, b));
  const Subgroup h = cyclic_subgroup(s3, a);
  for (int g = 0; g < 6; ++g) {
    const CMatrix m = rep.matrix(g);
    int off = nonzero_count(block(m, 1, 2, 3)) + nonzero_count(block(m, 2, 1, 3));
    int on = nonzero_count(block(m, 1, 1, 3)) + nonzero_count(block(m, 2, 2, 3));
    if (h.contains(g)) {
      CHECK(off == 0);
      CHECK(on == 6);
    } else {
      CHECK(on == 0);
    }
  }
}

TEST_CASE("two_block_eigenvector") {
  const FiniteGroup q8 = quaternion_group();
  const PermutationRep rep = cayley(q8, coset_enumeration(q8, kQ8_i, kQ8_j));

  SUBCASE("lambda = 1, phi = 0 gives the uniform two-block vector") {
    const EigenPair p = two_block_eigenvector(4, cplx{1.0, 0.0}, 0.0, 8);
    for (int i = 0; i < 8; ++i)
      CHECK(p.vector[i] == cplx{1.0 / std::sqrt(8.0), 0.0});
    CHECK(eigen_residual(rep, kQ8_i, p) < 1e-12);
  }

  SUBCASE("lambda = i on the shift blocks") {
    const EigenPair p = two_block_eigenvector(4, cplx{0.0, 1.0}, 0.7, 8);
    CHECK(norm(p.vector) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(eigen_residual(rep, kQ8_i, p) < 1e-12);
  }

  SUBCASE("non-root-of-unity is rejected") {
    CHECK_THROWS_AS(two_block_eigenvector(4, std::polar(1.0, 0.3), 0.0, 8), Error);
    CHECK_THROWS_AS(two_block_eigenvector(4, cplx{0.0, 1.0}, 0.0, 6), Error);
  }

  SUBCASE("phi sweep separates the two off-diagonal block counts") {
    // p_phi(x) = (1/2n_a)(#(X12) e^{-i phi} + #(X21) e^{i phi}) for the
    // lambda = 1 two-block vector, so evaluating at phi = 0 and pi/2 gives
    // an invertible system that recovers both counts.
    const int x = q8.mul(kQ8_i, kQ8_j);
    const EigenPair p0 = two_block_eigenvector(4, cplx{1.0, 0.0}, 0.0, 8);
    const EigenPair p1 = two_block_eigenvector(4, cplx{1.0, 0.0}, std::numbers::pi / 2, 8);
    const cplx v0 = rep.vector_state_value(x, p0.vector) * 8.0;
    const cplx v1 = rep.vector_state_value(x, p1.vector) * 8.0;
    const cplx c12 = (v0 + cplx{0.0, 1.0} * v1) / 2.0;
    const cplx c21 = (v0 - cplx{0.0, 1.0} * v1) / 2.0;
    const CMatrix mx = rep.matrix(x);
    CHECK(std::abs(c12 - cplx{double(nonzero_count(block(mx, 1, 2, 4))), 0.0}) < 1e-12);
    CHECK(std::abs(c21 - cplx{double(nonzero_count(block(mx, 2, 1, 4))), 0.0}) < 1e-12);
  }
}

TEST_CASE("all_eigenpairs_of_a") {
  SUBCASE("a = e gives all eigenvalues 1") {
    const FiniteGroup s3 = symmetric_group(3);
    const PermutationRep rep = cayley_natural(s3);
    for (const EigenPair& p : all_eigenpairs_of_a(rep, s3.identity))
      CHECK(std::abs(p.value - cplx{1.0, 0.0}) < 1e-14);
  }

  SUBCASE("Z6 shift has the 6th roots of unity, multiplicity one") {
    const FiniteGroup z6 = cyclic_group(6);
    const PermutationRep rep = cayley_natural(z6);
    const auto pairs = all_eigenpairs_of_a(rep, 1);
    REQUIRE(pairs.size() == 6);
    std::vector<double> args;
    for (const auto& p : pairs) {
      CHECK(eigen_residual(rep, 1, p) < 1e-12);
      args.push_back(std::arg(p.value));
    }
    std::sort(args.begin(), args.end());
    CHECK(std::adjacent_find(args.begin(), args.end(), [](double x, double y) {
            return std::abs(x - y) < 1e-9;
          }) == args.end());
  }

  SUBCASE("Q8 pi(i) has each 4th root of unity twice, orthonormal basis") {
    const FiniteGroup q8 = quaternion_group();
    const PermutationRep rep = cayley_natural(q8);
    const auto pairs = all_eigenpairs_of_a(rep, kQ8_i);
    REQUIRE(pairs.size() == 8);
    int count_i = 0;
    for (const auto& p : pairs) {
      CHECK(eigen_residual(rep, kQ8_i, p) < 1e-12);
      if (std::abs(p.value - cplx{0.0, 1.0}) < 1e-12) ++count_i;
    }
    CHECK(count_i == 2);
    // Gram of the eigenbasis is the identity.
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t j = 0; j < pairs.size(); ++j) {
        const double want = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(pairs[i].vector, pairs[j].vector)) ==
              doctest::Approx(want).epsilon(1e-10));
      }
  }
}

TEST_CASE("diagonalized triple conjugates a to its eigenvalues") {
  const FiniteGroup q8 = quaternion_group();
  const PermutationRep rep = cayley_natural(q8);
  const int a = kQ8_i, b = kQ8_j, x = q8.mul(a, b);
  const DiagonalizedTriple t = diagonalized_triple(rep, a, b, x);

  // b and x stay unitary, and U^H pi(a) U reproduces diag(a_diag).
  const CMatrix btb = t.b.adjoint() * t.b;
  CHECK((btb - CMatrix::identity(8)).max_abs() < 1e-12);
  const CMatrix xtx = t.x.adjoint() * t.x;
  CHECK((xtx - CMatrix::identity(8)).max_abs() < 1e-12);
  // x = ab must hold after conjugation with a as diagonal scaling.
  CMatrix ab(8, 8);
  for (int r = 0; r < 8; ++r)
    for (int c = 0; c < 8; ++c) ab(r, c) = t.a_diag[r] * t.b(r, c);
  CHECK((ab - t.x).max_abs() < 1e-12);
}

}  // TEST_SUITE
