#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "gdual/error.hpp"
#include "gdual/linalg.hpp"

using namespace gdual;

namespace {

CMatrix random_hermitian(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r) {
    m(r, r) = gauss(rng);
    for (int c = r + 1; c < n; ++c) {
      m(r, c) = cplx{gauss(rng), gauss(rng)};
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("jacobi recovers the circulant spectrum") {
  // Cyclic shift on C^8: eigenvalues are the 8th roots of unity, so the
  // Hermitian S + S^H has eigenvalues 2 cos(2 pi k / 8).
  const int n = 8;
  CMatrix s(n, n);
  for (int i = 0; i < n; ++i) s(i, (i + 1) % n) = 1.0;
  const CMatrix h = s + s.adjoint();

  const EigenSystem es = hermitian_eigen(h);
  std::vector<double> expected;
  for (int k = 0; k < n; ++k) expected.push_back(2.0 * std::cos(2.0 * std::numbers::pi * k / n));
  std::sort(expected.begin(), expected.end());
  for (int i = 0; i < n; ++i) CHECK(es.values[i] == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("jacobi eigenpairs satisfy A v = lambda v and are orthonormal") {
  std::mt19937_64 rng(7);
  for (int n : {2, 3, 5, 17, 24}) {
    const CMatrix a = random_hermitian(n, rng);
    const EigenSystem es = hermitian_eigen(a);
    for (int i = 0; i < n; ++i) {
      const CVector v = es.column(i);
      CVector av = mat_vec(a, v);
      for (int r = 0; r < n; ++r) av[r] -= es.values[i] * v[r];
      CHECK(norm(av) < 1e-10);
      for (int j = 0; j < n; ++j) {
        const double want = i == j ? 1.0 : 0.0;
        CHECK(std::abs(inner(es.column(j), v)) == doctest::Approx(want).epsilon(1e-10));
      }
    }
    // Trace is preserved.
    double trace = 0.0;
    for (int i = 0; i < n; ++i) trace += a(i, i).real();
    double sum = 0.0;
    for (double v : es.values) sum += v;
    CHECK(sum == doctest::Approx(trace).epsilon(1e-11));
  }
}

TEST_CASE("min eigenvalue of a rank-one projector matrix") {
  // uu^H has eigenvalues {n, 0, ..., 0} for the all-ones u.
  const int n = 5;
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = 1.0;
  CHECK(min_hermitian_eigenvalue(m) == doctest::Approx(0.0).epsilon(1e-12));
  const EigenSystem es = hermitian_eigen(m);
  CHECK(es.values.back() == doctest::Approx(double(n)));
}

TEST_CASE("block extraction and nonzero counting") {
  CMatrix m(4, 4);
  m(0, 2) = 1.0;
  m(1, 3) = 1.0;
  m(3, 0) = 1.0;
  const CMatrix b12 = block(m, 1, 2, 2);
  CHECK(nonzero_count(b12) == 2);
  CHECK(b12(0, 0) == cplx{1.0, 0.0});
  CHECK(nonzero_count(block(m, 1, 1, 2)) == 0);
  CHECK_THROWS_AS(block(m, 3, 1, 2), Error);
  CHECK_THROWS_AS(block(m, 1, 1, 3), Error);
}

TEST_CASE("vector helpers") {
  const CVector x = {cplx{1, 0}, cplx{0, 2}};
  CHECK(norm(x) == doctest::Approx(std::sqrt(5.0)));
  const CVector u = normalized(x);
  CHECK(norm(u) == doctest::Approx(1.0));
  CHECK(inner(x, x).real() == doctest::Approx(5.0));
  CHECK(inner(x, x).imag() == doctest::Approx(0.0));
}

}  // TEST_SUITE
