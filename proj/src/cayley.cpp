#include "gdual/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "gdual/error.hpp"

namespace gdual {

CMatrix PermutationRep::matrix(int g) const {
  const int n = dim();
  CMatrix m(n, n);
  for (int pos = 0; pos < n; ++pos) m(pos, sigma[g][pos]) = 1.0;
  return m;
}

CVector PermutationRep::apply(int g, const CVector& v) const {
  if (static_cast<int>(v.size()) != dim()) fail(Errc::DimensionMismatch, "apply length");
  CVector out(v.size());
  for (int pos = 0; pos < dim(); ++pos) out[pos] = v[sigma[g][pos]];
  return out;
}

cplx PermutationRep::vector_state_value(int g, const CVector& w) const {
  if (static_cast<int>(w.size()) != dim()) fail(Errc::DimensionMismatch, "state vector length");
  cplx s{};
  for (int pos = 0; pos < dim(); ++pos) s += w[sigma[g][pos]] * std::conj(w[pos]);
  return s;
}

PermutationRep cayley(const FiniteGroup& g, std::vector<int> enumeration) {
  const int n = g.order;
  if (static_cast<int>(enumeration.size()) != n)
    fail(Errc::DimensionMismatch, "enumeration length");
  std::vector<int> position(n, -1);
  for (int pos = 0; pos < n; ++pos) {
    const int e = enumeration[pos];
    if (e < 0 || e >= n || position[e] >= 0)
      fail(Errc::DuplicateElements, "enumeration is not a permutation of the elements");
    position[e] = pos;
  }

  PermutationRep rep;
  rep.group = g;
  rep.enumeration = std::move(enumeration);
  rep.position = std::move(position);
  rep.sigma.assign(n, std::vector<int>(n));
  // pi(g)[j][k] = 1 iff g_k = g_j * g, i.e. k = sigma[g][j].
  for (int e = 0; e < n; ++e)
    for (int pos = 0; pos < n; ++pos)
      rep.sigma[e][pos] = rep.position[g.mul(rep.enumeration[pos], e)];
  return rep;
}

PermutationRep cayley_natural(const FiniteGroup& g) {
  std::vector<int> e(g.order);
  for (int i = 0; i < g.order; ++i) e[i] = i;
  return cayley(g, std::move(e));
}

bool agree_nonzero(const PermutationRep& rep, int g, int h) {
  for (int pos = 0; pos < rep.dim(); ++pos)
    if (rep.sigma[g][pos] == rep.sigma[h][pos]) return true;
  return false;
}

double eigen_residual(const PermutationRep& rep, int a, const EigenPair& p) {
  CVector r = rep.apply(a, p.vector);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= p.value * p.vector[i];
  return norm(r);
}

EigenPair two_block_eigenvector(int n_a, cplx lambda, double phi, int total_dim) {
  if (n_a < 1) fail(Errc::IndexOutOfRange, "block size must be positive");
  if (total_dim < 2 * n_a)
    fail(Errc::DimensionMismatch, "need at least two blocks of size " + std::to_string(n_a));
  if (std::abs(std::abs(lambda) - 1.0) > 1e-8 ||
      std::abs(std::pow(lambda, n_a) - cplx{1.0, 0.0}) > 1e-8)
    fail(Errc::NotARootOfUnity, "lambda must satisfy lambda^n_a = 1");

  EigenPair p;
  p.value = lambda;
  p.vector.assign(total_dim, cplx{});
  const double scale = 1.0 / std::sqrt(2.0 * n_a);
  const cplx phase = std::polar(1.0, phi);
  cplx pw{1.0, 0.0};
  for (int i = 0; i < n_a; ++i) {
    p.vector[i] = pw * phase * scale;
    p.vector[n_a + i] = pw * scale;
    pw *= lambda;
  }
  return p;
}

std::vector<EigenPair> all_eigenpairs_of_a(const PermutationRep& rep, int a) {
  const int n = rep.dim();
  const int n_a = element_order(rep.group, a);

  // Cycles of pos -> sigma[a][pos]; each has length n_a.
  std::vector<std::vector<int>> cycles;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    int pos = start;
    do {
      seen[pos] = true;
      cyc.push_back(pos);
      pos = rep.sigma[a][pos];
    } while (pos != start);
    cycles.push_back(std::move(cyc));
  }

  std::vector<EigenPair> out;
  out.reserve(n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n_a));
  for (const auto& cyc : cycles) {
    for (int m = 0; m < n_a; ++m) {
      EigenPair p;
      p.value = std::polar(1.0, 2.0 * std::numbers::pi * m / n_a);
      p.vector.assign(n, cplx{});
      // (pi(a) xi)[cyc[i]] = xi[cyc[i+1]]; xi[cyc[i]] = lambda^i gives
      // eigenvalue lambda.
      for (int i = 0; i < n_a; ++i)
        p.vector[cyc[i]] = std::polar(scale, 2.0 * std::numbers::pi * m * i / n_a);
      out.push_back(std::move(p));
    }
  }
  return out;
}

DiagonalizedTriple diagonalized_triple(const PermutationRep& rep, int a, int b, int x) {
  const int n = rep.dim();
  const std::vector<EigenPair> pairs = all_eigenpairs_of_a(rep, a);
  CMatrix u(n, n);
  DiagonalizedTriple t;
  t.a_diag.resize(n);
  for (int c = 0; c < n; ++c) {
    t.a_diag[c] = pairs[c].value;
    for (int r = 0; r < n; ++r) u(r, c) = pairs[c].vector[r];
  }
  const CMatrix uh = u.adjoint();
  t.b = uh * rep.matrix(b) * u;
  t.x = uh * rep.matrix(x) * u;
  return t;
}

}  // namespace gdual
