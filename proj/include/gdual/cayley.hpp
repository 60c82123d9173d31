#pragma once

#include "gdual/group.hpp"
#include "gdual/linalg.hpp"

namespace gdual {

// Regular permutation representation induced by an enumeration g_1..g_n:
// pi(g)[j][k] = 1 iff g = g_j^{-1} g_k. Stored as index maps; dense matrices
// are materialized on demand.
//
// Under a coset enumeration for (a, b), pi(a) is block diagonal with n_a x n_a
// cyclic blocks carrying ones on the wrapped superdiagonal, so xi_i = lambda^i
// (i local to a block, lambda^{n_a} = 1) satisfies pi(a) xi = lambda xi.
struct PermutationRep {
  FiniteGroup group;
  std::vector<int> enumeration;          // enumeration[pos] = element index
  std::vector<int> position;             // position[element] = pos
  std::vector<std::vector<int>> sigma;   // sigma[g][pos] = position of g_pos * g

  int dim() const { return group.order; }

  CMatrix matrix(int g) const;
  CVector apply(int g, const CVector& v) const;          // pi(g) v
  cplx vector_state_value(int g, const CVector& w) const;  // <pi(g) w, w>
};

PermutationRep cayley(const FiniteGroup& g, std::vector<int> enumeration);
PermutationRep cayley_natural(const FiniteGroup& g);

// True iff pi(g) and pi(h) share a nonzero entry; for a Cayley representation
// this happens exactly when g = h.
bool agree_nonzero(const PermutationRep& rep, int g, int h);

struct EigenPair {
  cplx value;
  CVector vector;
};

double eigen_residual(const PermutationRep& rep, int a, const EigenPair& p);

// Unit vector supported on the first two n_a-blocks: lambda^i e^{i phi} on the
// first block, lambda^i on the second (i = 0..n_a-1 within each block). For a
// coset-enumerated pi(a) this is an eigenvector with eigenvalue lambda.
EigenPair two_block_eigenvector(int n_a, cplx lambda, double phi, int total_dim);

// Analytic orthonormal eigenbasis of pi(a): one DFT vector per (cycle of
// right multiplication by a) x (n_a-th root of unity). Eigenvalues come out
// grouped by cycle, exact to roots of unity.
std::vector<EigenPair> all_eigenpairs_of_a(const PermutationRep& rep, int a);

// pi conjugated into the eigenbasis of pi(a): a becomes diag(a_diag).
struct DiagonalizedTriple {
  CVector a_diag;
  CMatrix b;
  CMatrix x;
};

DiagonalizedTriple diagonalized_triple(const PermutationRep& rep, int a, int b, int x);

}  // namespace gdual
