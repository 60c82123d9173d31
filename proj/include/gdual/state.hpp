#pragma once

#include "gdual/cayley.hpp"
#include "gdual/group.hpp"
#include "gdual/linalg.hpp"

namespace gdual {

enum class StateSource { Vector, Character, Extension, Mixture, Product, Raw };

// Positive definite function p on G with p(e) = 1, stored by element index.
struct State {
  CVector values;
  StateSource source = StateSource::Raw;

  cplx operator()(int g) const { return values[g]; }
};

// Gram matrix [p(g_j^{-1} g_k)] over the natural element order.
CMatrix gram_matrix(const FiniteGroup& g, const CVector& values);

// Finite Bochner test: Gram Hermitian and min eigenvalue >= -tol_scale * n.
bool is_positive_definite(const FiniteGroup& g, const CVector& values, double tol_scale = 1e-9);

// Validates p(e) = 1 and positive definiteness.
State make_state(const FiniteGroup& g, CVector values, StateSource source = StateSource::Raw);

// p(g) = <pi(g) xi, xi> for a unit vector xi.
State vector_state(const PermutationRep& rep, const CVector& xi);

// Vector state of an eigenvector of pi(a); satisfies |p(a)| = 1.
State eigenstate(const PermutationRep& rep, int a, const EigenPair& pair);

struct Character {
  CVector values;  // unit modulus, multiplicative, chi(e) = 1
};

// All n characters of an abelian group, deterministically ordered. Found by
// diagonalizing a random Hermitian element of the group algebra, then snapped
// to exact roots of unity and verified multiplicative.
std::vector<Character> characters(const FiniteGroup& g);

State character_state(const Character& chi);

// Character of a cyclic group of the given order, enumerated in power order:
// chi_m(a^i) = exp(2 pi i m i / order).
CVector cyclic_character_values(int order, int m);

// values_on_h is aligned with h.members; the extension vanishes off H.
State extend_by_zero(const FiniteGroup& g, const Subgroup& h, const CVector& values_on_h);

State convex_combine(const FiniteGroup& g, const State& p, const State& q, double t);
State schur_product(const FiniteGroup& g, const State& p, const State& q);

// Formal complex combination of group elements.
struct AlgElem {
  CVector coeff;  // length |G|

  static AlgElem unit(int n, int g);
};

// Entrywise application of the linear extension of p to a block of group
// algebra elements.
CMatrix state_lift(const std::vector<std::vector<AlgElem>>& blockm, const State& p);

}  // namespace gdual
