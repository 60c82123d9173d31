#pragma once

#include <array>
#include <optional>
#include <string>

#include "gdual/cayley.hpp"
#include "gdual/config.hpp"
#include "gdual/state.hpp"

namespace gdual {

// 3x3 Hermitian matrix with unit diagonal and entries p(a), p(b), p(x) above
// the diagonal.
struct QMatrix {
  CMatrix m;  // 3x3
  int a = 0, b = 0, x = 0;
};

CMatrix qmatrix_values(cplx pa, cplx pb, cplx px);
QMatrix qmatrix(const State& p, int a, int b, int x);

// det = 1 + 2 Re[p(a) p(b) conj(p(x))] - |p(x)|^2 - |p(b)|^2 - |p(a)|^2.
double det_q_values(cplx pa, cplx pb, cplx px);
double det_q(const State& p, int a, int b, int x);

// (1 - |p(a)|^2)(1 - |p(b)|^2) - |p(x) - p(a) p(b)|^2; algebraically equal to
// det_q, kept as a distinct route for cross-checks.
double fundamental_gap(const State& p, int a, int b, int x);

// 3n x 3n Hermitian block matrix with identity diagonal blocks and pi(a),
// pi(b), pi(x) above it.
CMatrix block_q(const PermutationRep& rep, int a, int b, int x);
double block_q_min_eig(const PermutationRep& rep, int a, int b, int x);

// True iff block_q min eigenvalue >= -tol.
bool block_oracle(const PermutationRep& rep, int a, int b, int x, double tol);

// ||M^2 - 3 M||_F for M = block_q(a, b, ab); zero iff M/3 is a projection.
double projection_check(const PermutationRep& rep, int a, int b);

// Machine-checkable refutation of "Q_p PSD for all states p": a state, a
// witness direction, and the negative quadratic form value. The value is
// recomputable from the serialized fields alone.
struct Certificate {
  std::string group_hash;
  int a = 0, b = 0, x = 0;
  CVector state;                  // p(g) per element index
  CVector vector;                 // unit vector w realizing p over the Cayley rep
  std::array<cplx, 3> witness{};  // v with <Q_p v, v> = value
  double value = 0.0;
};

double certificate_value(const Certificate& cert);
std::string certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const std::string& text);

struct UniversalResult {
  bool holds = false;
  double best_value = 0.0;  // most negative <Q_p v, v> found (or min character eig)
  std::optional<Certificate> certificate;
};

// Decides whether Q_p is PSD for every state p in K(G).
// Abelian G: exact, by checking the characters (the extreme points).
// Otherwise: multi-start alternating minimization of <(v ox w), Q (v ox w)>
// over unit v in C^3 and w in C^n, warm-started from zero-extended characters
// of <a> and eigenvectors of pi(a). The `holds` answer is a search outcome,
// not a proof; refutations are always certified.
UniversalResult universal_positivity(const FiniteGroup& g, int a, int b, int x,
                                     const RunConfig& cfg);

// The simple-tensor search path used for nonabelian groups, callable on any
// group; on abelian input it must agree with the character check.
UniversalResult universal_positivity_search(const FiniteGroup& g, int a, int b, int x,
                                            const RunConfig& cfg);

// { x : universal_positivity(g, a, b, x) holds }.
std::vector<int> candidate_products(const FiniteGroup& g, int a, int b, const RunConfig& cfg);

}  // namespace gdual
