#pragma once

#include "gdual/cayley.hpp"
#include "gdual/config.hpp"
#include "gdual/positivity.hpp"

namespace gdual {

// Smooth path xi_t = cos(t) xi + sin(t) eta through the unit sphere, with xi
// a unit eigenvector of pi(a) and eta a unit vector orthogonal to xi.
struct PathConfig {
  const PermutationRep* rep = nullptr;
  int a = 0, b = 0, x = 0;
  EigenPair eig;
  CVector eta;
};

PathConfig make_path_config(const PermutationRep& rep, int a, int b, int x, EigenPair eig,
                            CVector eta);

// f(t) = det Q_{p_t} for the vector state p_t of xi_t.
double f_along_path(const PathConfig& pc, double t);

// Analytic f''(0) from the sesquilinear expansion of t -> <pi(g) xi_t, xi_t>:
//   g^(0) = <g xi, xi>,  g'(0) = <g xi, eta> + <g eta, xi>,
//   g''(0) = 2 (<g eta, eta> - <g xi, xi>).
double f_second_derivative(const PathConfig& pc);

// RHS - LHS of |x'(0) - lambda b'(0)|^2 <= (|b(0)|^2 - 1) Re[conj(lambda) a''(0)].
double second_derivative_gap(const PathConfig& pc);

// RHS - LHS of
//   |<(x-ab) eta, xi> + <(x-ba) xi, eta>|^2
//     <= (1 - |<b xi, xi>|^2) ||(lambda I - a) eta||^2
// for unit eta orthogonal to xi.
double nash_gap(const PermutationRep& rep, int a, int b, int x, const EigenPair& eig,
                const CVector& eta);

// Sharpened form, valid for arbitrary eta:
//   |<(x-ab) eta, xi>| + |<(x-ba) xi, eta>|
//     <= sqrt(1 - |<b xi, xi>|^2) ||(lambda I - a) eta||.
double sharp_nash_gap(const PermutationRep& rep, int a, int b, int x, const EigenPair& eig,
                      const CVector& eta);

// Coordinate form at row j for diagonal unitary a = diag(lambda_1..lambda_n):
//   |sum_k r_k (e^{i phi_k}(x_jk - lambda_j b_jk) + e^{-i phi_k}(x_kj - lambda_j b_kj))|^2
//     <= (1 - |b_jj|^2) sum_k r_k^2 |lambda_j - lambda_k|^2.
double coord_nash_gap(const CVector& a_diag, const CMatrix& b, const CMatrix& x, int j,
                      const std::vector<double>& r, const std::vector<double>& phi);

struct GapSummary {
  double min_nash = 1e300;
  double min_sharp = 1e300;
  double min_coord = 1e300;
  double min_second = 1e300;
  long samples_per_family = 0;
  std::uint64_t seed = 0;

  double overall_min() const;
};

// Sampling plan: every pair (a, b), x in {ab, ba}, every eigenvalue class of
// pi(a); random eigenvector within the class, random eta per sample. The
// per-class sample count is sized so each family sees at least cfg.samples
// draws.
GapSummary sample_inequality_gaps(const FiniteGroup& g, const RunConfig& cfg);

}  // namespace gdual
