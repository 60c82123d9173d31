#include "gdual/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "gdual/error.hpp"

namespace gdual {

PathConfig make_path_config(const PermutationRep& rep, int a, int b, int x, EigenPair eig,
                            CVector eta) {
  if (std::abs(norm(eig.vector) - 1.0) > 1e-10) fail(Errc::NotUnitVector, "xi must be unit");
  if (std::abs(norm(eta) - 1.0) > 1e-10) fail(Errc::NotUnitVector, "eta must be unit");
  if (std::abs(inner(eta, eig.vector)) > 1e-10) fail(Errc::NotOrthogonal, "eta must be in xi^perp");
  if (eigen_residual(rep, a, eig) > 1e-8) fail(Errc::NotAnEigenpair, "xi is not an eigenvector");
  return PathConfig{&rep, a, b, x, std::move(eig), std::move(eta)};
}

namespace {

struct HatDerivs {
  cplx h0, h1, h2;  // value, first and second derivative at t = 0
};

HatDerivs hat_derivs(const PermutationRep& rep, int g, const CVector& xi, const CVector& eta) {
  const CVector gxi = rep.apply(g, xi);
  const CVector geta = rep.apply(g, eta);
  HatDerivs d;
  d.h0 = inner(gxi, xi);
  d.h1 = inner(gxi, eta) + inner(geta, xi);
  d.h2 = 2.0 * (inner(geta, eta) - inner(gxi, xi));
  return d;
}

}  // namespace

double f_along_path(const PathConfig& pc, double t) {
  const double c = std::cos(t), s = std::sin(t);
  CVector xt(pc.eig.vector.size());
  for (size_t i = 0; i < xt.size(); ++i) xt[i] = c * pc.eig.vector[i] + s * pc.eta[i];
  const cplx pa = pc.rep->vector_state_value(pc.a, xt);
  const cplx pb = pc.rep->vector_state_value(pc.b, xt);
  const cplx px = pc.rep->vector_state_value(pc.x, xt);
  return det_q_values(pa, pb, px);
}

double f_second_derivative(const PathConfig& pc) {
  const HatDerivs a = hat_derivs(*pc.rep, pc.a, pc.eig.vector, pc.eta);
  const HatDerivs b = hat_derivs(*pc.rep, pc.b, pc.eig.vector, pc.eta);
  const HatDerivs x = hat_derivs(*pc.rep, pc.x, pc.eig.vector, pc.eta);

  // (a b conj(x))'' and (|g|^2)'' by the product rule.
  const cplx tri = a.h2 * b.h0 * std::conj(x.h0) + a.h0 * b.h2 * std::conj(x.h0) +
                   a.h0 * b.h0 * std::conj(x.h2) +
                   2.0 * (a.h1 * b.h1 * std::conj(x.h0) + a.h1 * b.h0 * std::conj(x.h1) +
                          a.h0 * b.h1 * std::conj(x.h1));
  auto sq2 = [](const HatDerivs& d) {
    return 2.0 * (std::norm(d.h1) + (std::conj(d.h0) * d.h2).real());
  };
  return 2.0 * tri.real() - sq2(a) - sq2(b) - sq2(x);
}

double second_derivative_gap(const PathConfig& pc) {
  const HatDerivs a = hat_derivs(*pc.rep, pc.a, pc.eig.vector, pc.eta);
  const HatDerivs b = hat_derivs(*pc.rep, pc.b, pc.eig.vector, pc.eta);
  const HatDerivs x = hat_derivs(*pc.rep, pc.x, pc.eig.vector, pc.eta);
  const cplx lambda = pc.eig.value;
  const double lhs = std::norm(x.h1 - lambda * b.h1);
  const double rhs = (std::norm(b.h0) - 1.0) * (std::conj(lambda) * a.h2).real();
  return rhs - lhs;
}

double nash_gap(const PermutationRep& rep, int a, int b, int x, const EigenPair& eig,
                const CVector& eta) {
  if (std::abs(norm(eta) - 1.0) > 1e-10) fail(Errc::NotUnitVector, "eta must be unit");
  if (std::abs(inner(eta, eig.vector)) > 1e-10)
    fail(Errc::NotOrthogonal, "eta must be orthogonal to xi");
  const CVector& xi = eig.vector;
  const int ab = rep.group.mul(a, b);
  const int ba = rep.group.mul(b, a);

  const cplx term1 = inner(rep.apply(x, eta), xi) - inner(rep.apply(ab, eta), xi);
  const cplx term2 = inner(rep.apply(x, xi), eta) - inner(rep.apply(ba, xi), eta);
  const double lhs = std::norm(term1 + term2);

  const cplx bxixi = inner(rep.apply(b, xi), xi);
  CVector resid = rep.apply(a, eta);
  for (size_t i = 0; i < resid.size(); ++i) resid[i] = eig.value * eta[i] - resid[i];
  const double rhs = (1.0 - std::norm(bxixi)) * norm(resid) * norm(resid);
  return rhs - lhs;
}

double sharp_nash_gap(const PermutationRep& rep, int a, int b, int x, const EigenPair& eig,
                      const CVector& eta) {
  const CVector& xi = eig.vector;
  const int ab = rep.group.mul(a, b);
  const int ba = rep.group.mul(b, a);

  const double term1 = std::abs(inner(rep.apply(x, eta), xi) - inner(rep.apply(ab, eta), xi));
  const double term2 = std::abs(inner(rep.apply(x, xi), eta) - inner(rep.apply(ba, xi), eta));

  const cplx bxixi = inner(rep.apply(b, xi), xi);
  CVector resid = rep.apply(a, eta);
  for (size_t i = 0; i < resid.size(); ++i) resid[i] = eig.value * eta[i] - resid[i];
  const double rhs = std::sqrt(std::max(0.0, 1.0 - std::norm(bxixi))) * norm(resid);
  return rhs - (term1 + term2);
}

double coord_nash_gap(const CVector& a_diag, const CMatrix& b, const CMatrix& x, int j,
                      const std::vector<double>& r, const std::vector<double>& phi) {
  const int n = static_cast<int>(a_diag.size());
  if (b.rows() != n || b.cols() != n || x.rows() != n || x.cols() != n ||
      static_cast<int>(r.size()) != n || static_cast<int>(phi.size()) != n)
    fail(Errc::DimensionMismatch, "coordinate inequality inputs must share dimension n");
  if (j < 0 || j >= n) fail(Errc::IndexOutOfRange, "row index");

  const cplx lj = a_diag[j];
  cplx sum{};
  double rhs = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx ephi = std::polar(1.0, phi[k]);
    sum += r[k] * (ephi * (x(j, k) - lj * b(j, k)) + std::conj(ephi) * (x(k, j) - lj * b(k, j)));
    rhs += r[k] * r[k] * std::norm(lj - a_diag[k]);
  }
  rhs *= 1.0 - std::norm(b(j, j));
  return rhs - std::norm(sum);
}

double GapSummary::overall_min() const {
  return std::min(std::min(min_nash, min_sharp), std::min(min_coord, min_second));
}

namespace {

CVector random_class_eigenvector(const std::vector<const EigenPair*>& basis,
                                 std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector v(basis.front()->vector.size(), cplx{});
  for (const EigenPair* p : basis) {
    const cplx c{gauss(rng), gauss(rng)};
    for (size_t i = 0; i < v.size(); ++i) v[i] += c * p->vector[i];
  }
  return normalized(std::move(v));
}

CVector random_orthogonal_unit(const CVector& xi, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (;;) {
    CVector v(xi.size());
    for (auto& z : v) z = cplx{gauss(rng), gauss(rng)};
    const cplx overlap = inner(v, xi);
    for (size_t i = 0; i < v.size(); ++i) v[i] -= overlap * xi[i];
    if (norm(v) > 1e-8) return normalized(std::move(v));
  }
}

}  // namespace

GapSummary sample_inequality_gaps(const FiniteGroup& g, const RunConfig& cfg) {
  GapSummary out;
  out.seed = cfg.seed;
  const PermutationRep rep = cayley_natural(g);
  const int n = g.order;

  // Count (pair, x, class) slots to size the per-class sample count.
  long slots = 0;
  for (int a = 0; a < n; ++a) {
    const int na = element_order(g, a);
    for (int b = 0; b < n; ++b) slots += (g.mul(a, b) == g.mul(b, a) ? 1 : 2) * na;
  }
  const long per_slot = std::max<long>(1, (cfg.samples + slots - 1) / slots);

  for (int a = 0; a < n; ++a) {
    const std::vector<EigenPair> pairs = all_eigenpairs_of_a(rep, a);
    const int na = element_order(g, a);
    // Bucket the analytic eigenbasis by eigenvalue class.
    std::vector<std::vector<const EigenPair*>> classes(na);
    for (const EigenPair& p : pairs) {
      const double arg = std::arg(p.value);
      int m = static_cast<int>(std::llround(arg * na / (2.0 * std::numbers::pi)));
      m = ((m % na) + na) % na;
      classes[m].push_back(&p);
    }

    for (int b = 0; b < n; ++b) {
      std::vector<int> xs = {g.mul(a, b)};
      if (g.mul(b, a) != xs[0]) xs.push_back(g.mul(b, a));
      for (int x : xs) {
        const DiagonalizedTriple diag = diagonalized_triple(rep, a, b, x);
        for (int m = 0; m < na; ++m) {
          std::mt19937_64 rng(mix_seed(cfg.seed, ((static_cast<std::uint64_t>(a) * n + b) * n + x) *
                                                     static_cast<std::uint64_t>(na) +
                                                 m));
          EigenPair eig;
          eig.value = std::polar(1.0, 2.0 * std::numbers::pi * m / na);
          std::uniform_int_distribution<int> pick_row(0, n - 1);
          std::uniform_real_distribution<double> unif(-1.0, 1.0);
          std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
          for (long s = 0; s < per_slot; ++s) {
            eig.vector = random_class_eigenvector(classes[m], rng);
            const CVector eta = random_orthogonal_unit(eig.vector, rng);

            out.min_nash = std::min(out.min_nash, nash_gap(rep, a, b, x, eig, eta));

            CVector eta_any(n);
            std::normal_distribution<double> gauss(0.0, 1.0);
            for (auto& z : eta_any) z = cplx{gauss(rng), gauss(rng)};
            out.min_sharp = std::min(out.min_sharp, sharp_nash_gap(rep, a, b, x, eig, eta_any));

            const PathConfig pc{&rep, a, b, x, eig, eta};
            out.min_second = std::min(out.min_second, second_derivative_gap(pc));

            const int j = pick_row(rng);
            std::vector<double> r(n), phi(n);
            for (int k = 0; k < n; ++k) {
              r[k] = unif(rng);
              phi[k] = angle(rng);
            }
            out.min_coord =
                std::min(out.min_coord, coord_nash_gap(diag.a_diag, diag.b, diag.x, j, r, phi));
            ++out.samples_per_family;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace gdual
