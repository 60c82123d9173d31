#include "gdual/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "gdual/config.hpp"
#include "gdual/error.hpp"

namespace gdual {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

CMatrix gram_matrix(const FiniteGroup& g, const CVector& values) {
  if (static_cast<int>(values.size()) != g.order)
    fail(Errc::DimensionMismatch, "values must cover every element");
  CMatrix m(g.order, g.order);
  for (int j = 0; j < g.order; ++j)
    for (int k = 0; k < g.order; ++k) m(j, k) = values[g.mul(g.inv(j), k)];
  return m;
}

bool is_positive_definite(const FiniteGroup& g, const CVector& values, double tol_scale) {
  const CMatrix gram = gram_matrix(g, values);
  if (!gram.is_hermitian(1e-9)) return false;
  return min_hermitian_eigenvalue(gram) >= -tol_scale * g.order;
}

State make_state(const FiniteGroup& g, CVector values, StateSource source) {
  if (static_cast<int>(values.size()) != g.order)
    fail(Errc::DimensionMismatch, "values must cover every element");
  if (std::abs(values[g.identity] - cplx{1.0, 0.0}) > 1e-9)
    fail(Errc::NotPositiveDefiniteOnSubgroup, "p(e) must be 1");
  if (!is_positive_definite(g, values))
    fail(Errc::NotPositiveDefiniteOnSubgroup, "Gram matrix is not PSD");
  return State{std::move(values), source};
}

State vector_state(const PermutationRep& rep, const CVector& xi) {
  if (std::abs(norm(xi) - 1.0) > 1e-12) fail(Errc::NotUnitVector, "vector state needs ||xi|| = 1");
  State p;
  p.source = StateSource::Vector;
  p.values.resize(rep.dim());
  for (int g = 0; g < rep.dim(); ++g) p.values[g] = rep.vector_state_value(g, xi);
  return p;
}

State eigenstate(const PermutationRep& rep, int a, const EigenPair& pair) {
  if (eigen_residual(rep, a, pair) > 1e-8)
    fail(Errc::NotAnEigenpair, "vector is not an eigenvector of pi(a)");
  State p = vector_state(rep, normalized(pair.vector));
  p.source = StateSource::Vector;
  return p;
}

namespace {

// chi(g) is an ord(g)-th root of unity; replace the computed value by the
// exact nearest one.
cplx snap_root_of_unity(cplx v, int elem_order) {
  const double arg = std::arg(v);
  const double step = 2.0 * std::numbers::pi / elem_order;
  const long k = std::lround(arg / step);
  return std::polar(1.0, step * static_cast<double>(((k % elem_order) + elem_order) % elem_order));
}

bool lex_less(const CVector& a, const CVector& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    const auto ra = std::llround(a[i].real() * 1e8), rb = std::llround(b[i].real() * 1e8);
    if (ra != rb) return ra < rb;
    const auto ia = std::llround(a[i].imag() * 1e8), ib = std::llround(b[i].imag() * 1e8);
    if (ia != ib) return ia < ib;
  }
  return false;
}

}  // namespace

std::vector<Character> characters(const FiniteGroup& g) {
  if (!g.is_abelian()) fail(Errc::NotAbelian, "characters need an abelian group");
  const int n = g.order;
  const PermutationRep rep = cayley_natural(g);
  const std::vector<int> orders = element_orders(g);

  // Random Hermitian element of the group algebra: coefficients satisfy
  // c(g^{-1}) = conj(c(g)), so every eigenvector is a common eigenvector of
  // the commuting pi(g) and yields a character column.
  const std::uint64_t base = std::stoull(group_hash(g).substr(0, 8), nullptr, 16);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::mt19937_64 rng(mix_seed(base, static_cast<std::uint64_t>(attempt)));
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    CVector coeff(n);
    for (int e = 0; e < n; ++e) {
      const int ei = g.inv(e);
      if (ei == e) {
        coeff[e] = cplx{unif(rng), 0.0};
      } else if (ei > e) {
        coeff[e] = cplx{unif(rng), unif(rng)};
        coeff[ei] = std::conj(coeff[e]);
      }
    }
    CMatrix h(n, n);
    for (int e = 0; e < n; ++e)
      for (int pos = 0; pos < n; ++pos) h(pos, rep.sigma[e][pos]) += coeff[e];

    const EigenSystem es = hermitian_eigen(h);
    double min_gap = 1e300;
    for (int i = 0; i + 1 < n; ++i) min_gap = std::min(min_gap, es.values[i + 1] - es.values[i]);
    if (min_gap < 1e-8) continue;

    std::vector<Character> chars;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const CVector col = es.column(i);
      const cplx at_e = col[g.identity];
      if (std::abs(at_e) < 1e-6) {
        ok = false;
        break;
      }
      Character chi;
      chi.values.resize(n);
      for (int e = 0; e < n; ++e) {
        const cplx v = col[e] / at_e;
        if (std::abs(std::abs(v) - 1.0) > 1e-6) {
          ok = false;
          break;
        }
        chi.values[e] = snap_root_of_unity(v, orders[e]);
      }
      if (ok) chars.push_back(std::move(chi));
    }
    if (!ok) continue;

    for (const auto& chi : chars)
      for (int j = 0; j < n && ok; ++j)
        for (int k = 0; k < n && ok; ++k)
          if (std::abs(chi.values[g.mul(j, k)] - chi.values[j] * chi.values[k]) > 1e-9) ok = false;
    if (!ok) continue;

    std::sort(chars.begin(), chars.end(),
              [](const Character& a, const Character& b) { return lex_less(a.values, b.values); });
    for (size_t i = 0; i + 1 < chars.size(); ++i)
      if (chars[i].values == chars[i + 1].values) ok = false;
    if (!ok) continue;

    return chars;
  }
  fail(Errc::NotAbelian, "character extraction did not converge");
}

State character_state(const Character& chi) {
  State p;
  p.values = chi.values;
  p.source = StateSource::Character;
  return p;
}

CVector cyclic_character_values(int order, int m) {
  CVector v(order);
  for (int i = 0; i < order; ++i)
    v[i] = std::polar(1.0, 2.0 * std::numbers::pi * m * i / order);
  return v;
}

State extend_by_zero(const FiniteGroup& g, const Subgroup& h, const CVector& values_on_h) {
  const int hs = static_cast<int>(h.members.size());
  if (static_cast<int>(values_on_h.size()) != hs)
    fail(Errc::DimensionMismatch, "values must align with subgroup members");

  // Bochner test on the subgroup itself.
  CMatrix gram(hs, hs);
  std::vector<int> pos_in_h(g.order, -1);
  for (int i = 0; i < hs; ++i) pos_in_h[h.members[i]] = i;
  for (int j = 0; j < hs; ++j) {
    for (int k = 0; k < hs; ++k) {
      const int prod = g.mul(g.inv(h.members[j]), h.members[k]);
      if (pos_in_h[prod] < 0)
        fail(Errc::NotPositiveDefiniteOnSubgroup, "member list is not closed under the table");
      gram(j, k) = values_on_h[pos_in_h[prod]];
    }
  }
  if (!gram.is_hermitian(1e-9) || min_hermitian_eigenvalue(gram) < -1e-9 * hs)
    fail(Errc::NotPositiveDefiniteOnSubgroup, "restriction is not positive definite");

  State p;
  p.source = StateSource::Extension;
  p.values.assign(g.order, cplx{});
  for (int i = 0; i < hs; ++i) p.values[h.members[i]] = values_on_h[i];
  return make_state(g, std::move(p.values), StateSource::Extension);
}

State convex_combine(const FiniteGroup& g, const State& p, const State& q, double t) {
  if (t < 0.0 || t > 1.0) fail(Errc::UsageError, "mixture weight outside [0, 1]");
  CVector v(g.order);
  for (int e = 0; e < g.order; ++e) v[e] = t * p.values[e] + (1.0 - t) * q.values[e];
  return make_state(g, std::move(v), StateSource::Mixture);
}

State schur_product(const FiniteGroup& g, const State& p, const State& q) {
  CVector v(g.order);
  for (int e = 0; e < g.order; ++e) v[e] = p.values[e] * q.values[e];
  return make_state(g, std::move(v), StateSource::Product);
}

AlgElem AlgElem::unit(int n, int g) {
  AlgElem a;
  a.coeff.assign(n, cplx{});
  a.coeff[g] = 1.0;
  return a;
}

CMatrix state_lift(const std::vector<std::vector<AlgElem>>& blockm, const State& p) {
  const int m = static_cast<int>(blockm.size());
  CMatrix out(m, m);
  for (int r = 0; r < m; ++r) {
    if (static_cast<int>(blockm[r].size()) != m) fail(Errc::DimensionMismatch, "block not square");
    for (int c = 0; c < m; ++c) {
      cplx s{};
      const auto& coeff = blockm[r][c].coeff;
      if (coeff.size() != p.values.size()) fail(Errc::DimensionMismatch, "algebra element length");
      for (size_t e = 0; e < coeff.size(); ++e)
        if (coeff[e] != cplx{}) s += coeff[e] * p.values[e];
      out(r, c) = s;
    }
  }
  return out;
}

}  // namespace gdual
