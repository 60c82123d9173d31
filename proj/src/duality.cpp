#include "gdual/duality.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "gdual/error.hpp"

namespace gdual {

NMorphism mult_table_morphism(const FiniteGroup& g, std::vector<int> elements) {
  const int m = static_cast<int>(elements.size());
  std::vector<bool> seen(g.order, false);
  for (int e : elements) {
    if (e < 0 || e >= g.order) fail(Errc::IndexOutOfRange, "element " + std::to_string(e));
    if (seen[e]) fail(Errc::DuplicateElements, "element " + std::to_string(e) + " repeats");
    seen[e] = true;
  }
  NMorphism phi;
  phi.group = g;
  phi.elements = std::move(elements);
  phi.grid.assign(m, std::vector<int>(m));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) phi.grid[j][k] = g.mul(g.inv(phi.elements[j]), phi.elements[k]);
  return phi;
}

CMatrix evaluate_morphism(const NMorphism& phi, const State& p) {
  const int m = phi.size();
  CMatrix out(m, m);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k) out(j, k) = p(phi.grid[j][k]);
  return out;
}

MorphismReport verify_morphism(const NMorphism& phi, const std::vector<State>& samples,
                               const std::vector<double>& lambdas) {
  if (lambdas.empty()) fail(Errc::UsageError, "need at least one mixing weight");
  MorphismReport rep;
  const FiniteGroup& g = phi.group;
  const int m = phi.size();

  for (size_t i = 0; i + 1 < samples.size(); ++i) {
    const State& p = samples[i];
    const State& q = samples[i + 1];
    const double lambda = lambdas[i % lambdas.size()];

    // Affinity and multiplicativity, entrywise.
    const State mix = convex_combine(g, p, q, lambda);
    const State prod = schur_product(g, p, q);
    const CMatrix mp = evaluate_morphism(phi, p);
    const CMatrix mq = evaluate_morphism(phi, q);
    const CMatrix mmix = evaluate_morphism(phi, mix);
    const CMatrix mprod = evaluate_morphism(phi, prod);
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        rep.max_affine_violation =
            std::max(rep.max_affine_violation,
                     std::abs(mmix(r, c) - (lambda * mp(r, c) + (1.0 - lambda) * mq(r, c))));
        rep.max_mult_violation =
            std::max(rep.max_mult_violation, std::abs(mprod(r, c) - mp(r, c) * mq(r, c)));
      }
    }

    // Ordered pair: big = mix(p, q), small = lambda * p, so big - small =
    // (1 - lambda) q is positive definite.
    CMatrix diff(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) diff(r, c) = mmix(r, c) - lambda * mp(r, c);
    rep.min_order_eig = std::min(rep.min_order_eig, min_hermitian_eigenvalue(diff));

    // Schur product of the two images.
    CMatrix had(m, m);
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c) had(r, c) = mp(r, c) * mq(r, c);
    rep.min_schur_eig = std::min(rep.min_schur_eig, min_hermitian_eigenvalue(had));

    ++rep.pairs_tested;
  }

  // Every entry map is nonvanishing somewhere: the zero-extension of the
  // trivial character on <g_jk> gives the value 1 at g_jk.
  rep.nonvanishing_witnessed = true;
  for (int j = 0; j < m && rep.nonvanishing_witnessed; ++j) {
    for (int k = 0; k < m && rep.nonvanishing_witnessed; ++k) {
      const Subgroup h = cyclic_subgroup(g, phi.grid[j][k]);
      const State witness = extend_by_zero(g, h, CVector(h.members.size(), cplx{1.0, 0.0}));
      if (std::abs(witness(phi.grid[j][k])) < 0.5) rep.nonvanishing_witnessed = false;
    }
  }
  return rep;
}

std::vector<State> fingerprint_family(const FiniteGroup& g, std::uint64_t seed) {
  std::vector<State> family;
  if (g.is_abelian()) {
    for (const Character& chi : characters(g)) family.push_back(character_state(chi));
    return family;
  }
  const PermutationRep rep = cayley_natural(g);
  {
    CVector delta(g.order, cplx{});
    delta[g.identity] = 1.0;  // p = delta_e from the first basis vector
    family.push_back(make_state(g, std::move(delta), StateSource::Vector));
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < 16; ++s) {
    std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(s)));
    CVector w(g.order);
    for (auto& z : w) z = cplx{gauss(rng), gauss(rng)};
    family.push_back(vector_state(rep, normalized(std::move(w))));
  }
  return family;
}

namespace {

double fingerprint_distance(const CVector& a, const CVector& b) {
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

DualElement DualTable::at(int j, int k) const {
  const int cls = class_of[j][k];
  DualElement e = reps[cls];
  e.j = j;
  e.k = k;
  return e;
}

DualTable build_dual_table(const NMorphism& phi, const std::vector<State>& family) {
  DualTable table;
  table.phi = phi;
  table.family = family;
  const int m = phi.size();

  std::vector<CVector> prints(static_cast<size_t>(m) * m);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      CVector fp(family.size());
      for (size_t s = 0; s < family.size(); ++s) fp[s] = family[s](phi.grid[j][k]);
      prints[static_cast<size_t>(j) * m + k] = std::move(fp);
    }
  }

  table.class_of.assign(m, std::vector<int>(m, -1));
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const CVector& fp = prints[static_cast<size_t>(j) * m + k];
      int found = -1;
      for (size_t c = 0; c < table.reps.size(); ++c) {
        if (fingerprint_distance(fp, table.reps[c].fingerprint) <= table.join_tol) {
          found = static_cast<int>(c);
          break;
        }
      }
      if (found < 0) {
        table.reps.push_back(DualElement{j, k, fp});
        found = static_cast<int>(table.reps.size()) - 1;
      }
      table.class_of[j][k] = found;
    }
  }

  table.min_separation = 1e300;
  for (size_t c1 = 0; c1 < table.reps.size(); ++c1)
    for (size_t c2 = c1 + 1; c2 < table.reps.size(); ++c2)
      table.min_separation = std::min(
          table.min_separation,
          fingerprint_distance(table.reps[c1].fingerprint, table.reps[c2].fingerprint));
  if (table.reps.size() < 2) table.min_separation = 0.0;

  // Distinct classes closer than this would make membership ambiguous.
  if (table.reps.size() >= 2 && table.min_separation < 1e-3)
    fail(Errc::FingerprintCollision,
         "closest distinct fingerprints at distance " + std::to_string(table.min_separation));
  return table;
}

DualElement dual_product(const DualTable& table, const DualElement& f, const DualElement& h) {
  const int m = table.phi.size();
  const int hcls = table.class_of[h.j][h.k];
  // Re-site h to start at f's end column.
  for (int s = 0; s < m; ++s) {
    if (table.class_of[f.k][s] == hcls) {
      DualElement out = table.at(f.j, s);
      return out;
    }
  }
  fail(Errc::NoComposablePosition, "no matching position in row " + std::to_string(f.k));
}

DualGroupResult dual_group(const FiniteGroup& g, std::uint64_t seed) {
  const int n = g.order;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  const NMorphism phi = mult_table_morphism(g, all);
  const DualTable table = build_dual_table(phi, fingerprint_family(g, seed));

  const int classes = static_cast<int>(table.reps.size());
  std::vector<std::vector<int>> t(classes, std::vector<int>(classes));
  for (int c1 = 0; c1 < classes; ++c1) {
    for (int c2 = 0; c2 < classes; ++c2) {
      const DualElement prod = dual_product(table, table.reps[c1], table.reps[c2]);
      t[c1][c2] = table.class_of[prod.j][prod.k];
    }
  }

  DualGroupResult res;
  res.min_separation = table.min_separation;
  res.dual = from_table(t);
  const auto iso = find_isomorphism(res.dual, g);
  if (iso) res.isomorphism = *iso;
  return res;
}

AbelianStateOracle make_hidden_oracle(const FiniteGroup& hidden, std::uint64_t seed,
                                      std::vector<int>* relabel_out) {
  if (!hidden.is_abelian()) fail(Errc::NotAbelian, "oracle requires an abelian group");
  std::vector<int> label_to_elem(hidden.order);
  std::iota(label_to_elem.begin(), label_to_elem.end(), 0);
  std::mt19937_64 rng(mix_seed(seed, 0xabe1u));
  std::shuffle(label_to_elem.begin(), label_to_elem.end(), rng);
  if (relabel_out) *relabel_out = label_to_elem;

  AbelianStateOracle oracle;
  oracle.order = hidden.order;
  for (const Character& chi : characters(hidden)) {
    CVector row(hidden.order);
    for (int label = 0; label < hidden.order; ++label) row[label] = chi.values[label_to_elem[label]];
    oracle.states.push_back(std::move(row));
  }
  return oracle;
}

FiniteGroup reconstruct_abelian(const AbelianStateOracle& oracle, double tol) {
  const int n = oracle.order;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int found = -1;
      for (int x = 0; x < n; ++x) {
        bool ok = true;
        for (const CVector& p : oracle.states) {
          if (min_hermitian_eigenvalue(qmatrix_values(p[a], p[b], p[x])) < -tol) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        if (found >= 0)
          fail(Errc::NoUniqueProduct, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") admits " + std::to_string(found) + " and " +
                                          std::to_string(x));
        found = x;
      }
      if (found < 0)
        fail(Errc::NoUniqueProduct,
             "pair (" + std::to_string(a) + "," + std::to_string(b) + ") admits no product");
      t[a][b] = found;
    }
  }
  return from_table(t);
}

std::vector<std::vector<std::vector<int>>> reconstruct_blurred(const FiniteGroup& g,
                                                               const RunConfig& cfg) {
  std::vector<std::vector<std::vector<int>>> out(g.order,
                                                 std::vector<std::vector<int>>(g.order));
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b) out[a][b] = candidate_products(g, a, b, cfg);
  return out;
}

XWordResult xword_scan(const FiniteGroup& g, int a, int b, int x) {
  const std::vector<int> enumeration = coset_enumeration(g, a, b);
  const PermutationRep rep = cayley(g, enumeration);
  const int na = element_order(g, a);

  XWordResult res;
  const CMatrix mb = rep.matrix(b);
  const CMatrix mx = rep.matrix(x);
  res.count_b12 = nonzero_count(block(mb, 1, 2, na));
  res.count_x12 = nonzero_count(block(mx, 1, 2, na));
  res.count_b21 = nonzero_count(block(mb, 2, 1, na));
  res.count_x21 = nonzero_count(block(mx, 2, 1, na));
  res.counts_match = res.count_b12 == res.count_x12 && res.count_b21 == res.count_x21;

  // Words are not unique (a^s b a^t = a^{s'} b a^{t'} can happen); return the
  // smallest by total exponent, then by s.
  for (int total = 0; total <= 2 * (na - 1); ++total) {
    for (int s = std::max(0, total - (na - 1)); s <= std::min(total, na - 1); ++s) {
      const int t = total - s;
      if (g.mul(g.mul(g.power(a, s), b), g.power(a, t)) == x) {
        res.s = s;
        res.t = t;
        return res;
      }
    }
  }
  fail(Errc::NotInDoubleCoset, "element " + std::to_string(x) + " is not of the form a^s b a^t");
}

SemidirectReport semidirect_case_check(const FiniteGroup& g, int a, int b, const RunConfig& cfg) {
  SemidirectReport rep;
  const int na = element_order(g, a);

  int m = -1;
  const int ab = g.mul(a, b);
  for (int k = 0; k < na; ++k) {
    if (ab == g.mul(b, g.power(a, k))) {
      m = k;
      break;
    }
  }
  if (m < 0) {
    rep.skip_reason = "no m with ab = b a^m";
    return rep;
  }
  if (m == 1 || na == 1) {
    rep.skip_reason = "commuting pair, nothing to restrict";
    return rep;
  }
  if (!double_coset_membership(g, a, b).b_in_Hbinv_H) {
    rep.skip_reason = "b is not in H b^-1 H";
    return rep;
  }

  rep.applicable = true;
  rep.m = m;
  rep.gcd = std::gcd(m - 1, na);
  rep.lambda = std::polar(1.0, 2.0 * std::numbers::pi / rep.gcd);

  // Eigenvector on the first two coset blocks with <b xi, xi> != 0.
  const PermutationRep crep = cayley(g, coset_enumeration(g, a, b));
  for (double phi : {0.0, std::numbers::pi / 4, std::numbers::pi / 2, 1.0, 2.0}) {
    const EigenPair xi = two_block_eigenvector(na, rep.lambda, phi, g.order);
    const cplx bi = inner(crep.apply(b, xi.vector), xi.vector);
    if (std::abs(bi) > 1e-6) {
      rep.phi = phi;
      rep.b_inner = bi;
      break;
    }
  }

  rep.all_one_mod_gcd = true;
  for (int l = 0; l < na; ++l) {
    const int x = g.mul(b, g.power(a, l));
    if (universal_positivity(g, a, b, x, cfg).holds) {
      rep.surviving_l.push_back(l);
      if (((l - 1) % rep.gcd + rep.gcd) % rep.gcd != 0) rep.all_one_mod_gcd = false;
    }
  }
  std::vector<int> expected = {1, m};
  std::sort(expected.begin(), expected.end());
  rep.survivors_are_one_and_m = rep.surviving_l == expected;
  return rep;
}

}  // namespace gdual
