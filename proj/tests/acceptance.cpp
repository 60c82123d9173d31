// Acceptance suite: every criterion prints one [PASS]/[FAIL] line; the
// process exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "gdual/duality.hpp"
#include "gdual/inequalities.hpp"

using namespace gdual;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

RunConfig base_config() {
  RunConfig cfg;
  cfg.seed = 2024;
  cfg.restarts = 32;
  return cfg;
}

// ---------------------------------------------------------------------------
// 1. Abelian exactness: the character oracle accepts (a, b, x) iff x = ab,
//    for a battery of abelian groups, within 10 seconds.
void criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = base_config();
  bool ok = true;
  std::ostringstream detail;

  const std::vector<std::string> names = {"z2", "z3", "z4",    "z5",    "z6",
                                          "z7", "z8", "z2xz2", "z2xz4", "z3xz3"};
  for (const auto& name : names) {
    const FiniteGroup g = make_builtin(name);
    long accepted = 0;
    bool exact = true;
    for (int a = 0; a < g.order && exact; ++a)
      for (int b = 0; b < g.order && exact; ++b)
        for (int x = 0; x < g.order; ++x) {
          const bool holds = universal_positivity(g, a, b, x, cfg).holds;
          if (holds) ++accepted;
          if (holds != (x == g.mul(a, b))) {
            exact = false;
            break;
          }
        }
    if (!exact || accepted != long(g.order) * g.order) {
      ok = false;
      detail << name << " accepted " << accepted << " triples; ";
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 10.0) ok = false;
  detail << "10 abelian groups, acceptance exactly at x = ab, " << std::fixed << secs << " s";
  report(1, ok, "abelian exactness: " + detail.str());
}

// Shared scan results for criteria 2 and 9.
struct ScanResult {
  std::map<std::pair<int, int>, std::vector<int>> candidates;
};

// ---------------------------------------------------------------------------
// 2. Product equivalence on S3, D4, Q8: candidates are exactly {ab, ba}
//    and every other x is refuted by a serializable certificate of depth
//    <= -1e-6, within 5 minutes.
void criterion2(std::map<std::string, ScanResult>& scans) {
  const auto t0 = std::chrono::steady_clock::now();
  const RunConfig cfg = base_config();
  bool ok = true;
  std::ostringstream detail;
  long refuted = 0, held = 0;

  for (const std::string& name : {std::string("s3"), std::string("d4"), std::string("q8")}) {
    const FiniteGroup g = make_builtin(name);
    ScanResult& scan = scans[name];
    for (int a = 0; a < g.order && ok; ++a) {
      for (int b = 0; b < g.order && ok; ++b) {
        std::set<int> expected = {g.mul(a, b), g.mul(b, a)};
        std::vector<int> cands;
        for (int x = 0; x < g.order; ++x) {
          const UniversalResult res = universal_positivity(g, a, b, x, cfg);
          if (res.holds) {
            cands.push_back(x);
            ++held;
          } else {
            ++refuted;
            if (!res.certificate || res.certificate->value > -1e-6) {
              ok = false;
              detail << name << " (" << a << "," << b << "," << x << ") lacks a deep certificate; ";
              break;
            }
            const Certificate back = certificate_from_json(certificate_to_json(*res.certificate));
            if (std::abs(certificate_value(back) - back.value) > 1e-10) {
              ok = false;
              detail << name << " certificate does not re-validate; ";
              break;
            }
          }
        }
        if (ok && std::set<int>(cands.begin(), cands.end()) != expected) {
          ok = false;
          detail << name << " pair (" << a << "," << b << ") candidates are not {ab, ba}; ";
        }
        scan.candidates[{a, b}] = cands;
      }
    }
  }
  const double secs = seconds_since(t0);
  if (secs >= 300.0) ok = false;
  detail << held << " held / " << refuted << " refuted triples, " << std::fixed << secs << " s";
  report(2, ok, "product equivalence: " + detail.str());
}

// ---------------------------------------------------------------------------
// 3. 3x3-trick oracle: block PSD iff x = ab over all triples of S3 and Z6,
//    and M/3 is a projection at x = ab.
void criterion3() {
  bool ok = true;
  std::ostringstream detail;
  double worst_proj = 0.0;

  for (const std::string& name : {std::string("s3"), std::string("z6")}) {
    const FiniteGroup g = make_builtin(name);
    const PermutationRep rep = cayley_natural(g);
    const double tol = 1e-9 * 3 * g.order;
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        for (int x = 0; x < g.order; ++x) {
          if (block_oracle(rep, a, b, x, tol) != (x == g.mul(a, b))) {
            ok = false;
            detail << name << " (" << a << "," << b << "," << x << ") oracle mismatch; ";
          }
        }
        worst_proj = std::max(worst_proj, projection_check(rep, a, b));
      }
    }
  }
  if (worst_proj > 1e-8) ok = false;
  detail << "432 triples, worst projection residual " << worst_proj;
  report(3, ok, "3x3-trick oracle: " + detail.str());
}

// ---------------------------------------------------------------------------
// 4. Counterexample reproduction: S3 with a = (12), b = (13). Both x = ab and
//    x = ba pass the state-space test, yet the block matrix for x = ba is not
//    PSD.
void criterion4() {
  const RunConfig cfg = base_config();
  const FiniteGroup s3 = symmetric_group(3);
  const PermutationRep rep = cayley_natural(s3);
  const int a = 2, b = 5;  // (12), (13)
  const int ab = s3.mul(a, b), ba = s3.mul(b, a);

  const bool holds_ab = universal_positivity(s3, a, b, ab, cfg).holds;
  const bool holds_ba = universal_positivity(s3, a, b, ba, cfg).holds;
  const double ba_eig = block_q_min_eig(rep, a, b, ba);
  const bool ok = holds_ab && holds_ba && ba_eig <= -1e-6 && ab != ba;

  std::ostringstream detail;
  detail << "states accept both x = ab and x = ba, block min eigenvalue at ba = " << ba_eig;
  report(4, ok, "counterexample reproduction: " + detail.str());
}

// ---------------------------------------------------------------------------
// 5. Inequality suite on S3, D4, Q8 with >= 1000 samples per family.
void criterion5() {
  bool ok = true;
  std::ostringstream detail;
  RunConfig cfg = base_config();
  cfg.samples = 1000;

  for (const std::string& name : {std::string("s3"), std::string("d4"), std::string("q8")}) {
    const GapSummary s = sample_inequality_gaps(make_builtin(name), cfg);
    if (s.samples_per_family < 1000 || s.overall_min() < -1e-9) ok = false;
    detail << name << " min " << s.overall_min() << " over " << s.samples_per_family
           << " samples; ";
  }
  report(5, ok, "inequality suite: " + detail.str());
}

// ---------------------------------------------------------------------------
// 6. Derivative consistency: analytic f''(0) vs central differences over 100
//    seeded configurations, and f(0) ~ 0 at eigenstates with x in {ab, ba}.
void criterion6() {
  bool ok = true;
  double worst_rel = 0.0, worst_f0 = 0.0;
  const std::vector<std::string> names = {"s3", "d4", "q8", "z6"};

  for (int c = 0; c < 100; ++c) {
    std::mt19937_64 rng(mix_seed(606, static_cast<std::uint64_t>(c)));
    const FiniteGroup g = make_builtin(names[c % names.size()]);
    const PermutationRep rep = cayley_natural(g);
    std::uniform_int_distribution<int> pick(0, g.order - 1);
    const int a = pick(rng), b = pick(rng);
    const int x = (c % 2 == 0) ? g.mul(a, b) : g.mul(b, a);

    const auto pairs = all_eigenpairs_of_a(rep, a);
    const EigenPair& eig = pairs[pick(rng) % pairs.size()];
    std::normal_distribution<double> gauss(0.0, 1.0);
    CVector eta(g.order);
    for (auto& z : eta) z = cplx{gauss(rng), gauss(rng)};
    const cplx overlap = inner(eta, eig.vector);
    for (size_t i = 0; i < eta.size(); ++i) eta[i] -= overlap * eig.vector[i];
    eta = normalized(std::move(eta));

    const PathConfig pc = make_path_config(rep, a, b, x, eig, eta);
    const double analytic = f_second_derivative(pc);
    const double h = 1e-4;
    const double fd =
        (f_along_path(pc, h) - 2.0 * f_along_path(pc, 0.0) + f_along_path(pc, -h)) / (h * h);
    const double rel =
        std::abs(analytic - fd) / std::max({std::abs(analytic), std::abs(fd), 1.0});
    worst_rel = std::max(worst_rel, rel);
    worst_f0 = std::max(worst_f0, std::abs(f_along_path(pc, 0.0)));
  }
  if (worst_rel > 1e-4 || worst_f0 > 1e-10) ok = false;

  std::ostringstream detail;
  detail << "100 configs, worst relative error " << worst_rel << ", worst |f(0)| " << worst_f0;
  report(6, ok, "derivative consistency: " + detail.str());
}

// ---------------------------------------------------------------------------
// 7. Morphism properties I-III and Schur closure on Z6 and S3.
void criterion7() {
  bool ok = true;
  std::ostringstream detail;

  for (const std::string& name : {std::string("z6"), std::string("s3")}) {
    const FiniteGroup g = make_builtin(name);
    std::vector<int> all(g.order);
    for (int i = 0; i < g.order; ++i) all[i] = i;
    const NMorphism phi = mult_table_morphism(g, all);

    const PermutationRep rep = cayley_natural(g);
    std::vector<State> samples;
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (int s = 0; s < 201; ++s) {  // 200 consecutive ordered pairs
      std::mt19937_64 rng(mix_seed(707, static_cast<std::uint64_t>(s) * 131 + g.order));
      CVector w(g.order);
      for (auto& z : w) z = cplx{gauss(rng), gauss(rng)};
      samples.push_back(vector_state(rep, normalized(std::move(w))));
    }
    const MorphismReport r = verify_morphism(phi, samples, {0.25, 0.5, 0.75});
    if (r.max_affine_violation > 1e-14 || r.max_mult_violation > 1e-14 ||
        r.min_order_eig < -1e-9 || r.min_schur_eig < -1e-10 || !r.nonvanishing_witnessed ||
        r.pairs_tested != 200)
      ok = false;
    detail << name << " affine " << r.max_affine_violation << ", mult " << r.max_mult_violation
           << ", order eig " << r.min_order_eig << ", schur eig " << r.min_schur_eig << " ("
           << r.pairs_tested << " pairs); ";
  }
  report(7, ok, "morphism properties: " + detail.str());
}

// ---------------------------------------------------------------------------
// 8. Dual-group reconstruction and the opaque abelian oracle.
void criterion8() {
  bool ok = true;
  std::ostringstream detail;

  for (const std::string& name :
       {std::string("z6"), std::string("s3"), std::string("d4"), std::string("q8")}) {
    const FiniteGroup g = make_builtin(name);
    try {
      const DualGroupResult res = dual_group(g, 2024);
      if (res.dual.order != g.order || res.isomorphism.empty()) {
        ok = false;
        detail << name << " dual not isomorphic; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail << name << " dual_group threw (" << e.what() << "); ";
    }
  }

  for (const std::string& name : {std::string("z6"), std::string("z2xz4")}) {
    const FiniteGroup g = make_builtin(name);
    try {
      const FiniteGroup rec = reconstruct_abelian(make_hidden_oracle(g, 515151));
      if (!find_isomorphism(rec, g).has_value()) {
        ok = false;
        detail << name << " oracle reconstruction not isomorphic; ";
      }
    } catch (const std::exception& e) {
      ok = false;
      detail << name << " reconstruct_abelian threw (" << e.what() << "); ";
    }
  }
  detail << "dual groups for z6/s3/d4/q8, hidden z6 and z2xz4 recovered";
  report(8, ok, "dual-group reconstruction: " + detail.str());
}

// ---------------------------------------------------------------------------
// 9. Structural scans: x = a^s b a^t with matching block counts on every
//    oracle-passing triple (b outside <a>), and the semidirect scan reports
//    exactly {1, m}.
void criterion9(const std::map<std::string, ScanResult>& scans) {
  const RunConfig cfg = base_config();
  bool ok = true;
  std::ostringstream detail;
  long scanned = 0;

  for (const std::string& name : {std::string("s3"), std::string("q8")}) {
    const FiniteGroup g = make_builtin(name);
    const auto it = scans.find(name);
    for (int a = 0; a < g.order; ++a) {
      for (int b = 0; b < g.order; ++b) {
        if (cyclic_subgroup(g, a).contains(b)) continue;
        // Oracle-passing x for this pair: from the criterion-2 scan when
        // available, else {ab, ba}.
        std::vector<int> xs = {g.mul(a, b), g.mul(b, a)};
        if (it != scans.end()) {
          const auto found = it->second.candidates.find({a, b});
          if (found != it->second.candidates.end()) xs = found->second;
        }
        for (int x : xs) {
          try {
            const XWordResult r = xword_scan(g, a, b, x);
            ++scanned;
            if (!r.counts_match ||
                g.mul(g.mul(g.power(a, r.s), b), g.power(a, r.t)) != x) {
              ok = false;
              detail << name << " (" << a << "," << b << "," << x << ") scan mismatch; ";
            }
          } catch (const std::exception& e) {
            ok = false;
            detail << name << " (" << a << "," << b << "," << x << ") threw (" << e.what()
                   << "); ";
          }
        }
      }
    }
  }

  const SemidirectReport q8rep = semidirect_case_check(quaternion_group(), 2, 4, cfg);
  if (!q8rep.applicable || !q8rep.survivors_are_one_and_m || !q8rep.all_one_mod_gcd) {
    ok = false;
    detail << "q8 semidirect scan failed; ";
  }
  const SemidirectReport d4rep = semidirect_case_check(dihedral_group(4), 1, 4, cfg);
  if (!d4rep.applicable || !d4rep.survivors_are_one_and_m || !d4rep.all_one_mod_gcd) {
    ok = false;
    detail << "d4 semidirect scan failed; ";
  }

  detail << scanned << " word scans, q8 survivors {1," << q8rep.m << "}, d4 survivors {1,"
         << d4rep.m << "}";
  report(9, ok, "structural scans: " + detail.str());
}

}  // namespace

int main() {
  std::map<std::string, ScanResult> scans;
  criterion1();
  criterion2(scans);
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9(scans);
  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria failed\n", g_failures);
  return 1;
}
