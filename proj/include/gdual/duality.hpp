#pragma once

#include <string>

#include "gdual/config.hpp"
#include "gdual/positivity.hpp"
#include "gdual/state.hpp"

namespace gdual {

// Multiplication-table morphism: states map to PSD matrices via
// p -> [p(g_j^{-1} g_k)] over a chosen element list.
struct NMorphism {
  FiniteGroup group;
  std::vector<int> elements;
  std::vector<std::vector<int>> grid;  // grid[j][k] = g_j^{-1} g_k

  int size() const { return static_cast<int>(elements.size()); }
};

NMorphism mult_table_morphism(const FiniteGroup& g, std::vector<int> elements);

CMatrix evaluate_morphism(const NMorphism& phi, const State& p);

struct MorphismReport {
  double max_affine_violation = 0.0;   // exact identity, expect ~1e-16
  double max_mult_violation = 0.0;     // exact identity, expect ~1e-16
  double min_order_eig = 1e300;        // min eig of phi(p) - phi(q) over pairs p >= q
  double min_schur_eig = 1e300;        // min eig of phi(p) o phi(q)
  bool nonvanishing_witnessed = false;  // every entry map hits a nonzero value
  int pairs_tested = 0;
};

// Checks affinity and multiplicativity as exact identities on the samples,
// order preservation on generated ordered pairs, Schur-product closure, and
// entrywise nonvanishing.
MorphismReport verify_morphism(const NMorphism& phi, const std::vector<State>& samples,
                               const std::vector<double>& lambdas);

// Entry of a morphism seen as a function on states, identified by the values
// it takes on a fixed separating family.
struct DualElement {
  int j = 0, k = 0;
  CVector fingerprint;
};

// Characters when abelian; otherwise delta_e plus seeded random vector states
// over the Cayley representation.
std::vector<State> fingerprint_family(const FiniteGroup& g, std::uint64_t seed);

// All n^2 entries of a morphism fingerprinted and deduplicated into classes.
struct DualTable {
  NMorphism phi;
  std::vector<State> family;
  std::vector<std::vector<int>> class_of;  // class id per grid position
  std::vector<DualElement> reps;           // one representative per class
  double min_separation = 0.0;             // between distinct classes
  double join_tol = 1e-6;

  DualElement at(int j, int k) const;
};

DualTable build_dual_table(const NMorphism& phi, const std::vector<State>& family);

// f at (j0,k0) times h: re-site h to a position (k0, s) with h's fingerprint,
// result sits at (j0, s). Throws NoComposablePosition when no such s exists.
DualElement dual_product(const DualTable& table, const DualElement& f, const DualElement& h);

struct DualGroupResult {
  FiniteGroup dual;
  std::vector<int> isomorphism;  // dual -> g, from find_isomorphism
  double min_separation = 0.0;
};

// Assembles the dual group from the full |G|-morphism: fingerprint classes
// as elements, dual_product as the table, then validates the axioms and
// exhibits an isomorphism with g.
DualGroupResult dual_group(const FiniteGroup& g, std::uint64_t seed);

// Opaque access to the states of a hidden abelian group: labels 0..order-1
// and the value every spanning-family state takes on each label. The hidden
// multiplication table never crosses this boundary.
struct AbelianStateOracle {
  int order = 0;
  std::vector<CVector> states;  // states[s][label]
};

// Character family of `hidden` under a seeded relabeling; `relabel_out`, when
// non-null, receives label -> hidden-element for test verification.
AbelianStateOracle make_hidden_oracle(const FiniteGroup& hidden, std::uint64_t seed,
                                      std::vector<int>* relabel_out = nullptr);

// Recovers the multiplication table from state values alone: for each pair
// the unique x whose Q-matrix stays PSD across the family. Throws
// NoUniqueProduct when a pair has zero or several candidates.
FiniteGroup reconstruct_abelian(const AbelianStateOracle& oracle, double tol = 1e-9);

// candidate_products for every pair; entries are sorted element sets.
std::vector<std::vector<std::vector<int>>> reconstruct_blurred(const FiniteGroup& g,
                                                               const RunConfig& cfg);

struct XWordResult {
  int s = 0, t = 0;  // x = a^s b a^t
  int count_b12 = 0, count_x12 = 0, count_b21 = 0, count_x21 = 0;
  bool counts_match = false;
};

// Builds the coset enumeration for (a, b), compares the (1,2)/(2,1) block
// nonzero counts of pi(b) and pi(x), and locates x = a^s b a^t in HbH.
// Requires b outside <a>; throws NotInDoubleCoset if no exponents work.
XWordResult xword_scan(const FiniteGroup& g, int a, int b, int x);

struct SemidirectReport {
  bool applicable = false;
  std::string skip_reason;
  int m = 0;                 // ab = b a^m
  int gcd = 0;               // gcd(m - 1, n_a)
  cplx lambda{};             // e^{2 pi i / gcd}
  double phi = 0.0;          // phase making <b xi, xi> nonzero
  cplx b_inner{};            // <b xi, xi>
  std::vector<int> surviving_l;  // l with universal_positivity(x = b a^l)
  bool all_one_mod_gcd = false;
  bool survivors_are_one_and_m = false;
};

// For pairs with ab = b a^m and b in H b^{-1} H: scans x = b a^l for all l,
// reporting which survive the oracle (expected: l = 1 and l = m) and whether
// every survivor satisfies l = 1 mod gcd(m-1, n_a).
SemidirectReport semidirect_case_check(const FiniteGroup& g, int a, int b, const RunConfig& cfg);

}  // namespace gdual
