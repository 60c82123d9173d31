#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace gdual {

// Validated finite group given by its multiplication table over element
// indices 0..order-1. Orders above kMaxGroupOrder are rejected; exhaustive
// axiom checks stay cheap at this scale.
inline constexpr int kMaxGroupOrder = 64;

struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;  // table[j][k] = index of g_j * g_k
  int identity = 0;
  std::vector<int> inverses;

  int mul(int j, int k) const { return table[j][k]; }
  int inv(int j) const { return inverses[j]; }
  int power(int g, int e) const;  // any integer exponent
  bool is_abelian() const;
  bool operator==(const FiniteGroup& o) const { return table == o.table; }
};

// Validates Latin square, identity, inverses, associativity; names the first
// offending row/column/triple in the error message.
FiniteGroup from_table(const std::vector<std::vector<int>>& raw);

// Standard groups under documented element naming (see README):
//   cyclic(n):     residues 0..n-1.
//   dihedral(n):   order 2n; 0..n-1 are rotations r^j, n..2n-1 are s*r^j.
//   quaternion8:   {1, -1, i, -i, j, -j, k, -k} in that index order.
//   symmetric(n):  permutations of {0..n-1} in lexicographic one-line order,
//                  product = left composition; n=5 exceeds the order cap.
//   direct product: (x1, x2) -> x1 * |G2| + x2.
//   opposed:       same set, reversed product.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();
FiniteGroup symmetric_group(int n);
FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2);
FiniteGroup opposed(const FiniteGroup& g);

// "z6", "d4", "q8", "s3", or products like "z2xz4".
FiniteGroup make_builtin(const std::string& name);

int element_order(const FiniteGroup& g, int a);
std::vector<int> element_orders(const FiniteGroup& g);

struct Subgroup {
  std::vector<int> members;  // cyclic subgroups are listed in power order
  bool contains(int g) const;
};

Subgroup cyclic_subgroup(const FiniteGroup& g, int a);

struct CosetDecomposition {
  Subgroup subgroup;
  std::vector<int> transversal;  // beta_1 = e; beta_2 = b when built for (a, b)
};

// Left-coset decomposition of G by <a> with b as the second representative;
// remaining representatives are the smallest uncovered indices.
// Throws BInCyclicSubgroup when b lies in <a>.
CosetDecomposition coset_decomposition(const FiniteGroup& g, int a, int b);

// Flattened enumeration e, a, ..., a^{n_a-1}, b, ba, ..., then the remaining
// cosets beta_k * <a> in power order.
std::vector<int> coset_enumeration(const FiniteGroup& g, int a, int b);

struct DoubleCosetInfo {
  std::vector<int> x_in_HbH;  // sorted element indices of H b H, H = <a>
  bool b_in_Hbinv_H = false;
};

DoubleCosetInfo double_coset_membership(const FiniteGroup& g, int a, int b);

// Multiplicative bijection G1 -> G2, if one exists. Search prunes by element
// order profiles and derives non-generator images from partial products.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2);

// .gtab: first line n, then n rows of n indices, then optional '#' comments.
FiniteGroup read_gtab(std::istream& in);
FiniteGroup read_gtab_file(const std::string& path);
void write_gtab(std::ostream& out, const FiniteGroup& g, const std::vector<std::string>& comments);

// FNV-1a over the table; stable identity for reports and certificates.
std::string group_hash(const FiniteGroup& g);

}  // namespace gdual
