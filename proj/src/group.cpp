#include "gdual/group.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "gdual/error.hpp"

namespace gdual {

int FiniteGroup::power(int g, int e) const {
  int base = g;
  if (e < 0) {
    base = inv(g);
    e = -e;
  }
  int acc = identity;
  for (int i = 0; i < e; ++i) acc = mul(acc, base);
  return acc;
}

bool FiniteGroup::is_abelian() const {
  for (int j = 0; j < order; ++j)
    for (int k = j + 1; k < order; ++k)
      if (table[j][k] != table[k][j]) return false;
  return true;
}

FiniteGroup from_table(const std::vector<std::vector<int>>& raw) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) fail(Errc::UnsupportedSize, "empty table");
  if (n > kMaxGroupOrder)
    fail(Errc::UnsupportedSize, "order " + std::to_string(n) + " exceeds cap " +
                                    std::to_string(kMaxGroupOrder));
  for (int j = 0; j < n; ++j) {
    if (static_cast<int>(raw[j].size()) != n)
      fail(Errc::NotLatinSquare, "row " + std::to_string(j) + " is not length " + std::to_string(n));
    for (int k = 0; k < n; ++k)
      if (raw[j][k] < 0 || raw[j][k] >= n)
        fail(Errc::NotLatinSquare, "entry (" + std::to_string(j) + "," + std::to_string(k) +
                                       ") out of range");
  }

  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(n, false);
    for (int k = 0; k < n; ++k) {
      if (seen[raw[j][k]])
        fail(Errc::NotLatinSquare, "row " + std::to_string(j) + " repeats element " +
                                       std::to_string(raw[j][k]));
      seen[raw[j][k]] = true;
    }
  }
  for (int k = 0; k < n; ++k) {
    std::vector<bool> seen(n, false);
    for (int j = 0; j < n; ++j) {
      if (seen[raw[j][k]])
        fail(Errc::NotLatinSquare, "column " + std::to_string(k) + " repeats element " +
                                       std::to_string(raw[j][k]));
      seen[raw[j][k]] = true;
    }
  }

  int identity = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int k = 0; k < n && ok; ++k) ok = raw[e][k] == k && raw[k][e] == k;
    if (ok) {
      identity = e;
      break;
    }
  }
  if (identity < 0) fail(Errc::NoIdentity, "no two-sided identity element");

  std::vector<int> inverses(n, -1);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      if (raw[j][k] == identity && raw[k][j] == identity) {
        inverses[j] = k;
        break;
      }
    }
    if (inverses[j] < 0) fail(Errc::NoInverse, "element " + std::to_string(j));
  }

  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l)
        if (raw[raw[j][k]][l] != raw[j][raw[k][l]])
          fail(Errc::NotAssociative, "triple (" + std::to_string(j) + "," + std::to_string(k) +
                                         "," + std::to_string(l) + ")");

  FiniteGroup g;
  g.order = n;
  g.table = raw;
  g.identity = identity;
  g.inverses = std::move(inverses);
  return g;
}

FiniteGroup cyclic_group(int n) {
  if (n < 1 || n > kMaxGroupOrder) fail(Errc::UnsupportedSize, "cyclic order " + std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) t[j][k] = (j + k) % n;
  return from_table(t);
}

FiniteGroup dihedral_group(int n) {
  if (n < 1 || 2 * n > kMaxGroupOrder)
    fail(Errc::UnsupportedSize, "dihedral parameter " + std::to_string(n));
  const int order = 2 * n;
  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  // Indices 0..n-1: rotations r^j. Indices n..2n-1: reflections s r^j.
  // Relations: r^n = s^2 = e, r s = s r^{-1}.
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      t[j][k] = (j + k) % n;                    // r^j r^k
      t[j][n + k] = n + ((k - j) % n + n) % n;  // r^j (s r^k) = s r^{k-j}
      t[n + j][k] = n + (j + k) % n;            // (s r^j) r^k
      t[n + j][n + k] = ((k - j) % n + n) % n;  // (s r^j)(s r^k) = r^{k-j}
    }
  }
  return from_table(t);
}

FiniteGroup quaternion_group() {
  // Index = 2*unit + sign, units ordered 1, i, j, k.
  auto index_of = [](int unit, int sign) { return 2 * unit + (sign < 0 ? 1 : 0); };
  static const int umul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int usgn[4][4] = {{+1, +1, +1, +1},
                                 {+1, -1, +1, -1},
                                 {+1, -1, -1, +1},
                                 {+1, +1, -1, -1}};
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int j = 0; j < 8; ++j) {
    for (int k = 0; k < 8; ++k) {
      const int uj = j / 2, sj = j % 2 ? -1 : +1;
      const int uk = k / 2, sk = k % 2 ? -1 : +1;
      t[j][k] = index_of(umul[uj][uk], sj * sk * usgn[uj][uk]);
    }
  }
  return from_table(t);
}

FiniteGroup symmetric_group(int n) {
  if (n < 1 || n > 5) fail(Errc::UnsupportedSize, "symmetric parameter " + std::to_string(n));
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  if (order > kMaxGroupOrder)
    fail(Errc::UnsupportedSize, "symmetric(" + std::to_string(n) + ") has order " +
                                    std::to_string(order) + " above cap " +
                                    std::to_string(kMaxGroupOrder));

  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[perms[i]] = i;

  std::vector<std::vector<int>> t(order, std::vector<int>(order));
  for (int j = 0; j < order; ++j) {
    for (int k = 0; k < order; ++k) {
      std::vector<int> prod(n);
      for (int x = 0; x < n; ++x) prod[x] = perms[j][perms[k][x]];  // apply k first
      t[j][k] = index[prod];
    }
  }
  return from_table(t);
}

FiniteGroup direct_product(const FiniteGroup& g1, const FiniteGroup& g2) {
  const int n = g1.order * g2.order;
  if (n > kMaxGroupOrder)
    fail(Errc::UnsupportedSize, "product order " + std::to_string(n) + " above cap");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  auto id = [&](int x1, int x2) { return x1 * g2.order + x2; };
  for (int j1 = 0; j1 < g1.order; ++j1)
    for (int j2 = 0; j2 < g2.order; ++j2)
      for (int k1 = 0; k1 < g1.order; ++k1)
        for (int k2 = 0; k2 < g2.order; ++k2)
          t[id(j1, j2)][id(k1, k2)] = id(g1.mul(j1, k1), g2.mul(j2, k2));
  return from_table(t);
}

FiniteGroup opposed(const FiniteGroup& g) {
  std::vector<std::vector<int>> t(g.order, std::vector<int>(g.order));
  for (int j = 0; j < g.order; ++j)
    for (int k = 0; k < g.order; ++k) t[j][k] = g.table[k][j];
  return from_table(t);
}

FiniteGroup make_builtin(const std::string& name) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : name) {
    if (c == 'x' || c == 'X') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);

  auto one = [](const std::string& s) -> FiniteGroup {
    if (s.empty()) fail(Errc::UsageError, "empty group name");
    if (s == "q8") return quaternion_group();
    const char kind = s[0];
    int n = 0;
    try {
      n = std::stoi(s.substr(1));
    } catch (const std::exception&) {
      fail(Errc::UsageError, "unrecognized builtin group '" + s + "'");
    }
    switch (kind) {
      case 'z': return cyclic_group(n);
      case 'd': return dihedral_group(n);
      case 's': return symmetric_group(n);
      default: fail(Errc::UsageError, "unrecognized builtin group '" + s + "'");
    }
  };

  FiniteGroup g = one(parts[0]);
  for (size_t i = 1; i < parts.size(); ++i) g = direct_product(g, one(parts[i]));
  return g;
}

int element_order(const FiniteGroup& g, int a) {
  if (a < 0 || a >= g.order) fail(Errc::IndexOutOfRange, "element " + std::to_string(a));
  int k = 1;
  int acc = a;
  while (acc != g.identity) {
    acc = g.mul(acc, a);
    ++k;
  }
  return k;
}

std::vector<int> element_orders(const FiniteGroup& g) {
  std::vector<int> out(g.order);
  for (int j = 0; j < g.order; ++j) out[j] = element_order(g, j);
  return out;
}

bool Subgroup::contains(int g) const {
  return std::find(members.begin(), members.end(), g) != members.end();
}

Subgroup cyclic_subgroup(const FiniteGroup& g, int a) {
  Subgroup h;
  int acc = g.identity;
  do {
    h.members.push_back(acc);
    acc = g.mul(acc, a);
  } while (acc != g.identity);
  return h;
}

CosetDecomposition coset_decomposition(const FiniteGroup& g, int a, int b) {
  CosetDecomposition d;
  d.subgroup = cyclic_subgroup(g, a);
  if (d.subgroup.contains(b))
    fail(Errc::BInCyclicSubgroup, "element " + std::to_string(b) + " lies in <" +
                                      std::to_string(a) + ">");
  std::vector<bool> covered(g.order, false);
  auto cover = [&](int rep) {
    d.transversal.push_back(rep);
    for (int h : d.subgroup.members) covered[g.mul(rep, h)] = true;
  };
  cover(g.identity);
  cover(b);
  for (int x = 0; x < g.order; ++x)
    if (!covered[x]) cover(x);
  return d;
}

std::vector<int> coset_enumeration(const FiniteGroup& g, int a, int b) {
  const CosetDecomposition d = coset_decomposition(g, a, b);
  std::vector<int> out;
  out.reserve(g.order);
  for (int rep : d.transversal)
    for (int h : d.subgroup.members) out.push_back(g.mul(rep, h));
  return out;
}

DoubleCosetInfo double_coset_membership(const FiniteGroup& g, int a, int b) {
  if (b < 0 || b >= g.order) fail(Errc::IndexOutOfRange, "element " + std::to_string(b));
  const Subgroup h = cyclic_subgroup(g, a);
  DoubleCosetInfo info;
  std::vector<bool> in_hbh(g.order, false);
  const int binv = g.inv(b);
  for (int h1 : h.members) {
    for (int h2 : h.members) {
      in_hbh[g.mul(g.mul(h1, b), h2)] = true;
      if (g.mul(g.mul(h1, binv), h2) == b) info.b_in_Hbinv_H = true;
    }
  }
  for (int x = 0; x < g.order; ++x)
    if (in_hbh[x]) info.x_in_HbH.push_back(x);
  return info;
}

namespace {

// Elements listed so each is the identity, a generator, or a product of two
// earlier entries; generator images then force the rest of a candidate map.
struct Derivation {
  std::vector<int> elems;               // order of derivation, starts at identity
  std::vector<std::pair<int, int>> by;  // positions in elems; (-1,-1) for generators
  std::vector<int> generators;          // element indices
};

Derivation derive_order(const FiniteGroup& g) {
  Derivation d;
  std::vector<int> pos(g.order, -1);
  auto push = [&](int e, int i, int j) {
    pos[e] = static_cast<int>(d.elems.size());
    d.elems.push_back(e);
    d.by.emplace_back(i, j);
  };
  push(g.identity, -1, -1);
  while (static_cast<int>(d.elems.size()) < g.order) {
    int gen = -1;
    for (int x = 0; x < g.order; ++x)
      if (pos[x] < 0) {
        gen = x;
        break;
      }
    d.generators.push_back(gen);
    push(gen, -1, -1);
    bool grew = true;
    while (grew) {
      grew = false;
      const int m = static_cast<int>(d.elems.size());
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          const int p = g.mul(d.elems[i], d.elems[j]);
          if (pos[p] < 0) {
            push(p, i, j);
            grew = true;
          }
        }
      }
    }
  }
  return d;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g1, const FiniteGroup& g2) {
  if (g1.order != g2.order) return std::nullopt;
  const int n = g1.order;

  const std::vector<int> ord1 = element_orders(g1);
  const std::vector<int> ord2 = element_orders(g2);
  {
    std::vector<int> p1 = ord1, p2 = ord2;
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 != p2) return std::nullopt;
  }

  const Derivation d = derive_order(g1);
  const int ngen = static_cast<int>(d.generators.size());
  std::vector<std::vector<int>> candidates(ngen);
  for (int i = 0; i < ngen; ++i)
    for (int t = 0; t < n; ++t)
      if (ord2[t] == ord1[d.generators[i]]) candidates[i].push_back(t);

  std::vector<int> choice(ngen, 0);
  std::vector<int> map(n), image(n);

  auto try_assignment = [&]() -> bool {
    std::fill(image.begin(), image.end(), -1);
    std::fill(map.begin(), map.end(), -1);
    std::vector<int> img_at(d.elems.size());
    int gi = 0;
    for (size_t p = 0; p < d.elems.size(); ++p) {
      int target;
      if (d.by[p].first < 0) {
        target = (d.elems[p] == g1.identity) ? g2.identity : candidates[gi][choice[gi]];
        if (d.elems[p] != g1.identity) ++gi;
      } else {
        target = g2.mul(img_at[d.by[p].first], img_at[d.by[p].second]);
      }
      if (image[target] >= 0) return false;  // not injective
      image[target] = d.elems[p];
      img_at[p] = target;
      map[d.elems[p]] = target;
    }
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (map[g1.mul(j, k)] != g2.mul(map[j], map[k])) return false;
    return true;
  };

  // Odometer over generator image choices, ascending for determinism.
  while (true) {
    if (try_assignment()) return map;
    int i = ngen - 1;
    while (i >= 0) {
      if (++choice[i] < static_cast<int>(candidates[i].size())) break;
      choice[i] = 0;
      --i;
    }
    if (i < 0) return std::nullopt;
  }
}

FiniteGroup read_gtab(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++lineno;
      return true;
    }
    return false;
  };

  if (!next_line()) fail(Errc::ParseError, "empty input");
  int n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || (ss >> extra))
      fail(Errc::ParseError, "line 1: expected a single group order");
  }
  if (n <= 0) fail(Errc::ParseError, "line 1: non-positive order");
  if (n > kMaxGroupOrder)
    fail(Errc::ParseError, "line 1: order " + std::to_string(n) + " exceeds cap " +
                               std::to_string(kMaxGroupOrder));

  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int j = 0; j < n; ++j) {
    if (!next_line()) fail(Errc::ParseError, "line " + std::to_string(lineno + 1) + ": missing row");
    std::istringstream ss(line);
    for (int k = 0; k < n; ++k)
      if (!(ss >> t[j][k]))
        fail(Errc::ParseError, "line " + std::to_string(lineno) + ": row " + std::to_string(j) +
                                   " needs " + std::to_string(n) + " entries");
    std::string extra;
    if (ss >> extra)
      fail(Errc::ParseError, "line " + std::to_string(lineno) + ": trailing data '" + extra + "'");
  }
  while (std::getline(in, line)) {
    ++lineno;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty() || trimmed[0] == '#') continue;
    fail(Errc::ParseError, "line " + std::to_string(lineno) + ": unexpected content '" + trimmed +
                               "' after table");
  }
  return from_table(t);
}

FiniteGroup read_gtab_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  return read_gtab(in);
}

void write_gtab(std::ostream& out, const FiniteGroup& g,
                const std::vector<std::string>& comments) {
  out << g.order << "\n";
  for (int j = 0; j < g.order; ++j) {
    for (int k = 0; k < g.order; ++k) {
      if (k) out << ' ';
      out << g.table[j][k];
    }
    out << "\n";
  }
  for (const auto& c : comments) out << "# " << c << "\n";
}

std::string group_hash(const FiniteGroup& g) {
  std::uint64_t h = 1469598103934665603ull;
  auto eat = [&](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xff;
      h *= 1099511628211ull;
    }
  };
  eat(static_cast<std::uint64_t>(g.order));
  for (const auto& row : g.table)
    for (int v : row) eat(static_cast<std::uint64_t>(v));
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace gdual
