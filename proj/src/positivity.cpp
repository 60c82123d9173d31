#include "gdual/positivity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "gdual/error.hpp"
#include "json.hpp"

namespace gdual {

CMatrix qmatrix_values(cplx pa, cplx pb, cplx px) {
  CMatrix m(3, 3);
  m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
  m(0, 1) = pa;
  m(1, 0) = std::conj(pa);
  m(1, 2) = pb;
  m(2, 1) = std::conj(pb);
  m(0, 2) = px;
  m(2, 0) = std::conj(px);
  return m;
}

QMatrix qmatrix(const State& p, int a, int b, int x) {
  return QMatrix{qmatrix_values(p(a), p(b), p(x)), a, b, x};
}

double det_q_values(cplx pa, cplx pb, cplx px) {
  return 1.0 + 2.0 * (pa * pb * std::conj(px)).real() - std::norm(px) - std::norm(pb) -
         std::norm(pa);
}

double det_q(const State& p, int a, int b, int x) { return det_q_values(p(a), p(b), p(x)); }

double fundamental_gap(const State& p, int a, int b, int x) {
  const cplx pa = p(a), pb = p(b), px = p(x);
  return (1.0 - std::norm(pa)) * (1.0 - std::norm(pb)) - std::norm(px - pa * pb);
}

CMatrix block_q(const PermutationRep& rep, int a, int b, int x) {
  const int n = rep.dim();
  CMatrix m(3 * n, 3 * n);
  for (int i = 0; i < 3 * n; ++i) m(i, i) = 1.0;
  auto place = [&](int bi, int bj, int g) {
    for (int pos = 0; pos < n; ++pos) {
      m(bi * n + pos, bj * n + rep.sigma[g][pos]) = 1.0;
      m(bj * n + rep.sigma[g][pos], bi * n + pos) = 1.0;
    }
  };
  place(0, 1, a);
  place(1, 2, b);
  place(0, 2, x);
  return m;
}

double block_q_min_eig(const PermutationRep& rep, int a, int b, int x) {
  return min_hermitian_eigenvalue(block_q(rep, a, b, x));
}

bool block_oracle(const PermutationRep& rep, int a, int b, int x, double tol) {
  return block_q_min_eig(rep, a, b, x) >= -tol;
}

double projection_check(const PermutationRep& rep, int a, int b) {
  const CMatrix m = block_q(rep, a, b, rep.group.mul(a, b));
  CMatrix scaled = m;
  scaled *= 3.0;
  return (m * m - scaled).frobenius_norm();
}

namespace {

nlohmann::json cvec_to_json(const CVector& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& z : v) arr.push_back({z.real(), z.imag()});
  return arr;
}

CVector cvec_from_json(const nlohmann::json& arr) {
  CVector v;
  for (const auto& e : arr) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
  return v;
}

}  // namespace

double certificate_value(const Certificate& cert) {
  const int n = static_cast<int>(cert.state.size());
  if (cert.a < 0 || cert.a >= n || cert.b < 0 || cert.b >= n || cert.x < 0 || cert.x >= n)
    fail(Errc::IndexOutOfRange, "certificate triple out of range");
  const CMatrix q = qmatrix_values(cert.state[cert.a], cert.state[cert.b], cert.state[cert.x]);
  cplx s{};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) s += std::conj(cert.witness[r]) * q(r, c) * cert.witness[c];
  return s.real();
}

std::string certificate_to_json(const Certificate& cert) {
  nlohmann::json j;
  j["group_hash"] = cert.group_hash;
  j["a"] = cert.a;
  j["b"] = cert.b;
  j["x"] = cert.x;
  j["state"] = cvec_to_json(cert.state);
  j["vector"] = cvec_to_json(cert.vector);
  j["witness"] = cvec_to_json(CVector(cert.witness.begin(), cert.witness.end()));
  j["value"] = cert.value;
  return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("certificate JSON: ") + e.what());
  }
  try {
    Certificate cert;
    cert.group_hash = j.at("group_hash").get<std::string>();
    cert.a = j.at("a").get<int>();
    cert.b = j.at("b").get<int>();
    cert.x = j.at("x").get<int>();
    cert.state = cvec_from_json(j.at("state"));
    if (j.contains("vector")) cert.vector = cvec_from_json(j.at("vector"));
    const CVector w = cvec_from_json(j.at("witness"));
    if (w.size() != 3) fail(Errc::ParseError, "witness must have 3 entries");
    std::copy(w.begin(), w.end(), cert.witness.begin());
    cert.value = j.at("value").get<double>();
    return cert;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::ParseError, std::string("certificate fields: ") + e.what());
  }
}

namespace {

// Quadratic form machinery for the simple-tensor search. For a unit w the
// 3x3 compression of block_q equals Q_{p_w}; for a unit v the n x n
// compression is I + 2 Herm(conj(v0)v1 pi(a) + conj(v1)v2 pi(b) +
// conj(v0)v2 pi(x)).
struct TensorSearch {
  const PermutationRep& rep;
  int a, b, x;

  CMatrix q_of_w(const CVector& w) const {
    return qmatrix_values(rep.vector_state_value(a, w), rep.vector_state_value(b, w),
                          rep.vector_state_value(x, w));
  }

  CMatrix p_of_v(const std::array<cplx, 3>& v) const {
    const int n = rep.dim();
    CMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    auto add = [&](int g, cplx coeff) {
      for (int pos = 0; pos < n; ++pos) {
        m(pos, rep.sigma[g][pos]) += coeff;
        m(rep.sigma[g][pos], pos) += std::conj(coeff);
      }
    };
    add(a, std::conj(v[0]) * v[1]);
    add(b, std::conj(v[1]) * v[2]);
    add(x, std::conj(v[0]) * v[2]);
    return m;
  }

  // Given w, the best v is the bottom eigenvector of Q_{p_w}.
  double best_v(const CVector& w, std::array<cplx, 3>& v) const {
    const EigenSystem es = hermitian_eigen(q_of_w(w));
    for (int i = 0; i < 3; ++i) v[i] = es.vectors(i, 0);
    return es.values[0];
  }

  double best_w(const std::array<cplx, 3>& v, CVector& w) const {
    const EigenSystem es = hermitian_eigen(p_of_v(v));
    w = es.column(0);
    return es.values[0];
  }

  // Alternating minimization from a starting w; returns the final value.
  double refine(CVector& w, std::array<cplx, 3>& v, int max_iters) const {
    double value = best_v(w, v);
    for (int it = 0; it < max_iters; ++it) {
      const double v1 = best_w(v, w);
      const double v2 = best_v(w, v);
      const double next = std::min(v1, v2);
      if (value - next < 1e-12) return next;
      value = next;
    }
    return value;
  }
};

CVector random_unit_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  CVector w(n);
  for (auto& z : w) z = cplx{gauss(rng), gauss(rng)};
  return normalized(std::move(w));
}

Certificate make_certificate(const FiniteGroup& g, const PermutationRep& rep, int a, int b, int x,
                             const CVector& w, const std::array<cplx, 3>& v) {
  Certificate cert;
  cert.group_hash = group_hash(g);
  cert.a = a;
  cert.b = b;
  cert.x = x;
  cert.vector = w;
  cert.state.resize(g.order);
  for (int e = 0; e < g.order; ++e) cert.state[e] = rep.vector_state_value(e, w);
  cert.witness = v;
  cert.value = certificate_value(cert);
  return cert;
}

UniversalResult universal_abelian(const FiniteGroup& g, int a, int b, int x,
                                  const RunConfig& cfg) {
  UniversalResult res;
  res.holds = true;
  res.best_value = 1e300;
  const std::vector<Character> chars = characters(g);
  const PermutationRep rep = cayley_natural(g);

  for (size_t ci = 0; ci < chars.size(); ++ci) {
    const CVector& chi = chars[ci].values;
    const CMatrix q = qmatrix_values(chi[a], chi[b], chi[x]);
    const EigenSystem es = hermitian_eigen(q);
    if (es.values[0] < res.best_value) {
      res.best_value = es.values[0];
      if (es.values[0] < -cfg.tol) {
        res.holds = false;
        // chi as a vector state over the regular representation:
        // w(g) = chi(g)/sqrt(n).
        CVector w(g.order);
        for (int e = 0; e < g.order; ++e) w[e] = chi[e] / std::sqrt(double(g.order));
        std::array<cplx, 3> v;
        for (int i = 0; i < 3; ++i) v[i] = es.vectors(i, 0);
        res.certificate = make_certificate(g, rep, a, b, x, w, v);
      }
    }
  }
  if (res.holds) res.certificate.reset();
  return res;
}

// Zero-extensions of <a>-characters and eigenvectors of pi(a), where the
// violating states tend to live.
std::vector<CVector> warm_starts(const FiniteGroup& g, const PermutationRep& rep, int a) {
  std::vector<CVector> starts;
  const Subgroup h = cyclic_subgroup(g, a);
  const int na = static_cast<int>(h.members.size());
  for (int m = 0; m < na; ++m) {
    const CVector chi = cyclic_character_values(na, m);
    CVector w(g.order, cplx{});
    for (int i = 0; i < na; ++i) w[rep.position[h.members[i]]] = chi[i] / std::sqrt(double(na));
    starts.push_back(std::move(w));
  }
  for (const EigenPair& p : all_eigenpairs_of_a(rep, a)) starts.push_back(p.vector);
  return starts;
}

}  // namespace

UniversalResult universal_positivity(const FiniteGroup& g, int a, int b, int x,
                                     const RunConfig& cfg) {
  if (a < 0 || a >= g.order || b < 0 || b >= g.order || x < 0 || x >= g.order)
    fail(Errc::IndexOutOfRange, "triple out of range");
  if (g.is_abelian()) return universal_abelian(g, a, b, x, cfg);
  return universal_positivity_search(g, a, b, x, cfg);
}

UniversalResult universal_positivity_search(const FiniteGroup& g, int a, int b, int x,
                                            const RunConfig& cfg) {
  if (a < 0 || a >= g.order || b < 0 || b >= g.order || x < 0 || x >= g.order)
    fail(Errc::IndexOutOfRange, "triple out of range");
  const PermutationRep rep = cayley_natural(g);
  const TensorSearch search{rep, a, b, x};

  UniversalResult res;
  res.best_value = 1e300;
  CVector best_w;
  std::array<cplx, 3> best_v{};

  auto consider = [&](CVector w) {
    std::array<cplx, 3> v;
    const double value = search.refine(w, v, cfg.max_iters);
    if (value < res.best_value) {
      res.best_value = value;
      best_w = w;
      best_v = v;
    }
    return value;
  };

  bool done = false;
  for (const CVector& w : warm_starts(g, rep, a)) {
    if (consider(w) < -cfg.certificate_eps) {
      done = true;
      break;
    }
  }
  if (!done) {
    const std::uint64_t triple_key =
        (static_cast<std::uint64_t>(a) * g.order + b) * g.order + x;
    for (int r = 0; r < cfg.restarts; ++r) {
      std::mt19937_64 rng(mix_seed(cfg.seed, triple_key * 1024 + r));
      if (consider(random_unit_vector(g.order, rng)) < -cfg.certificate_eps) break;
    }
  }

  res.holds = res.best_value >= -cfg.certificate_eps;
  if (!res.holds) res.certificate = make_certificate(g, rep, a, b, x, best_w, best_v);
  return res;
}

std::vector<int> candidate_products(const FiniteGroup& g, int a, int b, const RunConfig& cfg) {
  std::vector<int> out;
  for (int x = 0; x < g.order; ++x)
    if (universal_positivity(g, a, b, x, cfg).holds) out.push_back(x);
  return out;
}

}  // namespace gdual
