#include "gdual/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gdual/error.hpp"

namespace gdual {

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix m(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) fail(Errc::DimensionMismatch, "matrix product shape");
  CMatrix m(rows_, rhs.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const cplx v = (*this)(r, k);
      if (v == cplx{}) continue;
      for (int c = 0; c < rhs.cols_; ++c) m(r, c) += v * rhs(k, c);
    }
  }
  return m;
}

CMatrix CMatrix::operator+(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::DimensionMismatch, "matrix sum shape");
  CMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] += rhs.a_[i];
  return m;
}

CMatrix CMatrix::operator-(const CMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) fail(Errc::DimensionMismatch, "matrix diff shape");
  CMatrix m = *this;
  for (size_t i = 0; i < a_.size(); ++i) m.a_[i] -= rhs.a_[i];
  return m;
}

CMatrix& CMatrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double s = 0.0;
  for (const auto& v : a_) s = std::max(s, std::abs(v));
  return s;
}

bool CMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r; c < cols_; ++c)
      if (std::abs((*this)(r, c) - std::conj((*this)(c, r))) > tol) return false;
  return true;
}

cplx inner(const CVector& x, const CVector& y) {
  if (x.size() != y.size()) fail(Errc::DimensionMismatch, "inner product length");
  cplx s{};
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm(const CVector& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

CVector normalized(CVector x) {
  const double n = norm(x);
  if (n == 0.0) fail(Errc::NotUnitVector, "cannot normalize zero vector");
  for (auto& v : x) v /= n;
  return x;
}

CVector mat_vec(const CMatrix& m, const CVector& v) {
  if (m.cols() != static_cast<int>(v.size())) fail(Errc::DimensionMismatch, "mat_vec length");
  CVector out(m.rows());
  for (int r = 0; r < m.rows(); ++r) {
    cplx s{};
    for (int c = 0; c < m.cols(); ++c) s += m(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

CVector EigenSystem::column(int i) const {
  CVector v(vectors.rows());
  for (int r = 0; r < vectors.rows(); ++r) v[r] = vectors(r, i);
  return v;
}

namespace {

double offdiag_norm(const CMatrix& a) {
  double s = 0.0;
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

}  // namespace

EigenSystem hermitian_eigen(CMatrix a, int max_sweeps) {
  const int n = a.rows();
  if (n != a.cols()) fail(Errc::DimensionMismatch, "hermitian_eigen expects square input");
  CMatrix v = CMatrix::identity(n);

  const double scale = std::max(a.frobenius_norm(), 1e-300);
  const double stop = 1e-14 * scale;

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (offdiag_norm(a) <= stop) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;
        // Unitary 2x2 rotation J = [[c, s*phase], [-s*conj(phase), c]]
        // zeroing the (p,q) entry of J^H A J.
        const cplx phase = apq / r;
        const double alpha = a(p, p).real();
        const double beta = a(q, q).real();
        const double theta = (beta - alpha) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {  // A <- A J on columns p, q
          const cplx akp = a(k, p);
          const cplx akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {  // A <- J^H A on rows p, q
          const cplx apk = a(p, k);
          const cplx aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {  // accumulate V <- V J
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a(i, i).real() < a(j, j).real(); });

  EigenSystem out;
  out.values.resize(n);
  out.vectors = CMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    out.values[i] = a(order[i], order[i]).real();
    for (int r = 0; r < n; ++r) out.vectors(r, i) = v(r, order[i]);
  }
  return out;
}

double min_hermitian_eigenvalue(const CMatrix& a) { return hermitian_eigen(a).values.front(); }

CMatrix block(const CMatrix& m, int j, int k, int size) {
  if (size <= 0 || m.rows() % size != 0 || m.cols() % size != 0)
    fail(Errc::IndexOutOfRange, "block size must divide matrix dimensions");
  const int brows = m.rows() / size;
  const int bcols = m.cols() / size;
  if (j < 1 || j > brows || k < 1 || k > bcols)
    fail(Errc::IndexOutOfRange, "block index (" + std::to_string(j) + "," + std::to_string(k) +
                                    ") out of range");
  CMatrix out(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) out(r, c) = m((j - 1) * size + r, (k - 1) * size + c);
  return out;
}

int nonzero_count(const CMatrix& m, double tol) {
  int count = 0;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > tol) ++count;
  return count;
}

}  // namespace gdual
