#pragma once

#include <complex>
#include <vector>

namespace gdual {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// Dense row-major complex matrix. Sizes in this project stay below 3*64=192,
// so everything is kept simple and allocation-friendly rather than tuned.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static CMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  CMatrix adjoint() const;
  CMatrix operator*(const CMatrix& rhs) const;
  CMatrix operator+(const CMatrix& rhs) const;
  CMatrix operator-(const CMatrix& rhs) const;
  CMatrix& operator*=(cplx s);

  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<cplx> a_;
};

// <x, y> = sum_i x_i * conj(y_i); linear in the first argument.
cplx inner(const CVector& x, const CVector& y);
double norm(const CVector& x);
CVector normalized(CVector x);
CVector mat_vec(const CMatrix& m, const CVector& v);

// Eigenvalues ascending; vectors.column(i) pairs with values[i].
struct EigenSystem {
  std::vector<double> values;
  CMatrix vectors;
  CVector column(int i) const;
};

// Cyclic complex Jacobi for Hermitian matrices. Deterministic; adequate for
// the dimensions used here (<= 192).
EigenSystem hermitian_eigen(CMatrix a, int max_sweeps = 60);
double min_hermitian_eigenvalue(const CMatrix& a);

// (j, k) are 1-based block indices; size must divide the matrix dimension.
CMatrix block(const CMatrix& m, int j, int k, int size);
int nonzero_count(const CMatrix& m, double tol = 1e-9);

}  // namespace gdual
