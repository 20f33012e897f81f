#ifndef SCHURCERT_DENSE_MATRIX_HPP
#define SCHURCERT_DENSE_MATRIX_HPP

#include <initializer_list>
#include <vector>

#include "schurcert/errors.hpp"

namespace schurcert {

/// Dense rectangular matrix of reals, row-major storage.
/// Entries must be finite; NaN/Inf are rejected at construction.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(int rows, int cols);  // zero-filled
  DenseMatrix(int rows, int cols, std::vector<double> entries);
  DenseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  static DenseMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double operator()(int r, int c) const { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  double& operator()(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }

  const std::vector<double>& entries() const { return entries_; }

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> entries_;
};

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
DenseMatrix scale(const DenseMatrix& a, double factor);

inline DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) { return multiply(a, b); }
inline DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) { return add(a, b); }
inline DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return subtract(a, b); }

std::vector<double> mat_vec(const DenseMatrix& a, const std::vector<double>& x);
double dot(const std::vector<double>& a, const std::vector<double>& b);

/// Entrywise max norm, the norm used by all tolerance gates.
double max_abs(const DenseMatrix& a);

/// max_abs(M - M^T); 0 for non-square input is not defined (throws NonSquare).
double asymmetry(const DenseMatrix& a);

/// asymmetry(M) / max_abs(M), with 0/0 = 0.
double asymmetry_ratio(const DenseMatrix& a);

/// (M + M^T) / 2.
DenseMatrix symmetrize(const DenseMatrix& a);

/// True if every entry of a-b is within atol.
bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double atol);

}  // namespace schurcert

#endif
