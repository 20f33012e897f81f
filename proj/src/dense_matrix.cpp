#include "schurcert/dense_matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace schurcert {

namespace {

void check_finite(const std::vector<double>& entries) {
  for (double v : entries) {
    if (!std::isfinite(v)) {
      throw NonFinite("matrix entry is not finite");
    }
  }
}

std::string shape_str(const DenseMatrix& a) {
  return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

DenseMatrix::DenseMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), entries_(static_cast<size_t>(rows) * cols, 0.0) {
  if (rows < 0 || cols < 0) {
    throw ShapeMismatch("negative matrix dimension");
  }
}

DenseMatrix::DenseMatrix(int rows, int cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) {
    throw ShapeMismatch("negative matrix dimension");
  }
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw ShapeMismatch("entry count " + std::to_string(entries_.size()) +
                        " does not match shape " + shape_str(*this));
  }
  check_finite(entries_);
}

DenseMatrix::DenseMatrix(std::initializer_list<std::initializer_list<double>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  entries_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) {
      throw ShapeMismatch("ragged initializer rows");
    }
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
  check_finite(entries_);
}

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix multiply(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("multiply: " + std::to_string(a.cols()) + " cols vs " +
                        std::to_string(b.rows()) + " rows");
  }
  DenseMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

DenseMatrix add(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("add: shapes differ");
  }
  DenseMatrix c(a.rows(), a.cols());
  for (size_t i = 0; i < a.entries().size(); ++i) {
    c(static_cast<int>(i) / a.cols(), static_cast<int>(i) % a.cols()) =
        a.entries()[i] + b.entries()[i];
  }
  return c;
}

DenseMatrix subtract(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch("subtract: shapes differ");
  }
  DenseMatrix c(a.rows(), a.cols());
  for (size_t i = 0; i < a.entries().size(); ++i) {
    c(static_cast<int>(i) / a.cols(), static_cast<int>(i) % a.cols()) =
        a.entries()[i] - b.entries()[i];
  }
  return c;
}

DenseMatrix transpose(const DenseMatrix& a) {
  DenseMatrix t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      t(j, i) = a(i, j);
    }
  }
  return t;
}

DenseMatrix scale(const DenseMatrix& a, double factor) {
  DenseMatrix c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      c(i, j) = factor * a(i, j);
    }
  }
  return c;
}

std::vector<double> mat_vec(const DenseMatrix& a, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != a.cols()) {
    throw ShapeMismatch("mat_vec: vector length mismatch");
  }
  std::vector<double> y(a.rows(), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) {
    throw ShapeMismatch("dot: vector length mismatch");
  }
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const DenseMatrix& a) {
  double m = 0.0;
  for (double v : a.entries()) m = std::max(m, std::abs(v));
  return m;
}

double asymmetry(const DenseMatrix& a) {
  if (!a.square()) throw NonSquare("asymmetry of non-square matrix");
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = i + 1; j < a.cols(); ++j) {
      m = std::max(m, std::abs(a(i, j) - a(j, i)));
    }
  }
  return m;
}

double asymmetry_ratio(const DenseMatrix& a) {
  const double scale = max_abs(a);
  if (scale == 0.0) return 0.0;
  return asymmetry(a) / scale;
}

DenseMatrix symmetrize(const DenseMatrix& a) {
  if (!a.square()) throw NonSquare("symmetrize of non-square matrix");
  DenseMatrix s(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      s(i, j) = 0.5 * (a(i, j) + a(j, i));
    }
  }
  return s;
}

bool approx_equal(const DenseMatrix& a, const DenseMatrix& b, double atol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (size_t i = 0; i < a.entries().size(); ++i) {
    if (std::abs(a.entries()[i] - b.entries()[i]) > atol) return false;
  }
  return true;
}

}  // namespace schurcert
