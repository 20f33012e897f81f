#include "schurcert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace schurcert {

namespace {

double fro_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (double v : a.entries()) s += v * v;
  return std::sqrt(s);
}

double off_diag_fro(const DenseMatrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) s += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(s);
}

void require_square(const DenseMatrix& m, const char* what) {
  if (!m.square()) {
    throw NonSquare(std::string(what) + ": matrix is " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
}

void require_symmetric(const DenseMatrix& m, const Tolerances& tol, const char* what) {
  const double ratio = asymmetry_ratio(m);
  if (ratio > tol.sym_tol) {
    throw AsymmetricInput(std::string(what) + ": relative asymmetry " +
                          std::to_string(ratio) + " exceeds sym_tol");
  }
}

// One cyclic Jacobi sweep over the strict upper triangle, rotating A in
// place and accumulating the rotations into V.
void jacobi_sweep(DenseMatrix& a, DenseMatrix& v) {
  const int n = a.rows();
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n; ++q) {
      const double apq = a(p, q);
      if (apq == 0.0) continue;
      const double app = a(p, p);
      const double aqq = a(q, q);
      const double theta = 0.5 * (aqq - app) / apq;
      double t;
      if (std::abs(theta) > 1e307) {
        t = 0.5 / theta;  // avoid theta^2 overflow; rotation is tiny anyway
      } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
      }
      const double c = 1.0 / std::sqrt(t * t + 1.0);
      const double s = t * c;
      const double tau = s / (1.0 + c);

      a(p, p) = app - t * apq;
      a(q, q) = aqq + t * apq;
      a(p, q) = 0.0;
      a(q, p) = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k == p || k == q) continue;
        const double akp = a(k, p);
        const double akq = a(k, q);
        a(k, p) = akp - s * (akq + tau * akp);
        a(p, k) = a(k, p);
        a(k, q) = akq + s * (akp - tau * akq);
        a(q, k) = a(k, q);
      }
      for (int k = 0; k < n; ++k) {
        const double vkp = v(k, p);
        const double vkq = v(k, q);
        v(k, p) = vkp - s * (vkq + tau * vkp);
        v(k, q) = vkq + s * (vkp - tau * vkq);
      }
    }
  }
}

SymEig jacobi_eig(DenseMatrix a) {
  const int n = a.rows();
  DenseMatrix v = DenseMatrix::identity(n);
  const double scale = fro_norm(a);
  if (scale > 0.0) {
    for (int sweep = 0;; ++sweep) {
      if (off_diag_fro(a) <= 1e-14 * scale) break;
      if (sweep >= kMaxJacobiSweeps) {
        throw NoConvergence("Jacobi iteration did not converge in " +
                            std::to_string(kMaxJacobiSweeps) + " sweeps");
      }
      jacobi_sweep(a, v);
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  SymEig out;
  out.values.resize(n);
  out.vectors = DenseMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[k] = a(idx[k], idx[k]);
    for (int r = 0; r < n; ++r) out.vectors(r, k) = v(r, idx[k]);
  }
  return out;
}

}  // namespace

SymEig sym_eig(const DenseMatrix& m, const Tolerances& tol) {
  require_square(m, "sym_eig");
  require_symmetric(m, tol, "sym_eig");
  return jacobi_eig(symmetrize(m));
}

double sym_eig_min(const DenseMatrix& m, const Tolerances& tol) {
  return sym_eig(m, tol).values.front();
}

std::vector<double> singular_values(const DenseMatrix& m, const Tolerances& tol) {
  Tolerances loose = tol;
  loose.sym_tol = 1.0;  // M^T M is symmetric by construction
  SymEig e = sym_eig(multiply(transpose(m), m), loose);
  std::vector<double> sv(e.values.size());
  for (size_t k = 0; k < e.values.size(); ++k) {
    sv[sv.size() - 1 - k] = std::sqrt(std::max(0.0, e.values[k]));
  }
  return sv;
}

InvertGate invert_gate(const DenseMatrix& m, const Tolerances& tol) {
  require_square(m, "invert_gate");
  const std::vector<double> sv = singular_values(m, tol);
  InvertGate g;
  if (sv.empty() || sv.front() == 0.0) {
    g.ratio = 0.0;
    g.pass = false;
    return g;
  }
  g.ratio = sv.back() / sv.front();
  g.pass = g.ratio >= tol.inv_tol;
  return g;
}

DenseMatrix invert(const DenseMatrix& m, const Tolerances& tol, const std::string& unit) {
  require_square(m, "invert");
  const InvertGate gate = invert_gate(m, tol);
  if (!gate.pass) {
    throw NumericallySingular(unit, gate.ratio);
  }

  const int n = m.rows();
  DenseMatrix a = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    }
    if (a(pivot, col) == 0.0) {
      throw NumericallySingular(unit, gate.ratio);  // gate passed but pivot vanished
    }
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(a(col, j), a(pivot, j));
        std::swap(inv(col, j), inv(pivot, j));
      }
    }
    const double d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

LeafCheck is_pd_leaf(const DenseMatrix& m, const Tolerances& tol) {
  LeafCheck out;
  out.lambda_min = sym_eig_min(m, tol);
  out.verdict = out.lambda_min > tol.pd_eps * std::max(1.0, max_abs(m));
  return out;
}

LeafCheck is_nn_leaf(const DenseMatrix& m, const Tolerances& tol) {
  LeafCheck out;
  out.lambda_min = sym_eig_min(m, tol);
  out.verdict = out.lambda_min >= -tol.nn_tol * std::max(1.0, max_abs(m));
  return out;
}

namespace {

DenseMatrix map_spectrum_pd(const DenseMatrix& m, const Tolerances& tol, bool inverse) {
  const SymEig e = sym_eig(m, tol);
  const double floor = tol.pd_eps * std::max(1.0, max_abs(m));
  if (e.values.front() <= floor) {
    throw Error("matrix is not positive definite (lambda_min = " +
                std::to_string(e.values.front()) + ")");
  }
  const int n = m.rows();
  DenseMatrix out(n, n);
  for (int k = 0; k < n; ++k) {
    const double r = inverse ? 1.0 / std::sqrt(e.values[k]) : std::sqrt(e.values[k]);
    for (int i = 0; i < n; ++i) {
      const double vik = e.vectors(i, k) * r;
      for (int j = 0; j < n; ++j) {
        out(i, j) += vik * e.vectors(j, k);
      }
    }
  }
  return out;
}

}  // namespace

DenseMatrix sqrt_psd(const DenseMatrix& m, const Tolerances& tol) {
  return map_spectrum_pd(m, tol, false);
}

DenseMatrix inv_sqrt_psd(const DenseMatrix& m, const Tolerances& tol) {
  return map_spectrum_pd(m, tol, true);
}

}  // namespace schurcert
