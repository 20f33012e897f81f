#include "schurcert/oracle.hpp"

#include <cmath>
#include <cstdio>

#include "schurcert/linalg.hpp"
#include "schurcert/schur_first.hpp"
#include "schurcert/schur_second.hpp"

namespace schurcert {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::uniform() { return 2.0 * uniform01() - 1.0; }

int SplitMix64::uniform_int(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
}

namespace {

DenseMatrix random_dense(SplitMix64& rng, int rows, int cols) {
  DenseMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) m(i, j) = rng.uniform();
  }
  return m;
}

// Orthogonal matrix as a product of seeded Givens rotations applied to the
// identity; exactly reproducible and never degenerate.
DenseMatrix random_orthogonal(SplitMix64& rng, int n) {
  DenseMatrix q = DenseMatrix::identity(n);
  if (n < 2) return q;
  const int rotations = 3 * n;
  for (int r = 0; r < rotations; ++r) {
    const int p = rng.uniform_int(0, n - 2);
    const int s = rng.uniform_int(p + 1, n - 1);
    const double angle = 3.14159265358979323846 * rng.uniform();
    const double c = std::cos(angle);
    const double sn = std::sin(angle);
    for (int k = 0; k < n; ++k) {
      const double a = q(k, p);
      const double b = q(k, s);
      q(k, p) = c * a - sn * b;
      q(k, s) = sn * a + c * b;
    }
  }
  return q;
}

}  // namespace

BlockMatrix random_self_adjoint(const std::vector<int>& dims, double spectrum_shift,
                                std::uint64_t seed, const Tolerances& tol) {
  int total = 0;
  for (int d : dims) total += d;
  SplitMix64 rng(seed);

  DenseMatrix s(total, total);
  if (spectrum_shift >= 0.0) {
    const DenseMatrix a = random_dense(rng, total, total);
    s = multiply(transpose(a), a);
    for (int i = 0; i < total; ++i) s(i, i) += spectrum_shift;
  } else {
    const DenseMatrix q = random_orthogonal(rng, total);
    std::vector<double> spectrum(total);
    spectrum[0] = spectrum_shift;
    for (int k = 1; k < total; ++k) spectrum[k] = 0.2 + rng.uniform01();
    for (int i = 0; i < total; ++i) {
      for (int j = 0; j < total; ++j) {
        double v = 0.0;
        for (int k = 0; k < total; ++k) v += q(i, k) * spectrum[k] * q(j, k);
        s(i, j) = v;
      }
    }
  }
  return assemble(symmetrize(s), dims, tol);
}

BlockMatrix random_bidiagonal(const std::vector<int>& dims, std::uint64_t seed,
                              const Tolerances& tol) {
  const int n = static_cast<int>(dims.size());
  SplitMix64 rng(seed);
  const double couplings[] = {0.1, 0.5, 1.0, 2.0};
  const double gamma = couplings[rng.next() % 4];

  std::vector<std::vector<DenseMatrix>> blocks(n);
  for (int i = 0; i < n; ++i) {
    blocks[i].assign(n, DenseMatrix());
    for (int j = 0; j < n; ++j) blocks[i][j] = DenseMatrix(dims[i], dims[j]);
  }
  for (int i = 0; i < n; ++i) {
    const DenseMatrix a = random_dense(rng, dims[i], dims[i]);
    DenseMatrix d = multiply(transpose(a), a);
    for (int k = 0; k < dims[i]; ++k) d(k, k) += 0.5;
    blocks[i][i] = std::move(d);
  }
  for (int i = 0; i < n; ++i) {
    const int m = n - 1 - i;
    if (i >= m) continue;
    DenseMatrix c = random_dense(rng, dims[i], dims[m]);
    c = scale(c, gamma);
    blocks[m][i] = transpose(c);
    blocks[i][m] = std::move(c);
  }
  return BlockMatrix(dims, std::move(blocks), tol);
}

OracleComparison compare_with_oracle(const BlockMatrix& b, const Tolerances& tol) {
  OracleComparison out;
  const double scale = block_scale(b);
  out.lambda_min = sym_eig_min(flatten(b), tol);
  out.skipped = std::abs(out.lambda_min) <= 10.0 * tol.pd_eps * scale;

  const SignCertificate pd = check_pd(b, tol);
  out.pd_verdict = pd.verdict;
  out.oracle_pd = out.lambda_min > tol.pd_eps * scale;
  out.pd_agree = (pd.verdict == PdVerdict::PositiveDefinite) == out.oracle_pd;

  const NNCertificate nn = check_nn(b, tol);
  if (nn.verdict != NNVerdict::PreconditionFailed) {
    const bool oracle_nn = out.lambda_min >= -tol.nn_tol * scale;
    out.nn_agree = (nn.verdict == NNVerdict::Nonnegative) == oracle_nn;
  }
  return out;
}

BlockMatrix sweep_instance(std::uint64_t seed, int n_max, const Tolerances& tol) {
  SplitMix64 rng(seed ^ 0xA5A5A5A5A5A5A5A5ULL);
  const int n = rng.uniform_int(1, n_max);
  std::vector<int> dims(n);
  for (int i = 0; i < n; ++i) dims[i] = rng.uniform_int(1, 4);
  const double shifts[] = {1.0, 0.3, -0.3, -1.0};
  const double shift = shifts[rng.next() % 4];
  return random_self_adjoint(dims, shift, seed, tol);
}

SweepResult run_sweep(std::uint64_t first, std::uint64_t last, int n_max,
                      std::ostream& csv, const Tolerances& tol) {
  SweepResult res;
  csv << "seed,n,lambda_min,pd_verdict,oracle_verdict,agree\n";
  if (first > last) return res;
  char buf[32];
  for (std::uint64_t seed = first;; ++seed) {
    const BlockMatrix b = sweep_instance(seed, n_max, tol);
    const OracleComparison cmp = compare_with_oracle(b, tol);
    ++res.instances;
    if (!cmp.nn_agree) ++res.gates_failed;

    bool agree = cmp.pd_agree && cmp.nn_agree.value_or(true);
    const char* agree_str;
    if (cmp.skipped) {
      ++res.skipped;
      agree_str = "skip";
    } else if (agree) {
      agree_str = "1";
    } else {
      ++res.disagreements;
      agree_str = "0";
    }
    std::snprintf(buf, sizeof buf, "%.17g", cmp.lambda_min);
    csv << seed << ',' << b.order() << ',' << buf << ','
        << to_string(cmp.pd_verdict) << ','
        << (cmp.oracle_pd ? "PositiveDefinite" : "NotPositiveDefinite") << ','
        << agree_str << '\n';
    if (seed == last) break;
  }
  return res;
}

}  // namespace schurcert
