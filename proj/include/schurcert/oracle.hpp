#ifndef SCHURCERT_ORACLE_HPP
#define SCHURCERT_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <ostream>

#include "schurcert/block_matrix.hpp"
#include "schurcert/certificates.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// splitmix64, the reference stream for every corpus in this project, so
/// corpora are reproducible across implementations:
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  double uniform01();                  ///< [0, 1)
  double uniform();                    ///< [-1, 1)
  int uniform_int(int lo, int hi);     ///< inclusive range

private:
  std::uint64_t state_;
};

/// Seeded self-adjoint instance with controllable smallest eigenvalue.
/// shift >= 0: flatten = A^T A + shift I, so lambda_min >= shift.
/// shift <  0: flatten = Q diag(shift, u_2..u_N) Q^T with u_k in [0.2, 1.2]
/// and Q a product of seeded Givens rotations, so lambda_min = shift and
/// the instance is indefinite.
BlockMatrix random_self_adjoint(const std::vector<int>& dims, double spectrum_shift,
                                std::uint64_t seed, const Tolerances& tol = {});

/// Seeded self-adjoint instance populated only on the main and
/// anti-diagonal block positions; diagonal blocks are A^T A + I/2 and the
/// coupling strength cycles through {0.1, 0.5, 1.0, 2.0} to mix verdicts.
BlockMatrix random_bidiagonal(const std::vector<int>& dims, std::uint64_t seed,
                              const Tolerances& tol = {});

/// Agreement record between the Schur criteria and the eigenvalue oracle.
/// Instances with |lambda_min| <= 10 pd_eps scale sit on the tolerance
/// boundary and are reported as skipped. nn_agree is empty when the
/// sequential criterion's gates fail (it is then inapplicable).
struct OracleComparison {
  double lambda_min = 0.0;
  bool skipped = false;
  bool pd_agree = false;
  std::optional<bool> nn_agree;
  PdVerdict pd_verdict = PdVerdict::Indeterminate;
  bool oracle_pd = false;
};

OracleComparison compare_with_oracle(const BlockMatrix& b, const Tolerances& tol);

/// Deterministic corpus instance for one sweep seed: block order in
/// 1..n_max, block dims in 1..4, spectrum shift cycling through
/// {1.0, 0.3, -0.3, -1.0}.
BlockMatrix sweep_instance(std::uint64_t seed, int n_max, const Tolerances& tol = {});

struct SweepResult {
  long instances = 0;
  long disagreements = 0;
  long skipped = 0;
  long gates_failed = 0;
};

/// Runs compare_with_oracle over seeds [first, last] and streams CSV rows
/// "seed,n,lambda_min,pd_verdict,oracle_verdict,agree". An empty range
/// produces the header only.
SweepResult run_sweep(std::uint64_t first, std::uint64_t last, int n_max,
                      std::ostream& csv, const Tolerances& tol);

}  // namespace schurcert

#endif
