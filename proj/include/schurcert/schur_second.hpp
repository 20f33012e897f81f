#ifndef SCHURCERT_SCHUR_SECOND_HPP
#define SCHURCERT_SCHUR_SECOND_HPP

#include <vector>

#include "schurcert/block_matrix.hpp"
#include "schurcert/certificates.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// Second-kind Schur operator: eliminates the first block coordinate,
/// returning B~22 - B~21 (B_11)^-1 B~12 of block order n-1. Throws
/// NumericallySingular when B_11 fails the inversion gate.
BlockMatrix schur_second(const BlockMatrix& b, const Tolerances& tol);

enum class EliminationOrder { EliminateFirst, EliminateSecond };

/// 2x2 nonnegativity test: the eliminated diagonal block must be
/// nonnegative and so must its complement. Both elimination orders are
/// equivalent whenever both diagonal blocks are invertible.
NNCertificate check_nn_2x2(const BlockMatrix& b, const Tolerances& tol,
                           EliminationOrder order = EliminationOrder::EliminateFirst);

/// Residual of the elimination identity behind the 2x2 test:
///   <B h, h> = ||B11^{1/2} h1 + B11^{-1/2} B12 h2||^2 + <(B22 - B21 B11^-1 B12) h2, h2>.
/// Requires B_11 positive definite (the square roots come from its
/// eigen-decomposition). Stays below 1e-9 * scale for all h.
double energy_identity_residual(const BlockMatrix& b,
                                const std::vector<std::vector<double>>& h,
                                const Tolerances& tol);

/// Sequential nonnegativity criterion: at stage k the corner block of the
/// k-times eliminated matrix is gate-checked for invertibility, checked for
/// nonnegativity, and eliminated; the final stage only sign-checks the
/// remaining order-1 matrix. n checks guarded by n-1 gates. A failed gate
/// before any failed check makes the criterion inapplicable
/// (PreconditionFailed) rather than a negative verdict.
NNCertificate check_nn(const BlockMatrix& b, const Tolerances& tol);

}  // namespace schurcert

#endif
