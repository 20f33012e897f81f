#ifndef SCHURCERT_SCHUR_FIRST_HPP
#define SCHURCERT_SCHUR_FIRST_HPP

#include <cstdint>
#include <vector>

#include "schurcert/block_matrix.hpp"
#include "schurcert/certificates.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// First-kind Schur operator D^i_j on the bisection of B at floor(n/2):
///   (1,1) -> B^11                      (2,2) -> B^22
///   (1,2) -> B^11 - B^12 (B^22)^-1 B^21
///   (2,1) -> B^22 - B^21 (B^11)^-1 B^12
/// The inverse acts on the flattened unit; the result is re-blocked with the
/// sub-partition dims and re-symmetrized when B is self-adjoint.
/// Throws NumericallySingular when the inverted unit fails the gate, and
/// OrderTooSmall for n < 2.
BlockMatrix schur_first(const BlockMatrix& b, int i, int j, const Tolerances& tol);

enum class PdMode { EarlyExit, FullTree };

/// Recursive positive-definiteness criterion: at every node of block order
/// >= 2 the two diagonal units are certified first, and only then the two
/// complements are formed (their inverses are defined once the units are
/// definite) and recursed into; order-1 nodes are decided by is_pd_leaf.
/// Children are evaluated in the canonical order (1,1), (2,2), (2,1), (1,2)
/// so certificates are byte-stable. A diagonal unit that fails the
/// inversion gate settles the verdict as NotPositiveDefinite. Numeric
/// errors are recorded per node, never thrown past the certificate.
SignCertificate check_pd(const BlockMatrix& b, const Tolerances& tol,
                         PdMode mode = PdMode::EarlyExit);

/// Bisection depth m: k when n = 2^k, else k+1 when 2^k < n < 2^{k+1};
/// 0 for n = 1.
int recursion_depth(std::int64_t n);

/// Exact number of leaf inequalities V_n. Evaluates both the closed form
/// 2^k (3n - 2^{k+1}) with 2^k <= n <= 2^{k+1} and the recursion
/// V_1 = 1, V_2n = 4 V_n, V_2n+1 = 2 (V_n + V_n+1), and insists they agree.
std::int64_t count_inequalities(std::int64_t n);

/// The exact chain set whose leaf checks a full-tree certificate performs,
/// in certificate order. Chains truncate when a sub-matrix reaches block
/// order 1, which is what makes the count V_n rather than 4^m.
std::vector<SchurChain> enumerate_chains(int n);

}  // namespace schurcert

#endif
