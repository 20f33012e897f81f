#ifndef SCHURCERT_EXPLICIT_SMALL_HPP
#define SCHURCERT_EXPLICIT_SMALL_HPP

#include "schurcert/block_matrix.hpp"
#include "schurcert/certificates.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// Generalized complement on a 3-block matrix (1-based indices):
/// B_ik - B_ij (B_jj)^-1 B_jk, whose leading term is B_ii when i = k.
DenseMatrix gen_schur_first_3(const BlockMatrix& b, int i, int j, int k,
                              const Tolerances& tol);

/// Closed-form positive-definiteness test for block order 3: the ten
/// inequalities evaluated directly from the generalized complements and the
/// inverse sub-blocks, each independently of the bisection recursion. Leaf
/// chains carry the labels of the corresponding recursion chains, in
/// canonical order.
SignCertificate check_pd_3x3(const BlockMatrix& b, const Tolerances& tol);

/// The four blocks of the inverse of the trailing 2x2 sub-block matrix
/// (B_ij)_{i,j=2..3}, by the closed formulas
///   B22m = B22^-1 (I + B23 (B33 - B32 B22^-1 B23)^-1 B32 B22^-1)
///   B23m = -(B22 - B23 B33^-1 B32)^-1 B23 B33^-1
/// and their mirrored counterparts. Requires B_22, B_33 and both trailing
/// complements to pass the inversion gate.
struct InverseSubBlocks3 {
  DenseMatrix b22m, b23m, b32m, b33m;
};

InverseSubBlocks3 inverse_sub_blocks_3(const BlockMatrix& b, const Tolerances& tol);

/// Closed-form nonnegativity test for block order 3, the three stage checks
/// of the sequential criterion written out via B_ik - B_i1 B_11^-1 B_1k.
NNCertificate check_nn_3x3(const BlockMatrix& b, const Tolerances& tol);

/// True when every block off the main and anti-diagonal is zero within
/// sym_tol * scale.
bool is_bidiagonal(const BlockMatrix& b, const Tolerances& tol);

/// Fast path for bidiagonal matrices: n diagonal checks plus the
/// anti-diagonal complements B_ii - B_im (B_mm)^-1 B_mi with m = n+1-i
/// (skipping the uncoupled center block when n is odd), 2n checks for even
/// n and 2n-1 for odd n.
SignCertificate check_pd_bidiagonal(const BlockMatrix& b, const Tolerances& tol);

}  // namespace schurcert

#endif
