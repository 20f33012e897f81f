#ifndef SCHURCERT_BLOCK_MATRIX_HPP
#define SCHURCERT_BLOCK_MATRIX_HPP

#include <vector>

#include "schurcert/dense_matrix.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// n x n grid of dense blocks with a dimension vector: blocks[i][j] has
/// shape dims[i] x dims[j]. Immutable after construction; shape
/// consistency, finiteness and self-adjointness are settled up front.
class BlockMatrix {
public:
  BlockMatrix(std::vector<int> dims, std::vector<std::vector<DenseMatrix>> blocks,
              const Tolerances& tol = {});

  int order() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  int total_dim() const { return total_dim_; }
  const DenseMatrix& block(int i, int j) const { return blocks_[i][j]; }

  /// blocks[j][i] == transpose(blocks[i][j]) within sym_tol, checked once at
  /// construction against the global entry scale.
  bool self_adjoint() const { return self_adjoint_; }

private:
  std::vector<int> dims_;
  std::vector<std::vector<DenseMatrix>> blocks_;
  int total_dim_ = 0;
  bool self_adjoint_ = false;
};

inline BlockMatrix make_block_matrix(std::vector<int> dims,
                                     std::vector<std::vector<DenseMatrix>> blocks,
                                     const Tolerances& tol = {}) {
  return BlockMatrix(std::move(dims), std::move(blocks), tol);
}

/// Single-block wrapper, the order-1 degenerate case.
BlockMatrix single_block(const DenseMatrix& m, const Tolerances& tol = {});

/// Block matrix with 1x1 blocks taken from a dense matrix (every block
/// dimension 1); convenient for scalar examples.
BlockMatrix scalar_blocks(const DenseMatrix& m, const Tolerances& tol = {});

DenseMatrix flatten(const BlockMatrix& b);
BlockMatrix assemble(const DenseMatrix& m, const std::vector<int>& dims,
                     const Tolerances& tol = {});

/// Logical rectangular range of blocks inside a parent matrix; materializes
/// on demand. Keeps partitions cheap until a Schur operator needs a dense
/// unit.
struct BlockView {
  const BlockMatrix* parent = nullptr;
  int row_begin = 0, row_end = 0;  // block index ranges, half-open
  int col_begin = 0, col_end = 0;

  int block_rows() const { return row_end - row_begin; }
  int block_cols() const { return col_end - col_begin; }
  std::vector<int> row_dims() const;
  std::vector<int> col_dims() const;
  const DenseMatrix& block(int i, int j) const {
    return parent->block(row_begin + i, col_begin + j);
  }
};

DenseMatrix flatten(const BlockView& v);
BlockMatrix materialize(const BlockView& v, const Tolerances& tol = {});

/// The four units of a bisection (first kind, split at floor(n/2)) or an
/// elimination (second kind, split at 1).
struct BlockPartition {
  int split_index = 0;
  BlockView b11, b12, b21, b22;
};

BlockPartition partition_first(const BlockMatrix& b);   // split at floor(n/2)
BlockPartition partition_second(const BlockMatrix& b);  // split at 1

/// <flatten(B) h, h> for h given as n coordinate blocks conforming to dims.
double quadratic_form(const BlockMatrix& b, const std::vector<std::vector<double>>& h);

/// max(1, max_abs(flatten(B))): the reference scale for relative bounds.
double block_scale(const BlockMatrix& b);

}  // namespace schurcert

#endif
