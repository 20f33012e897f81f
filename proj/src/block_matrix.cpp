#include "schurcert/block_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace schurcert {

BlockMatrix::BlockMatrix(std::vector<int> dims, std::vector<std::vector<DenseMatrix>> blocks,
                         const Tolerances& tol)
    : dims_(std::move(dims)), blocks_(std::move(blocks)) {
  const int n = static_cast<int>(dims_.size());
  if (n == 0) throw ShapeMismatch("block matrix needs at least one block");
  for (int d : dims_) {
    if (d <= 0) throw ShapeMismatch("block dimensions must be positive");
  }
  if (static_cast<int>(blocks_.size()) != n) {
    throw ShapeMismatch("block grid has " + std::to_string(blocks_.size()) +
                        " rows, expected " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(blocks_[i].size()) != n) {
      throw ShapeMismatch("block row " + std::to_string(i + 1) + " has " +
                          std::to_string(blocks_[i].size()) + " blocks, expected " +
                          std::to_string(n));
    }
    for (int j = 0; j < n; ++j) {
      const DenseMatrix& blk = blocks_[i][j];
      if (blk.rows() != dims_[i] || blk.cols() != dims_[j]) {
        throw ShapeMismatch("block (" + std::to_string(i + 1) + "," +
                            std::to_string(j + 1) + ") has shape " +
                            std::to_string(blk.rows()) + "x" + std::to_string(blk.cols()) +
                            ", expected " + std::to_string(dims_[i]) + "x" +
                            std::to_string(dims_[j]));
      }
    }
  }
  total_dim_ = std::accumulate(dims_.begin(), dims_.end(), 0);

  double scale = 0.0;
  for (const auto& row : blocks_) {
    for (const auto& blk : row) scale = std::max(scale, max_abs(blk));
  }
  double asym = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const DenseMatrix& bij = blocks_[i][j];
      const DenseMatrix& bji = blocks_[j][i];
      for (int r = 0; r < bij.rows(); ++r) {
        for (int c = 0; c < bij.cols(); ++c) {
          asym = std::max(asym, std::abs(bij(r, c) - bji(c, r)));
        }
      }
    }
  }
  self_adjoint_ = (scale == 0.0) || (asym <= tol.sym_tol * scale);
}

BlockMatrix single_block(const DenseMatrix& m, const Tolerances& tol) {
  if (!m.square()) throw NonSquare("single_block needs a square matrix");
  return BlockMatrix({m.rows()}, {{m}}, tol);
}

BlockMatrix scalar_blocks(const DenseMatrix& m, const Tolerances& tol) {
  if (!m.square()) throw NonSquare("scalar_blocks needs a square matrix");
  const int n = m.rows();
  std::vector<std::vector<DenseMatrix>> blocks(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      blocks[i].push_back(DenseMatrix(1, 1, {m(i, j)}));
    }
  }
  return BlockMatrix(std::vector<int>(n, 1), std::move(blocks), tol);
}

namespace {

std::vector<int> offsets_of(const std::vector<int>& dims) {
  std::vector<int> off(dims.size() + 1, 0);
  for (size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

}  // namespace

DenseMatrix flatten(const BlockMatrix& b) {
  const std::vector<int> off = offsets_of(b.dims());
  DenseMatrix m(b.total_dim(), b.total_dim());
  for (int i = 0; i < b.order(); ++i) {
    for (int j = 0; j < b.order(); ++j) {
      const DenseMatrix& blk = b.block(i, j);
      for (int r = 0; r < blk.rows(); ++r) {
        for (int c = 0; c < blk.cols(); ++c) {
          m(off[i] + r, off[j] + c) = blk(r, c);
        }
      }
    }
  }
  return m;
}

BlockMatrix assemble(const DenseMatrix& m, const std::vector<int>& dims,
                     const Tolerances& tol) {
  const std::vector<int> off = offsets_of(dims);
  const int total = off.back();
  if (m.rows() != total || m.cols() != total) {
    throw ShapeMismatch("assemble: matrix order " + std::to_string(m.rows()) +
                        " does not match dims total " + std::to_string(total));
  }
  const int n = static_cast<int>(dims.size());
  std::vector<std::vector<DenseMatrix>> blocks(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      DenseMatrix blk(dims[i], dims[j]);
      for (int r = 0; r < dims[i]; ++r) {
        for (int c = 0; c < dims[j]; ++c) {
          blk(r, c) = m(off[i] + r, off[j] + c);
        }
      }
      blocks[i].push_back(std::move(blk));
    }
  }
  return BlockMatrix(dims, std::move(blocks), tol);
}

std::vector<int> BlockView::row_dims() const {
  return {parent->dims().begin() + row_begin, parent->dims().begin() + row_end};
}

std::vector<int> BlockView::col_dims() const {
  return {parent->dims().begin() + col_begin, parent->dims().begin() + col_end};
}

DenseMatrix flatten(const BlockView& v) {
  const std::vector<int> roff = offsets_of(v.row_dims());
  const std::vector<int> coff = offsets_of(v.col_dims());
  DenseMatrix m(roff.back(), coff.back());
  for (int i = 0; i < v.block_rows(); ++i) {
    for (int j = 0; j < v.block_cols(); ++j) {
      const DenseMatrix& blk = v.block(i, j);
      for (int r = 0; r < blk.rows(); ++r) {
        for (int c = 0; c < blk.cols(); ++c) {
          m(roff[i] + r, coff[j] + c) = blk(r, c);
        }
      }
    }
  }
  return m;
}

BlockMatrix materialize(const BlockView& v, const Tolerances& tol) {
  if (v.block_rows() != v.block_cols()) {
    throw ShapeMismatch("materialize: view is not square in blocks");
  }
  std::vector<std::vector<DenseMatrix>> blocks(v.block_rows());
  for (int i = 0; i < v.block_rows(); ++i) {
    for (int j = 0; j < v.block_cols(); ++j) {
      blocks[i].push_back(v.block(i, j));
    }
  }
  return BlockMatrix(v.row_dims(), std::move(blocks), tol);
}

namespace {

BlockPartition partition_at(const BlockMatrix& b, int split) {
  const int n = b.order();
  BlockPartition p;
  p.split_index = split;
  p.b11 = {&b, 0, split, 0, split};
  p.b12 = {&b, 0, split, split, n};
  p.b21 = {&b, split, n, 0, split};
  p.b22 = {&b, split, n, split, n};
  return p;
}

}  // namespace

BlockPartition partition_first(const BlockMatrix& b) {
  if (b.order() < 2) {
    throw OrderTooSmall("partition_first needs block order >= 2");
  }
  return partition_at(b, b.order() / 2);
}

BlockPartition partition_second(const BlockMatrix& b) {
  if (b.order() < 2) {
    throw OrderTooSmall("partition_second needs block order >= 2");
  }
  return partition_at(b, 1);
}

double quadratic_form(const BlockMatrix& b, const std::vector<std::vector<double>>& h) {
  if (static_cast<int>(h.size()) != b.order()) {
    throw ShapeMismatch("quadratic_form: expected " + std::to_string(b.order()) +
                        " coordinate blocks");
  }
  std::vector<double> flat;
  flat.reserve(b.total_dim());
  for (int i = 0; i < b.order(); ++i) {
    if (static_cast<int>(h[i].size()) != b.dims()[i]) {
      throw ShapeMismatch("quadratic_form: coordinate block " + std::to_string(i + 1) +
                          " has length " + std::to_string(h[i].size()) + ", expected " +
                          std::to_string(b.dims()[i]));
    }
    flat.insert(flat.end(), h[i].begin(), h[i].end());
  }
  return dot(mat_vec(flatten(b), flat), flat);
}

double block_scale(const BlockMatrix& b) {
  double scale = 0.0;
  for (int i = 0; i < b.order(); ++i) {
    for (int j = 0; j < b.order(); ++j) {
      scale = std::max(scale, max_abs(b.block(i, j)));
    }
  }
  return std::max(1.0, scale);
}

}  // namespace schurcert
