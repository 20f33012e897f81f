#include "schurcert/explicit_small.hpp"

#include <cmath>
#include <functional>
#include <string>

#include "schurcert/linalg.hpp"

namespace schurcert {

namespace {

std::string blk_name(int i, int j) {
  if (i <= 9 && j <= 9) return "B" + std::to_string(i) + std::to_string(j);
  return "B(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

void require_order(const BlockMatrix& b, int n, const char* what) {
  if (b.order() != n) {
    throw ShapeMismatch(std::string(what) + ": expected block order " + std::to_string(n) +
                        ", got " + std::to_string(b.order()));
  }
}

}  // namespace

DenseMatrix gen_schur_first_3(const BlockMatrix& b, int i, int j, int k,
                              const Tolerances& tol) {
  tol.validate();
  require_order(b, 3, "gen_schur_first_3");
  if (i < 1 || i > 3 || j < 1 || j > 3 || k < 1 || k > 3) {
    throw Error("gen_schur_first_3: indices must be in 1..3");
  }
  const DenseMatrix inv_jj = invert(b.block(j - 1, j - 1), tol, blk_name(j, j));
  return subtract(b.block(i - 1, k - 1),
                  multiply(b.block(i - 1, j - 1), multiply(inv_jj, b.block(j - 1, k - 1))));
}

namespace {

// Leaf evaluated from an explicit formula; an inversion-gate failure inside
// the formula settles it as a singular (hence violated) check.
CertNode explicit_leaf(const std::string& chain, const std::function<DenseMatrix()>& make,
                       const Tolerances& tol, bool& all_ok, long& leaves,
                       std::optional<std::string>& first_failure) {
  CertNode node;
  node.chain = chain;
  node.order = 1;
  ++leaves;
  try {
    const LeafCheck lc = is_pd_leaf(symmetrize(make()), tol);
    node.lambda_min = lc.lambda_min;
    node.verdict = lc.verdict;
  } catch (const NumericallySingular& e) {
    node.verdict = false;
    node.singular = true;
    node.note = e.what();
  }
  if (!node.verdict) {
    all_ok = false;
    if (!first_failure) first_failure = node.chain;
  }
  return node;
}

}  // namespace

SignCertificate check_pd_3x3(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  require_order(b, 3, "check_pd_3x3");
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_pd_3x3: block matrix is not self-adjoint within sym_tol");
  }

  SignCertificate cert;
  cert.root.chain = "";
  cert.root.order = 3;
  bool all_ok = true;
  long leaves = 0;
  std::optional<std::string> first_failure;

  auto add_leaf = [&](const std::string& chain, const std::function<DenseMatrix()>& make) {
    cert.root.children.push_back(explicit_leaf(chain, make, tol, all_ok, leaves, first_failure));
  };

  auto gs = [&](int i, int j, int k) { return gen_schur_first_3(b, i, j, k, tol); };

  // The ten inequalities, labelled with the bisection chains they realize,
  // in the certificate's canonical order.
  add_leaf("D11", [&] { return b.block(0, 0); });
  add_leaf("D11.D22", [&] { return b.block(1, 1); });
  add_leaf("D22.D22", [&] { return b.block(2, 2); });
  add_leaf("D21.D22", [&] { return gs(3, 2, 3); });
  add_leaf("D12.D22", [&] { return gs(2, 3, 2); });
  add_leaf("D11.D21", [&] { return gs(2, 1, 2); });
  add_leaf("D22.D21", [&] { return gs(3, 1, 3); });
  add_leaf("D21.D21", [&] {
    return subtract(gs(3, 1, 3),
                    multiply(gs(3, 1, 2), multiply(invert(gs(2, 1, 2), tol, "D11.D21"), gs(2, 1, 3))));
  });
  add_leaf("D12.D21", [&] {
    return subtract(gs(2, 1, 2),
                    multiply(gs(2, 1, 3), multiply(invert(gs(3, 1, 3), tol, "D22.D21"), gs(3, 1, 2))));
  });
  add_leaf("D12", [&] {
    const InverseSubBlocks3 ib = inverse_sub_blocks_3(b, tol);
    const DenseMatrix& b12 = b.block(0, 1);
    const DenseMatrix& b13 = b.block(0, 2);
    const DenseMatrix& b21 = b.block(1, 0);
    const DenseMatrix& b31 = b.block(2, 0);
    DenseMatrix sum = multiply(b12, multiply(ib.b22m, b21));
    sum = add(sum, multiply(b12, multiply(ib.b23m, b31)));
    sum = add(sum, multiply(b13, multiply(ib.b32m, b21)));
    sum = add(sum, multiply(b13, multiply(ib.b33m, b31)));
    return subtract(b.block(0, 0), sum);
  });

  cert.root.verdict = all_ok;
  cert.leaf_count = leaves;
  cert.failure = first_failure;
  cert.verdict = all_ok ? PdVerdict::PositiveDefinite : PdVerdict::NotPositiveDefinite;
  return cert;
}

InverseSubBlocks3 inverse_sub_blocks_3(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  require_order(b, 3, "inverse_sub_blocks_3");
  const DenseMatrix& b22 = b.block(1, 1);
  const DenseMatrix& b23 = b.block(1, 2);
  const DenseMatrix& b32 = b.block(2, 1);
  const DenseMatrix& b33 = b.block(2, 2);

  const DenseMatrix inv22 = invert(b22, tol, "B22");
  const DenseMatrix inv33 = invert(b33, tol, "B33");
  // trailing complements D^2_32 = B22 - B23 B33^-1 B32, D^3_23 = B33 - B32 B22^-1 B23
  const DenseMatrix d232 = subtract(b22, multiply(b23, multiply(inv33, b32)));
  const DenseMatrix d323 = subtract(b33, multiply(b32, multiply(inv22, b23)));
  const DenseMatrix inv_d232 = invert(d232, tol, "D2_32");
  const DenseMatrix inv_d323 = invert(d323, tol, "D3_23");

  InverseSubBlocks3 out;
  out.b22m = multiply(inv22, add(DenseMatrix::identity(b22.rows()),
                                 multiply(b23, multiply(inv_d323, multiply(b32, inv22)))));
  out.b33m = multiply(inv33, add(DenseMatrix::identity(b33.rows()),
                                 multiply(b32, multiply(inv_d232, multiply(b23, inv33)))));
  out.b23m = scale(multiply(inv_d232, multiply(b23, inv33)), -1.0);
  out.b32m = scale(multiply(inv_d323, multiply(b32, inv22)), -1.0);
  return out;
}

NNCertificate check_nn_3x3(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  require_order(b, 3, "check_nn_3x3");
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_nn_3x3: block matrix is not self-adjoint within sym_tol");
  }

  NNCertificate cert;
  bool any_check_failed = false;
  std::optional<int> first_failed_check;

  auto run_stage = [&](int k, int order, const DenseMatrix& corner, bool gated) -> bool {
    NNStage stage;
    stage.stage = k;
    stage.order = order;
    if (gated) {
      const InvertGate gate = invert_gate(corner, tol);
      stage.gate_pass = gate.pass;
      stage.gate_ratio = gate.ratio;
      if (!gate.pass) {
        cert.stages.push_back(stage);
        if (any_check_failed) {
          cert.verdict = NNVerdict::NotNonnegative;
          cert.failure_stage = first_failed_check;
        } else {
          cert.verdict = NNVerdict::PreconditionFailed;
          cert.failure_stage = k;
        }
        return false;
      }
    }
    const LeafCheck c = is_nn_leaf(corner, tol);
    stage.lambda_min = c.lambda_min;
    stage.check_pass = c.verdict;
    cert.stages.push_back(stage);
    if (!c.verdict && !any_check_failed) {
      any_check_failed = true;
      first_failed_check = k;
    }
    return true;
  };

  // stage 0: B11
  if (!run_stage(0, 3, b.block(0, 0), true)) return cert;

  // stage 1: D^22_1 = B22 - B21 B11^-1 B12
  const DenseMatrix inv11 = invert(b.block(0, 0), tol, "B11");
  auto d1 = [&](int i, int k) {  // D^ik_1, 1-based i, k in 2..3
    return subtract(b.block(i - 1, k - 1),
                    multiply(b.block(i - 1, 0), multiply(inv11, b.block(0, k - 1))));
  };
  const DenseMatrix d22 = symmetrize(d1(2, 2));
  if (!run_stage(1, 2, d22, true)) return cert;

  // stage 2: D^33_1 - D^32_1 (D^22_1)^-1 D^23_1
  const DenseMatrix last = symmetrize(subtract(
      d1(3, 3), multiply(d1(3, 2), multiply(invert(d22, tol, "D22_1"), d1(2, 3)))));
  run_stage(2, 1, last, false);

  cert.verdict = any_check_failed ? NNVerdict::NotNonnegative : NNVerdict::Nonnegative;
  cert.failure_stage = first_failed_check;
  return cert;
}

bool is_bidiagonal(const BlockMatrix& b, const Tolerances& tol) {
  const int n = b.order();
  const double bound = tol.sym_tol * block_scale(b);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == i || j == n - 1 - i) continue;
      if (max_abs(b.block(i, j)) > bound) return false;
    }
  }
  return true;
}

SignCertificate check_pd_bidiagonal(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  if (!is_bidiagonal(b, tol)) {
    throw NotBidiagonal("check_pd_bidiagonal: blocks off the two diagonals are not zero");
  }
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_pd_bidiagonal: block matrix is not self-adjoint within sym_tol");
  }

  const int n = b.order();
  SignCertificate cert;
  cert.root.chain = "";
  cert.root.order = n;
  bool all_ok = true;
  long leaves = 0;
  std::optional<std::string> first_failure;

  auto add_leaf = [&](const std::string& chain, const std::function<DenseMatrix()>& make) {
    cert.root.children.push_back(explicit_leaf(chain, make, tol, all_ok, leaves, first_failure));
  };

  for (int i = 1; i <= n; ++i) {
    add_leaf(blk_name(i, i), [&, i] { return b.block(i - 1, i - 1); });
  }
  for (int i = 1; i <= n; ++i) {
    const int m = n + 1 - i;
    if (i == m) continue;  // uncoupled center block of odd n
    add_leaf(blk_name(i, i) + " - " + blk_name(i, m) + " " + blk_name(m, m) + "^-1 " + blk_name(m, i),
        [&, i, m] {
          const DenseMatrix inv_mm = invert(b.block(m - 1, m - 1), tol, blk_name(m, m));
          return subtract(b.block(i - 1, i - 1),
                          multiply(b.block(i - 1, m - 1), multiply(inv_mm, b.block(m - 1, i - 1))));
        });
  }

  cert.root.verdict = all_ok;
  cert.leaf_count = leaves;
  cert.failure = first_failure;
  cert.verdict = all_ok ? PdVerdict::PositiveDefinite : PdVerdict::NotPositiveDefinite;
  return cert;
}

}  // namespace schurcert
