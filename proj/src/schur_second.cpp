#include "schurcert/schur_second.hpp"

#include <cmath>
#include <string>

#include "schurcert/linalg.hpp"

namespace schurcert {

namespace {

BlockMatrix eliminate_corner(const BlockMatrix& b, const Tolerances& tol,
                             const std::string& unit_name) {
  const BlockPartition p = partition_second(b);
  const DenseMatrix corner = b.block(0, 0);
  const DenseMatrix inv = invert(corner, tol, unit_name);
  DenseMatrix comp = subtract(flatten(p.b22), multiply(flatten(p.b21), multiply(inv, flatten(p.b12))));
  if (b.self_adjoint()) comp = symmetrize(comp);
  return assemble(comp, p.b22.row_dims(), tol);
}

}  // namespace

BlockMatrix schur_second(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  return eliminate_corner(b, tol, "B11");
}

NNCertificate check_nn_2x2(const BlockMatrix& b, const Tolerances& tol,
                           EliminationOrder order) {
  tol.validate();
  if (b.order() != 2) {
    throw ShapeMismatch("check_nn_2x2: expected block order 2, got " +
                        std::to_string(b.order()));
  }
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_nn_2x2: block matrix is not self-adjoint within sym_tol");
  }

  const bool first = (order == EliminationOrder::EliminateFirst);
  const DenseMatrix& corner = first ? b.block(0, 0) : b.block(1, 1);
  const DenseMatrix& off = first ? b.block(0, 1) : b.block(1, 0);
  const DenseMatrix& off_t = first ? b.block(1, 0) : b.block(0, 1);
  const DenseMatrix& other = first ? b.block(1, 1) : b.block(0, 0);

  NNCertificate cert;
  NNStage s0;
  s0.stage = 0;
  s0.order = 2;
  const InvertGate gate = invert_gate(corner, tol);
  s0.gate_pass = gate.pass;
  s0.gate_ratio = gate.ratio;
  if (!gate.pass) {
    cert.stages.push_back(s0);
    cert.verdict = NNVerdict::PreconditionFailed;
    cert.failure_stage = 0;
    return cert;
  }
  const LeafCheck c0 = is_nn_leaf(corner, tol);
  s0.lambda_min = c0.lambda_min;
  s0.check_pass = c0.verdict;
  cert.stages.push_back(s0);

  DenseMatrix comp = subtract(other, multiply(off_t, multiply(invert(corner, tol), off)));
  comp = symmetrize(comp);
  const LeafCheck c1 = is_nn_leaf(comp, tol);
  NNStage s1;
  s1.stage = 1;
  s1.order = 1;
  s1.lambda_min = c1.lambda_min;
  s1.check_pass = c1.verdict;
  cert.stages.push_back(s1);

  if (c0.verdict && c1.verdict) {
    cert.verdict = NNVerdict::Nonnegative;
  } else {
    cert.verdict = NNVerdict::NotNonnegative;
    cert.failure_stage = c0.verdict ? 1 : 0;
  }
  return cert;
}

double energy_identity_residual(const BlockMatrix& b,
                                const std::vector<std::vector<double>>& h,
                                const Tolerances& tol) {
  tol.validate();
  if (b.order() != 2) {
    throw ShapeMismatch("energy_identity_residual: expected block order 2");
  }
  const double lhs = quadratic_form(b, h);

  const DenseMatrix& b11 = b.block(0, 0);
  const DenseMatrix sq = sqrt_psd(b11, tol);
  const DenseMatrix isq = inv_sqrt_psd(b11, tol);

  const std::vector<double>& h1 = h[0];
  const std::vector<double>& h2 = h[1];
  std::vector<double> v = mat_vec(sq, h1);
  const std::vector<double> w = mat_vec(isq, mat_vec(b.block(0, 1), h2));
  for (size_t i = 0; i < v.size(); ++i) v[i] += w[i];

  const DenseMatrix comp =
      subtract(b.block(1, 1), multiply(b.block(1, 0), multiply(invert(b11, tol, "B11"), b.block(0, 1))));
  const double rhs = dot(v, v) + dot(mat_vec(comp, h2), h2);
  return std::abs(lhs - rhs);
}

NNCertificate check_nn(const BlockMatrix& b, const Tolerances& tol) {
  tol.validate();
  if (!b.self_adjoint()) {
    throw NotSelfAdjoint("check_nn: block matrix is not self-adjoint within sym_tol");
  }

  NNCertificate cert;
  bool any_check_failed = false;
  std::optional<int> first_failed_check;

  BlockMatrix current = b;
  for (int k = 0;; ++k) {
    NNStage stage;
    stage.stage = k;
    stage.order = current.order();

    if (current.order() == 1) {
      const LeafCheck c = is_nn_leaf(current.block(0, 0), tol);
      stage.lambda_min = c.lambda_min;
      stage.check_pass = c.verdict;
      cert.stages.push_back(stage);
      if (!c.verdict && !any_check_failed) {
        any_check_failed = true;
        first_failed_check = k;
      }
      break;
    }

    const DenseMatrix& corner = current.block(0, 0);
    const InvertGate gate = invert_gate(corner, tol);
    stage.gate_pass = gate.pass;
    stage.gate_ratio = gate.ratio;
    if (!gate.pass) {
      cert.stages.push_back(stage);
      if (any_check_failed) {
        // An earlier corner already violated nonnegativity under passing
        // gates, which decides the verdict; the elimination just cannot be
        // carried further.
        cert.verdict = NNVerdict::NotNonnegative;
        cert.failure_stage = first_failed_check;
      } else {
        cert.verdict = NNVerdict::PreconditionFailed;
        cert.failure_stage = k;
      }
      return cert;
    }

    const LeafCheck c = is_nn_leaf(corner, tol);
    stage.lambda_min = c.lambda_min;
    stage.check_pass = c.verdict;
    cert.stages.push_back(stage);
    if (!c.verdict && !any_check_failed) {
      any_check_failed = true;
      first_failed_check = k;
    }

    current = eliminate_corner(current, tol, "corner at stage " + std::to_string(k));
  }

  cert.verdict = any_check_failed ? NNVerdict::NotNonnegative : NNVerdict::Nonnegative;
  cert.failure_stage = first_failed_check;
  return cert;
}

}  // namespace schurcert
