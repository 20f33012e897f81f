#ifndef SCHURCERT_CERTIFICATES_HPP
#define SCHURCERT_CERTIFICATES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace schurcert {

/// Composition of first-kind Schur operators identifying one inequality.
/// steps[0] is applied first; the serialized form lists the outermost
/// operator first, e.g. steps {(2,2),(2,1)} -> "D21.D22".
struct SchurChain {
  std::vector<std::pair<int, int>> steps;

  SchurChain extended(int i, int j) const {
    SchurChain c = *this;
    c.steps.emplace_back(i, j);
    return c;
  }

  /// Dot-joined machine form: "" for the empty chain, else "D21.D11".
  std::string str() const;

  /// Display form with the operand, e.g. "Δ²₁Δ¹₁(B)"; "B" when empty.
  std::string pretty() const;

  bool operator==(const SchurChain&) const = default;
};

enum class PdVerdict { PositiveDefinite, NotPositiveDefinite, Indeterminate };
enum class NNVerdict { Nonnegative, NotNonnegative, PreconditionFailed };

std::string to_string(PdVerdict v);
std::string to_string(NNVerdict v);

/// One node of the inequality tree. Leaves carry the scalar-block check;
/// inner nodes only aggregate. A node with `singular` set names a diagonal
/// unit whose inversion gate failed, which already decides the verdict.
struct CertNode {
  std::string chain;  // serialized chain label ("" at the root)
  int order = 1;      // block order of the matrix checked at this node
  std::optional<double> lambda_min;
  bool verdict = false;
  bool singular = false;
  std::string note;
  std::vector<CertNode> children;
};

/// Audit trail of the first-kind (recursive bisection) criterion.
struct SignCertificate {
  PdVerdict verdict = PdVerdict::Indeterminate;
  CertNode root;
  long leaf_count = 0;
  std::optional<std::string> failure;  // first violated chain

  nlohmann::ordered_json to_json() const;
  std::string pretty() const;
};

/// One stage of the sequential (second-kind) elimination. The final stage
/// has no gate: the remaining order-1 matrix is only sign-checked.
struct NNStage {
  int stage = 0;  // 0-based elimination count before this stage
  int order = 1;  // block order of the current matrix
  std::optional<bool> gate_pass;
  std::optional<double> gate_ratio;
  std::optional<double> lambda_min;
  std::optional<bool> check_pass;
};

/// Audit trail of the second-kind criterion: n sign checks guarded by n-1
/// invertibility gates. A failed gate makes the criterion inapplicable
/// (PreconditionFailed), which is distinct from a negative verdict.
struct NNCertificate {
  NNVerdict verdict = NNVerdict::PreconditionFailed;
  std::vector<NNStage> stages;
  std::optional<int> failure_stage;

  nlohmann::ordered_json to_json() const;
  std::string pretty() const;
};

}  // namespace schurcert

#endif
