#ifndef SCHURCERT_EXTREMUM_HPP
#define SCHURCERT_EXTREMUM_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schurcert/block_matrix.hpp"
#include "schurcert/certificates.hpp"
#include "schurcert/tolerances.hpp"

namespace schurcert {

/// A point of the product space, one coordinate block per factor.
using Point = std::vector<std::vector<double>>;

/// Scalar functional on a product of inner-product spaces, evaluated on
/// points given as coordinate blocks. eval must be deterministic, finite on
/// finite input, and safe for concurrent calls.
struct ProductFunctional {
  std::vector<int> dims;
  std::function<double(const Point&)> eval;
};

Point zero_point(const std::vector<int>& dims);

/// Central differences per coordinate, O(step^2) accurate.
Point gradient_fd(const ProductFunctional& f, const Point& y, double step);

/// Second central differences, every entry computed independently (no
/// mirroring), so the symmetrization applied by hessian_fd is measurable.
DenseMatrix hessian_fd_raw(const ProductFunctional& f, const Point& y, double step);

/// Finite-difference Hessian, symmetrized as (H + H^T)/2 and blocked per
/// dims.
BlockMatrix hessian_fd(const ProductFunctional& f, const Point& y, double step,
                       const Tolerances& tol = {});

enum class ExtremumClass { StrongLocalMin, StrongLocalMax, NotAMin, NotAMax, Inconclusive };

std::string to_string(ExtremumClass c);

struct ExtremumOptions {
  double step = 0.0;      ///< 0 = automatic: 1e-3 * max(1, |y|)
  double grad_tol = 1e-6; ///< criticality threshold on each gradient block norm
};

/// Outcome of the second-order classification. Both necessary conditions
/// can fail at once (a saddle), so classification is a list: one entry
/// normally, {NotAMin, NotAMax} for a saddle.
struct ExtremumReport {
  std::vector<double> gradient_norms;
  std::optional<BlockMatrix> hessian;
  std::vector<ExtremumClass> classification;
  std::string reason;
  std::optional<SignCertificate> pd_certificate;      // on the Hessian
  std::optional<SignCertificate> pd_certificate_neg;  // on its negation
  std::optional<NNCertificate> nn_certificate;
  std::optional<NNCertificate> nn_certificate_neg;

  bool is(ExtremumClass c) const;
  nlohmann::ordered_json to_json() const;
  std::string pretty() const;
};

/// Classification at a point: gradient test first, then the sufficient
/// (positive-definiteness) tests on the Hessian and its negation, then the
/// necessary (nonnegativity) tests where their gates allow. Failures fold
/// into the report; nothing numeric is thrown.
ExtremumReport classify_critical_point(const ProductFunctional& f, const Point& y,
                                       const Tolerances& tol, ExtremumOptions opt = {});

/// Same classification from an explicitly supplied Hessian; the gradient
/// test is skipped.
ExtremumReport classify_hessian(const BlockMatrix& hessian, const Tolerances& tol);

/// Sufficient minimum test, two factors: both diagonal blocks and both
/// complements positive definite. Agrees with check_pd on 2 blocks.
bool check_sufficient_2var(const BlockMatrix& hessian, const Tolerances& tol);

/// Sufficient minimum test, three factors: the ten closed-form checks.
bool check_sufficient_3var(const BlockMatrix& hessian, const Tolerances& tol);

/// Necessary minimum conditions, three factors: the three stage checks of
/// the sequential criterion.
NNCertificate check_necessary_3var(const BlockMatrix& hessian, const Tolerances& tol);

/// The built-in sequence-space functional
///   F(x,y,z) = |x|^2 + |y|^2 + |z|^2
///            + x1^2 + z1^2 + x1 x2 + y1 y2 + z1 z2 + x1 z1
/// truncated to N coordinates per factor. All coupling terms touch only the
/// first two coordinates, so the truncation is exact for N >= 2.
ProductFunctional example_l2_functional(int truncation);

}  // namespace schurcert

#endif
