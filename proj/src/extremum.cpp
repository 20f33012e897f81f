#include "schurcert/extremum.hpp"

#include <cmath>
#include <sstream>

#include "schurcert/explicit_small.hpp"
#include "schurcert/linalg.hpp"
#include "schurcert/schur_first.hpp"
#include "schurcert/schur_second.hpp"

namespace schurcert {

Point zero_point(const std::vector<int>& dims) {
  Point y;
  for (int d : dims) y.emplace_back(d, 0.0);
  return y;
}

namespace {

double eval_checked(const ProductFunctional& f, const Point& y) {
  const double v = f.eval(y);
  if (!std::isfinite(v)) {
    throw NonFiniteEvaluation("functional returned a non-finite value");
  }
  return v;
}

void check_point(const ProductFunctional& f, const Point& y) {
  if (y.size() != f.dims.size()) {
    throw ShapeMismatch("point has " + std::to_string(y.size()) + " blocks, expected " +
                        std::to_string(f.dims.size()));
  }
  for (size_t i = 0; i < y.size(); ++i) {
    if (static_cast<int>(y[i].size()) != f.dims[i]) {
      throw ShapeMismatch("coordinate block " + std::to_string(i + 1) + " has length " +
                          std::to_string(y[i].size()));
    }
  }
}

Point shifted(Point y, int block, int coord, double delta) {
  y[block][coord] += delta;
  return y;
}

double point_norm(const Point& y) {
  double s = 0.0;
  for (const auto& blk : y) {
    for (double v : blk) s += v * v;
  }
  return std::sqrt(s);
}

}  // namespace

Point gradient_fd(const ProductFunctional& f, const Point& y, double step) {
  check_point(f, y);
  if (step <= 0.0) throw Error("gradient_fd: step must be positive");
  Point g = zero_point(f.dims);
  for (size_t i = 0; i < f.dims.size(); ++i) {
    for (int a = 0; a < f.dims[i]; ++a) {
      const double plus = eval_checked(f, shifted(y, static_cast<int>(i), a, step));
      const double minus = eval_checked(f, shifted(y, static_cast<int>(i), a, -step));
      g[i][a] = (plus - minus) / (2.0 * step);
    }
  }
  return g;
}

DenseMatrix hessian_fd_raw(const ProductFunctional& f, const Point& y, double step) {
  check_point(f, y);
  if (step <= 0.0) throw Error("hessian_fd_raw: step must be positive");
  const int n = static_cast<int>(f.dims.size());
  std::vector<std::pair<int, int>> coords;  // (block, offset) per flat index
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < f.dims[i]; ++a) coords.emplace_back(i, a);
  }
  const int total = static_cast<int>(coords.size());
  const double center = eval_checked(f, y);

  DenseMatrix h(total, total);
  for (int p = 0; p < total; ++p) {
    const auto [bi, ai] = coords[p];
    for (int q = 0; q < total; ++q) {
      const auto [bj, aj] = coords[q];
      if (p == q) {
        const double plus = eval_checked(f, shifted(y, bi, ai, step));
        const double minus = eval_checked(f, shifted(y, bi, ai, -step));
        h(p, q) = (plus - 2.0 * center + minus) / (step * step);
      } else {
        const double pp = eval_checked(f, shifted(shifted(y, bi, ai, step), bj, aj, step));
        const double pm = eval_checked(f, shifted(shifted(y, bi, ai, step), bj, aj, -step));
        const double mp = eval_checked(f, shifted(shifted(y, bi, ai, -step), bj, aj, step));
        const double mm = eval_checked(f, shifted(shifted(y, bi, ai, -step), bj, aj, -step));
        h(p, q) = (pp - pm - mp + mm) / (4.0 * step * step);
      }
    }
  }
  return h;
}

BlockMatrix hessian_fd(const ProductFunctional& f, const Point& y, double step,
                       const Tolerances& tol) {
  return assemble(symmetrize(hessian_fd_raw(f, y, step)), f.dims, tol);
}

std::string to_string(ExtremumClass c) {
  switch (c) {
    case ExtremumClass::StrongLocalMin: return "StrongLocalMin";
    case ExtremumClass::StrongLocalMax: return "StrongLocalMax";
    case ExtremumClass::NotAMin: return "NotAMin";
    case ExtremumClass::NotAMax: return "NotAMax";
    default: return "Inconclusive";
  }
}

bool ExtremumReport::is(ExtremumClass c) const {
  for (ExtremumClass e : classification) {
    if (e == c) return true;
  }
  return false;
}

nlohmann::ordered_json ExtremumReport::to_json() const {
  nlohmann::ordered_json j;
  j["gradient_norms"] = gradient_norms;
  nlohmann::ordered_json cls = nlohmann::ordered_json::array();
  for (ExtremumClass c : classification) cls.push_back(to_string(c));
  j["classification"] = std::move(cls);
  if (!reason.empty()) j["reason"] = reason;
  if (pd_certificate) j["pd_certificate"] = pd_certificate->to_json();
  if (pd_certificate_neg) j["pd_certificate_negated"] = pd_certificate_neg->to_json();
  if (nn_certificate) j["nn_certificate"] = nn_certificate->to_json();
  if (nn_certificate_neg) j["nn_certificate_negated"] = nn_certificate_neg->to_json();
  return j;
}

std::string ExtremumReport::pretty() const {
  std::ostringstream out;
  out << "classification:";
  for (ExtremumClass c : classification) out << ' ' << to_string(c);
  out << '\n';
  if (!reason.empty()) out << "reason: " << reason << '\n';
  if (!gradient_norms.empty()) {
    out << "gradient block norms:";
    for (double g : gradient_norms) out << ' ' << g;
    out << '\n';
  }
  if (pd_certificate) {
    out << "-- positive definiteness of the Hessian --\n" << pd_certificate->pretty();
  }
  if (pd_certificate_neg) {
    out << "-- positive definiteness of the negated Hessian --\n"
        << pd_certificate_neg->pretty();
  }
  if (nn_certificate) {
    out << "-- nonnegativity of the Hessian --\n" << nn_certificate->pretty();
  }
  if (nn_certificate_neg) {
    out << "-- nonnegativity of the negated Hessian --\n" << nn_certificate_neg->pretty();
  }
  return out.str();
}

namespace {

BlockMatrix negate(const BlockMatrix& b, const Tolerances& tol) {
  return assemble(scale(flatten(b), -1.0), b.dims(), tol);
}

ExtremumReport classify_from_hessian(ExtremumReport report, const BlockMatrix& h,
                                     const Tolerances& tol) {
  report.hessian = h;

  SignCertificate pd = check_pd(h, tol);
  const bool is_min = pd.verdict == PdVerdict::PositiveDefinite;
  report.pd_certificate = std::move(pd);
  if (is_min) {
    report.classification = {ExtremumClass::StrongLocalMin};
    return report;
  }

  const BlockMatrix neg = negate(h, tol);
  SignCertificate pd_neg = check_pd(neg, tol);
  const bool is_max = pd_neg.verdict == PdVerdict::PositiveDefinite;
  report.pd_certificate_neg = std::move(pd_neg);
  if (is_max) {
    report.classification = {ExtremumClass::StrongLocalMax};
    return report;
  }

  NNCertificate nn = check_nn(h, tol);
  NNCertificate nn_neg = check_nn(neg, tol);
  if (nn.verdict == NNVerdict::NotNonnegative) {
    report.classification.push_back(ExtremumClass::NotAMin);
  }
  if (nn_neg.verdict == NNVerdict::NotNonnegative) {
    report.classification.push_back(ExtremumClass::NotAMax);
  }
  report.nn_certificate = std::move(nn);
  report.nn_certificate_neg = std::move(nn_neg);

  if (report.classification.empty()) {
    report.classification = {ExtremumClass::Inconclusive};
    report.reason = "neither sufficient nor applicable necessary condition decided";
  }
  return report;
}

}  // namespace

ExtremumReport classify_critical_point(const ProductFunctional& f, const Point& y,
                                       const Tolerances& tol, ExtremumOptions opt) {
  tol.validate();
  check_point(f, y);
  const double step = opt.step > 0.0 ? opt.step : 1e-3 * std::max(1.0, point_norm(y));

  ExtremumReport report;
  const Point g = gradient_fd(f, y, step);
  bool critical = true;
  for (const auto& blk : g) {
    const double norm = std::sqrt(dot(blk, blk));
    report.gradient_norms.push_back(norm);
    if (norm > opt.grad_tol) critical = false;
  }
  if (!critical) {
    report.classification = {ExtremumClass::Inconclusive};
    report.reason = "NotCritical";
    return report;
  }

  return classify_from_hessian(std::move(report), hessian_fd(f, y, step, tol), tol);
}

ExtremumReport classify_hessian(const BlockMatrix& hessian, const Tolerances& tol) {
  tol.validate();
  return classify_from_hessian(ExtremumReport{}, hessian, tol);
}

bool check_sufficient_2var(const BlockMatrix& hessian, const Tolerances& tol) {
  tol.validate();
  if (hessian.order() != 2) {
    throw ShapeMismatch("check_sufficient_2var: expected block order 2");
  }
  if (!hessian.self_adjoint()) {
    throw NotSelfAdjoint("check_sufficient_2var: Hessian is not self-adjoint within sym_tol");
  }
  const DenseMatrix& h11 = hessian.block(0, 0);
  const DenseMatrix& h22 = hessian.block(1, 1);
  try {
    if (!is_pd_leaf(h11, tol).verdict) return false;
    if (!is_pd_leaf(h22, tol).verdict) return false;
    const DenseMatrix d12 = subtract(
        h11, multiply(hessian.block(0, 1), multiply(invert(h22, tol, "H22"), hessian.block(1, 0))));
    if (!is_pd_leaf(symmetrize(d12), tol).verdict) return false;
    const DenseMatrix d21 = subtract(
        h22, multiply(hessian.block(1, 0), multiply(invert(h11, tol, "H11"), hessian.block(0, 1))));
    return is_pd_leaf(symmetrize(d21), tol).verdict;
  } catch (const NumericallySingular&) {
    return false;  // a non-invertible diagonal block cannot be positive definite
  }
}

bool check_sufficient_3var(const BlockMatrix& hessian, const Tolerances& tol) {
  return check_pd_3x3(hessian, tol).verdict == PdVerdict::PositiveDefinite;
}

NNCertificate check_necessary_3var(const BlockMatrix& hessian, const Tolerances& tol) {
  return check_nn_3x3(hessian, tol);
}

ProductFunctional example_l2_functional(int truncation) {
  if (truncation < 2) {
    throw Error("example_l2_functional: truncation must be >= 2");
  }
  ProductFunctional f;
  f.dims = {truncation, truncation, truncation};
  f.eval = [](const Point& p) {
    const std::vector<double>& x = p[0];
    const std::vector<double>& y = p[1];
    const std::vector<double>& z = p[2];
    double s = 0.0;
    for (double v : x) s += v * v;
    for (double v : y) s += v * v;
    for (double v : z) s += v * v;
    s += x[0] * x[0] + z[0] * z[0];
    s += x[0] * x[1] + y[0] * y[1] + z[0] * z[1];
    s += x[0] * z[0];
    return s;
  };
  return f;
}

}  // namespace schurcert
