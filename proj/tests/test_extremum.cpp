#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schurcert/explicit_small.hpp"
#include "schurcert/extremum.hpp"
#include "schurcert/linalg.hpp"
#include "schurcert/oracle.hpp"
#include "schurcert/schur_first.hpp"

using namespace schurcert;

namespace {

const Tolerances kTol;

ProductFunctional norm_squared(std::vector<int> dims, double sign = 1.0) {
  ProductFunctional f;
  f.dims = std::move(dims);
  f.eval = [sign](const Point& p) {
    double s = 0.0;
    for (const auto& blk : p) {
      for (double v : blk) s += v * v;
    }
    return sign * s;
  };
  return f;
}

ProductFunctional quadratic_of(const BlockMatrix& b) {
  ProductFunctional f;
  f.dims = b.dims();
  f.eval = [b](const Point& p) { return quadratic_form(b, p); };
  return f;
}

DenseMatrix expected_corner(int n, double a) {
  DenseMatrix m(n, n);
  m(0, 0) = a;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 2;
  for (int i = 2; i < n; ++i) m(i, i) = 2;
  return m;
}

}  // namespace

TEST_CASE("gradients of simple functionals") {
  const ProductFunctional sq = norm_squared({2, 3});
  const Point zero = zero_point(sq.dims);
  for (const auto& blk : gradient_fd(sq, zero, 1e-3)) {
    for (double v : blk) CHECK(v == doctest::Approx(0.0).epsilon(1e-12));
  }

  // central differences are exact for affine functionals
  ProductFunctional affine;
  affine.dims = {3};
  affine.eval = [](const Point& p) {
    return 2.0 * p[0][0] - 5.0 * p[0][1] + 0.25 * p[0][2] + 7.0;
  };
  const Point g = gradient_fd(affine, {{0.4, -1.0, 3.0}}, 1e-3);
  CHECK(g[0][0] == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(g[0][1] == doctest::Approx(-5.0).epsilon(1e-10));
  CHECK(g[0][2] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("gradients of the sequence-space functional") {
  const ProductFunctional f = example_l2_functional(4);
  const Point zero = zero_point(f.dims);
  for (const auto& blk : gradient_fd(f, zero, 1e-3)) {
    for (double v : blk) CHECK(v == doctest::Approx(0.0).epsilon(1e-10));
  }

  Point y = zero;
  y[0][0] = 1.0;  // x = e1
  y[2][0] = 1.0;  // z = e1
  const Point g = gradient_fd(f, y, 1e-4);
  CHECK(g[0][0] == doctest::Approx(5.0).epsilon(1e-8));
  CHECK(g[0][1] == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(g[0][2] == doctest::Approx(0.0).epsilon(1e-8));
  CHECK(g[0][3] == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("finite-difference Hessians of simple functionals") {
  const BlockMatrix h = hessian_fd(norm_squared({2, 1}), zero_point({2, 1}), 1e-3);
  CHECK(approx_equal(flatten(h), scale(DenseMatrix::identity(3), 2.0), 1e-8));

  ProductFunctional cubic;
  cubic.dims = {1};
  cubic.eval = [](const Point& p) { return p[0][0] * p[0][0] * p[0][0]; };
  CHECK(std::abs(flatten(hessian_fd(cubic, {{0.0}}, 1e-3))(0, 0)) <= 1e-8);
}

TEST_CASE("Hessian of the sequence-space functional matches the closed form") {
  const int n = 4;
  const ProductFunctional f = example_l2_functional(n);
  const BlockMatrix h = hessian_fd(f, zero_point(f.dims), 1e-3);
  DenseMatrix e11(n, n);
  e11(0, 0) = 1;
  CHECK(approx_equal(h.block(0, 0), expected_corner(n, 4), 1e-4));
  CHECK(approx_equal(h.block(1, 1), expected_corner(n, 2), 1e-4));
  CHECK(approx_equal(h.block(2, 2), expected_corner(n, 4), 1e-4));
  CHECK(approx_equal(h.block(0, 2), e11, 1e-4));
  CHECK(approx_equal(h.block(0, 1), DenseMatrix(n, n), 1e-4));
  CHECK(approx_equal(h.block(1, 2), DenseMatrix(n, n), 1e-4));
}

TEST_CASE("Hessian recovery of quadratic forms") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const BlockMatrix b = random_self_adjoint({2, 2}, -0.5, 1234 + seed);
    const ProductFunctional f = quadratic_of(b);
    const BlockMatrix h = hessian_fd(f, zero_point(f.dims), 1e-3);
    CHECK(approx_equal(flatten(h), scale(flatten(b), 2.0), 1e-6));
  }
}

TEST_CASE("raw Hessian asymmetry stays small on smooth functionals") {
  ProductFunctional f;
  f.dims = {2, 1};
  f.eval = [](const Point& p) {
    const double x = p[0][0], y = p[0][1], z = p[1][0];
    return std::exp(0.3 * x) * std::cos(y) + x * y * z + 0.5 * z * z;
  };
  const DenseMatrix raw = hessian_fd_raw(f, {{0.2, -0.4}, {0.7}}, 1e-3);
  CHECK(asymmetry(raw) <= 1e-6);
  const BlockMatrix h = hessian_fd(f, {{0.2, -0.4}, {0.7}}, 1e-3);
  CHECK(asymmetry(flatten(h)) == 0.0);  // exactly its own symmetrization
}

TEST_CASE("gradient error shrinks like step squared") {
  ProductFunctional f;
  f.dims = {1};
  f.eval = [](const Point& p) { return std::exp(p[0][0]); };
  const Point y{{0.5}};
  const double exact = std::exp(0.5);
  const double err1 = std::abs(gradient_fd(f, y, 1e-2)[0][0] - exact);
  const double err2 = std::abs(gradient_fd(f, y, 5e-3)[0][0] - exact);
  const double ratio = err1 / err2;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("classification of the sequence-space functional") {
  const ProductFunctional f = example_l2_functional(4);
  const ExtremumReport report = classify_critical_point(f, zero_point(f.dims), kTol);
  REQUIRE(report.classification.size() == 1);
  CHECK(report.classification[0] == ExtremumClass::StrongLocalMin);
  CHECK(report.pd_certificate->verdict == PdVerdict::PositiveDefinite);
}

TEST_CASE("classification of definite and saddle quadratics") {
  const ExtremumReport max_report =
      classify_critical_point(norm_squared({2, 2}, -1.0), zero_point({2, 2}), kTol);
  CHECK(max_report.is(ExtremumClass::StrongLocalMax));

  ProductFunctional saddle;
  saddle.dims = {1, 1};
  saddle.eval = [](const Point& p) { return p[0][0] * p[0][0] - p[1][0] * p[1][0]; };
  const ExtremumReport s = classify_critical_point(saddle, zero_point({1, 1}), kTol);
  CHECK(s.is(ExtremumClass::NotAMin));
  CHECK(s.is(ExtremumClass::NotAMax));
  CHECK(s.classification.size() == 2);
}

TEST_CASE("non-critical points are inconclusive") {
  const ProductFunctional f = example_l2_functional(3);
  Point y = zero_point(f.dims);
  y[0][0] = 0.5;
  const ExtremumReport report = classify_critical_point(f, y, kTol);
  CHECK(report.is(ExtremumClass::Inconclusive));
  CHECK(report.reason == "NotCritical");
}

TEST_CASE("strong local minimum dominates nearby values") {
  const ProductFunctional f = example_l2_functional(3);
  const Point y = zero_point(f.dims);
  const ExtremumReport report = classify_critical_point(f, y, kTol);
  REQUIRE(report.is(ExtremumClass::StrongLocalMin));
  const double at_y = f.eval(y);
  SplitMix64 rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    Point h = y;
    double norm2 = 0.0;
    for (auto& blk : h) {
      for (double& v : blk) {
        v = rng.uniform();
        norm2 += v * v;
      }
    }
    const double r = 1e-3 / std::sqrt(norm2);
    for (auto& blk : h) {
      for (double& v : blk) v *= r;
    }
    CHECK(f.eval(h) > at_y);
  }
}

TEST_CASE("two-variable sufficient conditions") {
  CHECK(check_sufficient_2var(scalar_blocks(DenseMatrix{{4, 1}, {1, 2}}), kTol));
  CHECK(check_sufficient_2var(assemble(DenseMatrix::identity(4), {2, 2}), kTol));
  CHECK_FALSE(check_sufficient_2var(scalar_blocks(DenseMatrix{{1, 2}, {2, 1}}), kTol));

  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const BlockMatrix b = random_self_adjoint({2, 1}, seed % 2 ? 0.5 : -0.5, 31 * seed + 7);
    CHECK(check_sufficient_2var(b, kTol) ==
          (check_pd(b, kTol).verdict == PdVerdict::PositiveDefinite));
  }
}

TEST_CASE("three-variable sufficient conditions") {
  const int n = 4;
  DenseMatrix e11(n, n);
  e11(0, 0) = 1;
  const DenseMatrix zero(n, n);
  const BlockMatrix h({n, n, n}, {{expected_corner(n, 4), zero, e11},
                                  {zero, expected_corner(n, 2), zero},
                                  {e11, zero, expected_corner(n, 4)}});
  CHECK(check_sufficient_3var(h, kTol));
  CHECK(check_sufficient_3var(assemble(DenseMatrix::identity(3), {1, 1, 1}), kTol));

  const BlockMatrix flipped({n, n, n}, {{expected_corner(n, 4), zero, e11},
                                        {zero, expected_corner(n, 2), zero},
                                        {e11, zero, scale(DenseMatrix::identity(n), -1.0)}});
  CHECK_FALSE(check_sufficient_3var(flipped, kTol));
}

TEST_CASE("three-variable necessary conditions") {
  const BlockMatrix pd = random_self_adjoint({1, 2, 1}, 0.5, 99);
  REQUIRE(check_pd(pd, kTol).verdict == PdVerdict::PositiveDefinite);
  CHECK(check_necessary_3var(pd, kTol).verdict == NNVerdict::Nonnegative);

  const NNCertificate saddle =
      check_necessary_3var(scalar_blocks(DenseMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}), kTol);
  CHECK(saddle.verdict == NNVerdict::NotNonnegative);
  CHECK(saddle.failure_stage.value() == 2);

  const NNCertificate gate =
      check_necessary_3var(scalar_blocks(DenseMatrix{{1, 0, 0}, {0, 0, 0}, {0, 0, 1}}), kTol);
  CHECK(gate.verdict == NNVerdict::PreconditionFailed);
  CHECK(gate.failure_stage.value() == 1);
}

TEST_CASE("sequence-space functional evaluation") {
  const ProductFunctional f = example_l2_functional(5);
  CHECK(f.eval(zero_point(f.dims)) == doctest::Approx(0.0));
  Point y = zero_point(f.dims);
  y[0][0] = 1.0;
  CHECK(f.eval(y) == doctest::Approx(2.0));
  CHECK_THROWS_AS(example_l2_functional(1), Error);
}

TEST_CASE("all three certificate paths agree on the sequence-space Hessian") {
  const ProductFunctional f = example_l2_functional(4);
  const BlockMatrix h = hessian_fd(f, zero_point(f.dims), 1e-3);
  CHECK(check_pd(h, kTol).verdict == PdVerdict::PositiveDefinite);
  CHECK(check_pd_3x3(h, kTol).verdict == PdVerdict::PositiveDefinite);
  REQUIRE(is_bidiagonal(h, kTol));
  const SignCertificate bid = check_pd_bidiagonal(h, kTol);
  CHECK(bid.verdict == PdVerdict::PositiveDefinite);
  CHECK(bid.leaf_count == 5);
}

TEST_CASE("classification stays inconclusive when the gates fail both ways") {
  // indefinite but with singular corners: neither sufficient test certifies
  // and neither necessary test is applicable
  const ExtremumReport r = classify_hessian(scalar_blocks(DenseMatrix{{0, 1}, {1, 0}}), kTol);
  REQUIRE(r.classification.size() == 1);
  CHECK(r.classification[0] == ExtremumClass::Inconclusive);
  CHECK(r.nn_certificate->verdict == NNVerdict::PreconditionFailed);
  CHECK(r.nn_certificate_neg->verdict == NNVerdict::PreconditionFailed);
}

TEST_CASE("classify_hessian skips the gradient test") {
  const ExtremumReport r = classify_hessian(assemble(DenseMatrix::identity(4), {2, 2}), kTol);
  CHECK(r.gradient_norms.empty());
  CHECK(r.is(ExtremumClass::StrongLocalMin));

  const ExtremumReport s = classify_hessian(scalar_blocks(DenseMatrix{{1, 0}, {0, -1}}), kTol);
  CHECK(s.is(ExtremumClass::NotAMin));
  CHECK(s.is(ExtremumClass::NotAMax));
}

TEST_CASE("report serialization carries the evidence") {
  const ExtremumReport r = classify_hessian(assemble(DenseMatrix::identity(2), {1, 1}), kTol);
  const auto j = r.to_json();
  CHECK(j["classification"][0] == "StrongLocalMin");
  CHECK(j.contains("pd_certificate"));
}
