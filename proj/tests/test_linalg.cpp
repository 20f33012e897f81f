#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "schurcert/linalg.hpp"
#include "schurcert/oracle.hpp"

using namespace schurcert;

namespace {

const Tolerances kTol;

DenseMatrix random_square(SplitMix64& rng, int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m(i, j) = rng.uniform();
  }
  return m;
}

DenseMatrix random_symmetric(SplitMix64& rng, int n) {
  return symmetrize(random_square(rng, n));
}

}  // namespace

TEST_CASE("sym_eig_min on closed-form cases") {
  CHECK(sym_eig_min(DenseMatrix::identity(3), kTol) == doctest::Approx(1.0).epsilon(1e-12));

  // roots of l^2 - 6l + 7: 3 +- sqrt(2)
  const DenseMatrix m{{4, 1}, {1, 2}};
  CHECK(sym_eig_min(m, kTol) == doctest::Approx(3.0 - std::sqrt(2.0)).epsilon(1e-12));

  const DenseMatrix rank1{{1, 1}, {1, 1}};
  CHECK(sym_eig_min(rank1, kTol) == doctest::Approx(0.0).epsilon(1e-12));

  const DenseMatrix indef{{1, 2}, {2, 1}};
  CHECK(sym_eig_min(indef, kTol) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("sym_eig_min rejects bad input") {
  CHECK_THROWS_AS(sym_eig_min(DenseMatrix(2, 3), kTol), NonSquare);
  const DenseMatrix skew{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(sym_eig_min(skew, kTol), AsymmetricInput);
  // within sym_tol the input is silently symmetrized
  Tolerances loose = kTol;
  loose.sym_tol = 2.0;
  CHECK_NOTHROW(sym_eig_min(skew, loose));
}

TEST_CASE("full spectrum matches hand eigenvalues") {
  const SymEig e = sym_eig(DenseMatrix{{2, 1}, {1, 2}}, kTol);
  CHECK(e.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("invert on closed-form cases") {
  const DenseMatrix m{{4, 1}, {1, 2}};
  const DenseMatrix inv = invert(m, kTol);
  CHECK(approx_equal(inv, DenseMatrix{{2.0 / 7, -1.0 / 7}, {-1.0 / 7, 4.0 / 7}}, 1e-14));

  CHECK(approx_equal(invert(DenseMatrix::identity(4), kTol), DenseMatrix::identity(4), 1e-15));

  CHECK_THROWS_AS(invert(DenseMatrix{{1, 1}, {1, 1}}, kTol), NumericallySingular);
  try {
    invert(DenseMatrix{{1, 1}, {1, 1}}, kTol, "B11");
  } catch (const NumericallySingular& e) {
    CHECK(e.unit() == "B11");
    CHECK(e.ratio() < kTol.inv_tol);
  }
}

TEST_CASE("shape algebra") {
  const DenseMatrix m{{4, 1}, {1, 2}};
  CHECK(approx_equal(multiply(DenseMatrix::identity(2), m), m, 0.0));

  const DenseMatrix rect{{1, 2, 3}, {4, 5, 6}};
  const DenseMatrix t = transpose(rect);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t(2, 1) == 6);
  CHECK(t(0, 1) == 4);

  CHECK(max_abs(subtract(m, m)) == 0.0);
  CHECK_THROWS_AS(multiply(rect, m), ShapeMismatch);
  CHECK_THROWS_AS(add(rect, m), ShapeMismatch);

  // projection sandwich used by the sequence-space example
  const DenseMatrix p{{1, 0}, {0, 0}};
  const DenseMatrix inv = invert(m, kTol);
  CHECK(approx_equal(multiply(p, multiply(inv, p)),
                     DenseMatrix{{2.0 / 7, 0}, {0, 0}}, 1e-14));
}

TEST_CASE("matrix construction rejects non-finite entries") {
  CHECK_THROWS_AS(DenseMatrix(1, 1, {std::nan("")}), NonFinite);
  CHECK_THROWS_AS(DenseMatrix(1, 2, {1.0}), ShapeMismatch);
}

TEST_CASE("leaf verdicts") {
  const LeafCheck pd = is_pd_leaf(DenseMatrix{{26.0 / 7, 1}, {1, 2}}, kTol);
  CHECK(pd.verdict);
  CHECK(pd.lambda_min > 1.5);

  CHECK_FALSE(is_pd_leaf(DenseMatrix(2, 2), kTol).verdict);

  const LeafCheck indef = is_pd_leaf(DenseMatrix{{1, 2}, {2, 1}}, kTol);
  CHECK_FALSE(indef.verdict);
  CHECK(indef.lambda_min == doctest::Approx(-1.0).epsilon(1e-12));

  const LeafCheck nn = is_nn_leaf(DenseMatrix{{1, 1}, {1, 1}}, kTol);
  CHECK(nn.verdict);
  CHECK(nn.lambda_min == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_FALSE(is_nn_leaf(DenseMatrix{{-1}}, kTol).verdict);
  CHECK(is_nn_leaf(DenseMatrix{{2, 1}, {1, 2}}, kTol).verdict);
}

TEST_CASE("pd implies nn on random symmetric matrices") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const DenseMatrix m = random_symmetric(rng, 1 + static_cast<int>(rng.next() % 6));
    if (is_pd_leaf(m, kTol).verdict) CHECK(is_nn_leaf(m, kTol).verdict);
  }
}

TEST_CASE("spectral shift bound on A^T A + c I") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 6);
    const DenseMatrix a = random_square(rng, n);
    const double c = 0.5 + rng.uniform01() * 3.0;
    DenseMatrix s = multiply(transpose(a), a);
    for (int i = 0; i < n; ++i) s(i, i) += c;
    CHECK(sym_eig_min(s, kTol) >= c - 1e-9 * max_abs(s));
  }
}

TEST_CASE("invert-then-multiply residual stays below 1e-8") {
  SplitMix64 rng(13);
  int accepted = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng.next() % 8);
    const DenseMatrix m = random_square(rng, n);
    if (!invert_gate(m, kTol).pass) continue;
    ++accepted;
    const DenseMatrix r = subtract(multiply(m, invert(m, kTol)), DenseMatrix::identity(n));
    CHECK(max_abs(r) <= 1e-8);
  }
  CHECK(accepted > 50);
}

TEST_CASE("sym_eig_min is invariant under simultaneous permutation") {
  SplitMix64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.next() % 7);
    const DenseMatrix m = random_symmetric(rng, n);
    // random permutation by seeded swaps
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    DenseMatrix pm(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) pm(i, j) = m(perm[i], perm[j]);
    }
    const double a = sym_eig_min(m, kTol);
    const double b = sym_eig_min(pm, kTol);
    CHECK(std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)));
  }
}

TEST_CASE("tolerances must be strictly positive") {
  Tolerances bad;
  bad.pd_eps = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.pd_eps = -1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  CHECK_NOTHROW(Tolerances{}.validate());
}

TEST_CASE("psd square root squares back") {
  CHECK(approx_equal(sqrt_psd(DenseMatrix::identity(3), kTol), DenseMatrix::identity(3), 1e-12));
  const DenseMatrix m{{4, 1}, {1, 2}};
  const DenseMatrix r = sqrt_psd(m, kTol);
  CHECK(approx_equal(multiply(r, r), m, 1e-10));
  const DenseMatrix ir = inv_sqrt_psd(m, kTol);
  CHECK(approx_equal(multiply(r, ir), DenseMatrix::identity(2), 1e-10));
  CHECK_THROWS_AS(sqrt_psd(DenseMatrix{{-1}}, kTol), Error);
}
