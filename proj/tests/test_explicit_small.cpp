#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schurcert/explicit_small.hpp"
#include "schurcert/linalg.hpp"
#include "schurcert/oracle.hpp"
#include "schurcert/schur_first.hpp"
#include "schurcert/schur_second.hpp"

using namespace schurcert;

namespace {

const Tolerances kTol;

BlockMatrix example_hessian(int n) {
  auto corner = [n](double a) {
    DenseMatrix m(n, n);
    m(0, 0) = a;
    m(0, 1) = 1;
    m(1, 0) = 1;
    m(1, 1) = 2;
    for (int i = 2; i < n; ++i) m(i, i) = 2;
    return m;
  };
  DenseMatrix e11(n, n);
  e11(0, 0) = 1;
  const DenseMatrix zero(n, n);
  return BlockMatrix({n, n, n},
                     {{corner(4), zero, e11}, {zero, corner(2), zero}, {e11, zero, corner(4)}});
}

BlockMatrix random_3block(std::uint64_t seed, double shift) {
  SplitMix64 rng(seed);
  std::vector<int> dims{1 + static_cast<int>(rng.next() % 3),
                        1 + static_cast<int>(rng.next() % 3),
                        1 + static_cast<int>(rng.next() % 3)};
  return random_self_adjoint(dims, shift, seed);
}

}  // namespace

TEST_CASE("generalized complements on scalar blocks") {
  const BlockMatrix b = scalar_blocks(DenseMatrix{{4, 1, 0}, {1, 2, 0}, {0, 0, 2}});
  const DenseMatrix d = gen_schur_first_3(b, 2, 1, 2, kTol);
  CHECK(d(0, 0) == doctest::Approx(7.0 / 4).epsilon(1e-15));

  // zero coupling leaves the leading term
  CHECK(gen_schur_first_3(b, 2, 3, 2, kTol)(0, 0) == doctest::Approx(2.0));
  CHECK(gen_schur_first_3(b, 1, 3, 2, kTol)(0, 0) == doctest::Approx(1.0));  // B12 - 0

  CHECK_THROWS_AS(gen_schur_first_3(b, 2, 4, 2, kTol), Error);
}

TEST_CASE("generalized complement reproduces the sequence-space result") {
  const BlockMatrix h = example_hessian(2);
  const DenseMatrix d = gen_schur_first_3(h, 3, 1, 3, kTol);
  CHECK(d(0, 0) == doctest::Approx(26.0 / 7).epsilon(1e-12));
  CHECK(d(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(d(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("ten-check certificate on the block identity") {
  const BlockMatrix eye = assemble(DenseMatrix::identity(6), {2, 2, 2});
  const SignCertificate cert = check_pd_3x3(eye, kTol);
  CHECK(cert.verdict == PdVerdict::PositiveDefinite);
  REQUIRE(cert.leaf_count == 10);
  for (const CertNode& leaf : cert.root.children) {
    CHECK(leaf.lambda_min.value() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ten-check certificate chains match the enumerated chains") {
  const BlockMatrix eye = assemble(DenseMatrix::identity(3), {1, 1, 1});
  const SignCertificate cert = check_pd_3x3(eye, kTol);
  const auto chains = enumerate_chains(3);
  REQUIRE(cert.root.children.size() == chains.size());
  for (size_t i = 0; i < chains.size(); ++i) {
    CHECK(cert.root.children[i].chain == chains[i].str());
  }
}

TEST_CASE("ten-check certificate agrees with the recursion and the oracle") {
  int pd = 0, npd = 0;
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const BlockMatrix b = random_3block(seed, seed % 2 == 0 ? 0.5 : -0.5);
    const SignCertificate fast = check_pd_3x3(b, kTol);
    const SignCertificate rec = check_pd(b, kTol);
    CHECK(fast.verdict == rec.verdict);
    const bool oracle = sym_eig_min(flatten(b), kTol) > kTol.pd_eps * block_scale(b);
    CHECK((fast.verdict == PdVerdict::PositiveDefinite) == oracle);
    (fast.verdict == PdVerdict::PositiveDefinite ? pd : npd) += 1;
  }
  CHECK(pd > 30);
  CHECK(npd > 30);
}

TEST_CASE("sequence-space Hessian passes the ten checks") {
  CHECK(check_pd_3x3(example_hessian(4), kTol).verdict == PdVerdict::PositiveDefinite);
}

TEST_CASE("inverse sub-blocks on closed-form cases") {
  // decoupled trailing pair: plain block inverses
  const BlockMatrix b = scalar_blocks(DenseMatrix{{4, 1, 1}, {1, 2, 0}, {1, 0, 2}});
  const InverseSubBlocks3 ib = inverse_sub_blocks_3(b, kTol);
  CHECK(ib.b22m(0, 0) == doctest::Approx(0.5));
  CHECK(ib.b23m(0, 0) == doctest::Approx(0.0));
  CHECK(ib.b32m(0, 0) == doctest::Approx(0.0));
  CHECK(ib.b33m(0, 0) == doctest::Approx(0.5));

  const BlockMatrix c = scalar_blocks(DenseMatrix{{4, 0, 0}, {0, 2, 1}, {0, 1, 2}});
  const InverseSubBlocks3 ic = inverse_sub_blocks_3(c, kTol);
  CHECK(ic.b22m(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(ic.b23m(0, 0) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
  CHECK(ic.b32m(0, 0) == doctest::Approx(-1.0 / 3).epsilon(1e-12));
  CHECK(ic.b33m(0, 0) == doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("inverse sub-blocks reconstruct the trailing inverse") {
  for (std::uint64_t seed = 40; seed < 80; ++seed) {
    const BlockMatrix b = random_3block(seed, 0.4);
    InverseSubBlocks3 ib;
    try {
      ib = inverse_sub_blocks_3(b, kTol);
    } catch (const NumericallySingular&) {
      continue;
    }
    const int d2 = b.dims()[1], d3 = b.dims()[2];
    DenseMatrix inv(d2 + d3, d2 + d3), trailing(d2 + d3, d2 + d3);
    for (int i = 0; i < d2 + d3; ++i) {
      for (int j = 0; j < d2 + d3; ++j) {
        const DenseMatrix& src = (i < d2) ? (j < d2 ? ib.b22m : ib.b23m)
                                          : (j < d2 ? ib.b32m : ib.b33m);
        inv(i, j) = src(i < d2 ? i : i - d2, j < d2 ? j : j - d2);
        const DenseMatrix& blk = b.block(i < d2 ? 1 : 2, j < d2 ? 1 : 2);
        trailing(i, j) = blk(i < d2 ? i : i - d2, j < d2 ? j : j - d2);
      }
    }
    const DenseMatrix prod = multiply(trailing, inv);
    CHECK(max_abs(subtract(prod, DenseMatrix::identity(d2 + d3))) <= 1e-8 * block_scale(b));

    // the mirrored closed forms give the same blocks
    const Tolerances& tol = kTol;
    const DenseMatrix inv22 = invert(b.block(1, 1), tol);
    const DenseMatrix inv33 = invert(b.block(2, 2), tol);
    const DenseMatrix d232 =
        subtract(b.block(1, 1), multiply(b.block(1, 2), multiply(inv33, b.block(2, 1))));
    const DenseMatrix d323 =
        subtract(b.block(2, 2), multiply(b.block(2, 1), multiply(inv22, b.block(1, 2))));
    const DenseMatrix alt22 =
        multiply(add(DenseMatrix::identity(d2),
                     multiply(inv22, multiply(b.block(1, 2), multiply(invert(d323, tol), b.block(2, 1))))),
                 inv22);
    const DenseMatrix alt33 =
        multiply(add(DenseMatrix::identity(d3),
                     multiply(inv33, multiply(b.block(2, 1), multiply(invert(d232, tol), b.block(1, 2))))),
                 inv33);
    const DenseMatrix alt23 = scale(multiply(inv22, multiply(b.block(1, 2), invert(d323, tol))), -1.0);
    const DenseMatrix alt32 = scale(multiply(inv33, multiply(b.block(2, 1), invert(d232, tol))), -1.0);
    const double bound = 1e-8 * block_scale(b);
    CHECK(max_abs(subtract(ib.b22m, alt22)) <= bound);
    CHECK(max_abs(subtract(ib.b33m, alt33)) <= bound);
    CHECK(max_abs(subtract(ib.b23m, alt23)) <= bound);
    CHECK(max_abs(subtract(ib.b32m, alt32)) <= bound);
  }
}

TEST_CASE("three-stage nonnegativity on closed-form cases") {
  CHECK(check_nn_3x3(assemble(DenseMatrix::identity(3), {1, 1, 1}), kTol).verdict ==
        NNVerdict::Nonnegative);

  const BlockMatrix tri = scalar_blocks(DenseMatrix{{2, 1, 0}, {1, 2, 1}, {0, 1, 2}});
  const NNCertificate c = check_nn_3x3(tri, kTol);
  CHECK(c.verdict == NNVerdict::Nonnegative);
  REQUIRE(c.stages.size() == 3);
  CHECK(c.stages[0].lambda_min.value() == doctest::Approx(2.0));
  CHECK(c.stages[1].lambda_min.value() == doctest::Approx(1.5));
  CHECK(c.stages[2].lambda_min.value() == doctest::Approx(4.0 / 3));

  const BlockMatrix ones = scalar_blocks(DenseMatrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  const NNCertificate p = check_nn_3x3(ones, kTol);
  CHECK(p.verdict == NNVerdict::PreconditionFailed);
  CHECK(p.failure_stage.value() == 1);
}

TEST_CASE("three-stage closed form equals the sequential criterion") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const BlockMatrix b = random_3block(seed, seed % 2 == 0 ? 0.5 : -0.7);
    const NNCertificate fast = check_nn_3x3(b, kTol);
    const NNCertificate seq = check_nn(b, kTol);
    CHECK(fast.verdict == seq.verdict);
    if (fast.verdict != NNVerdict::PreconditionFailed) {
      REQUIRE(fast.stages.size() == seq.stages.size());
      for (size_t k = 0; k < fast.stages.size(); ++k) {
        CHECK(fast.stages[k].lambda_min.value() ==
              doctest::Approx(seq.stages[k].lambda_min.value()).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("bidiagonal detection") {
  CHECK(is_bidiagonal(example_hessian(3), kTol));
  CHECK(is_bidiagonal(assemble(DenseMatrix::identity(5), {2, 1, 2}), kTol));
  CHECK_FALSE(is_bidiagonal(random_self_adjoint({1, 1, 1, 1}, 0.5, 1), kTol));
  CHECK(is_bidiagonal(random_bidiagonal({2, 1, 2, 1}, 9), kTol));
}

TEST_CASE("bidiagonal fast path check counts") {
  const SignCertificate h = check_pd_bidiagonal(example_hessian(4), kTol);
  CHECK(h.verdict == PdVerdict::PositiveDefinite);
  CHECK(h.leaf_count == 5);  // three diagonal blocks, two x/z complements

  const SignCertificate eye4 =
      check_pd_bidiagonal(assemble(DenseMatrix::identity(4), {1, 1, 1, 1}), kTol);
  CHECK(eye4.verdict == PdVerdict::PositiveDefinite);
  CHECK(eye4.leaf_count == 8);

  const SignCertificate bad = check_pd_bidiagonal(scalar_blocks(DenseMatrix{{1, 2}, {2, 1}}), kTol);
  CHECK(bad.verdict == PdVerdict::NotPositiveDefinite);
  CHECK(bad.leaf_count == 4);

  CHECK_THROWS_AS(check_pd_bidiagonal(random_self_adjoint({1, 1, 1}, 0.5, 2), kTol),
                  NotBidiagonal);
}

TEST_CASE("bidiagonal fast path agrees with the recursion") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    std::vector<int> dims(n);
    SplitMix64 rng(seed * 31 + 1);
    for (int& d : dims) d = 1 + static_cast<int>(rng.next() % 3);
    const BlockMatrix b = random_bidiagonal(dims, seed);
    const SignCertificate fast = check_pd_bidiagonal(b, kTol);
    const SignCertificate rec = check_pd(b, kTol);
    CHECK(fast.verdict == rec.verdict);
    CHECK(fast.leaf_count == (n % 2 == 0 ? 2 * n : 2 * n - 1));
  }
}
