#include <numeric>
#include <random>

#include "doctest.h"
#include "moore/errors.hpp"
#include "moore/exponent_set.hpp"
#include "moore/linpoly.hpp"
#include "support.hpp"

using namespace moore;

namespace {

LinPoly random_linpoly(const FieldCtx& ctx, std::mt19937_64& rng) {
  LinPoly f = LinPoly::zero(ctx);
  for (auto& c : f.coeffs) c = rng() % 3 == 0 ? ctx.zero() : ctx.random(rng);
  return f;
}

FFElem direct_eval(const FieldCtx& ctx, const LinPoly& f, FFElem x) {
  FFElem s = ctx.zero();
  std::uint64_t qj = 1;
  for (std::size_t j = 0; j < f.coeffs.size(); ++j, qj *= ctx.q()) s = ctx.add(s, ctx.mul(f.coeffs[j], ctx.pow(x, qj)));
  return s;
}

}  // namespace

TEST_SUITE("linpoly") {

TEST_CASE("evaluation is the sum of Frobenius powers") {
  std::mt19937_64 rng(2);
  const FieldCtx ctx = FieldCtx::create_q(3, 4);
  for (int t = 0; t < 200; ++t) {
    const LinPoly f = random_linpoly(ctx, rng);
    const FFElem x = ctx.random(rng);
    CHECK(lin_eval(ctx, f, x) == direct_eval(ctx, f, x));
  }
}

TEST_CASE("kernel of X^{q^d} - X has dimension gcd(d, n)") {
  for (std::uint64_t q : {2ull, 3ull}) {
    for (std::uint32_t n = 2; n <= 6; ++n) {
      const FieldCtx ctx = FieldCtx::create_q(q, n);
      for (std::uint32_t d = 1; d < n; ++d) {
        LinPoly f = LinPoly::monomial(ctx, d, ctx.one());
        f.coeffs[0] = ctx.neg(ctx.one());
        const LinKernel ker = lin_kernel(ctx, f);
        CHECK(ker.dim == std::gcd(d, n));
        std::uint64_t roots = 0;
        for (std::uint64_t x = 0; x < ctx.order(); ++x) roots += lin_eval(ctx, f, FFElem{x}).code == 0;
        CHECK(roots == oracle::ipow(q, ker.dim));
        for (FFElem b : ker.basis) CHECK(lin_eval(ctx, f, b) == ctx.zero());
      }
    }
  }
}

TEST_CASE("matrix of a linearized polynomial has rank n - kernel dimension") {
  std::mt19937_64 rng(6);
  const FieldCtx ctx = FieldCtx::create_q(2, 5);
  for (int t = 0; t < 50; ++t) {
    const LinPoly f = random_linpoly(ctx, rng);
    std::uint64_t roots = 0;
    for (std::uint64_t x = 0; x < ctx.order(); ++x) roots += lin_eval(ctx, f, FFElem{x}).code == 0;
    const LinKernel ker = lin_kernel(ctx, f);
    CHECK(oracle::ipow(2, ker.dim) == roots);
    CHECK(rank(ctx.base(), lin_matrix(ctx, f)) == 5 - ker.dim);
  }
}

TEST_CASE("composition and right division") {
  std::mt19937_64 rng(8);
  const FieldCtx ctx = FieldCtx::create_q(3, 5);
  for (int t = 0; t < 200; ++t) {
    const LinPoly f = random_linpoly(ctx, rng);
    const LinPoly g = random_linpoly(ctx, rng);
    const FFElem x = ctx.random(rng);
    CHECK(lin_eval(ctx, lin_compose(ctx, g, f), x) == lin_eval(ctx, g, lin_eval(ctx, f, x)));

    // keep deg g + deg f below n so the product is not reduced mod X^{q^n} - X
    LinPoly lo = LinPoly::zero(ctx), hi = LinPoly::zero(ctx);
    const std::uint32_t a = 1 + static_cast<std::uint32_t>(rng() % 3);
    for (std::uint32_t j = 0; j <= a; ++j) lo.coeffs[j] = ctx.random(rng);
    lo.coeffs[a] = ctx.random_nonzero(rng);
    for (std::uint32_t j = 0; j + a < 5; ++j) hi.coeffs[j] = ctx.random(rng);
    const LinPoly prod = lin_compose(ctx, hi, lo);
    CHECK(lin_divides(ctx, lo, prod));
    CHECK(lin_divides_symbolic(ctx, lo, prod));
    LinPoly off = prod;
    off.coeffs[0] = ctx.add(off.coeffs[0], ctx.one());
    CHECK(lin_divides(ctx, lo, off) == lin_divides_symbolic(ctx, lo, off));
    if (!f.is_zero()) CHECK(lin_divides(ctx, f, g) == lin_divides_symbolic(ctx, f, g));
  }
  CHECK_THROWS_AS(lin_divides(ctx, LinPoly::zero(ctx), LinPoly::zero(ctx)), InvalidInput);
}

TEST_CASE("q-degree") {
  const FieldCtx ctx = FieldCtx::create_q(2, 4);
  CHECK_FALSE(LinPoly::zero(ctx).q_degree().has_value());
  CHECK(LinPoly::monomial(ctx, 2, ctx.one()).q_degree() == 2u);
}

TEST_CASE("k = 4 uses the unit convention for R") {
  const FieldCtx ctx = FieldCtx::create_q(2, 5);
  const ExponentSet I{5, {0, 1, 2, 4}};
  std::mt19937_64 rng(1);
  const LMNR v = build_LMNR(ctx, I, {ctx.random_nonzero(rng)});
  CHECK(v.r_is_convention);
  CHECK(v.R == ctx.one());
}

TEST_CASE("z-certificates are found, reproducible and re-verified") {
  const FieldCtx ctx = FieldCtx::create_q(2, 5);
  const ExponentSet I{5, {0, 1, 2, 4}};
  const auto a = case2_z_search(ctx, I);
  const auto b = case2_z_search(ctx, I);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->z == b->z);
  CHECK(a->trials <= 10000);
  CHECK(verify_z_certificate(ctx, I, a->z));
  CHECK(a->N != ctx.zero());

  ZSearchOptions seeded;
  seeded.seed = 99;
  const auto c = case2_z_search(ctx, I, seeded);
  REQUIRE(c.has_value());
  CHECK(verify_z_certificate(ctx, I, c->z));
}

TEST_CASE("z-search preconditions") {
  const FieldCtx ctx = FieldCtx::create_q(2, 6);
  CHECK_THROWS_AS(case2_z_search(ctx, ExponentSet{6, {0, 1, 3}}), PreconditionError);
  CHECK_THROWS_AS(case2_z_search(ctx, ExponentSet{6, {0, 1, 2, 3}}), PreconditionError);
  CHECK_THROWS_AS(case2_z_search(ctx, ExponentSet{6, {0, 1, 3, 4}}), PreconditionError);
  CHECK_THROWS_AS(case2_z_search(ctx, ExponentSet{5, {0, 1, 2, 4}}), InvalidInput);
}

}  // TEST_SUITE
