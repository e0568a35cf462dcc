#include <random>

#include "doctest.h"
#include "moore/errors.hpp"
#include "moore/exponent_set.hpp"
#include "moore/moore_core.hpp"
#include "moore/poly_sparse.hpp"
#include "support.hpp"

using namespace moore;

namespace {

std::shared_ptr<const BaseField> fq(std::uint32_t q) {
  return std::make_shared<const BaseField>(BaseField::of_order(q));
}

}  // namespace

TEST_SUITE("poly_sparse") {

TEST_CASE("G_2 and the quotient F_{0,2} / G_2 over F_2") {
  const auto f2 = fq(2);
  const SparsePoly G = sym_moore_poly(f2, 2, {0, 1});
  CHECK(G == parse_poly(f2, 2, "X1^2*X2 + X1*X2^2"));
  const SparsePoly F = sym_moore_poly(f2, 2, {0, 2});
  const SparsePoly H = divexact(F, G);
  CHECK(H == parse_poly(f2, 2, "X1^2 + X1*X2 + X2^2"));
  CHECK(H * G == F);
}

TEST_CASE("symbolic determinant evaluates to the numeric one") {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2ull, 3ull}) {
    const FieldCtx ctx = FieldCtx::create_q(q, 4);
    const auto base = fq(static_cast<std::uint32_t>(q));
    for (const std::vector<std::uint32_t>& exps :
         {std::vector<std::uint32_t>{0, 1}, {0, 3}, {1, 2}, {0, 1, 3}, {0, 2, 3}}) {
      const SparsePoly F = sym_moore_poly(base, static_cast<std::uint32_t>(exps.size()), exps);
      CHECK(F.is_homogeneous());
      const ExponentSet I{4, exps};
      for (int t = 0; t < 40; ++t) {
        const auto A = testing_support::random_tuple(ctx, exps.size(), rng);
        CHECK(eval_poly(ctx, F, A) == moore_det(ctx, A, I));
      }
    }
  }
}

TEST_CASE("F_I is divisible by G_k") {
  for (std::uint32_t q : {2u, 3u}) {
    const auto base = fq(q);
    const SparsePoly G3 = sym_moore_poly(base, 3, {0, 1, 2});
    for (const std::vector<std::uint32_t>& exps :
         {std::vector<std::uint32_t>{0, 1, 3}, {0, 2, 3}, {1, 2, 4}, {0, 1, 4}}) {
      const SparsePoly F = sym_moore_poly(base, 3, exps);
      const SparsePoly H = divexact(F, G3);
      CHECK(H * G3 == F);
    }
  }
}

TEST_CASE("inexact division is reported") {
  const auto f3 = fq(3);
  const SparsePoly a = parse_poly(f3, 2, "X1^2 + X2");
  const SparsePoly b = parse_poly(f3, 2, "X1 + X2");
  CHECK_THROWS_AS(divexact(a, b), InexactDivision);
}

TEST_CASE("ring operations") {
  const auto f3 = fq(3);
  const SparsePoly x = SparsePoly::variable(f3, 2, 0);
  const SparsePoly y = SparsePoly::variable(f3, 2, 1);
  const SparsePoly s = x + y;
  CHECK((s * s * s) == parse_poly(f3, 2, "X1^3 + X2^3"));
  CHECK((s - s).is_zero());
  CHECK(s.scaled(2) == parse_poly(f3, 2, "2*X1 + 2*X2"));
  CHECK((s * s).degree() == 2);
  CHECK_FALSE((s * s + x).is_homogeneous());
}

TEST_CASE("partial derivatives") {
  const auto f3 = fq(3);
  const SparsePoly f = parse_poly(f3, 2, "X1^3*X2 + X1^2*X2^2 + X2");
  CHECK(partial_derivative(f, 0) == parse_poly(f3, 2, "2*X1*X2^2"));
  CHECK(partial_derivative(f, 1) == parse_poly(f3, 2, "X1^3 + 2*X1^2*X2 + 1"));
}

TEST_CASE("printing and parsing round trip") {
  const auto f4 = fq(4);
  const SparsePoly F = sym_moore_poly(f4, 3, {0, 1, 3});
  CHECK(parse_poly(f4, 3, to_string(F)) == F);
  CHECK_THROWS_AS(parse_poly(f4, 2, "X3"), InvalidInput);
}

TEST_CASE("term budget") {
  SymbolicOptions tight;
  tight.max_terms = 3;
  CHECK_THROWS_AS(sym_moore_poly(3, 3, {0, 1, 3}, tight), BudgetExceeded);
}

}  // TEST_SUITE
