#include <random>
#include <set>

#include "doctest.h"
#include "moore/exponent_set.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/linpoly.hpp"
#include "moore/moore_core.hpp"
#include "moore/rank_metric.hpp"
#include "support.hpp"

using namespace moore;

namespace {

LinPoly codeword(const FieldCtx& ctx, const std::vector<FFElem>& a, const ExponentSet& I) {
  LinPoly f = LinPoly::zero(ctx);
  for (std::size_t j = 0; j < a.size(); ++j) f.coeffs[I.exps[j]] = ctx.add(f.coeffs[I.exps[j]], a[j]);
  return f;
}

using Table = std::vector<std::uint64_t>;  // images of the power basis

// Brute-force idealiser dimensions: try every F_q-linear map of F_{q^n}.
IdealiserDims brute_idealisers(const FieldCtx& ctx, const ExponentSet& I) {
  const std::uint32_t n = ctx.n();
  const std::uint64_t Q = ctx.order();
  std::vector<FFElem> basis(n);
  for (std::uint32_t j = 0; j < n; ++j) basis[j] = FFElem{oracle::ipow(ctx.q(), j)};

  auto apply = [&](const Table& phi, FFElem x) {
    const auto c = ctx.coeffs(x);
    FFElem s = ctx.zero();
    for (std::uint32_t j = 0; j < n; ++j) s = ctx.add(s, ctx.scale(c[j], FFElem{phi[j]}));
    return s;
  };
  auto table_of = [&](auto&& fn) {
    Table t(n);
    for (std::uint32_t j = 0; j < n; ++j) t[j] = fn(basis[j]).code;
    return t;
  };

  std::set<Table> code;
  std::vector<Table> gens;
  const std::uint64_t total = oracle::ipow(Q, I.k());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<FFElem> a(I.k());
    std::uint64_t t = idx;
    for (auto& x : a) {
      x = FFElem{t % Q};
      t /= Q;
    }
    const LinPoly f = codeword(ctx, a, I);
    code.insert(table_of([&](FFElem x) { return lin_eval(ctx, f, x); }));
  }
  for (std::size_t j = 0; j < I.k(); ++j) {
    for (std::uint32_t b = 0; b < n; ++b) {
      std::vector<FFElem> a(I.k(), ctx.zero());
      a[j] = basis[b];
      const LinPoly f = codeword(ctx, a, I);
      gens.push_back(table_of([&](FFElem x) { return lin_eval(ctx, f, x); }));
    }
  }

  std::uint64_t left = 0, right = 0;
  const std::uint64_t maps = oracle::ipow(Q, n);
  for (std::uint64_t idx = 0; idx < maps; ++idx) {
    Table phi(n);
    std::uint64_t t = idx;
    for (auto& v : phi) {
      v = t % Q;
      t /= Q;
    }
    bool l = true, r = true;
    for (const Table& g : gens) {
      if (l && !code.count(table_of([&](FFElem x) { return apply(phi, apply(g, x)); }))) l = false;
      if (r && !code.count(table_of([&](FFElem x) { return apply(g, apply(phi, x)); }))) r = false;
      if (!l && !r) break;
    }
    left += l;
    right += r;
  }
  IdealiserDims d;
  while (oracle::ipow(ctx.q(), d.left) < left) ++d.left;
  while (oracle::ipow(ctx.q(), d.right) < right) ++d.right;
  return d;
}

}  // namespace

TEST_SUITE("rank_metric") {

TEST_CASE("codeword rank is the rank of the evaluation matrix") {
  std::mt19937_64 rng(17);
  const FieldCtx ctx = FieldCtx::create_q(3, 4);
  const ExponentSet I{4, {0, 1, 3}};
  for (int t = 0; t < 100; ++t) {
    const auto a = testing_support::random_tuple(ctx, 3, rng);
    const LinPoly f = codeword(ctx, a, I);
    CHECK(codeword_rank(ctx, a, I) == rank(ctx.base(), lin_matrix(ctx, f)));
  }
}

TEST_CASE("Gabidulin codes are MRD") {
  const FieldCtx ctx = FieldCtx::create_q(2, 5);
  const DistanceReport d = min_rank_distance(ctx, ExponentSet{5, {0, 1}});
  CHECK(d.min_rank_distance == 4);
  CHECK(d.singleton == 4);
  CHECK(d.is_mrd);
  CHECK(d.codewords == 33);
  CHECK(codeword_rank(ctx, d.min_codeword, ExponentSet{5, {0, 1}}) == 4);
}

TEST_CASE("{0,2} over F_16 is not MRD") {
  const FieldCtx ctx = FieldCtx::create_q(2, 4);
  const DistanceReport d = min_rank_distance(ctx, ExponentSet{4, {0, 2}});
  CHECK(d.min_rank_distance == 2);
  CHECK_FALSE(d.is_mrd);
}

TEST_CASE("distance does not depend on the worker count") {
  const FieldCtx ctx = FieldCtx::create_q(3, 4);
  DistanceOptions one, many;
  one.parallel.jobs = 1;
  many.parallel.jobs = 4;
  many.parallel.chunk = 3;
  const auto a = min_rank_distance(ctx, ExponentSet{4, {0, 2}}, one);
  const auto b = min_rank_distance(ctx, ExponentSet{4, {0, 2}}, many);
  CHECK(a.min_rank_distance == b.min_rank_distance);
  CHECK(a.min_codeword == b.min_codeword);
}

TEST_CASE("idealisers agree with brute force over all linear maps") {
  struct Cfg {
    std::uint64_t q;
    std::uint32_t n;
    ExponentSet I;
  };
  for (const Cfg& c : {Cfg{2, 3, {3, {0, 1}}}, Cfg{2, 4, {4, {0, 1}}}, Cfg{2, 4, {4, {0, 2}}},
                       Cfg{2, 4, {4, {0, 1, 3}}}, Cfg{3, 2, {2, {0, 1}}}, Cfg{2, 3, {3, {0}}}}) {
    const FieldCtx ctx = FieldCtx::create_q(c.q, c.n);
    const IdealiserDims want = brute_idealisers(ctx, c.I);
    const IdealiserDims got = idealiser_dims(ctx, c.I);
    CAPTURE(to_string(c.I));
    CHECK(got.left == want.left);
    CHECK(got.right == want.right);
  }
}

TEST_CASE("idealiser dimensions of Gabidulin and full-support codes") {
  const FieldCtx f32 = FieldCtx::create_q(2, 5);
  const FieldCtx f81 = FieldCtx::create_q(3, 4);
  auto d = idealiser_dims(f32, ExponentSet{5, {0, 1}});
  CHECK(d.left == 5);
  CHECK(d.right == 5);
  d = idealiser_dims(f81, ExponentSet{4, {0, 1}});
  CHECK(d.left == 4);
  CHECK(d.right == 4);
  d = idealiser_dims(f81, ExponentSet{4, {0, 1, 2, 3}});
  CHECK(d.left == 16);
  CHECK(d.right == 16);
}

}  // TEST_SUITE
