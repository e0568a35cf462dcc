#include <algorithm>
#include <random>

#include "doctest.h"
#include "moore/errors.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/gf_tower.hpp"
#include "moore/kernels.hpp"
#include "support.hpp"

using namespace moore;

TEST_SUITE("gf_tower") {

TEST_CASE("prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(251));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power(8) == std::make_pair(2u, 3u));
  CHECK(prime_power(9) == std::make_pair(3u, 2u));
  CHECK(prime_power(243) == std::make_pair(3u, 5u));
  CHECK_FALSE(prime_power(6).has_value());
  CHECK_FALSE(prime_power(1).has_value());
}

TEST_CASE("irreducibility agrees with trial division") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const BaseField fp = BaseField::create(p, 1);
    for (std::uint32_t deg = 1; deg <= (p == 5 ? 3u : 5u); ++deg) {
      for (std::uint64_t idx = 0; idx < oracle::ipow(p, deg); ++idx) {
        oracle::Poly f = oracle::monic_from_index(idx, deg, p);
        UPoly u(f.begin(), f.end());
        CHECK(is_irreducible(fp, u) == oracle::irreducible(f, p));
        CHECK(is_irreducible_mod_p(p, u) == oracle::irreducible(f, p));
      }
    }
  }
}

TEST_CASE("default modulus is the least irreducible from the constant term up") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t deg = 2; deg <= (p <= 3 ? 7u : 4u); ++deg) {
      oracle::Poly best;
      for (std::uint64_t idx = 0; idx < oracle::ipow(p, deg); ++idx) {
        oracle::Poly f = oracle::monic_from_index(idx, deg, p);
        if (!oracle::irreducible(f, p)) continue;
        if (best.empty() || f < best) best = f;
      }
      const UPoly got = least_irreducible(BaseField::create(p, 1), deg);
      CHECK(got == UPoly(best.begin(), best.end()));
    }
  }
  CHECK(FieldCtx::create_q(2, 4).ext_modulus() == UPoly{1, 0, 0, 1, 1});
}

TEST_CASE("extension degrees with no small root still resolve quickly") {
  const FieldCtx ctx = FieldCtx::create_q(5, 20);
  CHECK(ctx.ext_modulus().size() == 21);
  CHECK(ctx.ext_modulus()[0] != 0);
}

TEST_CASE("arithmetic matches an independently built field") {
  struct Cfg {
    std::uint32_t p, n;
  };
  for (Cfg c : {Cfg{2, 4}, Cfg{2, 6}, Cfg{3, 3}, Cfg{5, 2}, Cfg{7, 2}}) {
    const oracle::Field F(c.p, c.n);
    const FieldCtx ctx = testing_support::aligned_field(F, c.p, c.n);
    REQUIRE(ctx.order() == F.size());
    for (std::uint64_t a = 0; a < F.size(); ++a) {
      for (std::uint64_t b = 0; b < F.size(); ++b) {
        CHECK(ctx.add(FFElem{a}, FFElem{b}).code == F.add(a, b));
        CHECK(ctx.mul(FFElem{a}, FFElem{b}).code == F.mul(a, b));
        CHECK(ctx.mul_generic(FFElem{a}, FFElem{b}).code == F.mul(a, b));
      }
      if (a != 0) CHECK(ctx.inv(FFElem{a}).code == F.inv(a));
      CHECK(ctx.pow(FFElem{a}, 13).code == F.pow(a, 13));
    }
  }
}

TEST_CASE("table and generic paths agree on towers") {
  std::mt19937_64 rng(7);
  struct Cfg {
    std::uint64_t q;
    std::uint32_t n;
  };
  for (Cfg c : {Cfg{4, 3}, Cfg{8, 2}, Cfg{9, 3}, Cfg{16, 2}, Cfg{3, 7}, Cfg{2, 10}, Cfg{256, 2}}) {
    const FieldCtx ctx = FieldCtx::create_q(c.q, c.n);
    REQUIRE(ctx.has_tables());
    for (int t = 0; t < 500; ++t) {
      const FFElem a = ctx.random(rng), b = ctx.random(rng), d = ctx.random(rng);
      CHECK(ctx.mul(a, b) == ctx.mul_generic(a, b));
      CHECK(ctx.add(a, b) == ctx.add_generic(a, b));
      CHECK(ctx.sub(a, b) == ctx.sub_generic(a, b));
      CHECK(ctx.mul(a, ctx.add(b, d)) == ctx.add(ctx.mul(a, b), ctx.mul(a, d)));
      CHECK(ctx.pow(a, 1234567) == ctx.pow_generic(a, 1234567));
      const std::uint64_t j = static_cast<std::uint64_t>(t) % (c.n + 1);
      CHECK(ctx.frobenius(a, j) == ctx.frobenius_matrix(a, j));
      CHECK(ctx.frobenius(a, 1) == ctx.pow(a, c.q));
      CHECK(ctx.frobenius(a, c.n) == a);
      if (a.code != 0) {
        CHECK(ctx.inv(a) == ctx.inv_generic(a));
        CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
      }
    }
  }
}

TEST_CASE("large fields fall back to generic arithmetic") {
  std::mt19937_64 rng(11);
  const FieldCtx ctx = FieldCtx::create_q(2, 40);
  CHECK_FALSE(ctx.has_tables());
  for (int t = 0; t < 200; ++t) {
    const FFElem a = ctx.random_nonzero(rng), b = ctx.random(rng);
    CHECK(ctx.mul(ctx.mul(a, b), ctx.inv(a)) == b);
    CHECK(ctx.frobenius(a, 40) == a);
    CHECK(ctx.pow(a, ctx.order() - 1) == ctx.one());
  }
}

TEST_CASE("primitive element has full order") {
  for (std::uint64_t q : {2ull, 3ull, 4ull, 5ull}) {
    const FieldCtx ctx = FieldCtx::create_q(q, 3);
    const FFElem g = ctx.primitive_element();
    std::uint64_t order = 1;
    for (FFElem x = g; x != ctx.one(); x = ctx.mul(x, g)) ++order;
    CHECK(order == ctx.order() - 1);
  }
}

TEST_CASE("base field elements are exactly the Frobenius fixed points") {
  const FieldCtx ctx = FieldCtx::create_q(4, 3);
  for (std::uint64_t x = 0; x < ctx.order(); ++x) {
    const bool fixed = ctx.frobenius(FFElem{x}, 1) == FFElem{x};
    CHECK(fixed == (x < 4));
  }
}

TEST_CASE("invalid fields are rejected") {
  CHECK_THROWS_AS(FieldCtx::create_q(6, 2), InvalidInput);
  CHECK_THROWS_AS(FieldCtx::create_q(2, 0), InvalidInput);
  CHECK_THROWS_AS(FieldCtx::create_q(2, 63), InvalidInput);
  CHECK_THROWS_AS(FieldCtx::create_q(512, 2), InvalidInput);
  FieldCtx::Overrides ov;
  ov.ext_modulus = UPoly{1, 0, 1};  // X^2 + 1 = (X + 1)^2 over F_2
  CHECK_THROWS_AS(FieldCtx::create_q(2, 2, ov), InvalidInput);
}

TEST_CASE("SIMD row kernels match the scalar reference") {
  if (kernels::detected_isa() != kernels::Isa::avx2) {
    MESSAGE("no AVX2 on this host; only the scalar path is exercised");
    return;
  }
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 13u, 16u, 27u, 32u, 64u, 251u, 256u}) {
    const BaseField f = BaseField::of_order(q);
    const kernels::RowKernel simd(f, kernels::Isa::avx2);
    const kernels::RowKernel ref(f, kernels::Isa::scalar);
    for (std::size_t len : {1u, 15u, 31u, 32u, 33u, 64u, 100u}) {
      std::vector<FqCode> src(len), a(len), b(len);
      for (auto& v : src) v = static_cast<FqCode>(rng() % q);
      for (auto& v : a) v = static_cast<FqCode>(rng() % q);
      b = a;
      const FqCode c = static_cast<FqCode>(rng() % q);
      simd.axpy(a.data(), src.data(), c, len);
      kernels::scalar::axpy(f, b.data(), src.data(), c, len);
      CHECK(a == b);
      ref.axpy(b.data(), src.data(), c, len);
      simd.axpy(a.data(), src.data(), c, len);
      CHECK(a == b);
      simd.scale(a.data(), c, len);
      kernels::scalar::scale(f, b.data(), c, len);
      CHECK(a == b);
    }
  }
}

TEST_CASE("rank is the same with SIMD, scalar and bit-packed elimination") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 4u, 7u}) {
    const BaseField f = BaseField::of_order(q);
    for (int t = 0; t < 200; ++t) {
      const std::size_t rows = 1 + rng() % 12, cols = 1 + rng() % 64;
      FqMatrix m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = static_cast<FqCode>(rng() % q);
      if (rows > 2) {  // force some dependence
        for (std::size_t c = 0; c < cols; ++c) m.at(rows - 1, c) = f.add(m.at(0, c), m.at(1, c));
      }
      const std::size_t r_scalar = rank(kernels::RowKernel(f, kernels::Isa::scalar), f, m);
      kernels::set_packed_gf2(false);
      const std::size_t r_bytes = rank(f, m);
      kernels::set_packed_gf2(true);
      const std::size_t r_default = rank(f, m);
      CHECK(r_scalar == r_bytes);
      CHECK(r_scalar == r_default);
      if (kernels::detected_isa() == kernels::Isa::avx2) {
        CHECK(rank(kernels::RowKernel(f, kernels::Isa::avx2), f, m) == r_scalar);
      }
    }
  }
}

}  // TEST_SUITE
