#include <cmath>
#include <set>
#include <tuple>

#include "doctest.h"
#include "moore/bounds.hpp"
#include "moore/errors.hpp"

using namespace moore;

namespace {

BigRational frac(long long a, long long b) { return BigRational(a) / BigRational(b); }

}  // namespace

TEST_SUITE("bounds") {

TEST_CASE("progressions modulo n") {
  CHECK(is_arithmetic_progression(ExponentSet{5, {0, 1, 3}}));
  CHECK_FALSE(is_arithmetic_progression(ExponentSet{7, {0, 1, 3}}));
  CHECK(is_arithmetic_progression(ExponentSet{7, {0, 2, 4}}));
  CHECK(is_arithmetic_progression(ExponentSet{8, {0, 3, 6}}));
  const ApInfo a = arithmetic_progression_info(ExponentSet{5, {0, 1, 3}});
  CHECK(a.is_ap);
  CHECK(a.coprime);
  CHECK(is_arithmetic_progression(ExponentSet{0, {0, 2, 4, 6}}));
  CHECK_FALSE(is_arithmetic_progression(ExponentSet{0, {0, 1, 3}}));
}

TEST_CASE("case labels") {
  CHECK(classify_case(ExponentSet{15, {0, 1, 3}}, 2) == Case::a);
  CHECK(classify_case(ExponentSet{20, {0, 1, 2, 5}}, 7) == Case::b);
  CHECK(classify_case(ExponentSet{20, {0, 1, 2, 5}}, 2) == Case::none);
  CHECK_THROWS_AS(classify_case(ExponentSet{7, {0, 2, 4}}, 2), PreconditionError);
  CHECK_THROWS_AS(classify_case(ExponentSet{7, {0, 2}}, 2), PreconditionError);
}

TEST_CASE("curve threshold is 4j + 2") {
  const CurveThreshold c = curve_threshold(ExponentSet{0, {0, 1, 3}});
  CHECK(c.N == 14);
  CHECK(c.j_neq_2i);
  CHECK_FALSE(curve_threshold(ExponentSet{0, {0, 2, 4}}).j_neq_2i);
}

TEST_CASE("general threshold brackets the exact inequality") {
  for (std::uint64_t q : {2ull, 3ull, 7ull}) {
    for (std::uint32_t imax : {3u, 4u, 6u}) {
      const std::uint64_t N = general_threshold_from_max(q, imax);
      const BigInt rhs = BigInt(13 * 13 * 13) * 1024 * big_pow(BigInt(q), 13ull * imax);
      CHECK(big_pow(BigInt(q), 3 * N) > rhs);
      CHECK(big_pow(BigInt(q), 3 * (N - 1)) <= rhs);
    }
  }
  CHECK(general_threshold_from_max(2, 4) == 25);
  CHECK(general_threshold(2, ExponentSet{0, {0, 1, 2, 4}}) == 25);
}

TEST_CASE("Bezout quantities at (q, k, i1, ik2, ik1) = (7, 4, 1, 2, 4)") {
  // values computed separately with exact rationals
  const BezoutGap g = bezout_gap(7, 4, 1, 2, 4);
  CHECK(g.tau == 845952);
  CHECK(g.b_tau == frac(3407083, 4));
  CHECK(g.gap == frac(357685, 4));
  CHECK(g.tau <= g.b_tau);
}

TEST_CASE("realizable Bezout cells") {
  CHECK(bezout_cell_realizable(BezoutCell{7, 4, 1, 2, 4}));
  CHECK_FALSE(bezout_cell_realizable(BezoutCell{7, 4, 1, 2, 3}));  // only {0,1,2,3}
  CHECK_FALSE(bezout_cell_realizable(BezoutCell{7, 4, 1, 3, 4}));
  CHECK(bezout_cell_realizable(BezoutCell{7, 5, 1, 4, 6}));
  CHECK_FALSE(bezout_cell_realizable(BezoutCell{7, 5, 1, 3, 4}));
  CHECK(case2_q_condition(7, 1));
  CHECK(case2_q_condition(3, 2));
  CHECK_FALSE(case2_q_condition(4, 1));
  CHECK_FALSE(case2_q_condition(2, 2));
  CHECK(case2_q_condition(2, 3));
}

TEST_CASE("realizable cells match an enumeration of exponent sets") {
  for (std::uint32_t k = 4; k <= 6; ++k) {
    std::set<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> seen;
    for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
      if (static_cast<std::uint32_t>(__builtin_popcount(mask)) != k - 1) continue;
      std::vector<std::uint32_t> I{0};
      for (std::uint32_t b = 0; b < 12; ++b)
        if (mask >> b & 1u) I.push_back(b + 1);
      if (I[2] != 2 * I[1]) continue;
      bool progression = true;
      for (std::uint32_t t = 0; t < k; ++t) progression = progression && I[t] == t * I[1];
      if (!progression) seen.emplace(I[1], I[k - 2], I[k - 1]);
    }
    std::size_t count = 0;
    for (std::uint32_t i1 = 1; i1 <= 12; ++i1)
      for (std::uint32_t a = i1 + 1; a <= 12; ++a)
        for (std::uint32_t b = a + 1; b <= 12; ++b) {
          const bool real = bezout_cell_realizable(BezoutCell{2, k, i1, a, b});
          CHECK(real == (seen.count({i1, a, b}) == 1));
          count += real;
        }
    CHECK(count == seen.size());
  }
}

TEST_CASE("Bezout sweep bookkeeping") {
  const BezoutSweep all = bezout_sweep({7}, {4}, 6, false);
  CHECK(all.cells == 20);  // choose(6, 3)
  CHECK(all.hypothesis_cells == 20);
  const BezoutSweep real = bezout_sweep({7}, {4}, 6, true);
  CHECK(real.cells < all.cells);
}

TEST_CASE("t0 and t1 thresholds") {
  const ZahidThresholds a = zahid_thresholds(1, 1);
  REQUIRE(a.t0_exact.has_value());
  CHECK(*a.t0_exact == 6);
  CHECK(a.t0_lower <= 6);
  CHECK(a.t0_upper >= 6);
  CHECK(zahid_thresholds(1, 3).t1 == 2);
  CHECK(zahid_thresholds(2, 3).t1 == 18);
  const ZahidThresholds b = zahid_thresholds(4, 7);
  CHECK(b.t0_lower <= b.t0_upper);
}

TEST_CASE("known families") {
  CHECK(known_family(ExponentSet{7, {0, 1, 3}}, 3) == Family::sporadic_n7);
  CHECK(known_family(ExponentSet{7, {1, 2, 4}}, 3) == Family::sporadic_n7);
  CHECK(known_family(ExponentSet{7, {0, 1, 3}}, 2) == Family::none);
  CHECK(known_family(ExponentSet{5, {0, 2}}, 2) == Family::gabidulin);
  CHECK(known_family(ExponentSet{6, {0, 2}}, 2) == Family::none);
  CHECK(known_family(ExponentSet{7, {0, 1, 2, 5}}, 3) == Family::sporadic_n7);
}

TEST_CASE("theorem triggers") {
  const auto gcd = theorem_applies(ExponentSet{8, {0, 2, 6}}, 2);
  REQUIRE(gcd.has_value());
  CHECK(gcd->theorem == "curve");
  CHECK(gcd->trigger == "gcd");
  const auto thr = theorem_applies(ExponentSet{15, {0, 1, 3}}, 2);
  REQUIRE(thr.has_value());
  CHECK(thr->trigger == "threshold");
  CHECK(thr->threshold == 14);
  CHECK_FALSE(theorem_applies(ExponentSet{14, {0, 1, 3}}, 2).has_value());
  CHECK_FALSE(theorem_applies(ExponentSet{7, {0, 1, 3}}, 3).has_value());
}

TEST_CASE("combined verdicts") {
  const FieldCtx f37 = FieldCtx::create_q(3, 7);
  const FinalReport a = final_verdict(f37, ExponentSet{7, {0, 1, 3}});
  CHECK(a.verdict == Verdict::moore_known_family);
  CHECK(a.consistent);

  const FieldCtx f28 = FieldCtx::create_q(2, 8);
  const FinalReport b = final_verdict(f28, ExponentSet{8, {0, 2, 6}});
  CHECK(b.verdict == Verdict::not_moore_by_theorem);
  REQUIRE(b.engine.has_value());
  CHECK_FALSE(b.engine->is_moore);
  CHECK(b.consistent);

  const FieldCtx f26 = FieldCtx::create_q(2, 6);
  const FinalReport c = final_verdict(f26, ExponentSet{6, {0, 1, 3}});
  CHECK((c.verdict == Verdict::not_moore_with_witness || c.verdict == Verdict::moore_by_exhaustion));

  FinalOptions tight;
  tight.check.budget = 10;
  const FieldCtx f210 = FieldCtx::create_q(2, 10);
  CHECK(final_verdict(f210, ExponentSet{10, {0, 1, 3}}, tight).verdict == Verdict::undecided_budget);
}

TEST_CASE("bounds report fields") {
  const BoundsReport r = bounds_report(ExponentSet{0, {0, 1, 3}}, 2);
  REQUIRE(r.curve.has_value());
  CHECK(r.curve->N == 14);
  REQUIRE(r.case_label.has_value());
  CHECK(*r.case_label == Case::a);
  CHECK(r.ell == BigInt(4));
  CHECK(r.zahid_e == 7);
  CHECK(r.zahid_f == 4);
}

}  // TEST_SUITE
