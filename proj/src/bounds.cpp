#include "moore/bounds.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "moore/errors.hpp"

namespace moore {

ApInfo arithmetic_progression_info(const ExponentSet& I) {
  ApInfo info;
  const std::uint32_t n = I.n;
  const std::size_t k = I.k();
  if (k == 0) return info;
  if (n == 0) {
    // No modulus: plain integer progression after removing the minimum.
    ExponentSet J = I;
    for (auto& e : J.exps) e -= I.exps.front();
    if (is_integer_progression(J)) {
      info.is_ap = true;
      info.difference = k > 1 ? J.exps[1] : 1;
      info.coprime = false;
    }
    return info;
  }
  if (n == 1 || k == 1) {
    info.is_ap = true;
    info.difference = 1;
    info.coprime = true;
    info.coprime_difference = 1;
    info.shift = (n - I.exps.front() % n) % n;
    return info;
  }
  std::vector<std::uint32_t> prog(k);
  for (std::uint32_t d = 1; d < n; ++d) {
    for (std::size_t j = 0; j < k; ++j) prog[j] = static_cast<std::uint32_t>((std::uint64_t{d} * j) % n);
    std::sort(prog.begin(), prog.end());
    if (std::adjacent_find(prog.begin(), prog.end()) != prog.end()) continue;
    for (std::uint32_t s = 0; s < n; ++s) {
      if (shifted(I, s).exps != prog) continue;
      if (!info.is_ap) {
        info.is_ap = true;
        info.difference = d;
        info.shift = s;
      }
      if (!info.coprime && std::gcd(d, n) == 1) {
        info.coprime = true;
        info.coprime_difference = d;
      }
      break;
    }
  }
  return info;
}

bool is_arithmetic_progression(const ExponentSet& I) { return arithmetic_progression_info(I).is_ap; }

const char* case_name(Case c) {
  switch (c) {
    case Case::a: return "a";
    case Case::b: return "b";
    case Case::c: return "c";
    case Case::d: return "d";
    case Case::none: return "none";
  }
  return "none";
}

Case case_conditions(const ExponentSet& I, std::uint64_t q) {
  if (I.k() < 3) return Case::none;
  const std::uint32_t i1 = I.exps[1] - I.exps[0];
  const std::uint32_t i2 = I.exps[2] - I.exps[0];
  if (i2 != 2 * i1) return Case::a;
  if (I.k() <= 3) return Case::none;
  if (q >= 7) return Case::b;
  if ((q == 3 || q == 4 || q == 5) && i1 > 1) return Case::c;
  if (q == 2 && i1 > 2) return Case::d;
  return Case::none;
}

Case classify_case(const ExponentSet& I, std::uint64_t q) {
  if (I.k() < 3) throw PreconditionError("case analysis needs k >= 3");
  if (is_arithmetic_progression(I)) throw PreconditionError("exponent set is an arithmetic progression");
  return case_conditions(I, q);
}

CurveThreshold curve_threshold(const ExponentSet& I) {
  if (I.k() != 3) throw PreconditionError("curve threshold needs k = 3");
  const std::uint32_t i = I.exps[1] - I.exps[0];
  const std::uint32_t j = I.exps[2] - I.exps[0];
  return CurveThreshold{4ULL * j + 2, j != 2 * i};
}

std::uint64_t general_threshold_from_max(std::uint64_t q, std::uint32_t i_max) {
  if (q < 2) throw InvalidInput("q must be at least 2");
  const BigInt bq = q;
  const BigInt rhs = BigInt(13 * 13 * 13) * 1024 * big_pow(bq, 13ULL * i_max);
  std::uint64_t N = (13ULL * i_max) / 3;
  BigInt lhs = big_pow(bq, 3 * N);
  const BigInt q3 = bq * bq * bq;
  while (lhs <= rhs) {
    ++N;
    lhs *= q3;
  }
  return N;
}

std::uint64_t general_threshold(std::uint64_t q, const ExponentSet& I) {
  if (I.k() <= 3) throw PreconditionError("general threshold needs k > 3");
  return general_threshold_from_max(q, I.exps.back() - I.exps.front());
}

BezoutGap bezout_gap(std::uint64_t q, std::uint32_t k, std::uint32_t i1, std::uint32_t ik2, std::uint32_t ik1) {
  if (k <= 3) throw PreconditionError("Bezout gap needs k > 3");
  if (!(1 <= i1 && i1 < ik2 && ik2 < ik1)) throw PreconditionError("need 1 <= i1 < ik2 < ik1");
  if (q < 2) throw InvalidInput("q must be at least 2");
  const BigInt bq = q;
  auto P = [&](std::uint64_t e) { return BigRational(big_pow(bq, e)); };
  const BigRational qi1 = P(i1);
  const BigRational sq = (qi1 + 1) * (qi1 + 1) / 4;

  BezoutGap g;
  g.tau = (P(2ULL * (ik1 - i1)) - P(2ULL * (ik1 - i1 - 1))) * qi1 + P(2ULL * (ik1 - i1 - 1)) * sq +
          (P(ik1 - ik2) + 1) * sq;
  const BigRational inner = (1 / qi1) * (1 - 1 / P(2)) + (qi1 + 1) * (qi1 + 1) / (4 * P(2ULL * i1 + 2)) +
                            1 / (4 * P(2ULL * k - 5)) + 1 / P(2ULL * k - 4);
  g.b_tau = P(2ULL * ik1) * inner + sq;
  g.d = big_pow(bq, ik1) + big_pow(bq, ik2) - big_pow(bq, k - 1) - big_pow(bq, k - 2);
  g.two_ninths_d2 = BigRational(2 * g.d * g.d) / 9;
  g.gap = g.two_ninths_d2 - g.b_tau;
  return g;
}

bool case2_q_condition(std::uint64_t q, std::uint32_t i1) {
  return q >= 7 || ((q == 3 || q == 4 || q == 5) && i1 > 1) || (q == 2 && i1 > 2);
}

bool bezout_cell_realizable(const BezoutCell& c) {
  if (c.k < 4 || !(1 <= c.i1 && c.i1 < c.ik2 && c.ik2 < c.ik1)) return false;
  if (c.k == 4) return c.ik2 == 2 * c.i1 && c.ik1 != 3 * c.i1;
  if (c.ik2 < 2 * c.i1 + (c.k - 4)) return false;
  // k = 5 leaves no free exponent, so {0, d, 2d, 3d, 4d} is the only set.
  if (c.k == 5) return !(c.ik2 == 3 * c.i1 && c.ik1 == 4 * c.i1);
  return !(c.i1 == 1 && c.ik2 == c.k - 2 && c.ik1 == c.k - 1);
}

BezoutSweep bezout_sweep(const std::vector<std::uint64_t>& qs, const std::vector<std::uint32_t>& ks,
                         std::uint32_t max_exp, bool realizable_only) {
  BezoutSweep out;
  for (std::uint64_t q : qs) {
    for (std::uint32_t k : ks) {
      for (std::uint32_t i1 = 1; i1 <= max_exp; ++i1) {
        for (std::uint32_t a = i1 + 1; a <= max_exp; ++a) {
          for (std::uint32_t b = a + 1; b <= max_exp; ++b) {
            const BezoutCell cell{q, k, i1, a, b};
            if (realizable_only && !bezout_cell_realizable(cell)) continue;
            const BezoutGap g = bezout_gap(q, k, i1, a, b);
            ++out.cells;
            if (g.tau > g.b_tau) out.tau_failures.push_back(cell);
            if (!case2_q_condition(q, i1)) continue;
            ++out.hypothesis_cells;
            if (g.gap <= 0) out.gap_failures.push_back(cell);
          }
        }
      }
    }
  }
  return out;
}

ZahidThresholds zahid_thresholds(std::uint64_t f, std::uint64_t e) {
  if (f < 1 || e < 1) throw PreconditionError("need f, e >= 1");
  ZahidThresholds z;
  z.t1 = BigRational(3 * big_pow(BigInt(f), 4) - 4 * big_pow(BigInt(f), 3) + 5 * big_pow(BigInt(f), 2)) / 2;

  const long double lf = static_cast<long double>(f);
  const long double alpha = (lf - 1) * (lf - 2);
  const long double beta = 5 * std::pow(lf, 4.0L) * std::cbrt(lf) + lf * (lf + static_cast<long double>(e) - 1);
  const long double D = alpha * alpha + 4 * beta;
  const long double t0 = (alpha * alpha + 2 * beta + alpha * std::sqrt(D)) / 2;
  const long double slack = 64 * LDBL_EPSILON;
  z.t0_lower = t0 * (1 - slack);
  z.t0_upper = t0 * (1 + slack);

  // Exact value when f is a cube and the square root is rational.
  const BigInt bf = f;
  const auto c = static_cast<std::uint64_t>(std::llround(std::cbrt(static_cast<double>(f))));
  for (std::uint64_t cc = c > 0 ? c - 1 : 0; cc <= c + 1; ++cc) {
    if (BigInt(cc) * cc * cc != bf) continue;
    const BigInt A = (bf - 1) * (bf - 2);
    const BigInt B = 5 * big_pow(bf, 4) * cc + bf * (bf + e - 1);
    const BigInt DD = A * A + 4 * B;
    const BigInt r = boost::multiprecision::sqrt(DD);
    if (A == 0 || r * r == DD) {
      const BigRational exact = BigRational(A * A + 2 * B + A * r) / 2;
      z.t0_exact = exact;
      z.t0_lower = z.t0_upper = static_cast<long double>(exact);
    }
    break;
  }
  return z;
}

const char* family_name(Family f) {
  switch (f) {
    case Family::gabidulin: return "gabidulin";
    case Family::sporadic_n7: return "sporadic_n7";
    case Family::sporadic_n8: return "sporadic_n8";
    case Family::none: return "none";
  }
  return "none";
}

namespace {

bool same_class(const ExponentSet& I, std::vector<std::uint32_t> exps) {
  const ExponentSet J{I.n, std::move(exps)};
  return canonical_shift(I) == canonical_shift(J);
}

}  // namespace

Family known_family(const ExponentSet& I, std::uint64_t q) {
  if (arithmetic_progression_info(I).coprime) return Family::gabidulin;
  if (I.n == 7 && q % 2 == 1) {
    if ((I.k() == 3 && same_class(I, {0, 1, 3})) || (I.k() == 4 && same_class(I, {0, 1, 2, 5}))) {
      return Family::sporadic_n7;
    }
  }
  if (I.n == 8 && q % 3 == 1) {
    if ((I.k() == 3 && same_class(I, {0, 1, 3})) || (I.k() == 5 && same_class(I, {0, 1, 2, 3, 6}))) {
      return Family::sporadic_n8;
    }
  }
  return Family::none;
}

BoundsReport bounds_report(const ExponentSet& I, std::uint64_t q) {
  BoundsReport r;
  r.q = q;
  r.I = I;
  r.ap = arithmetic_progression_info(I);
  const std::size_t k = I.k();
  if (k >= 3 && !r.ap.is_ap) r.case_label = case_conditions(I, q);
  const BigInt bq = q;
  if (k == 3) {
    r.curve = curve_threshold(I);
    const std::uint32_t i = I.exps[1], j = I.exps[2];
    const std::uint32_t g = std::gcd(i, j);
    r.curve_gcd_trigger = I.n != 0 && std::gcd(I.n, g) > 1;
    r.ell = big_pow(bq, j) + big_pow(bq, i) - bq * bq - bq;
    r.ell_prime = big_pow(bq, j) + big_pow(bq, i) - big_pow(bq, 2ULL * g) - big_pow(bq, g);
  }
  if (k > 3) {
    r.general_threshold = general_threshold(q, I);
    r.bezout = bezout_gap(q, static_cast<std::uint32_t>(k), I.exps[1], I.exps[k - 2], I.exps[k - 1]);
  }
  BigInt sf = 0, se = 0;
  for (std::size_t j = 0; j < k; ++j) {
    sf += big_pow(bq, I.exps[j]);
    se += big_pow(bq, j);
  }
  const BigInt f = sf - se;
  const BigInt limit = BigInt(1) << 62;
  if (f >= 1 && f < limit && se < limit) {
    r.zahid_f = static_cast<std::uint64_t>(f);
    r.zahid_e = static_cast<std::uint64_t>(se);
    r.zahid = zahid_thresholds(r.zahid_f, r.zahid_e);
  }
  r.known_family = known_family(I, q);
  return r;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::moore_known_family: return "moore_known_family";
    case Verdict::not_moore_by_theorem: return "not_moore_by_theorem";
    case Verdict::moore_by_exhaustion: return "moore_by_exhaustion";
    case Verdict::not_moore_with_witness: return "not_moore_with_witness";
    case Verdict::undecided_budget: return "undecided_budget";
  }
  return "undecided_budget";
}

std::optional<TheoremHit> theorem_applies(const ExponentSet& I, std::uint64_t q) {
  const std::uint32_t n = I.n;
  const std::size_t k = I.k();
  if (k < 3 || n == 0) return std::nullopt;
  std::vector<ExponentSet> rotations;
  for (std::uint32_t e : I.exps) rotations.push_back(shifted(I, (n - e) % n));
  std::sort(rotations.begin(), rotations.end());
  for (const auto& J : rotations) {
    if (k == 3) {
      const std::uint32_t i = J.exps[1], j = J.exps[2];
      if (j == 2 * i) continue;
      if (std::gcd(n, std::gcd(i, j)) > 1) return TheoremHit{"curve", "gcd", J, 4ULL * j + 2, Case::a};
      if (n > 4ULL * j + 2) return TheoremHit{"curve", "threshold", J, 4ULL * j + 2, Case::a};
    } else {
      if (is_integer_progression(J)) continue;
      const Case c = case_conditions(J, q);
      if (c == Case::none) continue;
      const std::uint64_t N = general_threshold(q, J);
      if (n >= N) return TheoremHit{"general", "threshold", J, N, c};
    }
  }
  return std::nullopt;
}

FinalReport final_verdict(const FieldCtx& ctx, const ExponentSet& I, const FinalOptions& opt) {
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  FinalReport rep;
  const std::uint64_t q = ctx.q();
  rep.bounds = bounds_report(I, q);
  rep.family = rep.bounds.known_family;
  rep.theorem = theorem_applies(I, q);
  rep.engine_within_budget = engine_size(ctx, I, opt.check.method) <= BigInt(opt.check.budget);
  if (opt.run_engine && rep.engine_within_budget) rep.engine = moore_check(ctx, I, opt.check);

  if (rep.family != Family::none) {
    rep.verdict = Verdict::moore_known_family;
    if (rep.theorem) rep.consistent = false;
    if (rep.engine && !rep.engine->is_moore) rep.consistent = false;
  } else if (rep.theorem) {
    rep.verdict = Verdict::not_moore_by_theorem;
    if (rep.engine && rep.engine->is_moore) rep.consistent = false;
  } else if (rep.engine) {
    rep.verdict = rep.engine->is_moore ? Verdict::moore_by_exhaustion : Verdict::not_moore_with_witness;
  } else {
    rep.verdict = Verdict::undecided_budget;
  }
  if (rep.engine && !rep.engine->engines_agree) rep.consistent = false;
  return rep;
}

}  // namespace moore
