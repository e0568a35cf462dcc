#include "moore/variety_count.hpp"

#include <numeric>

#include "moore/errors.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/projective.hpp"

namespace moore {

BigInt isqrt(const BigInt& v) {
  if (v < 0) throw DomainError("square root of a negative integer");
  return boost::multiprecision::sqrt(v);
}

BigInt dependent_count_formula(std::uint64_t q, std::uint32_t n, std::uint32_t m) {
  if (m < 1) throw InvalidInput("m must be positive");
  if (m > n) throw InvalidInput("m must not exceed n");
  const BigInt Q = big_pow(BigInt(q), n);
  const BigInt top = big_pow(Q, m - 1);
  BigInt prod = 1;
  for (std::uint32_t s = 1; s < m; ++s) prod *= Q - big_pow(BigInt(q), s);
  return top - prod + (top - 1) / (Q - 1);
}

namespace {

struct Counts {
  std::uint64_t f_zero = 0, dep = 0, witness = 0;
  Counts& operator+=(const Counts& o) {
    f_zero += o.f_zero;
    dep += o.dep;
    witness += o.witness;
    return *this;
  }
};

}  // namespace

PointCountReport count_points(const FieldCtx& ctx, const ExponentSet& I, const PointCountOptions& opt) {
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  const std::size_t k = I.k();
  if (k == 0) throw InvalidInput("exponent set is empty");
  const BigInt total = projective_count(ctx.order(), k);
  if (total > BigInt(opt.budget)) {
    throw BudgetExceeded("PG(k-1, q^n) has " + total.str() + " points, over the budget of " +
                         std::to_string(opt.budget));
  }
  PointCountReport rep;
  rep.n_points = static_cast<std::uint64_t>(total);
  const std::uint64_t Q = ctx.order();
  const Counts c = parallel_sum<Counts>(rep.n_points, opt.parallel, 1u << 12, [&] {
    return [&, a = std::vector<FFElem>(k), m = std::vector<FFElem>(k * k)](std::uint64_t begin,
                                                                          std::uint64_t end) mutable {
      Counts acc;
      for (std::uint64_t idx = begin; idx < end; ++idx) {
        projective_point(idx, Q, k, a);
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t col = 0; col < k; ++col) m[r * k + col] = ctx.frobenius(a[r], I.exps[col]);
        }
        const bool zero = determinant_inplace(ctx, std::span<FFElem>(m), k).code == 0;
        const bool dep = fq_rank(ctx, a) < k;
        acc.f_zero += zero;
        acc.dep += dep;
        acc.witness += zero && !dep;
      }
      return acc;
    };
  });
  rep.n_F_zero = c.f_zero;
  rep.n_dep = c.dep;
  rep.n_witness = c.witness;
  rep.formula_dep = dependent_count_formula(ctx.q(), ctx.n(), static_cast<std::uint32_t>(k));
  rep.match = rep.formula_dep == BigInt(rep.n_dep);
  return rep;
}

namespace {

// q^n + 1 - ceil(c * q^{n/2}) for c >= 0.
BigInt minus_scaled_root(const BigInt& qn, const BigInt& c, std::uint64_t q, std::uint32_t n) {
  BigInt sub;
  if (n % 2 == 0) {
    sub = c * big_pow(BigInt(q), n / 2);
  } else {
    const BigInt sq = c * c * qn;
    sub = isqrt(sq);
    if (sub * sub < sq) sub += 1;
  }
  return qn + 1 - sub;
}

}  // namespace

HwBound hw_lower_bound(std::uint64_t q, std::uint32_t n, std::uint32_t i, std::uint32_t j) {
  if (!(j > i && i >= 1)) throw PreconditionError("need j > i >= 1");
  const BigInt bq = q;
  HwBound out;
  out.ell = big_pow(bq, j) + big_pow(bq, i) - bq * bq - bq;
  const BigInt qn = big_pow(bq, n);
  BigInt c = (out.ell - 1) * (out.ell - 2);
  if (c < 0) c = 0;
  out.bound = minus_scaled_root(qn, c, q, n);
  const BigInt s = big_pow(bq, j) + big_pow(bq, i);
  out.relaxed = minus_scaled_root(qn, s * s, q, n);
  return out;
}

IntersectionFormula intersection_count_formula(std::uint64_t q, std::uint32_t i, std::uint32_t j) {
  if (!(j > i && i >= 1)) throw PreconditionError("need j > i >= 1");
  const BigInt bq = q;
  const BigInt plane_line = (big_pow(bq, 3) - 1) / (bq - 1);
  IntersectionFormula out;
  out.hypotheses_hold = std::gcd(i, j) == 1 && j > 2;
  if (i == 1) {
    out.value = (big_pow(bq, j - 1) - bq) * plane_line;
  } else {
    out.value = (big_pow(bq, j - i) - bq + 1) * plane_line;
  }
  return out;
}

BorgesReport verify_borges(std::uint64_t q, std::uint32_t i, std::uint32_t j, std::uint32_t m,
                           const BorgesOptions& opt) {
  if (!(j > i && i >= 1)) throw PreconditionError("need j > i >= 1");
  if (j <= 2) throw PreconditionError("need j > 2");
  if (std::gcd(i, j) != 1) throw PreconditionError("need gcd(i, j) = 1");
  const std::uint32_t s = j - i;
  if (m < s || m % s != 0) throw PreconditionError("search field degree must be a multiple of j - i");

  const auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q is not a prime power");
  const FieldCtx ctx = FieldCtx::create(pe->first, pe->second, m);
  const BigInt npts = projective_count(ctx.order(), 3);
  if (npts > BigInt(opt.budget)) throw BudgetExceeded("PG(2, q^m) exceeds the point budget");

  auto field = std::make_shared<const BaseField>(ctx.base());
  const SparsePoly F = sym_moore_poly(field, 3, {0, i, j}, opt.symbolic);
  const SparsePoly G = sym_moore_poly(field, 3, {0, 1, 2}, opt.symbolic);

  BorgesReport rep;
  rep.q = q;
  rep.i = i;
  rep.j = j;
  rep.m = m;
  rep.H = divexact(F, G, opt.symbolic);
  const SparsePoly dH[3] = {partial_derivative(rep.H, 0), partial_derivative(rep.H, 1),
                            partial_derivative(rep.H, 2)};
  rep.formula = intersection_count_formula(q, i, j);
  rep.points_searched = static_cast<std::uint64_t>(npts);

  auto in_subfield = [&](FFElem x, std::uint32_t deg) { return ctx.frobenius(x, deg) == x; };
  auto in_plane = [&](const std::vector<FFElem>& p, std::uint32_t deg) {
    return in_subfield(p[0], deg) && in_subfield(p[1], deg) && in_subfield(p[2], deg);
  };

  std::vector<FFElem> p(3);
  rep.locus_all_singular = true;
  for (std::uint64_t idx = 0; idx < rep.points_searched; ++idx) {
    projective_point(idx, ctx.order(), 3, p);
    const bool on_H = eval_poly(ctx, rep.H, p).code == 0;
    const bool singular = on_H && eval_poly(ctx, dH[0], p).code == 0 &&
                          eval_poly(ctx, dH[1], p).code == 0 && eval_poly(ctx, dH[2], p).code == 0;
    const bool in_locus = in_plane(p, s) && !(i == 1 && in_plane(p, 1));
    if (on_H && eval_poly(ctx, G, p).code == 0) {
      ++rep.intersection_count;
      if (!in_locus) ++rep.intersection_outside_locus;
    }
    if (singular) ++rep.singular_total;
    if (in_locus) {
      ++rep.locus_points;
      if (singular) {
        ++rep.locus_singular;
      } else {
        rep.locus_all_singular = false;
      }
    }
  }
  rep.count_matches = BigInt(rep.intersection_count) == rep.formula.value;
  return rep;
}

}  // namespace moore
