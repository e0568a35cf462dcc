#include "moore/rank_metric.hpp"

#include <limits>

#include "moore/errors.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/linpoly.hpp"
#include "moore/projective.hpp"

namespace moore {

namespace {

void check_code(const FieldCtx& ctx, const ExponentSet& I) {
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  if (I.exps.empty()) throw InvalidInput("exponent set is empty");
}

LinPoly codeword(const FieldCtx& ctx, const std::vector<FFElem>& a, const ExponentSet& I) {
  if (a.size() != I.k()) throw InvalidInput("coefficient tuple length differs from |I|");
  LinPoly f = LinPoly::zero(ctx);
  for (std::size_t j = 0; j < a.size(); ++j) {
    ctx.check(a[j]);
    f.coeffs[I.exps[j]] = ctx.add(f.coeffs[I.exps[j]], a[j]);
  }
  return f;
}

// Images of the basis x^t under a codeword, evaluated from a precomputed
// table of (x^t)^{q^{i_j}}.
class CodewordRanker {
 public:
  CodewordRanker(const FieldCtx& ctx, const ExponentSet& I)
      : ctx_(ctx), k_(I.k()), n_(ctx.n()), pw_(static_cast<std::size_t>(n_) * k_), mat_(n_, n_) {
    FFElem xt = ctx.one();
    const FFElem x = ctx.x_generator();
    for (std::uint32_t t = 0; t < n_; ++t) {
      for (std::size_t j = 0; j < k_; ++j) pw_[t * k_ + j] = ctx.frobenius(xt, I.exps[j]);
      xt = ctx.mul(xt, x);
    }
  }

  std::uint32_t rank_of(const std::vector<FFElem>& a) {
    for (std::uint32_t t = 0; t < n_; ++t) {
      FFElem acc = ctx_.zero();
      for (std::size_t j = 0; j < k_; ++j) {
        if (a[j].code != 0) acc = ctx_.add(acc, ctx_.mul(a[j], pw_[t * k_ + j]));
      }
      ctx_.expand(acc, std::span<FqCode>(mat_.row(t), n_));
    }
    return static_cast<std::uint32_t>(rank(ctx_.base(), mat_));
  }

 private:
  const FieldCtx& ctx_;
  std::size_t k_;
  std::uint32_t n_;
  std::vector<FFElem> pw_;
  FqMatrix mat_;
};

struct MinAcc {
  std::uint32_t rank = std::numeric_limits<std::uint32_t>::max();
  std::uint64_t index = 0;
  MinAcc& operator+=(const MinAcc& o) {
    if (o.rank < rank || (o.rank == rank && o.index < index)) *this = o;
    return *this;
  }
};

}  // namespace

std::uint32_t codeword_rank(const FieldCtx& ctx, const std::vector<FFElem>& a, const ExponentSet& I) {
  check_code(ctx, I);
  return static_cast<std::uint32_t>(rank(ctx.base(), lin_matrix(ctx, codeword(ctx, a, I))));
}

DistanceReport min_rank_distance(const FieldCtx& ctx, const ExponentSet& I, const DistanceOptions& opt) {
  check_code(ctx, I);
  const std::size_t k = I.k();
  const BigInt count = projective_count(ctx.order(), k);
  if (count > BigInt(opt.budget)) {
    throw BudgetExceeded("code has " + count.str() + " projective codewords, over the budget of " +
                         std::to_string(opt.budget));
  }
  DistanceReport rep;
  rep.codewords = static_cast<std::uint64_t>(count);
  rep.singleton = ctx.n() - static_cast<std::uint32_t>(k) + 1;
  const std::uint64_t q_order = ctx.order();
  const MinAcc best = parallel_sum<MinAcc>(rep.codewords, opt.parallel, 1u << 10, [&] {
    return [&, ranker = CodewordRanker(ctx, I), a = std::vector<FFElem>(k)](std::uint64_t begin,
                                                                           std::uint64_t end) mutable {
      MinAcc acc;
      for (std::uint64_t i = begin; i < end; ++i) {
        projective_point(i, q_order, k, a);
        acc += MinAcc{ranker.rank_of(a), i};
      }
      return acc;
    };
  });
  rep.min_rank_distance = best.rank;
  rep.is_mrd = rep.min_rank_distance == rep.singleton;
  rep.min_codeword.resize(k);
  projective_point(best.index, q_order, k, rep.min_codeword);
  return rep;
}

namespace {

// Dimension of {phi : for every generator g = a X^{q^i} (a over an F_q-basis,
// i in I), the composite has no coefficient outside I}. left: phi o g,
// right: g o phi.
std::uint32_t idealiser_dim(const FieldCtx& ctx, const ExponentSet& I, bool left) {
  const std::uint32_t n = ctx.n();
  std::vector<bool> in_I(n, false);
  for (std::uint32_t e : I.exps) in_I[e] = true;
  const std::uint32_t outside = n - static_cast<std::uint32_t>(I.k());
  const std::size_t unknowns = static_cast<std::size_t>(n) * n;
  const std::size_t rows = static_cast<std::size_t>(n) * I.k() * outside * n;
  FqMatrix m(rows, unknowns);
  if (rows == 0) return static_cast<std::uint32_t>(unknowns);

  std::vector<FFElem> basis(n);
  FFElem xt = ctx.one();
  for (std::uint32_t s = 0; s < n; ++s) {
    basis[s] = xt;
    xt = ctx.mul(xt, ctx.x_generator());
  }
  std::vector<FqCode> coords(n);
  // Unknown u = l * n + r stands for phi = x^r X^{q^l}.
  for (std::uint32_t l = 0; l < n; ++l) {
    for (std::uint32_t r = 0; r < n; ++r) {
      const std::size_t col = static_cast<std::size_t>(l) * n + r;
      const LinPoly phi = LinPoly::monomial(ctx, l, basis[r]);
      std::size_t row = 0;
      for (std::uint32_t s = 0; s < n; ++s) {
        for (std::uint32_t i : I.exps) {
          const LinPoly g = LinPoly::monomial(ctx, i, basis[s]);
          const LinPoly h = left ? lin_compose(ctx, phi, g) : lin_compose(ctx, g, phi);
          for (std::uint32_t e = 0; e < n; ++e) {
            if (in_I[e]) continue;
            ctx.expand(h.coeffs[e], coords);
            for (std::uint32_t c = 0; c < n; ++c) m.at(row + c, col) = coords[c];
            row += n;
          }
        }
      }
    }
  }
  return static_cast<std::uint32_t>(unknowns - rank(ctx.base(), std::move(m)));
}

}  // namespace

IdealiserDims idealiser_dims(const FieldCtx& ctx, const ExponentSet& I, const IdealiserOptions& opt) {
  check_code(ctx, I);
  if (ctx.n() > opt.max_n || ctx.q() > opt.max_q) {
    throw BudgetExceeded("idealiser solve limited to n <= " + std::to_string(opt.max_n) +
                         " and q <= " + std::to_string(opt.max_q));
  }
  return IdealiserDims{idealiser_dim(ctx, I, true), idealiser_dim(ctx, I, false)};
}

}  // namespace moore
