#include "moore/moore_core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "moore/errors.hpp"
#include "moore/kernels.hpp"

namespace moore {

namespace {

void check_set(const FieldCtx& ctx, const ExponentSet& I) {
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  if (I.exps.empty()) throw InvalidInput("exponent set is empty");
  if (I.k() > ctx.n()) throw InvalidInput("exponent set has more than n elements");
  for (std::size_t j = 0; j < I.k(); ++j) {
    if (I.exps[j] >= I.n || (j > 0 && I.exps[j] <= I.exps[j - 1])) {
      throw InvalidInput("exponent set must be strictly increasing in [0, n)");
    }
  }
}

void check_tuple(const FieldCtx& ctx, const std::vector<FFElem>& A, const ExponentSet& I) {
  check_set(ctx, I);
  if (A.size() != I.k()) throw InvalidInput("tuple length differs from |I|");
  for (FFElem a : A) ctx.check(a);
}

}  // namespace

FFMatrix moore_matrix(const FieldCtx& ctx, const std::vector<FFElem>& A, const ExponentSet& I) {
  check_tuple(ctx, A, I);
  const std::size_t k = I.k();
  FFMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m.at(r, c) = ctx.frobenius(A[r], I.exps[c]);
  }
  return m;
}

FFElem moore_det(const FieldCtx& ctx, const std::vector<FFElem>& A, const ExponentSet& I) {
  return det_ffelem(ctx, moore_matrix(ctx, A, I));
}

FFElem moore_det_product(const FieldCtx& ctx, const std::vector<FFElem>& A) {
  if (A.empty()) throw InvalidInput("empty tuple");
  for (FFElem a : A) ctx.check(a);
  const std::uint32_t q = ctx.q();
  FFElem prod = ctx.one();
  std::vector<FqCode> c;
  for (std::size_t last = 0; last < A.size(); ++last) {
    c.assign(last, 0);
    while (true) {
      FFElem s = A[last];
      for (std::size_t i = 0; i < last; ++i) s = ctx.add(s, ctx.scale(c[i], A[i]));
      prod = ctx.mul(prod, s);
      std::size_t pos = 0;
      while (pos < last && c[pos] + 1u == q) c[pos++] = 0;
      if (pos == last) break;
      ++c[pos];
    }
  }
  return prod;
}

const char* method_name(Method m) {
  switch (m) {
    case Method::kernel: return "kernel";
    case Method::det: return "det";
    case Method::both: return "both";
  }
  return "kernel";
}

Method parse_method(const std::string& s) {
  if (s == "kernel") return Method::kernel;
  if (s == "det") return Method::det;
  if (s == "both") return Method::both;
  throw InvalidInput("unknown method '" + s + "'");
}

WitnessCheck verify_witness(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& tuple) {
  check_tuple(ctx, tuple, I);
  WitnessCheck wc;
  wc.fq_rank = fq_rank(ctx, tuple);
  wc.independent = wc.fq_rank == I.k();
  const GenericArith ar(ctx);
  const std::size_t k = I.k();
  std::vector<FFElem> m(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r * k + c] = ar.frobenius(tuple[r], I.exps[c]);
  }
  wc.det = determinant_inplace(ar, std::span<FFElem>(m), k);
  wc.det_zero = wc.det.code == 0;
  return wc;
}

BigInt engine_size(const FieldCtx& ctx, const ExponentSet& I, Method method) {
  if (I.k() <= 1) return 0;
  BigInt s = 0;
  if (method != Method::det) s += gaussian_binomial(ctx.q(), ctx.n(), static_cast<std::uint32_t>(I.k() - 1));
  if (method != Method::kernel) s += gaussian_binomial(ctx.q(), ctx.n(), static_cast<std::uint32_t>(I.k()));
  return s;
}

namespace {

std::uint64_t checked_total(const FieldCtx& ctx, std::uint32_t dim, const CheckOptions& opt) {
  const BigInt total = gaussian_binomial(ctx.q(), ctx.n(), dim);
  if (total > BigInt(opt.budget)) {
    throw BudgetExceeded("enumeration of " + total.str() + " subspaces exceeds the budget of " +
                         std::to_string(opt.budget));
  }
  return static_cast<std::uint64_t>(total);
}

// Evaluates, for one (k-1)-dimensional subspace B, the coefficients of
// g_B(Y) = det(M_{(B, Y), I}) and the images g_B(x^t).
class PencilEvaluator {
 public:
  PencilEvaluator(const FieldCtx& ctx, const ExponentSet& I)
      : ctx_(ctx),
        I_(I),
        k_(I.k()),
        n_(ctx.n()),
        kernel_(ctx.base()),
        packed_(ctx.q() == 2 && ctx.n() <= 64 && kernels::packed_gf2_enabled()),
        pw_(static_cast<std::size_t>(n_) * k_),
        frob_((k_ - 1) * k_),
        minor_((k_ - 1) * (k_ - 1)),
        coef_(k_),
        img_(n_),
        mat_(n_, n_),
        digits_(n_) {
    FFElem xt = ctx.one();
    const FFElem x = ctx.x_generator();
    for (std::uint32_t t = 0; t < n_; ++t) {
      for (std::size_t c = 0; c < k_; ++c) pw_[t * k_ + c] = ctx.frobenius(xt, I.exps[c]);
      xt = ctx.mul(xt, x);
    }
  }

  void coefficients(std::span<const FFElem> basis) {
    const std::size_t m = k_ - 1;
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < k_; ++c) frob_[r * k_ + c] = ctx_.frobenius(basis[r], I_.exps[c]);
    }
    if (m == 1) {
      coef_[0] = ctx_.neg(frob_[1]);
      coef_[1] = frob_[0];
      return;
    }
    if (m == 2) {
      // Columns (a, b) of the 2 x 3 block; minor deleting column c.
      const FFElem* r0 = &frob_[0];
      const FFElem* r1 = &frob_[k_];
      const FFElem m0 = ctx_.sub(ctx_.mul(r0[1], r1[2]), ctx_.mul(r0[2], r1[1]));
      const FFElem m1 = ctx_.sub(ctx_.mul(r0[0], r1[2]), ctx_.mul(r0[2], r1[0]));
      const FFElem m2 = ctx_.sub(ctx_.mul(r0[0], r1[1]), ctx_.mul(r0[1], r1[0]));
      coef_[0] = m0;
      coef_[1] = ctx_.neg(m1);
      coef_[2] = m2;
      return;
    }
    for (std::size_t c = 0; c < k_; ++c) {
      std::size_t idx = 0;
      for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t cc = 0; cc < k_; ++cc) {
          if (cc != c) minor_[idx++] = frob_[r * k_ + cc];
        }
      }
      FFElem v = determinant_inplace(ctx_, std::span<FFElem>(minor_), m);
      if ((m + c) % 2 == 1) v = ctx_.neg(v);
      coef_[c] = v;
    }
  }

  void images() {
    for (std::uint32_t t = 0; t < n_; ++t) {
      FFElem acc = ctx_.zero();
      const FFElem* p = &pw_[t * k_];
      for (std::size_t c = 0; c < k_; ++c) {
        if (coef_[c].code != 0) acc = ctx_.add(acc, ctx_.mul(coef_[c], p[c]));
      }
      img_[t] = acc;
    }
  }

  /// Rank of the F_q-matrix whose rows are the images.
  std::size_t image_rank() {
    if (packed_) {
      packed_rows_.assign(img_.size(), 0);
      for (std::uint32_t t = 0; t < n_; ++t) packed_rows_[t] = img_[t].code;
      return static_cast<std::size_t>(kernels::rank_gf2(packed_rows_));
    }
    for (std::uint32_t t = 0; t < n_; ++t) ctx_.expand(img_[t], std::span<FqCode>(mat_.row(t), n_));
    return rank(kernel_, ctx_.base(), mat_);
  }

  /// Whether span(basis) is the whole kernel of g_B.
  bool kernel_is_minimal(std::span<const FFElem> basis) {
    coefficients(basis);
    images();
    return image_rank() == n_ - (k_ - 1);
  }

  const std::vector<FFElem>& image_vector() const { return img_; }

 private:
  const FieldCtx& ctx_;
  const ExponentSet& I_;
  std::size_t k_;
  std::uint32_t n_;
  kernels::RowKernel kernel_;
  bool packed_;
  std::vector<FFElem> pw_;
  std::vector<FFElem> frob_;
  std::vector<FFElem> minor_;
  std::vector<FFElem> coef_;
  std::vector<FFElem> img_;
  FqMatrix mat_;
  std::vector<FqCode> digits_;
  std::vector<std::uint64_t> packed_rows_;
};

// Least element (by code) of ker(g_B) outside span(B).
FFElem least_kernel_vector_outside(const FieldCtx& ctx, const std::vector<FFElem>& images,
                                   std::span<const FFElem> basis) {
  const std::uint32_t n = ctx.n();
  const BaseField& F = ctx.base();
  FqMatrix a(n, n);
  std::vector<FqCode> col(n);
  for (std::uint32_t t = 0; t < n; ++t) {
    ctx.expand(images[t], col);
    for (std::uint32_t r = 0; r < n; ++r) a.at(r, t) = col[r];
  }
  auto K = kernel_basis(F, std::move(a));

  // Echelonize with pivots at the highest coordinates, fully reduced, so
  // that code order on span(K) is lexicographic order of the coefficients
  // read from the highest pivot down.
  std::vector<std::vector<FqCode>> vecs;
  std::vector<std::uint32_t> piv;
  for (std::uint32_t col_i = n; col_i-- > 0;) {
    std::size_t found = K.size();
    for (std::size_t i = 0; i < K.size(); ++i) {
      if (K[i][col_i] != 0) {
        found = i;
        break;
      }
    }
    if (found == K.size()) continue;
    std::vector<FqCode> v = std::move(K[found]);
    K.erase(K.begin() + static_cast<std::ptrdiff_t>(found));
    const FqCode inv = F.inv(v[col_i]);
    for (auto& x : v) x = F.mul(x, inv);
    auto eliminate = [&](std::vector<FqCode>& w) {
      const FqCode f = w[col_i];
      if (f == 0) return;
      for (std::uint32_t j = 0; j < n; ++j) w[j] = F.sub(w[j], F.mul(f, v[j]));
    };
    for (auto& w : K) eliminate(w);
    for (auto& w : vecs) eliminate(w);
    vecs.push_back(std::move(v));
    piv.push_back(col_i);
  }
  const std::size_t d = vecs.size();
  std::vector<FFElem> elems;
  for (const auto& v : vecs) elems.push_back(ctx.from_coeffs(v));

  std::vector<FFElem> test(basis.begin(), basis.end());
  test.push_back(ctx.zero());
  const std::size_t want = test.size();
  std::vector<std::uint32_t> digit(d, 0);
  const std::uint32_t q = ctx.q();
  while (true) {
    // Odometer: the vector with the lowest pivot (last in vecs) is fastest.
    std::size_t pos = d;
    while (pos > 0 && digit[pos - 1] + 1 == q) digit[--pos] = 0;
    if (pos == 0) break;
    ++digit[pos - 1];
    FFElem y = ctx.zero();
    for (std::size_t i = 0; i < d; ++i) {
      if (digit[i] != 0) y = ctx.add(y, ctx.scale(static_cast<FqCode>(digit[i]), elems[i]));
    }
    test.back() = y;
    if (fq_rank(ctx, test) == want) return y;
  }
  throw DomainError("kernel has no vector outside the subspace");
}

}  // namespace

EngineRun moore_check_kernel(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt) {
  check_set(ctx, I);
  EngineRun run;
  const std::size_t k = I.k();
  if (k == 1) return run;
  const auto dim = static_cast<std::uint32_t>(k - 1);
  run.total = checked_total(ctx, dim, opt);

  const auto hit = parallel_first_hit(run.total, opt.parallel, 1u << 12, [&] {
    return [&, en = SubspaceEnumerator(ctx, dim), ev = PencilEvaluator(ctx, I)](
               std::uint64_t begin, std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      en.seek(begin);
      for (std::uint64_t i = begin; i < end; ++i, en.next()) {
        if (!ev.kernel_is_minimal(en.basis())) return i;
      }
      return std::nullopt;
    };
  });

  if (!hit) {
    run.work = run.total;
    return run;
  }
  run.is_moore = false;
  run.witness_index = *hit;
  run.work = *hit + 1;
  SubspaceEnumerator en(ctx, dim);
  en.seek(*hit);
  PencilEvaluator ev(ctx, I);
  ev.kernel_is_minimal(en.basis());
  const FFElem y = least_kernel_vector_outside(ctx, ev.image_vector(), en.basis());
  Witness w;
  w.tuple.assign(en.basis().begin(), en.basis().end());
  w.tuple.push_back(y);
  run.witness = std::move(w);
  return run;
}

EngineRun moore_check_det(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt) {
  check_set(ctx, I);
  EngineRun run;
  const std::size_t k = I.k();
  if (k == 1) return run;
  const auto dim = static_cast<std::uint32_t>(k);
  run.total = checked_total(ctx, dim, opt);

  const auto hit = parallel_first_hit(run.total, opt.parallel, 1u << 12, [&] {
    return [&, en = SubspaceEnumerator(ctx, dim), m = std::vector<FFElem>(k * k)](
               std::uint64_t begin, std::uint64_t end) mutable -> std::optional<std::uint64_t> {
      en.seek(begin);
      for (std::uint64_t i = begin; i < end; ++i, en.next()) {
        const auto b = en.basis();
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) m[r * k + c] = ctx.frobenius(b[r], I.exps[c]);
        }
        if (determinant_inplace(ctx, std::span<FFElem>(m), k).code == 0) return i;
      }
      return std::nullopt;
    };
  });

  if (!hit) {
    run.work = run.total;
    return run;
  }
  run.is_moore = false;
  run.witness_index = *hit;
  run.work = *hit + 1;
  SubspaceEnumerator en(ctx, dim);
  en.seek(*hit);
  run.witness = Witness{{en.basis().begin(), en.basis().end()}};
  return run;
}

MooreVerdict moore_check(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt) {
  MooreVerdict v;
  v.method = opt.method;
  if (opt.method != Method::det) v.kernel = moore_check_kernel(ctx, I, opt);
  if (opt.method != Method::kernel) v.det = moore_check_det(ctx, I, opt);
  const EngineRun& primary = v.kernel ? *v.kernel : *v.det;
  v.is_moore = primary.is_moore;
  v.witness = primary.witness;
  v.work = primary.work;
  if (v.kernel && v.det) v.engines_agree = v.kernel->is_moore == v.det->is_moore;
  return v;
}

SearchReport search_moore_sets(const FieldCtx& ctx, std::uint32_t k, const CheckOptions& opt) {
  const std::uint32_t n = ctx.n();
  if (k < 1 || k > n) throw InvalidInput("k must lie in [1, n]");
  std::set<ExponentSet> reps;
  std::vector<std::uint32_t> comb(k - 1);
  std::iota(comb.begin(), comb.end(), 1u);
  while (true) {
    ExponentSet I{n, {0}};
    I.exps.insert(I.exps.end(), comb.begin(), comb.end());
    reps.insert(canonical_shift(I));
    int i = static_cast<int>(k) - 2;
    while (i >= 0 && comb[i] == n - (k - 1) + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < comb.size(); ++j) comb[j] = comb[j - 1] + 1;
  }

  SearchReport rep;
  rep.k = k;
  std::map<ExponentSet, std::size_t> index;
  for (const auto& I : reps) {
    index[I] = rep.classes.size();
    rep.classes.push_back(ClassResult{I, moore_check(ctx, I, opt)});
  }

  std::vector<std::size_t> parent(rep.classes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t c = 0; c < rep.classes.size(); ++c) {
    for (std::uint32_t d = 2; d < n; ++d) {
      if (std::gcd(d, n) != 1) continue;
      const std::size_t other = index.at(canonical_shift(scaled(rep.classes[c].representative, d)));
      const std::size_t a = find(c), b = find(other);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t c = 0; c < rep.classes.size(); ++c) groups[find(c)].push_back(c);
  for (auto& [root, members] : groups) {
    MultiplierOrbit orbit;
    orbit.members = members;
    for (std::size_t m : members) {
      if (rep.classes[m].verdict.is_moore != rep.classes[members.front()].verdict.is_moore) {
        orbit.verdicts_coincide = false;
      }
    }
    rep.multiplier_orbits.push_back(std::move(orbit));
  }
  return rep;
}

}  // namespace moore
