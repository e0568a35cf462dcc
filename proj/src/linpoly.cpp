#include "moore/linpoly.hpp"

#include <map>
#include <random>

#include "moore/errors.hpp"

namespace moore {

LinPoly LinPoly::monomial(const FieldCtx& ctx, std::uint32_t j, FFElem c) {
  if (j >= ctx.n()) throw InvalidInput("linearized exponent index out of range");
  LinPoly f = zero(ctx);
  f.coeffs[j] = c;
  return f;
}

bool LinPoly::is_zero() const {
  for (FFElem c : coeffs) {
    if (c.code != 0) return false;
  }
  return true;
}

std::optional<std::uint32_t> LinPoly::q_degree() const {
  for (std::size_t j = coeffs.size(); j-- > 0;) {
    if (coeffs[j].code != 0) return static_cast<std::uint32_t>(j);
  }
  return std::nullopt;
}

namespace {

void check_poly(const FieldCtx& ctx, const LinPoly& f) {
  if (f.coeffs.size() != ctx.n()) throw InvalidInput("linearized polynomial has wrong length");
  for (FFElem c : f.coeffs) ctx.check(c);
}

}  // namespace

FFElem lin_eval(const FieldCtx& ctx, const LinPoly& f, FFElem x) {
  check_poly(ctx, f);
  ctx.check(x);
  FFElem acc = ctx.zero();
  for (std::uint32_t j = 0; j < ctx.n(); ++j) {
    if (f.coeffs[j].code == 0) continue;
    acc = ctx.add(acc, ctx.mul(f.coeffs[j], ctx.frobenius(x, j)));
  }
  return acc;
}

FqMatrix lin_matrix(const FieldCtx& ctx, const LinPoly& f) {
  const std::uint32_t n = ctx.n();
  FqMatrix m(n, n);
  std::vector<FqCode> col(n);
  FFElem xt = ctx.one();
  const FFElem x = ctx.x_generator();
  for (std::uint32_t t = 0; t < n; ++t) {
    ctx.expand(lin_eval(ctx, f, xt), col);
    for (std::uint32_t r = 0; r < n; ++r) m.at(r, t) = col[r];
    xt = ctx.mul(xt, x);
  }
  return m;
}

LinKernel lin_kernel(const FieldCtx& ctx, const LinPoly& f) {
  LinKernel out;
  for (const auto& v : kernel_basis(ctx.base(), lin_matrix(ctx, f))) {
    out.basis.push_back(ctx.from_coeffs(v));
  }
  out.dim = static_cast<std::uint32_t>(out.basis.size());
  return out;
}

LinPoly lin_compose(const FieldCtx& ctx, const LinPoly& g, const LinPoly& f) {
  check_poly(ctx, g);
  check_poly(ctx, f);
  const std::uint32_t n = ctx.n();
  LinPoly h = LinPoly::zero(ctx);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (g.coeffs[i].code == 0) continue;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (f.coeffs[j].code == 0) continue;
      FFElem& slot = h.coeffs[(i + j) % n];
      slot = ctx.add(slot, ctx.mul(g.coeffs[i], ctx.frobenius(f.coeffs[j], i)));
    }
  }
  return h;
}

namespace {

// Right division in the composition ring: g = h o f + r with q-degree of r
// below that of f. Returns whether r = 0.
template <class Arith>
bool right_divides(const Arith& ar, std::uint32_t n, const LinPoly& f, const LinPoly& g) {
  const auto a = f.q_degree();
  if (!a) throw InvalidInput("divisor is the zero polynomial");
  std::vector<FFElem> r = g.coeffs;
  const FFElem lead_inv = ar.inv(f.coeffs[*a]);
  for (std::uint32_t b = n; b-- > *a;) {
    if (r[b].code == 0) continue;
    const std::uint32_t s = b - *a;
    // (f_a)^{q^s} inverse equals (f_a^{-1})^{q^s}.
    const FFElem h = ar.mul(r[b], ar.frobenius(lead_inv, s));
    for (std::uint32_t j = 0; j <= *a; ++j) {
      if (f.coeffs[j].code == 0) continue;
      r[j + s] = ar.sub(r[j + s], ar.mul(h, ar.frobenius(f.coeffs[j], s)));
    }
  }
  for (FFElem c : r) {
    if (c.code != 0) return false;
  }
  return true;
}

constexpr std::uint64_t kLongDivisionSteps = 1u << 20;

}  // namespace

bool lin_divides_symbolic(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
  check_poly(ctx, f);
  check_poly(ctx, g);
  return right_divides(ctx, ctx.n(), f, g);
}

bool lin_divides(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g) {
  check_poly(ctx, f);
  check_poly(ctx, g);
  if (f.is_zero()) throw InvalidInput("divisor is the zero polynomial");
  const std::uint64_t q = ctx.q();
  std::vector<std::uint64_t> qpow(ctx.n(), 1);
  for (std::uint32_t j = 1; j < ctx.n(); ++j) qpow[j] = qpow[j - 1] * q;

  std::vector<std::pair<std::uint64_t, FFElem>> div;
  for (std::uint32_t j = 0; j < ctx.n(); ++j) {
    if (f.coeffs[j].code != 0) div.emplace_back(qpow[j], f.coeffs[j]);
  }
  std::map<std::uint64_t, FFElem> rem;
  for (std::uint32_t j = 0; j < ctx.n(); ++j) {
    if (g.coeffs[j].code != 0) rem[qpow[j]] = g.coeffs[j];
  }
  const std::uint64_t fdeg = div.back().first;
  const FFElem lead_inv = ctx.inv(div.back().second);
  std::uint64_t steps = 0;
  while (!rem.empty()) {
    const auto top = std::prev(rem.end());
    if (top->first < fdeg) break;
    if (++steps > kLongDivisionSteps) return right_divides(ctx, ctx.n(), f, g);
    const std::uint64_t shift = top->first - fdeg;
    const FFElem t = ctx.mul(top->second, lead_inv);
    for (const auto& [e, c] : div) {
      auto [it, fresh] = rem.try_emplace(e + shift, ctx.zero());
      it->second = ctx.sub(it->second, ctx.mul(t, c));
      if (it->second.code == 0) rem.erase(it);
    }
  }
  return rem.empty();
}

namespace {

// det of the matrix whose first row is (U^{q^{e_0}}, ..., U^{q^{e_m}}) and
// whose remaining rows are z_r^{q^{e_c}} followed by a row of ones, expanded
// along the U row.
template <class Arith>
LinPoly expand_u_row(const Arith& ar, std::uint32_t n, const std::vector<std::uint32_t>& e,
                     const std::vector<FFElem>& z) {
  const std::size_t m = e.size();
  LinPoly out{std::vector<FFElem>(n)};
  std::vector<FFElem> minor((m - 1) * (m - 1));
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t idx = 0;
    for (std::size_t r = 0; r + 1 < m; ++r) {
      for (std::size_t cc = 0; cc < m; ++cc) {
        if (cc == c) continue;
        minor[idx++] = r < z.size() ? ar.frobenius(z[r], e[cc]) : ar.one();
      }
    }
    FFElem v = m == 1 ? ar.one() : determinant_inplace(ar, std::span<FFElem>(minor), m - 1);
    if (c % 2 == 1) v = ar.neg(v);
    out.coeffs[e[c]] = ar.add(out.coeffs[e[c]], v);
  }
  return out;
}

// det of rows z_r^{q^{e_c}} followed by a row of ones; square by construction.
template <class Arith>
FFElem scalar_det(const Arith& ar, const std::vector<std::uint32_t>& e, const std::vector<FFElem>& z) {
  const std::size_t m = e.size();
  std::vector<FFElem> a(m * m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) a[r * m + c] = r < z.size() ? ar.frobenius(z[r], e[c]) : ar.one();
  }
  return determinant_inplace(ar, std::span<FFElem>(a), m);
}

template <class Arith>
LMNR build_impl(const Arith& ar, std::uint32_t n, const ExponentSet& I, const std::vector<FFElem>& z) {
  const std::size_t k = I.k();
  const auto& i = I.exps;
  std::vector<std::uint32_t> eL{0}, eM{0}, eN, eR;
  for (std::size_t j = 2; j < k; ++j) {
    eL.push_back(i[j]);
    eM.push_back(i[j] - i[1]);
    eN.push_back(i[j] - i[1]);
    if (j >= 3) eR.push_back(i[j] - i[1]);
  }
  LMNR out;
  out.L = expand_u_row(ar, n, eL, z);
  out.M = expand_u_row(ar, n, eM, z);
  out.N = scalar_det(ar, eN, z);
  const std::vector<FFElem> zr(z.begin() + 1, z.end());
  out.R = scalar_det(ar, eR, zr);
  out.r_is_convention = k == 4;
  return out;
}

void check_lmnr_args(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& z) {
  if (I.k() < 4) throw PreconditionError("L, M, N, R need at least four exponents");
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  if (I.exps.front() != 0) throw PreconditionError("exponent set must be normalized");
  if (z.size() != I.k() - 3) throw InvalidInput("z must have k - 3 entries");
  for (FFElem v : z) ctx.check(v);
}

}  // namespace

LMNR build_LMNR(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& z) {
  check_lmnr_args(ctx, I, z);
  return build_impl(ctx, ctx.n(), I, z);
}

bool verify_z_certificate(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& z) {
  check_lmnr_args(ctx, I, z);
  const GenericArith ar(ctx);
  const LMNR v = build_impl(ar, ctx.n(), I, z);
  if (v.N.code == 0) return false;
  return !right_divides(ar, ctx.n(), v.M, v.L);
}

std::optional<ZCertificate> case2_z_search(const FieldCtx& ctx, const ExponentSet& I,
                                           const ZSearchOptions& opt) {
  if (I.n != ctx.n()) throw InvalidInput("exponent set and field disagree on n");
  if (I.k() < 4) throw PreconditionError("case-2 search needs k >= 4");
  if (I.exps.front() != 0) throw PreconditionError("exponent set must be normalized");
  if (I.exps[2] != 2 * I.exps[1]) throw PreconditionError("case-2 search needs i_2 = 2 i_1");
  if (is_integer_progression(I)) throw PreconditionError("exponent set is an arithmetic progression");

  const std::size_t m = I.k() - 3;
  std::uint64_t seed = opt.seed;
  if (opt.randomize) seed = (std::uint64_t{std::random_device{}()} << 32) ^ std::random_device{}();
  std::mt19937_64 rng(seed);

  std::vector<FFElem> z(m);
  for (std::uint64_t t = 0; t < opt.budget; ++t) {
    if (t == 0 && ctx.has_tables() && ctx.order() > 2) {
      const FFElem g = ctx.primitive_element();
      FFElem p = g;
      for (std::size_t r = 0; r < m; ++r) {
        z[r] = p;
        p = ctx.mul(p, g);
      }
    } else {
      for (auto& v : z) v = ctx.random(rng);
    }
    const LMNR v = build_impl(ctx, ctx.n(), I, z);
    if (v.N.code == 0) continue;
    if (!lin_divides(ctx, v.M, v.L)) return ZCertificate{z, v.N, t + 1};
  }
  return std::nullopt;
}

}  // namespace moore
