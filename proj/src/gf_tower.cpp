#include "moore/gf_tower.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace moore {

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint32_t e = 0;
  std::uint64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1 || p > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
  return std::make_pair(static_cast<std::uint32_t>(p), e);
}

namespace {

// Coefficient arithmetic for the univariate helpers below.
struct PrimeOps {
  std::uint32_t p;
  std::uint32_t order() const { return p; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + p - b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
  }
  std::uint32_t inv(std::uint32_t a) const {
    // a^{p-2}
    std::uint64_t r = 1, b = a, ex = p - 2;
    while (ex != 0) {
      if (ex & 1U) r = r * b % p;
      b = b * b % p;
      ex >>= 1U;
    }
    return static_cast<std::uint32_t>(r);
  }
};

struct FqOps {
  const BaseField* f;
  std::uint32_t order() const { return f->q(); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return f->add(static_cast<FqCode>(a), static_cast<FqCode>(b));
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return f->sub(static_cast<FqCode>(a), static_cast<FqCode>(b));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return f->mul(static_cast<FqCode>(a), static_cast<FqCode>(b));
  }
  std::uint32_t inv(std::uint32_t a) const { return f->inv(static_cast<FqCode>(a)); }
};

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

template <class Ops>
UPoly poly_mod(UPoly a, const UPoly& m, const Ops& ops) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = ops.inv(m.back());
  while (a.size() >= m.size()) {
    const std::uint32_t c = ops.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = ops.sub(a[shift + j], ops.mul(c, m[j]));
    }
    trim(a);
  }
  return a;
}

template <class Ops>
UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, const Ops& ops) {
  if (a.empty() || b.empty()) return {};
  UPoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = ops.add(prod[i + j], ops.mul(a[i], b[j]));
    }
  }
  return poly_mod(std::move(prod), m, ops);
}

template <class Ops>
UPoly poly_powmod(UPoly base, std::uint64_t ex, const UPoly& m, const Ops& ops) {
  UPoly result{1};
  base = poly_mod(std::move(base), m, ops);
  while (ex != 0) {
    if (ex & 1U) result = poly_mulmod(result, base, m, ops);
    ex >>= 1U;
    if (ex != 0) base = poly_mulmod(base, base, m, ops);
  }
  return result;
}

template <class Ops>
UPoly poly_gcd(UPoly a, UPoly b, const Ops& ops) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UPoly r = poly_mod(a, b, ops);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

template <class Ops>
bool irreducible_impl(UPoly f, const Ops& ops) {
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  if (d == 1) return true;
  for (std::uint32_t a = 0; a < ops.order(); ++a) {
    std::uint32_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = ops.add(ops.mul(v, a), f[i]);
    if (v == 0) return false;
  }
  UPoly h{0, 1};  // X
  for (std::size_t t = 1; t <= d / 2; ++t) {
    h = poly_powmod(h, ops.order(), f, ops);  // X^{q^t} mod f
    UPoly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = ops.sub(diff[1], 1);
    trim(diff);
    if (diff.empty()) return false;  // f | X^{q^t} - X with t < d
    UPoly g = poly_gcd(f, diff, ops);
    if (g.size() > 1) return false;
  }
  return true;
}

template <class Ops>
UPoly least_irreducible_impl(std::uint32_t degree, const Ops& ops) {
  const std::uint32_t q = ops.order();
  UPoly f(degree + 1, 0);
  f[degree] = 1;
  std::vector<std::uint32_t> digits(degree, 0);  // digits[0] = c_0, most significant
  if (degree > 1) digits[0] = 1;  // c_0 = 0 means X divides f
  while (true) {
    for (std::uint32_t j = 0; j < degree; ++j) f[j] = digits[j];
    if (irreducible_impl(f, ops)) return f;
    // Odometer with c_{degree-1} fastest so that c_0 dominates the ordering.
    std::int64_t pos = static_cast<std::int64_t>(degree) - 1;
    while (pos >= 0) {
      if (++digits[static_cast<std::size_t>(pos)] < q) break;
      digits[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) throw InvalidInput("no irreducible polynomial found");
  }
}

}  // namespace

bool is_irreducible(const BaseField& field, const UPoly& f) {
  for (auto c : f) {
    if (c >= field.q()) throw InvalidInput("coefficient outside F_q");
  }
  return irreducible_impl(f, FqOps{&field});
}

bool is_irreducible_mod_p(std::uint32_t p, const UPoly& f) {
  for (auto c : f) {
    if (c >= p) throw InvalidInput("coefficient outside F_p");
  }
  return irreducible_impl(f, PrimeOps{p});
}

UPoly least_irreducible(const BaseField& field, std::uint32_t degree) {
  if (degree < 1) throw InvalidInput("degree must be positive");
  return least_irreducible_impl(degree, FqOps{&field});
}

// ---------------------------------------------------------------------------
// BaseField

BaseField BaseField::create(std::uint32_t p, std::uint32_t e,
                            const std::optional<UPoly>& modulus_override) {
  if (!is_prime(p)) throw InvalidInput("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInput("base extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > 256) throw InvalidInput("base fields with more than 256 elements are not supported");
  }
  BaseField f;
  f.p_ = p;
  f.e_ = e;
  f.q_ = static_cast<std::uint32_t>(q);
  const PrimeOps ops{p};
  if (modulus_override) {
    UPoly m = *modulus_override;
    trim(m);
    if (m.size() != e + 1 || m.back() != 1) {
      throw InvalidInput("base modulus override must be monic of degree e");
    }
    if (!is_irreducible_mod_p(p, m)) throw InvalidInput("base modulus override is reducible");
    f.modulus_ = std::move(m);
  } else {
    f.modulus_ = least_irreducible_impl(e, ops);
  }

  const std::size_t qq = f.q_;
  auto to_digits = [&](std::uint32_t code) {
    UPoly d(e, 0);
    for (std::uint32_t t = 0; t < e; ++t) {
      d[t] = code % p;
      code /= p;
    }
    return d;
  };
  auto from_digits = [&](const UPoly& d) {
    std::uint32_t code = 0;
    for (std::size_t t = d.size(); t-- > 0;) code = code * p + d[t];
    return code;
  };

  f.add_.assign(qq * qq, 0);
  f.sub_.assign(qq * qq, 0);
  f.mul_.assign(qq * qq, 0);
  f.neg_.assign(qq, 0);
  f.inv_.assign(qq, 0);
  for (std::uint32_t a = 0; a < qq; ++a) {
    const UPoly da = to_digits(a);
    UPoly dn(e);
    for (std::uint32_t t = 0; t < e; ++t) dn[t] = ops.sub(0, da[t]);
    f.neg_[a] = static_cast<FqCode>(from_digits(dn));
    for (std::uint32_t b = 0; b < qq; ++b) {
      const UPoly db = to_digits(b);
      UPoly s(e), d(e);
      for (std::uint32_t t = 0; t < e; ++t) {
        s[t] = ops.add(da[t], db[t]);
        d[t] = ops.sub(da[t], db[t]);
      }
      f.add_[a * qq + b] = static_cast<FqCode>(from_digits(s));
      f.sub_[a * qq + b] = static_cast<FqCode>(from_digits(d));
      UPoly prod = poly_mulmod(da, db, f.modulus_, ops);
      prod.resize(e, 0);
      f.mul_[a * qq + b] = static_cast<FqCode>(from_digits(prod));
    }
  }
  for (std::uint32_t a = 1; a < qq; ++a) {
    for (std::uint32_t b = 1; b < qq; ++b) {
      if (f.mul_[a * qq + b] == 1) {
        f.inv_[a] = static_cast<FqCode>(b);
        break;
      }
    }
  }
  return f;
}

BaseField BaseField::of_order(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  return create(pe->first, pe->second);
}

FqCode BaseField::inv(FqCode a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return inv_[a];
}

FqCode BaseField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<FqCode>(r);
}

std::vector<std::uint32_t> BaseField::digits(FqCode a) const {
  std::vector<std::uint32_t> d(e_, 0);
  std::uint32_t code = a;
  for (std::uint32_t t = 0; t < e_; ++t) {
    d[t] = code % p_;
    code /= p_;
  }
  return d;
}

// ---------------------------------------------------------------------------
// FieldCtx

namespace {

constexpr std::size_t kMaxDegree = 64;

std::vector<std::uint64_t> factor_distinct(std::uint64_t v) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      primes.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

}  // namespace

FieldCtx FieldCtx::create(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                          const Overrides& overrides) {
  if (n < 1) throw InvalidInput("extension degree n must be at least 1");
  FieldCtx ctx;
  ctx.base_ = BaseField::create(p, e, overrides.base_modulus);
  ctx.n_ = n;
  const std::uint64_t q = ctx.base_.q();
  ctx.qpow_.assign(n + 1, 1);
  for (std::uint32_t j = 1; j <= n; ++j) {
    if (ctx.qpow_[j - 1] > (std::uint64_t{1} << 62) / q) {
      throw InvalidInput("q^n does not fit the 62-bit element encoding");
    }
    ctx.qpow_[j] = ctx.qpow_[j - 1] * q;
  }
  ctx.order_ = ctx.qpow_[n];

  if (overrides.ext_modulus) {
    UPoly m = *overrides.ext_modulus;
    trim(m);
    if (m.size() != n + 1 || m.back() != 1) {
      throw InvalidInput("extension modulus override must be monic of degree n");
    }
    if (!is_irreducible(ctx.base_, m)) throw InvalidInput("extension modulus override is reducible");
    ctx.ext_modulus_ = std::move(m);
  } else {
    ctx.ext_modulus_ = least_irreducible(ctx.base_, n);
  }

  ctx.frob_once_ = std::make_unique<std::once_flag[]>(n);
  ctx.frob_powers_ = std::make_unique<std::vector<FqCode>[]>(n);
  ctx.build_frobenius();
  if (ctx.order_ <= kTableLimit) ctx.build_tables();
  return ctx;
}

FieldCtx FieldCtx::create_q(std::uint64_t q, std::uint32_t n, const Overrides& overrides) {
  auto pe = prime_power(q);
  if (!pe) throw InvalidInput("q = " + std::to_string(q) + " is not a prime power");
  return create(pe->first, pe->second, n, overrides);
}

void FieldCtx::check(FFElem x) const {
  if (!contains(x)) {
    throw InvalidInput("element code " + std::to_string(x.code) + " outside F_{q^n}");
  }
}

FFElem FieldCtx::from_coeffs(std::span<const FqCode> coeffs) const {
  if (coeffs.size() != n_) throw InvalidInput("coefficient vector must have length n");
  std::uint64_t code = 0;
  for (std::size_t j = n_; j-- > 0;) {
    if (coeffs[j] >= q()) throw InvalidInput("coefficient outside F_q");
    code = code * q() + coeffs[j];
  }
  return FFElem{code};
}

FFElem FieldCtx::x_generator() const {
  if (n_ == 1) {
    // x ≡ -M_0 in F_q[x]/(x + M_0)
    return FFElem{base_.neg(static_cast<FqCode>(ext_modulus_[0]))};
  }
  return FFElem{q()};
}

FFElem FieldCtx::primitive_element() const {
  if (!has_tables()) throw BudgetExceeded("primitive element is only tabulated for small fields");
  return primitive_;
}

FqCode FieldCtx::coeff(FFElem a, std::uint32_t j) const {
  return static_cast<FqCode>((a.code / qpow_[j]) % q());
}

void FieldCtx::expand(FFElem a, std::span<FqCode> out) const {
  std::uint64_t code = a.code;
  const std::uint32_t qq = q();
  if ((qq & (qq - 1)) == 0) {
    const std::uint32_t shift = e();
    for (std::uint32_t j = 0; j < n_; ++j) {
      out[j] = static_cast<FqCode>(code & (qq - 1));
      code >>= shift;
    }
    return;
  }
  for (std::uint32_t j = 0; j < n_; ++j) {
    out[j] = static_cast<FqCode>(code % qq);
    code /= qq;
  }
}

std::vector<FqCode> FieldCtx::coeffs(FFElem a) const {
  std::vector<FqCode> out(n_);
  expand(a, out);
  return out;
}

std::vector<std::vector<std::uint32_t>> FieldCtx::digits(FFElem a) const {
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(n_);
  for (FqCode c : coeffs(a)) out.push_back(base_.digits(c));
  return out;
}

// Generic path ---------------------------------------------------------------

FFElem FieldCtx::add_generic(FFElem a, FFElem b) const {
  if (p() == 2) return FFElem{a.code ^ b.code};
  std::array<FqCode, kMaxDegree> da{}, db{};
  expand(a, da);
  expand(b, db);
  for (std::uint32_t j = 0; j < n_; ++j) da[j] = base_.add(da[j], db[j]);
  return from_coeffs(std::span<const FqCode>(da.data(), n_));
}

FFElem FieldCtx::sub_generic(FFElem a, FFElem b) const {
  if (p() == 2) return FFElem{a.code ^ b.code};
  std::array<FqCode, kMaxDegree> da{}, db{};
  expand(a, da);
  expand(b, db);
  for (std::uint32_t j = 0; j < n_; ++j) da[j] = base_.sub(da[j], db[j]);
  return from_coeffs(std::span<const FqCode>(da.data(), n_));
}

FFElem FieldCtx::mul_generic(FFElem a, FFElem b) const {
  std::array<FqCode, kMaxDegree> da{}, db{};
  std::array<FqCode, 2 * kMaxDegree> prod{};
  expand(a, da);
  expand(b, db);
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    const FqCode* row = base_.mul_row(da[i]);
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[i + j] = base_.add(prod[i + j], row[db[j]]);
    }
  }
  // x^n = -sum_{j<n} M_j x^j
  for (std::uint32_t d = 2 * n_ - 1; d-- > n_;) {
    const FqCode c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    const std::uint32_t shift = d - n_;
    for (std::uint32_t j = 0; j < n_; ++j) {
      prod[shift + j] =
          base_.sub(prod[shift + j], base_.mul(c, static_cast<FqCode>(ext_modulus_[j])));
    }
  }
  return from_coeffs(std::span<const FqCode>(prod.data(), n_));
}

FFElem FieldCtx::pow_generic(FFElem a, std::uint64_t exponent) const {
  FFElem result = one();
  FFElem b = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mul_generic(result, b);
    exponent >>= 1U;
    if (exponent != 0) b = mul_generic(b, b);
  }
  return result;
}

FFElem FieldCtx::inv_generic(FFElem a) const {
  if (a.code == 0) throw DomainError("inverse of zero in F_{q^n}");
  return pow_generic(a, order_ - 2);
}

const std::vector<FqCode>& FieldCtx::frob_matrix_power(std::uint32_t j) const {
  j %= n_;
  std::call_once(frob_once_[j], [this, j] {
    const std::size_t nn = n_;
    std::vector<FqCode> acc(nn * nn, 0);
    for (std::size_t r = 0; r < nn; ++r) acc[r * nn + r] = 1;
    for (std::uint32_t step = 0; step < j; ++step) {
      std::vector<FqCode> next(nn * nn, 0);
      for (std::size_t r = 0; r < nn; ++r) {
        for (std::size_t t = 0; t < nn; ++t) {
          const FqCode f = frob_matrix_[r * nn + t];
          if (f == 0) continue;
          for (std::size_t c = 0; c < nn; ++c) {
            next[r * nn + c] = base_.add(next[r * nn + c], base_.mul(f, acc[t * nn + c]));
          }
        }
      }
      acc = std::move(next);
    }
    frob_powers_[j] = std::move(acc);
  });
  return frob_powers_[j];
}

FFElem FieldCtx::frobenius_matrix(FFElem a, std::uint64_t j) const {
  const auto& m = frob_matrix_power(static_cast<std::uint32_t>(j % n_));
  std::array<FqCode, kMaxDegree> in{}, out{};
  expand(a, in);
  for (std::uint32_t r = 0; r < n_; ++r) {
    FqCode acc = 0;
    for (std::uint32_t c = 0; c < n_; ++c) {
      acc = base_.add(acc, base_.mul(m[static_cast<std::size_t>(r) * n_ + c], in[c]));
    }
    out[r] = acc;
  }
  return from_coeffs(std::span<const FqCode>(out.data(), n_));
}

void FieldCtx::build_frobenius() {
  frob_matrix_.assign(static_cast<std::size_t>(n_) * n_, 0);
  for (std::uint32_t c = 0; c < n_; ++c) {
    const FFElem image = pow_generic(FFElem{qpow_[c]}, q());
    const auto col = coeffs(image);
    for (std::uint32_t r = 0; r < n_; ++r) frob_matrix_[static_cast<std::size_t>(r) * n_ + c] = col[r];
  }
}

void FieldCtx::build_tables() {
  const std::uint64_t group = order_ - 1;
  const auto primes = factor_distinct(group);
  FFElem g{0};
  for (std::uint64_t code = 1; code < order_; ++code) {
    const FFElem cand{code};
    bool ok = true;
    for (auto r : primes) {
      if (pow_generic(cand, group / r) == one()) {
        ok = false;
        break;
      }
    }
    if (ok) {
      g = cand;
      break;
    }
  }
  primitive_ = g;
  exp_.assign(group, 0);
  log_.assign(order_, 0);
  FFElem cur = one();
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = static_cast<std::uint32_t>(cur.code);
    log_[cur.code] = static_cast<std::uint32_t>(i);
    cur = mul_generic(cur, g);
  }
  if (p() != 2) {
    zech_.assign(group, -1);
    for (std::uint64_t i = 0; i < group; ++i) {
      const FFElem s = add_generic(one(), FFElem{exp_[i]});
      zech_[i] = s.code == 0 ? -1 : static_cast<std::int32_t>(log_[s.code]);
    }
  }
  frob_log_mult_.assign(n_, 0);
  for (std::uint32_t j = 0; j < n_; ++j) frob_log_mult_[j] = qpow_[j] % group;
}

// Fast path ------------------------------------------------------------------

FFElem FieldCtx::add(FFElem a, FFElem b) const {
  if (p() == 2) return FFElem{a.code ^ b.code};
  if (!has_tables()) return add_generic(a, b);
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  const std::uint64_t group = order_ - 1;
  const std::uint64_t la = log_[a.code];
  const std::uint64_t lb = log_[b.code];
  const std::uint64_t d = lb >= la ? lb - la : lb + group - la;
  const std::int32_t z = zech_[d];
  if (z < 0) return zero();
  std::uint64_t r = la + static_cast<std::uint64_t>(z);
  if (r >= group) r -= group;
  return FFElem{exp_[r]};
}

FFElem FieldCtx::neg(FFElem a) const {
  if (p() == 2 || a.code == 0) return a;
  if (!has_tables()) return sub_generic(zero(), a);
  const std::uint64_t group = order_ - 1;
  std::uint64_t r = log_[a.code] + group / 2;
  if (r >= group) r -= group;
  return FFElem{exp_[r]};
}

FFElem FieldCtx::sub(FFElem a, FFElem b) const {
  if (p() == 2) return FFElem{a.code ^ b.code};
  return add(a, neg(b));
}

FFElem FieldCtx::mul(FFElem a, FFElem b) const {
  if (!has_tables()) return mul_generic(a, b);
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint64_t group = order_ - 1;
  std::uint64_t s = std::uint64_t{log_[a.code]} + log_[b.code];
  if (s >= group) s -= group;
  return FFElem{exp_[s]};
}

FFElem FieldCtx::scale(FqCode c, FFElem a) const { return mul(from_base(c), a); }

FFElem FieldCtx::inv(FFElem a) const {
  if (a.code == 0) throw DomainError("inverse of zero in F_{q^n}");
  if (!has_tables()) return inv_generic(a);
  const std::uint64_t group = order_ - 1;
  const std::uint64_t l = log_[a.code];
  return FFElem{exp_[l == 0 ? 0 : group - l]};
}

FFElem FieldCtx::pow(FFElem a, std::uint64_t exponent) const {
  FFElem result = one();
  FFElem b = a;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, b);
    exponent >>= 1U;
    if (exponent != 0) b = mul(b, b);
  }
  return result;
}

FFElem FieldCtx::frobenius(FFElem a, std::uint64_t j) const {
  j %= n_;
  if (j == 0 || a.code == 0) return a;
  if (!has_tables()) return frobenius_matrix(a, j);
  const std::uint64_t group = order_ - 1;
  const std::uint64_t l = (std::uint64_t{log_[a.code]} * frob_log_mult_[j]) % group;
  return FFElem{exp_[l]};
}

FFElem FieldCtx::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(0, order_ - 1);
  return FFElem{dist(rng)};
}

FFElem FieldCtx::random_nonzero(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::uint64_t> dist(1, order_ - 1);
  return FFElem{dist(rng)};
}

}  // namespace moore
