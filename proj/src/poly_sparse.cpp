#include "moore/poly_sparse.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "moore/errors.hpp"

namespace moore {

std::uint64_t total_degree(const Monomial& m) {
  std::uint64_t d = 0;
  for (std::uint32_t e : m) d += e;
  return d;
}

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
  const std::uint64_t da = total_degree(a);
  const std::uint64_t db = total_degree(b);
  if (da != db) return da > db;
  return a > b;
}

SparsePoly::SparsePoly(std::shared_ptr<const BaseField> field, std::uint32_t vars)
    : field_(std::move(field)), vars_(vars) {
  if (!field_) throw InvalidInput("polynomial needs a coefficient field");
  if (vars_ > kMaxVars) throw InvalidInput("too many variables");
}

SparsePoly SparsePoly::constant(std::shared_ptr<const BaseField> field, std::uint32_t vars, FqCode c) {
  SparsePoly p(std::move(field), vars);
  p.add_term(Monomial{}, c);
  return p;
}

SparsePoly SparsePoly::monomial(std::shared_ptr<const BaseField> field, std::uint32_t vars,
                                const Monomial& m, FqCode c) {
  SparsePoly p(std::move(field), vars);
  for (std::size_t v = vars; v < kMaxVars; ++v) {
    if (m[v] != 0) throw InvalidInput("monomial uses a variable out of range");
  }
  p.add_term(m, c);
  return p;
}

SparsePoly SparsePoly::variable(std::shared_ptr<const BaseField> field, std::uint32_t vars,
                                std::uint32_t var, std::uint32_t exponent) {
  if (var >= vars) throw InvalidInput("variable index out of range");
  Monomial m{};
  m[var] = exponent;
  return monomial(std::move(field), vars, m, 1);
}

std::uint64_t SparsePoly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

bool SparsePoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const std::uint64_t d = degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return total_degree(t.first) == d; });
}

FqCode SparsePoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void SparsePoly::add_term(const Monomial& m, FqCode c) {
  if (c == 0) return;
  if (c >= field_->q()) throw InvalidInput("coefficient outside F_q");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (fresh) return;
  it->second = field_->add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void SparsePoly::check_compatible(const SparsePoly& o) const {
  if (vars_ != o.vars_ || field_->q() != o.field_->q() || field_->modulus() != o.field_->modulus()) {
    throw InvalidInput("polynomials live in different rings");
  }
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, field_->neg(c));
  return r;
}

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  check_compatible(o);
  SparsePoly r(field_, vars_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (std::size_t v = 0; v < kMaxVars; ++v) {
        const std::uint64_t e = std::uint64_t{ma[v]} + mb[v];
        if (e > UINT32_MAX) throw BudgetExceeded("exponent overflow");
        m[v] = static_cast<std::uint32_t>(e);
      }
      r.add_term(m, field_->mul(ca, cb));
    }
  }
  return r;
}

SparsePoly SparsePoly::scaled(FqCode c) const {
  SparsePoly r(field_, vars_);
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_->mul(v, c));
  return r;
}

SparsePoly sym_moore_poly(std::shared_ptr<const BaseField> field, std::uint32_t k,
                          const std::vector<std::uint32_t>& exps, const SymbolicOptions& opt) {
  if (k < 1) throw InvalidInput("k must be positive");
  if (k > kMaxVars) throw InvalidInput("at most 8 variables are supported");
  if (exps.size() != k) throw InvalidInput("need exactly k exponents");
  const std::uint64_t q = field->q();
  std::vector<std::uint32_t> col_exp(k);
  for (std::uint32_t c = 0; c < k; ++c) {
    std::uint64_t v = 1;
    for (std::uint32_t t = 0; t < exps[c]; ++t) {
      v *= q;
      if (v > opt.max_exponent) throw BudgetExceeded("q^e exceeds the exponent budget");
    }
    col_exp[c] = static_cast<std::uint32_t>(v);
  }
  std::uint64_t terms = 1;
  for (std::uint32_t t = 2; t <= k; ++t) terms *= t;
  if (terms > opt.max_terms) throw BudgetExceeded("k! terms exceed the term budget");
  SparsePoly out(field, k);
  std::vector<std::uint32_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0u);
  const FqCode plus = field->from_int(1);
  const FqCode minus = field->from_int(-1);
  do {
    std::size_t inversions = 0;
    for (std::uint32_t a = 0; a < k; ++a) {
      for (std::uint32_t b = a + 1; b < k; ++b) inversions += perm[a] > perm[b];
    }
    Monomial m{};
    for (std::uint32_t r = 0; r < k; ++r) m[r] = col_exp[perm[r]];
    out.add_term(m, inversions % 2 ? minus : plus);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SparsePoly sym_moore_poly(std::uint64_t q, std::uint32_t k, const std::vector<std::uint32_t>& exps,
                          const SymbolicOptions& opt) {
  return sym_moore_poly(std::make_shared<const BaseField>(BaseField::of_order(q)), k, exps, opt);
}

SparsePoly divexact(const SparsePoly& f, const SparsePoly& g, const SymbolicOptions& opt) {
  if (g.is_zero()) throw DomainError("division by the zero polynomial");
  if (f.vars() != g.vars() || f.field().q() != g.field().q()) {
    throw InvalidInput("polynomials live in different rings");
  }
  const BaseField& F = f.field();
  SparsePoly rem = f;
  SparsePoly quo(f.field_ptr(), f.vars());
  const auto& [glm, glc] = *g.terms().begin();
  const FqCode ginv = F.inv(glc);
  while (!rem.is_zero()) {
    const auto [rm, rc] = *rem.terms().begin();
    Monomial shift;
    for (std::size_t v = 0; v < kMaxVars; ++v) {
      if (rm[v] < glm[v]) throw InexactDivision("leading term is not divisible; division is not exact");
      shift[v] = rm[v] - glm[v];
    }
    const FqCode t = F.mul(rc, ginv);
    quo.add_term(shift, t);
    const FqCode nt = F.neg(t);
    for (const auto& [m, c] : g.terms()) {
      Monomial mm;
      for (std::size_t v = 0; v < kMaxVars; ++v) mm[v] = m[v] + shift[v];
      rem.add_term(mm, F.mul(nt, c));
    }
    if (rem.size() > opt.max_terms || quo.size() > opt.max_terms) {
      throw BudgetExceeded("exact division exceeds the term budget");
    }
  }
  if (!(g * quo == f)) throw InexactDivision("multiply-back check failed");
  return quo;
}

SparsePoly partial_derivative(const SparsePoly& f, std::uint32_t var) {
  if (var >= f.vars()) throw InvalidInput("variable index out of range");
  const BaseField& F = f.field();
  SparsePoly out(f.field_ptr(), f.vars());
  for (const auto& [m, c] : f.terms()) {
    if (m[var] == 0) continue;
    const FqCode factor = F.from_int(static_cast<std::int64_t>(m[var] % F.p()));
    if (factor == 0) continue;
    Monomial mm = m;
    --mm[var];
    out.add_term(mm, F.mul(c, factor));
  }
  return out;
}

FFElem eval_poly(const FieldCtx& ctx, const SparsePoly& f, const std::vector<FFElem>& point) {
  if (point.size() != f.vars()) throw InvalidInput("point arity differs from the number of variables");
  if (ctx.q() != f.field().q() || ctx.base().modulus() != f.field().modulus()) {
    throw InvalidInput("evaluation field does not extend the coefficient field");
  }
  for (FFElem x : point) ctx.check(x);
  FFElem acc = ctx.zero();
  for (const auto& [m, c] : f.terms()) {
    FFElem t = ctx.from_base(c);
    for (std::uint32_t v = 0; v < f.vars() && t.code != 0; ++v) {
      if (m[v] != 0) t = ctx.mul(t, ctx.pow(point[v], m[v]));
    }
    acc = ctx.add(acc, t);
  }
  return acc;
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    const bool constant = total_degree(m) == 0;
    bool sep = false;
    if (c != 1 || constant) {
      os << static_cast<unsigned>(c);
      sep = true;
    }
    for (std::uint32_t v = 0; v < f.vars(); ++v) {
      if (m[v] == 0) continue;
      if (sep) os << "*";
      sep = true;
      os << "X" << (v + 1);
      if (m[v] != 1) os << "^" << m[v];
    }
  }
  return os.str();
}

SparsePoly parse_poly(std::shared_ptr<const BaseField> field, std::uint32_t vars, const std::string& text) {
  SparsePoly out(field, vars);
  std::string cleaned;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t' && ch != '\n') cleaned.push_back(ch);
  }
  if (cleaned == "0") return out;
  auto parse_uint = [](const std::string& s) -> std::uint64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidInput("malformed polynomial term");
    }
    return std::stoull(s);
  };
  std::stringstream terms(cleaned);
  std::string term;
  while (std::getline(terms, term, '+')) {
    if (term.empty()) throw InvalidInput("malformed polynomial: empty term");
    std::stringstream factors(term);
    std::string fac;
    Monomial m{};
    std::uint64_t coef = 1;
    while (std::getline(factors, fac, '*')) {
      if (!fac.empty() && (fac[0] == 'X' || fac[0] == 'x')) {
        const auto caret = fac.find('^');
        const std::uint64_t var = parse_uint(fac.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        const std::uint64_t e = caret == std::string::npos ? 1 : parse_uint(fac.substr(caret + 1));
        if (var < 1 || var > vars) throw InvalidInput("variable index out of range in polynomial");
        if (e > UINT32_MAX - m[var - 1]) throw InvalidInput("exponent too large");
        m[var - 1] += static_cast<std::uint32_t>(e);
      } else {
        coef = parse_uint(fac) * coef;
        if (coef >= field->q()) throw InvalidInput("coefficient outside F_q");
      }
    }
    out.add_term(m, static_cast<FqCode>(coef));
  }
  return out;
}

}  // namespace moore
