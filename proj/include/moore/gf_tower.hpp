#pragma once

// Finite field tower F_p ⊂ F_q ⊂ F_{q^n}.
//
// F_q = F_p[y]/(m(y)) with deg m = e, and F_{q^n} = F_q[x]/(M(x)) with
// deg M = n. Elements of F_q are stored as dense codes in [0, q): the base-p
// digits of the code are the coordinates over F_p, constant term first.
// Elements of F_{q^n} are stored as codes in [0, q^n): the base-q digits are
// the coordinates over F_q with respect to the power basis 1, x, ..., x^{n-1}.
//
// Two arithmetic paths exist for F_{q^n}:
//   * the generic path: polynomial arithmetic over F_q reduced modulo M, with
//     Frobenius applied as an F_q-linear matrix;
//   * the table path: discrete log / Zech log tables, used whenever q^n is
//     small enough (see FieldCtx::kTableLimit).
// Both paths are always available and are equivalence-tested.

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "moore/errors.hpp"

namespace moore {

using FqCode = std::uint8_t;

/// Univariate polynomial coefficients, constant term first.
using UPoly = std::vector<std::uint32_t>;

/// Element of F_{q^n}. Only meaningful together with its FieldCtx.
struct FFElem {
  std::uint64_t code = 0;

  friend constexpr bool operator==(FFElem, FFElem) = default;
  friend constexpr auto operator<=>(FFElem, FFElem) = default;
};

bool is_prime(std::uint64_t v);

/// Returns (p, e) with q = p^e, or nullopt if q is not a prime power.
std::optional<std::pair<std::uint32_t, std::uint32_t>> prime_power(std::uint64_t q);

/// The base field F_q with full operation tables (q <= 256).
class BaseField {
 public:
  static BaseField create(std::uint32_t p, std::uint32_t e,
                          const std::optional<UPoly>& modulus_override = std::nullopt);

  /// Convenience: factors q into p^e and builds the default field.
  static BaseField of_order(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }
  const UPoly& modulus() const { return modulus_; }

  FqCode add(FqCode a, FqCode b) const { return add_[idx(a, b)]; }
  FqCode sub(FqCode a, FqCode b) const { return sub_[idx(a, b)]; }
  FqCode mul(FqCode a, FqCode b) const { return mul_[idx(a, b)]; }
  FqCode neg(FqCode a) const { return neg_[a]; }
  FqCode inv(FqCode a) const;

  /// Image of an integer under Z -> F_p ⊂ F_q.
  FqCode from_int(std::int64_t v) const;

  /// F_p coordinates of an F_q element, constant term first (length e).
  std::vector<std::uint32_t> digits(FqCode a) const;

  /// Row c of the multiplication table (q entries): mul_row(c)[x] = c*x.
  const FqCode* mul_row(FqCode c) const { return &mul_[static_cast<std::size_t>(c) * q_]; }
  const FqCode* add_table() const { return add_.data(); }

 private:
  std::size_t idx(FqCode a, FqCode b) const {
    return static_cast<std::size_t>(a) * q_ + b;
  }

  std::uint32_t p_ = 0;
  std::uint32_t e_ = 0;
  std::uint32_t q_ = 0;
  UPoly modulus_;
  std::vector<FqCode> add_, sub_, mul_, neg_, inv_;
};

/// Immutable description of F_p ⊂ F_q ⊂ F_{q^n}. Safe to share across
/// threads; the lazily filled Frobenius power cache is guarded by call_once.
class FieldCtx {
 public:
  /// Fields with at most this many elements get log/Zech tables.
  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 22;

  struct Overrides {
    std::optional<UPoly> base_modulus;  // over F_p, degree e
    std::optional<UPoly> ext_modulus;   // over F_q (coefficients are F_q codes), degree n
  };

  static FieldCtx create(std::uint32_t p, std::uint32_t e, std::uint32_t n,
                         const Overrides& overrides = {});
  static FieldCtx create_q(std::uint64_t q, std::uint32_t n, const Overrides& overrides = {});

  FieldCtx(FieldCtx&&) noexcept = default;
  FieldCtx& operator=(FieldCtx&&) noexcept = default;
  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  const BaseField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint32_t e() const { return base_.e(); }
  std::uint32_t q() const { return base_.q(); }
  std::uint32_t n() const { return n_; }
  /// q^n, the number of elements.
  std::uint64_t order() const { return order_; }
  const UPoly& ext_modulus() const { return ext_modulus_; }
  bool has_tables() const { return !exp_.empty(); }

  /// n x n matrix over F_q, row-major: entry (r, c) is coordinate r of (x^c)^q.
  const std::vector<FqCode>& frob_matrix() const { return frob_matrix_; }
  /// frob_matrix raised to the j-th power (j reduced mod n), cached.
  const std::vector<FqCode>& frob_matrix_power(std::uint32_t j) const;

  bool contains(FFElem x) const { return x.code < order_; }
  void check(FFElem x) const;

  FFElem zero() const { return FFElem{0}; }
  FFElem one() const { return FFElem{1}; }
  FFElem from_base(FqCode c) const { return FFElem{c}; }
  FFElem from_coeffs(std::span<const FqCode> coeffs) const;
  /// The class of x in F_q[x]/(M); equals one() when n == 1 reduces it.
  FFElem x_generator() const;
  /// A generator of the multiplicative group (lowest code); requires tables or
  /// computes it on demand.
  FFElem primitive_element() const;

  FqCode coeff(FFElem a, std::uint32_t j) const;
  void expand(FFElem a, std::span<FqCode> out) const;
  std::vector<FqCode> coeffs(FFElem a) const;
  /// Nested F_p coordinates: n vectors of length e, constant terms first.
  std::vector<std::vector<std::uint32_t>> digits(FFElem a) const;

  // Arithmetic through the fastest available path.
  FFElem add(FFElem a, FFElem b) const;
  FFElem sub(FFElem a, FFElem b) const;
  FFElem neg(FFElem a) const;
  FFElem mul(FFElem a, FFElem b) const;
  FFElem scale(FqCode c, FFElem a) const;
  FFElem inv(FFElem a) const;
  FFElem pow(FFElem a, std::uint64_t exponent) const;
  /// a^{q^{j mod n}}.
  FFElem frobenius(FFElem a, std::uint64_t j) const;

  // Generic polynomial path; never touches the log tables.
  FFElem add_generic(FFElem a, FFElem b) const;
  FFElem sub_generic(FFElem a, FFElem b) const;
  FFElem mul_generic(FFElem a, FFElem b) const;
  FFElem inv_generic(FFElem a) const;
  FFElem pow_generic(FFElem a, std::uint64_t exponent) const;
  /// Applies frob_matrix_power(j) to the coordinate vector of a.
  FFElem frobenius_matrix(FFElem a, std::uint64_t j) const;

  FFElem random(std::mt19937_64& rng) const;
  FFElem random_nonzero(std::mt19937_64& rng) const;

 private:
  FieldCtx() = default;
  void build_frobenius();
  void build_tables();

  BaseField base_;
  std::uint32_t n_ = 0;
  std::uint64_t order_ = 0;
  UPoly ext_modulus_;
  std::vector<std::uint64_t> qpow_;  // q^j, j = 0..n
  std::vector<FqCode> frob_matrix_;

  mutable std::unique_ptr<std::once_flag[]> frob_once_;
  mutable std::unique_ptr<std::vector<FqCode>[]> frob_powers_;

  // Table path. log_[0] is unused; zech_[i] = log(1 + g^i) or -1 if that is 0.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::int32_t> zech_;
  std::vector<std::uint64_t> frob_log_mult_;  // q^j mod (q^n - 1)
  FFElem primitive_{0};
};

/// Arithmetic view that routes everything through the generic polynomial
/// path. Used wherever a result must be re-derived independently of the
/// log tables (witness certificates, equivalence tests).
class GenericArith {
 public:
  explicit GenericArith(const FieldCtx& ctx) : ctx_(&ctx) {}
  const FieldCtx& ctx() const { return *ctx_; }
  FFElem zero() const { return ctx_->zero(); }
  FFElem one() const { return ctx_->one(); }
  FFElem add(FFElem a, FFElem b) const { return ctx_->add_generic(a, b); }
  FFElem sub(FFElem a, FFElem b) const { return ctx_->sub_generic(a, b); }
  FFElem neg(FFElem a) const { return ctx_->sub_generic(ctx_->zero(), a); }
  FFElem mul(FFElem a, FFElem b) const { return ctx_->mul_generic(a, b); }
  FFElem inv(FFElem a) const { return ctx_->inv_generic(a); }
  FFElem frobenius(FFElem a, std::uint64_t j) const { return ctx_->frobenius_matrix(a, j); }

 private:
  const FieldCtx* ctx_;
};

/// Ben-Or irreducibility test for a polynomial over F_q (coefficients are F_q
/// codes, constant term first). The zero polynomial and constants are not
/// irreducible.
bool is_irreducible(const BaseField& field, const UPoly& f);

/// Same test over the prime field F_p.
bool is_irreducible_mod_p(std::uint32_t p, const UPoly& f);

/// Lexicographically least monic irreducible of the given degree, comparing
/// coefficients from the constant term upward.
UPoly least_irreducible(const BaseField& field, std::uint32_t degree);

}  // namespace moore
