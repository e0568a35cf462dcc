#pragma once

// Sparse multivariate polynomials over F_q with up to kMaxVars variables.
// Terms are kept in graded-lex order, largest first; that order also drives
// exact division.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "moore/gf_tower.hpp"

namespace moore {

inline constexpr std::size_t kMaxVars = 8;

using Monomial = std::array<std::uint32_t, kMaxVars>;

std::uint64_t total_degree(const Monomial& m);

/// Graded lexicographic, descending: higher total degree first, ties broken
/// lexicographically with X1 most significant.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class SparsePoly {
 public:
  using Terms = std::map<Monomial, FqCode, GrlexDesc>;

  SparsePoly() = default;
  SparsePoly(std::shared_ptr<const BaseField> field, std::uint32_t vars);

  static SparsePoly constant(std::shared_ptr<const BaseField> field, std::uint32_t vars, FqCode c);
  /// c * X_{var+1}^{exp}
  static SparsePoly monomial(std::shared_ptr<const BaseField> field, std::uint32_t vars,
                             const Monomial& m, FqCode c);
  static SparsePoly variable(std::shared_ptr<const BaseField> field, std::uint32_t vars,
                             std::uint32_t var, std::uint32_t exponent = 1);

  const BaseField& field() const { return *field_; }
  const std::shared_ptr<const BaseField>& field_ptr() const { return field_; }
  std::uint32_t vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Max total degree; 0 for the zero polynomial.
  std::uint64_t degree() const;
  bool is_homogeneous() const;
  FqCode coefficient(const Monomial& m) const;

  /// Adds c * m (c may cancel an existing term).
  void add_term(const Monomial& m, FqCode c);

  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(FqCode c) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SparsePoly& o) const;

  std::shared_ptr<const BaseField> field_;
  std::uint32_t vars_ = 0;
  Terms terms_;
};

struct SymbolicOptions {
  std::uint64_t max_terms = 10'000'000;
  std::uint64_t max_exponent = std::uint64_t{1} << 30;
};

/// The determinant det[X_r^{q^{e_c}}] in k variables.
SparsePoly sym_moore_poly(std::shared_ptr<const BaseField> field, std::uint32_t k,
                          const std::vector<std::uint32_t>& exps, const SymbolicOptions& opt = {});
/// Convenience: builds F_q from q.
SparsePoly sym_moore_poly(std::uint64_t q, std::uint32_t k, const std::vector<std::uint32_t>& exps,
                          const SymbolicOptions& opt = {});

/// h with g * h = f. Throws InexactDivision, DomainError (g = 0) or
/// BudgetExceeded. The product g * h is recomputed and compared with f.
SparsePoly divexact(const SparsePoly& f, const SparsePoly& g, const SymbolicOptions& opt = {});

SparsePoly partial_derivative(const SparsePoly& f, std::uint32_t var);

/// Evaluates f at a point of F_{q^n}^vars; ctx must extend f's base field.
FFElem eval_poly(const FieldCtx& ctx, const SparsePoly& f, const std::vector<FFElem>& point);

/// Terms "c*X1^a1*X2^a2" joined by " + " in graded-lex order; exponent 1 is
/// written as a bare variable; "0" for the zero polynomial.
std::string to_string(const SparsePoly& f);
SparsePoly parse_poly(std::shared_ptr<const BaseField> field, std::uint32_t vars, const std::string& text);

}  // namespace moore
