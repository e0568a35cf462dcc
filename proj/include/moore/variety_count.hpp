#pragma once

// Rational points of F_I = det M_{A,I} and of G_k over F_{q^n}, closed-form
// counts, and the Hasse-Weil style lower bounds.

#include <cstdint>
#include <vector>

#include "moore/bigint.hpp"
#include "moore/exponent_set.hpp"
#include "moore/gf_tower.hpp"
#include "moore/parallel.hpp"
#include "moore/poly_sparse.hpp"

namespace moore {

/// Points of PG(m-1, q^n) whose coordinates are F_q-dependent, closed form:
/// q^{n(m-1)} - prod_{s=1}^{m-1} (q^n - q^s) + (q^{n(m-1)} - 1) / (q^n - 1).
BigInt dependent_count_formula(std::uint64_t q, std::uint32_t n, std::uint32_t m);

struct PointCountOptions {
  ParallelOptions parallel;
  std::uint64_t budget = 1'000'000'000;
};

struct PointCountReport {
  std::uint64_t n_points = 0;   // |PG(k-1, q^n)|
  std::uint64_t n_F_zero = 0;   // F_I = 0
  std::uint64_t n_dep = 0;      // coordinates F_q-dependent (G_k = 0)
  std::uint64_t n_witness = 0;  // F_I = 0 with independent coordinates
  BigInt formula_dep;
  bool match = false;
};

PointCountReport count_points(const FieldCtx& ctx, const ExponentSet& I, const PointCountOptions& opt = {});

struct HwBound {
  BigInt ell;      // q^j + q^i - q^2 - q
  BigInt bound;    // q^n + 1 - ceil((ell-1)(ell-2) q^{n/2}), clamped when (ell-1)(ell-2) <= 0
  BigInt relaxed;  // q^n + 1 - ceil((q^j + q^i)^2 q^{n/2})
};

HwBound hw_lower_bound(std::uint64_t q, std::uint32_t n, std::uint32_t i, std::uint32_t j);

struct IntersectionFormula {
  BigInt value;
  bool hypotheses_hold = false;  // gcd(i, j) = 1 and j > 2
};

IntersectionFormula intersection_count_formula(std::uint64_t q, std::uint32_t i, std::uint32_t j);

struct BorgesOptions {
  std::uint64_t budget = 50'000'000;  // points of PG(2, q^m)
  SymbolicOptions symbolic;
};

struct BorgesReport {
  std::uint64_t q = 0;
  std::uint32_t i = 0, j = 0, m = 0;
  SparsePoly H;                       // F_I / G_3
  std::uint64_t points_searched = 0;  // |PG(2, q^m)|
  std::uint64_t intersection_count = 0;  // H = 0 and G_3 = 0
  IntersectionFormula formula;
  bool count_matches = false;
  std::uint64_t intersection_outside_locus = 0;  // intersection points not in the predicted set
  std::uint64_t locus_points = 0;     // points of PG(2, q^{j-i}) (minus PG(2, q) if i = 1)
  std::uint64_t locus_singular = 0;   // of those, points where H and all partials vanish
  bool locus_all_singular = false;
  std::uint64_t singular_total = 0;   // singular points of H = 0 found anywhere in PG(2, q^m)
};

/// Requires 1 <= i < j, j > 2, gcd(i, j) = 1 and (j - i) | m.
BorgesReport verify_borges(std::uint64_t q, std::uint32_t i, std::uint32_t j, std::uint32_t m,
                           const BorgesOptions& opt = {});

/// Integer square root (floor).
BigInt isqrt(const BigInt& v);

}  // namespace moore
