#pragma once

// Linearized polynomials sum_j c_j X^{q^j} over F_{q^n}, 0 <= j < n.

#include <cstdint>
#include <optional>
#include <vector>

#include "moore/exponent_set.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/gf_tower.hpp"

namespace moore {

/// Dense coefficient vector: coeffs[j] multiplies X^{q^j}. Always length n.
struct LinPoly {
  std::vector<FFElem> coeffs;

  static LinPoly zero(const FieldCtx& ctx) { return LinPoly{std::vector<FFElem>(ctx.n())}; }
  /// c * X^{q^j}
  static LinPoly monomial(const FieldCtx& ctx, std::uint32_t j, FFElem c);

  bool is_zero() const;
  /// Largest j with a nonzero coefficient; nullopt for the zero polynomial.
  std::optional<std::uint32_t> q_degree() const;

  friend bool operator==(const LinPoly&, const LinPoly&) = default;
};

FFElem lin_eval(const FieldCtx& ctx, const LinPoly& f, FFElem x);

/// The n x n F_q matrix of f: column t holds the coordinates of f(x^t).
FqMatrix lin_matrix(const FieldCtx& ctx, const LinPoly& f);

struct LinKernel {
  std::uint32_t dim = 0;
  std::vector<FFElem> basis;
};

LinKernel lin_kernel(const FieldCtx& ctx, const LinPoly& f);

/// g o f, reduced modulo X^{q^n} - X.
LinPoly lin_compose(const FieldCtx& ctx, const LinPoly& g, const LinPoly& f);

/// Whether f divides g in F_{q^n}[X] (ordinary division of the expanded
/// polynomials). Throws InvalidInput if f is zero.
bool lin_divides(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g);

/// Same question answered by right division in the composition ring.
bool lin_divides_symbolic(const FieldCtx& ctx, const LinPoly& f, const LinPoly& g);

struct LMNR {
  LinPoly L;
  LinPoly M;
  FFElem N;
  FFElem R;
  bool r_is_convention = false;  // k = 4: R is the 1 x 1 determinant |1|
};

/// The determinants L(U, z), M(U, z) expanded along the U row, and the
/// scalars N(z), R(z). Requires k >= 4 and |z| = k - 3.
LMNR build_LMNR(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& z);

struct ZCertificate {
  std::vector<FFElem> z;
  FFElem N;
  std::uint64_t trials = 0;  // trials consumed, including the successful one
};

struct ZSearchOptions {
  std::uint64_t budget = 10000;
  std::uint64_t seed = 0x5eed;
  bool randomize = false;  // draw the seed from std::random_device
};

/// Searches z with N(z) != 0 and M(U, z) not dividing L(U, z). Requires
/// k >= 4, i_2 = 2 i_1, and I not of the form {0, d, ..., (k-1)d}.
std::optional<ZCertificate> case2_z_search(const FieldCtx& ctx, const ExponentSet& I,
                                           const ZSearchOptions& opt = {});

/// Re-checks a certificate with the generic arithmetic path and symbolic
/// division.
bool verify_z_certificate(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& z);

}  // namespace moore
