#pragma once

// Row kernels for Gaussian elimination over F_q.
//
// Every F_q-rank, RREF and kernel computation in the library funnels through
// two row operations, dst += c*src and dst *= c, on byte rows holding F_q
// codes. The scalar versions below are the reference; AVX2 versions (in
// kernels_avx2.cpp) cover q <= 16 for prime q and for q = 2^e, and are picked
// at runtime after a CPUID check. For q = 2 there is also a bit-packed rank
// routine working on 64-bit row masks.
//
// The override hooks exist so tests can pin either variant and compare.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "moore/gf_tower.hpp"

namespace moore::kernels {

enum class Isa { scalar, avx2 };

inline constexpr std::size_t kRowAlign = 32;

inline constexpr std::size_t padded(std::size_t cols) {
  return (cols + kRowAlign - 1) / kRowAlign * kRowAlign;
}

const char* isa_name(Isa isa);

/// What the running CPU (and the build) supports.
Isa detected_isa();

/// detected_isa(), unless overridden by set_isa_override() or by the
/// MOORE_KERNELS=scalar environment variable.
Isa active_isa();

void set_isa_override(std::optional<Isa> isa);

/// When false, F_2 matrices go through the byte-row path instead of the
/// bit-packed one. Defaults to true.
bool packed_gf2_enabled();
void set_packed_gf2(bool enabled);

class RowKernel {
 public:
  explicit RowKernel(const BaseField& field, Isa isa = active_isa());

  /// The variant actually in use (fields not covered by AVX2 fall back).
  Isa isa() const { return isa_; }

  /// dst[i] += c * src[i] for i < len.
  void axpy(FqCode* dst, const FqCode* src, FqCode c, std::size_t len) const;
  /// dst[i] *= c for i < len.
  void scale(FqCode* dst, FqCode c, std::size_t len) const;

 private:
  enum class Kind { generic, prime, char2 };

  const BaseField* field_;
  Isa isa_;
  Kind kind_ = Kind::generic;
  alignas(16) FqCode tables_[16][16] = {};
};

namespace scalar {
void axpy(const BaseField& f, FqCode* dst, const FqCode* src, FqCode c, std::size_t len);
void scale(const BaseField& f, FqCode* dst, FqCode c, std::size_t len);
}  // namespace scalar

#if defined(MOORE_HAVE_AVX2_TU)
namespace avx2 {
// `table` holds c*x for x < 16. Lengths need not be multiples of 32.
void axpy_prime(FqCode* dst, const FqCode* src, const FqCode* table, FqCode p, std::size_t len);
void axpy_char2(FqCode* dst, const FqCode* src, const FqCode* table, std::size_t len);
void scale(FqCode* dst, const FqCode* table, std::size_t len);
}  // namespace avx2
#endif

/// Rank of a set of F_2 row vectors packed into 64-bit masks. The input is
/// consumed as scratch.
int rank_gf2(std::span<std::uint64_t> rows);

}  // namespace moore::kernels
