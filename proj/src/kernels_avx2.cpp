#include <immintrin.h>

#include "moore/kernels.hpp"

namespace moore::kernels::avx2 {

namespace {

inline __m256i load_table(const FqCode* table) {
  return _mm256_broadcastsi128_si256(_mm_load_si128(reinterpret_cast<const __m128i*>(table)));
}

}  // namespace

void axpy_prime(FqCode* dst, const FqCode* src, const FqCode* table, FqCode p, std::size_t len) {
  const __m256i t = load_table(table);
  const __m256i vp = _mm256_set1_epi8(static_cast<char>(p));
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    const __m256i sum = _mm256_add_epi8(d, _mm256_shuffle_epi8(t, s));
    // sum < 2p <= 32; sum - p wraps above sum exactly when sum < p.
    const __m256i r = _mm256_min_epu8(sum, _mm256_sub_epi8(sum, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
  }
  for (; i < len; ++i) {
    const unsigned s = static_cast<unsigned>(dst[i]) + table[src[i]];
    dst[i] = static_cast<FqCode>(s >= p ? s - p : s);
  }
}

void axpy_char2(FqCode* dst, const FqCode* src, const FqCode* table, std::size_t len) {
  const __m256i t = load_table(table);
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_xor_si256(d, _mm256_shuffle_epi8(t, s)));
  }
  for (; i < len; ++i) dst[i] = static_cast<FqCode>(dst[i] ^ table[src[i]]);
}

void scale(FqCode* dst, const FqCode* table, std::size_t len) {
  const __m256i t = load_table(table);
  std::size_t i = 0;
  for (; i + 32 <= len; i += 32) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_shuffle_epi8(t, d));
  }
  for (; i < len; ++i) dst[i] = table[dst[i]];
}

}  // namespace moore::kernels::avx2
