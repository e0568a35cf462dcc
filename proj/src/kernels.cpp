#include "moore/kernels.hpp"

#include <array>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace moore::kernels {

namespace {

// -1 = no override, otherwise static_cast<int>(Isa).
std::atomic<int> g_isa_override{-1};
std::atomic<bool> g_packed_gf2{true};

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa detected_isa() {
#if defined(MOORE_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool has_avx2 = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return has_avx2 ? Isa::avx2 : Isa::scalar;
#else
  return Isa::scalar;
#endif
}

Isa active_isa() {
  const int o = g_isa_override.load(std::memory_order_relaxed);
  if (o >= 0) {
    const auto requested = static_cast<Isa>(o);
    return requested == Isa::avx2 ? detected_isa() : Isa::scalar;
  }
  static const bool env_scalar = [] {
    const char* v = std::getenv("MOORE_KERNELS");
    return v != nullptr && std::strcmp(v, "scalar") == 0;
  }();
  return env_scalar ? Isa::scalar : detected_isa();
}

void set_isa_override(std::optional<Isa> isa) {
  g_isa_override.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

bool packed_gf2_enabled() { return g_packed_gf2.load(std::memory_order_relaxed); }
void set_packed_gf2(bool enabled) { g_packed_gf2.store(enabled, std::memory_order_relaxed); }

namespace scalar {

void axpy(const BaseField& f, FqCode* dst, const FqCode* src, FqCode c, std::size_t len) {
  if (c == 0) return;
  const FqCode* mul = f.mul_row(c);
  const FqCode* add = f.add_table();
  const std::size_t q = f.q();
  for (std::size_t i = 0; i < len; ++i) {
    dst[i] = add[dst[i] * q + mul[src[i]]];
  }
}

void scale(const BaseField& f, FqCode* dst, FqCode c, std::size_t len) {
  const FqCode* mul = f.mul_row(c);
  for (std::size_t i = 0; i < len; ++i) dst[i] = mul[dst[i]];
}

}  // namespace scalar

RowKernel::RowKernel(const BaseField& field, Isa isa) : field_(&field), isa_(isa) {
  const std::uint32_t q = field.q();
  if (q <= 16) {
    if (field.is_prime_field()) {
      kind_ = Kind::prime;
    } else if (field.p() == 2) {
      kind_ = Kind::char2;
    }
  }
  if (kind_ == Kind::generic) {
    isa_ = Isa::scalar;
    return;
  }
  for (std::uint32_t c = 0; c < q; ++c) {
    const FqCode* row = field.mul_row(static_cast<FqCode>(c));
    for (std::uint32_t x = 0; x < q; ++x) tables_[c][x] = row[x];
  }
#if !defined(MOORE_HAVE_AVX2_TU)
  isa_ = Isa::scalar;
#endif
}

void RowKernel::axpy(FqCode* dst, const FqCode* src, FqCode c, std::size_t len) const {
  if (c == 0) return;
#if defined(MOORE_HAVE_AVX2_TU)
  if (isa_ == Isa::avx2) {
    if (kind_ == Kind::prime) {
      avx2::axpy_prime(dst, src, tables_[c], static_cast<FqCode>(field_->p()), len);
    } else {
      avx2::axpy_char2(dst, src, tables_[c], len);
    }
    return;
  }
#endif
  scalar::axpy(*field_, dst, src, c, len);
}

void RowKernel::scale(FqCode* dst, FqCode c, std::size_t len) const {
#if defined(MOORE_HAVE_AVX2_TU)
  if (isa_ == Isa::avx2) {
    avx2::scale(dst, tables_[c], len);
    return;
  }
#endif
  scalar::scale(*field_, dst, c, len);
}

int rank_gf2(std::span<std::uint64_t> rows) {
  // Basis indexed by leading bit; each incoming row is reduced against it.
  std::array<std::uint64_t, 64> basis{};
  int rank = 0;
  for (std::uint64_t v : rows) {
    while (v != 0) {
      const int h = 63 - std::countl_zero(v);
      if (basis[h] == 0) {
        basis[h] = v;
        ++rank;
        break;
      }
      v ^= basis[h];
    }
  }
  return rank;
}

}  // namespace moore::kernels
