#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "moore/gf_tower.hpp"
#include "oracle.hpp"

namespace testing_support {

/// Library field over the prime q whose modulus is the oracle's, so element
/// codes coincide.
inline moore::FieldCtx aligned_field(const oracle::Field& F, std::uint32_t p, std::uint32_t n) {
  moore::FieldCtx::Overrides ov;
  ov.ext_modulus = moore::UPoly(F.modulus().begin(), F.modulus().end());
  return moore::FieldCtx::create(p, 1, n, ov);
}

inline std::vector<moore::FFElem> random_tuple(const moore::FieldCtx& ctx, std::size_t k, std::mt19937_64& rng) {
  std::vector<moore::FFElem> a(k);
  for (auto& x : a) x = ctx.random(rng);
  return a;
}

inline std::vector<std::uint64_t> codes(const std::vector<moore::FFElem>& a) {
  std::vector<std::uint64_t> out;
  for (auto x : a) out.push_back(x.code);
  return out;
}

}  // namespace testing_support
