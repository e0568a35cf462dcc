#pragma once

// Canonical representatives of PG(k-1, Q): first nonzero coordinate 1, the
// trailing coordinates run as an odometer with the last one fastest.

#include <cstdint>
#include <vector>

#include "moore/bigint.hpp"
#include "moore/gf_tower.hpp"

namespace moore {

inline BigInt projective_count(std::uint64_t Q, std::size_t k) {
  return (big_pow(BigInt(Q), k) - 1) / (BigInt(Q) - 1);
}

/// Writes representative number idx into a (size k). Element codes are taken
/// as integers in [0, Q).
inline void projective_point(std::uint64_t idx, std::uint64_t Q, std::size_t k, std::vector<FFElem>& a) {
  std::size_t lead = 0;
  while (true) {
    std::uint64_t block = 1;
    for (std::size_t j = lead + 1; j < k; ++j) block *= Q;
    if (idx < block) break;
    idx -= block;
    ++lead;
  }
  for (std::size_t j = 0; j < lead; ++j) a[j] = FFElem{0};
  a[lead] = FFElem{1};
  for (std::size_t j = k; j-- > lead + 1;) {
    a[j] = FFElem{idx % Q};
    idx /= Q;
  }
}

}  // namespace moore
