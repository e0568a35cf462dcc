#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace moore {

/// Strictly increasing exponents in [0, n).
struct ExponentSet {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> exps;

  std::size_t k() const { return exps.size(); }
  std::uint32_t max() const { return exps.back(); }

  friend bool operator==(const ExponentSet&, const ExponentSet&) = default;
  friend auto operator<=>(const ExponentSet&, const ExponentSet&) = default;
};

struct Normalized {
  ExponentSet set;        // reduced mod n, sorted, shifted so min = 0
  ExponentSet canonical;  // lexicographically least of the n shifts
  std::uint32_t shift = 0;  // canonical = (raw + shift) mod n, sorted
};

/// Throws InvalidInput on empty input, negative values, n = 0, duplicates
/// mod n, or k > n.
Normalized normalize(const std::vector<std::int64_t>& raw, std::uint32_t n);

/// (I + s) mod n, sorted.
ExponentSet shifted(const ExponentSet& I, std::uint32_t s);

/// (d * I) mod n, sorted; caller ensures gcd(d, n) = 1.
ExponentSet scaled(const ExponentSet& I, std::uint32_t d);

/// Lexicographically least shift of I mod n.
ExponentSet canonical_shift(const ExponentSet& I);

/// I = {0, d, 2d, ..., (k-1)d} as integers (no reduction mod n), d >= 1.
/// Singletons count as progressions.
bool is_integer_progression(const ExponentSet& I);

std::string to_string(const ExponentSet& I);

/// Parses "0,1,3" (also accepts spaces and braces).
std::vector<std::int64_t> parse_exponent_list(const std::string& text);

}  // namespace moore
