#include "moore/exponent_set.hpp"

#include <algorithm>
#include <cctype>

#include "moore/errors.hpp"

namespace moore {

namespace {

ExponentSet sorted_mod(std::uint32_t n, std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  return ExponentSet{n, std::move(v)};
}

}  // namespace

Normalized normalize(const std::vector<std::int64_t>& raw, std::uint32_t n) {
  if (n == 0) throw InvalidInput("n must be positive");
  if (raw.empty()) throw InvalidInput("exponent set is empty");
  if (raw.size() > n) throw InvalidInput("exponent set has more than n elements");
  std::vector<std::uint32_t> red;
  red.reserve(raw.size());
  for (std::int64_t v : raw) {
    if (v < 0) throw InvalidInput("exponents must be nonnegative");
    red.push_back(static_cast<std::uint32_t>(v % n));
  }
  std::sort(red.begin(), red.end());
  if (std::adjacent_find(red.begin(), red.end()) != red.end()) {
    throw InvalidInput("exponents coincide modulo n");
  }
  Normalized out;
  const std::uint32_t m = red.front();
  for (auto& v : red) v -= m;
  out.set = ExponentSet{n, red};
  out.canonical = out.set;
  out.shift = (n - m) % n;
  for (std::uint32_t s = 1; s < n; ++s) {
    ExponentSet cand = shifted(out.set, s);
    if (cand.exps < out.canonical.exps) {
      out.canonical = std::move(cand);
      out.shift = static_cast<std::uint32_t>((s + n - m) % n);
    }
  }
  return out;
}

ExponentSet shifted(const ExponentSet& I, std::uint32_t s) {
  std::vector<std::uint32_t> v;
  v.reserve(I.k());
  for (std::uint32_t e : I.exps) v.push_back(static_cast<std::uint32_t>((std::uint64_t{e} + s) % I.n));
  return sorted_mod(I.n, std::move(v));
}

ExponentSet scaled(const ExponentSet& I, std::uint32_t d) {
  std::vector<std::uint32_t> v;
  v.reserve(I.k());
  for (std::uint32_t e : I.exps) v.push_back(static_cast<std::uint32_t>((std::uint64_t{e} * d) % I.n));
  return sorted_mod(I.n, std::move(v));
}

ExponentSet canonical_shift(const ExponentSet& I) {
  ExponentSet best = shifted(I, 0);
  for (std::uint32_t s = 1; s < I.n; ++s) {
    ExponentSet cand = shifted(I, s);
    if (cand.exps < best.exps) best = std::move(cand);
  }
  return best;
}

bool is_integer_progression(const ExponentSet& I) {
  if (I.exps.empty() || I.exps.front() != 0) return false;
  if (I.k() == 1) return true;
  const std::uint32_t d = I.exps[1];
  for (std::size_t j = 0; j < I.k(); ++j) {
    if (I.exps[j] != d * j) return false;
  }
  return true;
}

std::string to_string(const ExponentSet& I) {
  std::string s = "{";
  for (std::size_t j = 0; j < I.k(); ++j) {
    if (j) s += ",";
    s += std::to_string(I.exps[j]);
  }
  return s + "}";
}

std::vector<std::int64_t> parse_exponent_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string tok;
  auto flush = [&] {
    if (tok.empty()) return;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(tok, &used);
      if (used != tok.size()) throw InvalidInput("bad exponent '" + tok + "'");
      out.push_back(v);
    } catch (const std::logic_error&) {
      throw InvalidInput("bad exponent '" + tok + "'");
    }
    tok.clear();
  };
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)) || ch == '{' || ch == '}') {
      flush();
    } else {
      tok.push_back(ch);
    }
  }
  flush();
  if (out.empty()) throw InvalidInput("empty exponent list");
  return out;
}

}  // namespace moore
