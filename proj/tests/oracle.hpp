#pragma once

// Brute-force reference arithmetic for tests. Shares no code with the library:
// F_{p^N} is built from its own irreducible search (highest coefficient
// varied first) and a primitive element found by trial.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // constant term first

inline Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  // m is monic
  while (a.size() > dm) {
    const std::uint32_t c = a.back() % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p * p - c * m[i] % p) % p;
    a.pop_back();
  }
  return a;
}

inline bool divides(const Poly& d, const Poly& f, std::uint32_t p) {
  Poly r = poly_mod(f, d, p);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

inline Poly monic_from_index(std::uint64_t idx, std::uint32_t deg, std::uint32_t p) {
  Poly f(deg + 1, 0);
  f[deg] = 1;
  for (std::uint32_t i = deg; i-- > 0;) {
    f[i] = static_cast<std::uint32_t>(idx % p);
    idx /= p;
  }
  return f;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline bool irreducible(const Poly& f, std::uint32_t p) {
  const std::uint32_t deg = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    for (std::uint64_t idx = 0; idx < ipow(p, d); ++idx) {
      if (divides(monic_from_index(idx, d, p), f, p)) return false;
    }
  }
  return true;
}

/// F_{p^N}; element x <-> base-p digits of x are the coefficients.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t N) : p_(p), N_(N), size_(ipow(p, N)) {
    for (std::uint64_t idx = 0;; ++idx) {
      Poly f = monic_from_index(idx, N, p);
      if (N == 1 || irreducible(f, p)) {
        mod_ = f;
        break;
      }
    }
    log_.assign(size_, 0);
    for (std::uint64_t g = 1; g < size_; ++g) {
      exp_.assign(size_ - 1, 0);
      std::uint64_t x = 1;
      bool ok = true;
      for (std::uint64_t i = 0; i + 1 < size_; ++i) {
        if (i > 0 && x == 1) {
          ok = false;
          break;
        }
        exp_[i] = x;
        x = slow_mul(x, g);
      }
      if (ok && x == 1) break;
    }
    for (std::uint64_t i = 0; i + 1 < size_; ++i) log_[exp_[i]] = i;
  }

  std::uint32_t p() const { return p_; }
  std::uint64_t size() const { return size_; }
  const Poly& modulus() const { return mod_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < N_; ++i, w *= p_) {
      r += ((a % p_ + b % p_) % p_) * w;
      a /= p_;
      b /= p_;
    }
    return r;
  }
  std::uint64_t neg(std::uint64_t a) const {
    std::uint64_t r = 0, w = 1;
    for (std::uint32_t i = 0; i < N_; ++i, w *= p_) {
      r += ((p_ - a % p_) % p_) * w;
      a /= p_;
    }
    return r;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (size_ - 1)];
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t m = size_ - 1;
    const unsigned __int128 l = static_cast<unsigned __int128>(log_[a]) * (e % m);
    return exp_[static_cast<std::uint64_t>(l % m)];
  }
  std::uint64_t inv(std::uint64_t a) const { return exp_[(size_ - 1 - log_[a]) % (size_ - 1)]; }

  /// Elements x with x^q = x.
  std::vector<std::uint64_t> subfield(std::uint64_t q) const {
    std::vector<std::uint64_t> out;
    for (std::uint64_t x = 0; x < size_; ++x)
      if (pow(x, q) == x) out.push_back(x);
    return out;
  }

 private:
  std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b) const {
    Poly pa(N_), pb(N_);
    for (std::uint32_t i = 0; i < N_; ++i) {
      pa[i] = a % p_;
      a /= p_;
      pb[i] = b % p_;
      b /= p_;
    }
    Poly prod(2 * N_, 0);
    for (std::uint32_t i = 0; i < N_; ++i)
      for (std::uint32_t j = 0; j < N_; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p_;
    prod = poly_mod(prod, mod_, p_);
    std::uint64_t r = 0;
    for (std::uint32_t i = prod.size(); i-- > 0;) r = r * p_ + prod[i];
    return r;
  }

  std::uint32_t p_, N_;
  std::uint64_t size_;
  Poly mod_;
  std::vector<std::uint64_t> log_, exp_;
};

/// Leibniz expansion over all permutations.
inline std::uint64_t det(const Field& F, const std::vector<std::vector<std::uint64_t>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t total = 0;
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    std::uint64_t t = 1;
    for (std::size_t i = 0; i < k; ++i) t = F.mul(t, m[i][perm[i]]);
    total = inversions % 2 ? F.sub(total, t) : F.add(total, t);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

inline std::uint64_t moore_det(const Field& F, std::uint64_t q, const std::vector<std::uint64_t>& a,
                               const std::vector<std::uint32_t>& exps) {
  std::vector<std::vector<std::uint64_t>> m(a.size(), std::vector<std::uint64_t>(exps.size()));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < exps.size(); ++c) m[r][c] = F.pow(a[r], ipow(q, exps[c]));
  return det(F, m);
}

/// Some nonzero F_q-combination of a vanishes.
inline bool dependent(const Field& F, const std::vector<std::uint64_t>& sub, const std::vector<std::uint64_t>& a) {
  const std::size_t k = a.size();
  const std::uint64_t q = sub.size();
  const std::uint64_t combos = ipow(q, k);
  for (std::uint64_t idx = 1; idx < combos; ++idx) {
    std::uint64_t t = idx, s = 0;
    for (std::size_t i = 0; i < k; ++i) {
      s = F.add(s, F.mul(sub[t % q], a[i]));
      t /= q;
    }
    if (s == 0) return true;
  }
  return false;
}

/// Visits every point of PG(m-1, |F|) with first nonzero coordinate 1.
inline void for_each_projective(const Field& F, std::size_t m,
                                const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
  std::vector<std::uint64_t> v(m);
  for (std::size_t lead = 0; lead < m; ++lead) {
    const std::uint64_t tail = ipow(F.size(), m - lead - 1);
    for (std::uint64_t idx = 0; idx < tail; ++idx) {
      std::fill(v.begin(), v.end(), 0);
      v[lead] = 1;
      std::uint64_t t = idx;
      for (std::size_t j = m; j-- > lead + 1;) {
        v[j] = t % F.size();
        t /= F.size();
      }
      fn(v);
    }
  }
}

/// Moore-ness by scanning all tuples of F_{q^n}^k.
inline bool is_moore(const Field& F, std::uint64_t q, const std::vector<std::uint32_t>& exps) {
  const auto sub = F.subfield(q);
  const std::size_t k = exps.size();
  bool moore = true;
  for_each_projective(F, k, [&](const std::vector<std::uint64_t>& a) {
    if (!moore) return;
    if (moore_det(F, q, a, exps) == 0 && !dependent(F, sub, a)) moore = false;
  });
  return moore;
}

inline std::uint64_t dependent_points(const Field& F, std::uint64_t q, std::size_t m) {
  const auto sub = F.subfield(q);
  std::uint64_t count = 0;
  for_each_projective(F, m, [&](const std::vector<std::uint64_t>& a) { count += dependent(F, sub, a); });
  return count;
}

}  // namespace oracle
