#include "moore/fq_linalg.hpp"

#include <algorithm>
#include <limits>

#include "moore/errors.hpp"

namespace moore {

FqMatrix FqMatrix::from_rows(const std::vector<std::vector<FqCode>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FqMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r));
  }
  return m;
}

void FqMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a), row(a) + stride_, row(b));
}

RrefResult rref(const kernels::RowKernel& kernel, const BaseField& field, FqMatrix& m) {
  RrefResult res;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t len = m.stride();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    const FqCode lead = m.at(r, c);
    if (lead != 1) kernel.scale(m.row(r), field.inv(lead), len);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const FqCode x = m.at(i, c);
      if (x != 0) kernel.axpy(m.row(i), m.row(r), field.neg(x), len);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

RrefResult rref(const BaseField& field, FqMatrix& m) {
  const kernels::RowKernel kernel(field);
  return rref(kernel, field, m);
}

namespace {

std::size_t rank_packed(const FqMatrix& m) {
  std::vector<std::uint64_t> packed(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::uint64_t v = 0;
    const FqCode* row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c) v |= std::uint64_t{row[c]} << c;
    packed[r] = v;
  }
  return static_cast<std::size_t>(kernels::rank_gf2(packed));
}

}  // namespace

std::size_t rank(const kernels::RowKernel& kernel, const BaseField& field, FqMatrix m) {
  if (field.q() == 2 && m.cols() <= 64 && kernels::packed_gf2_enabled()) return rank_packed(m);
  const std::size_t rows = m.rows();
  const std::size_t len = m.stride();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m.at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, r);
    const FqCode inv = field.inv(m.at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      const FqCode x = m.at(i, c);
      if (x != 0) kernel.axpy(m.row(i), m.row(r), field.neg(field.mul(x, inv)), len);
    }
    ++r;
  }
  return r;
}

std::size_t rank(const BaseField& field, FqMatrix m) {
  const kernels::RowKernel kernel(field);
  return rank(kernel, field, std::move(m));
}

std::vector<std::vector<FqCode>> kernel_basis(const BaseField& field, FqMatrix m) {
  const RrefResult rr = rref(field, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<std::vector<FqCode>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<FqCode> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = field.neg(m.at(i, f));
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<FqCode> expand(const FieldCtx& ctx, FFElem x) {
  ctx.check(x);
  return ctx.coeffs(x);
}

std::size_t fq_rank(const FieldCtx& ctx, std::span<const FFElem> elems) {
  FqMatrix m(elems.size(), ctx.n());
  for (std::size_t r = 0; r < elems.size(); ++r) {
    ctx.check(elems[r]);
    ctx.expand(elems[r], std::span<FqCode>(m.row(r), ctx.n()));
  }
  return rank(ctx.base(), std::move(m));
}

namespace {

std::vector<FFElem> square_copy(const FieldCtx& ctx, const FFMatrix& m) {
  if (m.rows != m.cols || m.data.size() != m.rows * m.cols) {
    throw InvalidInput("determinant of a non-square matrix");
  }
  for (FFElem x : m.data) ctx.check(x);
  return m.data;
}

}  // namespace

FFElem det_ffelem(const FieldCtx& ctx, const FFMatrix& m) {
  auto a = square_copy(ctx, m);
  if (m.rows == 0) return ctx.one();
  return determinant_inplace(ctx, std::span<FFElem>(a), m.rows);
}

FFElem det_ffelem_generic(const FieldCtx& ctx, const FFMatrix& m) {
  auto a = square_copy(ctx, m);
  if (m.rows == 0) return ctx.one();
  return determinant_inplace(GenericArith(ctx), std::span<FFElem>(a), m.rows);
}

BigInt gaussian_binomial(std::uint64_t q, std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  BigInt num = 1;
  BigInt den = 1;
  const BigInt bq = q;
  for (std::uint32_t i = 0; i < k; ++i) {
    num *= big_pow(bq, n - i) - 1;
    den *= big_pow(bq, i + 1) - 1;
  }
  return num / den;
}

SubspaceEnumerator::SubspaceEnumerator(const FieldCtx& ctx, std::uint32_t k)
    : ctx_(&ctx), n_(ctx.n()), k_(k), q_(ctx.q()) {
  if (k < 1 || k > n_) throw InvalidInput("subspace dimension must lie in [1, n]");
  const BigInt total = gaussian_binomial(q_, n_, k_);
  if (total > BigInt(std::numeric_limits<std::uint64_t>::max() / 2)) {
    throw BudgetExceeded("too many subspaces to enumerate");
  }
  total_ = static_cast<std::uint64_t>(total);

  std::vector<std::uint32_t> comb(k_);
  for (std::uint32_t i = 0; i < k_; ++i) comb[i] = i;
  std::uint64_t acc = 0;
  while (true) {
    pivot_sets_.push_back(comb);
    prefix_.push_back(acc);
    std::uint64_t free = 0;
    for (std::uint32_t r = 0; r < k_; ++r) free += (n_ - 1 - comb[r]) - (k_ - 1 - r);
    std::uint64_t cnt = 1;
    for (std::uint64_t j = 0; j < free; ++j) cnt *= q_;
    acc += cnt;
    int i = static_cast<int>(k_) - 1;
    while (i >= 0 && comb[i] == n_ - k_ + static_cast<std::uint32_t>(i)) --i;
    if (i < 0) break;
    ++comb[i];
    for (std::uint32_t j = static_cast<std::uint32_t>(i) + 1; j < k_; ++j) comb[j] = comb[j - 1] + 1;
  }
  prefix_.push_back(acc);
  codes_.resize(k_);
  seek(0);
}

void SubspaceEnumerator::load_combo(std::size_t combo) {
  combo_ = combo;
  const auto& piv = pivot_sets_[combo];
  slots_.clear();
  for (std::uint32_t r = 0; r < k_; ++r) {
    std::uint64_t w = 1;
    for (std::uint32_t c = 0; c < n_; ++c) {
      const bool later_pivot = std::find(piv.begin() + r, piv.end(), c) != piv.end();
      if (c > piv[r] && !later_pivot) slots_.push_back({r, w});
      w *= q_;
    }
  }
  digits_.assign(slots_.size(), 0);
}

void SubspaceEnumerator::seek(std::uint64_t index) {
  index_ = index;
  if (index >= total_) {
    index_ = total_;
    return;
  }
  const auto it = std::upper_bound(prefix_.begin(), prefix_.end(), index);
  const std::size_t combo = static_cast<std::size_t>(it - prefix_.begin()) - 1;
  load_combo(combo);
  std::uint64_t off = index - prefix_[combo];
  for (std::size_t s = slots_.size(); s-- > 0;) {
    digits_[s] = static_cast<std::uint32_t>(off % q_);
    off /= q_;
  }
  const auto& piv = pivot_sets_[combo];
  for (std::uint32_t r = 0; r < k_; ++r) {
    std::uint64_t w = 1;
    for (std::uint32_t c = 0; c < piv[r]; ++c) w *= q_;
    codes_[r] = FFElem{w};
  }
  for (std::size_t s = 0; s < slots_.size(); ++s) {
    codes_[slots_[s].row].code += digits_[s] * slots_[s].weight;
  }
}

void SubspaceEnumerator::next() {
  if (index_ >= total_) return;
  ++index_;
  for (std::size_t s = slots_.size(); s-- > 0;) {
    const FreeSlot& slot = slots_[s];
    if (digits_[s] + 1 < q_) {
      ++digits_[s];
      codes_[slot.row].code += slot.weight;
      return;
    }
    codes_[slot.row].code -= static_cast<std::uint64_t>(q_ - 1) * slot.weight;
    digits_[s] = 0;
  }
  // Odometer wrapped: move to the next pivot set.
  if (index_ < total_) seek(index_);
}

std::vector<SubspaceBasis> enumerate_subspaces(const FieldCtx& ctx, std::uint32_t k,
                                               std::uint64_t start, std::uint64_t length) {
  SubspaceEnumerator en(ctx, k);
  std::vector<SubspaceBasis> out;
  en.seek(start);
  for (std::uint64_t i = 0; i < length && en.valid(); ++i, en.next()) {
    const auto b = en.basis();
    out.push_back(SubspaceBasis{{b.begin(), b.end()}});
  }
  return out;
}

}  // namespace moore
