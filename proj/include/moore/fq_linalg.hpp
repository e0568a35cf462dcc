#pragma once

// Linear algebra over F_q and F_{q^n}, plus canonical enumeration of the
// k-dimensional F_q-subspaces of F_{q^n}.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "moore/bigint.hpp"
#include "moore/gf_tower.hpp"
#include "moore/kernels.hpp"

namespace moore {

/// Dense matrix over F_q. Rows are padded to kernels::kRowAlign bytes; the
/// padding is kept zero so row kernels may run over it.
class FqMatrix {
 public:
  FqMatrix() = default;
  FqMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(kernels::padded(cols)), data_(rows * stride_, 0) {}

  static FqMatrix from_rows(const std::vector<std::vector<FqCode>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  FqCode& at(std::size_t r, std::size_t c) { return data_[r * stride_ + c]; }
  FqCode at(std::size_t r, std::size_t c) const { return data_[r * stride_ + c]; }
  FqCode* row(std::size_t r) { return &data_[r * stride_]; }
  const FqCode* row(std::size_t r) const { return &data_[r * stride_]; }
  std::vector<FqCode> row_vector(std::size_t r) const {
    return {row(r), row(r) + cols_};
  }

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const FqMatrix& a, const FqMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<FqCode> data_;
};

struct RrefResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form, in place.
RrefResult rref(const BaseField& field, FqMatrix& m);
RrefResult rref(const kernels::RowKernel& kernel, const BaseField& field, FqMatrix& m);

/// Rank; uses the bit-packed path for q = 2 and at most 64 columns.
std::size_t rank(const BaseField& field, FqMatrix m);
std::size_t rank(const kernels::RowKernel& kernel, const BaseField& field, FqMatrix m);

/// Basis of the right null space {v : M v = 0}, each vector of length cols.
std::vector<std::vector<FqCode>> kernel_basis(const BaseField& field, FqMatrix m);

/// Coordinates of x over F_q in the power basis.
std::vector<FqCode> expand(const FieldCtx& ctx, FFElem x);

/// F_q-rank of the stacked expansions.
std::size_t fq_rank(const FieldCtx& ctx, std::span<const FFElem> elems);

/// Row-major square or rectangular matrix over F_{q^n}.
struct FFMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<FFElem> data;

  FFMatrix() = default;
  FFMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  FFElem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  FFElem at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Determinant of the k x k row-major matrix in `a` by Gaussian elimination
/// over the field; `a` is overwritten. Arith is FieldCtx or GenericArith.
template <class Arith>
FFElem determinant_inplace(const Arith& ar, std::span<FFElem> a, std::size_t k) {
  FFElem det = ar.one();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    while (piv < k && a[piv * k + c].code == 0) ++piv;
    if (piv == k) return ar.zero();
    if (piv != c) {
      for (std::size_t j = c; j < k; ++j) std::swap(a[piv * k + j], a[c * k + j]);
      det = ar.neg(det);
    }
    const FFElem pv = a[c * k + c];
    det = ar.mul(det, pv);
    const FFElem pinv = ar.inv(pv);
    for (std::size_t r = c + 1; r < k; ++r) {
      const FFElem x = a[r * k + c];
      if (x.code == 0) continue;
      const FFElem f = ar.mul(x, pinv);
      for (std::size_t j = c + 1; j < k; ++j) {
        a[r * k + j] = ar.sub(a[r * k + j], ar.mul(f, a[c * k + j]));
      }
    }
  }
  return det;
}

/// Determinant over F_{q^n}; throws InvalidInput for non-square input.
FFElem det_ffelem(const FieldCtx& ctx, const FFMatrix& m);
/// Same, computed entirely through the generic arithmetic path.
FFElem det_ffelem_generic(const FieldCtx& ctx, const FFMatrix& m);

/// Number of k-dimensional subspaces of an n-dimensional F_q-space.
BigInt gaussian_binomial(std::uint64_t q, std::uint32_t n, std::uint32_t k);

struct SubspaceBasis {
  std::vector<FFElem> vectors;  // k elements, expansions form an RREF matrix
};

/// Walks the k-dimensional F_q-subspaces of F_{q^n} in canonical order:
/// pivot-column sets lexicographically, then the free RREF entries as an
/// odometer (row-major list of free positions, last position fastest).
/// Random access by index makes the stream splittable across workers.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(const FieldCtx& ctx, std::uint32_t k);

  std::uint64_t size() const { return total_; }
  std::uint32_t k() const { return k_; }

  void seek(std::uint64_t index);
  bool valid() const { return index_ < total_; }
  std::uint64_t index() const { return index_; }
  void next();

  std::span<const FFElem> basis() const { return codes_; }
  const std::vector<std::uint32_t>& pivots() const { return pivot_sets_[combo_]; }

 private:
  struct FreeSlot {
    std::uint32_t row;
    std::uint64_t weight;  // q^column
  };
  void load_combo(std::size_t combo);

  const FieldCtx* ctx_;
  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  std::uint32_t q_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::vector<std::uint32_t>> pivot_sets_;
  std::vector<std::uint64_t> prefix_;  // prefix_[i] = first index of pivot set i

  std::size_t combo_ = 0;
  std::uint64_t index_ = 0;
  std::vector<FreeSlot> slots_;
  std::vector<std::uint32_t> digits_;
  std::vector<FFElem> codes_;
};

/// Materializes subspaces [start, start + length) in canonical order.
std::vector<SubspaceBasis> enumerate_subspaces(const FieldCtx& ctx, std::uint32_t k,
                                               std::uint64_t start, std::uint64_t length);

}  // namespace moore
