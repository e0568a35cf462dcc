#pragma once

// Moore matrices M_{A,I} and the decision procedure for Moore exponent sets.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moore/exponent_set.hpp"
#include "moore/fq_linalg.hpp"
#include "moore/gf_tower.hpp"
#include "moore/parallel.hpp"

namespace moore {

/// Entry (r, c) is A_r^{q^{i_c}}.
FFMatrix moore_matrix(const FieldCtx& ctx, const std::vector<FFElem>& A, const ExponentSet& I);
FFElem moore_det(const FieldCtx& ctx, const std::vector<FFElem>& A, const ExponentSet& I);

/// Product of c . A over one representative c of each point of PG(k-1, q),
/// normalized so that the last nonzero coordinate is 1. Equals
/// moore_det(A, {0, ..., k-1}).
FFElem moore_det_product(const FieldCtx& ctx, const std::vector<FFElem>& A);

enum class Method { kernel, det, both };
const char* method_name(Method m);
Method parse_method(const std::string& s);

struct Witness {
  std::vector<FFElem> tuple;
};

struct WitnessCheck {
  std::size_t fq_rank = 0;
  FFElem det;
  bool independent = false;
  bool det_zero = false;
  bool ok() const { return independent && det_zero; }
};

/// Re-derives rank and determinant through the generic arithmetic path.
WitnessCheck verify_witness(const FieldCtx& ctx, const ExponentSet& I, const std::vector<FFElem>& tuple);

struct EngineRun {
  bool is_moore = true;
  std::optional<Witness> witness;
  std::optional<std::uint64_t> witness_index;  // position in the enumeration order
  std::uint64_t work = 0;   // subspaces examined: witness index + 1, or all of them
  std::uint64_t total = 0;  // size of the enumeration
};

struct MooreVerdict {
  bool is_moore = true;
  std::optional<Witness> witness;
  Method method = Method::kernel;
  std::uint64_t work = 0;
  std::optional<EngineRun> kernel;
  std::optional<EngineRun> det;
  bool engines_agree = true;  // meaningful for Method::both
};

struct CheckOptions {
  Method method = Method::kernel;
  ParallelOptions parallel;
  std::uint64_t budget = 4'000'000'000ULL;  // max subspaces per engine
};

/// Kernel engine: one linearized polynomial per (k-1)-dimensional subspace.
EngineRun moore_check_kernel(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt = {});
/// Determinant engine: one Moore determinant per k-dimensional subspace.
EngineRun moore_check_det(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt = {});
/// Runs the engine(s) selected by opt.method.
MooreVerdict moore_check(const FieldCtx& ctx, const ExponentSet& I, const CheckOptions& opt = {});

/// Number of subspaces the chosen engine would enumerate.
BigInt engine_size(const FieldCtx& ctx, const ExponentSet& I, Method method);

struct ClassResult {
  ExponentSet representative;
  MooreVerdict verdict;
};

struct MultiplierOrbit {
  std::vector<std::size_t> members;  // indices into SearchReport::classes
  bool verdicts_coincide = true;
};

struct SearchReport {
  std::uint32_t k = 0;
  std::vector<ClassResult> classes;  // sorted by representative
  std::vector<MultiplierOrbit> multiplier_orbits;  // classes related by I -> d I, gcd(d, n) = 1
};

SearchReport search_moore_sets(const FieldCtx& ctx, std::uint32_t k, const CheckOptions& opt = {});

}  // namespace moore
