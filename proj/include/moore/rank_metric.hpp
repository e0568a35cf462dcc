#pragma once

// The rank-metric code C_I = { sum_j a_j X^{q^{i_j}} : a_j in F_{q^n} }.

#include <cstdint>
#include <optional>
#include <vector>

#include "moore/exponent_set.hpp"
#include "moore/gf_tower.hpp"
#include "moore/parallel.hpp"

namespace moore {

/// Rank over F_q of x -> sum_j a_j x^{q^{i_j}}.
std::uint32_t codeword_rank(const FieldCtx& ctx, const std::vector<FFElem>& a, const ExponentSet& I);

struct DistanceOptions {
  ParallelOptions parallel;
  std::uint64_t budget = 100'000'000;  // max projective codewords
};

struct DistanceReport {
  std::uint32_t min_rank_distance = 0;
  std::uint32_t singleton = 0;  // n - k + 1
  bool is_mrd = false;
  std::uint64_t codewords = 0;  // projective representatives examined
  std::vector<FFElem> min_codeword;  // lowest-index codeword attaining the minimum
};

DistanceReport min_rank_distance(const FieldCtx& ctx, const ExponentSet& I, const DistanceOptions& opt = {});

struct IdealiserOptions {
  std::uint32_t max_n = 8;
  std::uint32_t max_q = 4;
};

struct IdealiserDims {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
};

/// F_q-dimensions of {phi : phi o C in C} and {phi : C o phi in C}, each from
/// one linear solve over the n^2 F_q-coordinates of phi.
IdealiserDims idealiser_dims(const FieldCtx& ctx, const ExponentSet& I, const IdealiserOptions& opt = {});

struct CodeReport {
  DistanceReport distance;
  std::optional<IdealiserDims> idealisers;
};

}  // namespace moore
