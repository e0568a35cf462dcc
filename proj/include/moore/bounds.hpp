#pragma once

// Thresholds, case analysis and known families, and the combined verdict.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "moore/bigint.hpp"
#include "moore/exponent_set.hpp"
#include "moore/gf_tower.hpp"
#include "moore/moore_core.hpp"

namespace moore {

struct ApInfo {
  bool is_ap = false;
  std::uint32_t difference = 0;   // smallest d that works, 0 if none
  std::uint32_t shift = 0;        // (I + shift) mod n = {0, d, ..., (k-1)d} mod n
  bool coprime = false;           // some admissible d has gcd(d, n) = 1
  std::uint32_t coprime_difference = 0;
};

/// Whether some shift of I mod n equals {0, d, 2d, ..., (k-1)d} mod n.
/// With n = 0 only the integer progression test is made.
ApInfo arithmetic_progression_info(const ExponentSet& I);
bool is_arithmetic_progression(const ExponentSet& I);

enum class Case { a, b, c, d, none };
const char* case_name(Case c);

/// Case label for I (normalized, k >= 3); PreconditionError when I is an
/// arithmetic progression mod n or k < 3.
Case classify_case(const ExponentSet& I, std::uint64_t q);

/// Same conditions evaluated on the integer set I = {0 < i_1 < ...} without
/// the progression guard. Returns none also when k < 3.
Case case_conditions(const ExponentSet& I, std::uint64_t q);

struct CurveThreshold {
  std::uint64_t N = 0;  // 4j + 2; the theorem needs n > N
  bool j_neq_2i = false;
};

CurveThreshold curve_threshold(const ExponentSet& I);

/// Smallest n with q^{3n} > 13^3 * 2^10 * q^{13 i_{k-1}}. Requires k > 3.
std::uint64_t general_threshold(std::uint64_t q, const ExponentSet& I);
/// Same from the largest exponent alone.
std::uint64_t general_threshold_from_max(std::uint64_t q, std::uint32_t i_max);

struct BezoutGap {
  BigRational tau;
  BigRational b_tau;
  BigInt d;
  BigRational two_ninths_d2;
  BigRational gap;
};

BezoutGap bezout_gap(std::uint64_t q, std::uint32_t k, std::uint32_t i1, std::uint32_t ik2, std::uint32_t ik1);

struct BezoutCell {
  std::uint64_t q = 0;
  std::uint32_t k = 0, i1 = 0, ik2 = 0, ik1 = 0;
};

/// q >= 7, or q in {3, 4, 5} with i1 > 1, or q = 2 with i1 > 2.
bool case2_q_condition(std::uint64_t q, std::uint32_t i1);

/// Some set {0, i1, 2 i1, ..., ik2, ik1} with k elements exists and at least
/// one such set is not an integer progression.
bool bezout_cell_realizable(const BezoutCell& c);

struct BezoutSweep {
  std::uint64_t cells = 0;              // tuples evaluated
  std::uint64_t hypothesis_cells = 0;   // of those, meeting case2_q_condition
  std::vector<BezoutCell> gap_failures;  // hypothesis cells with gap <= 0
  std::vector<BezoutCell> tau_failures;  // cells with tau > b_tau
};

/// All i1 < ik2 < ik1 <= max_exp for the given q and k values.
BezoutSweep bezout_sweep(const std::vector<std::uint64_t>& qs, const std::vector<std::uint32_t>& ks,
                         std::uint32_t max_exp, bool realizable_only);

struct ZahidThresholds {
  long double t0_lower = 0;
  long double t0_upper = 0;  // conservative value of t0
  std::optional<BigRational> t0_exact;
  BigRational t1;
};

ZahidThresholds zahid_thresholds(std::uint64_t f, std::uint64_t e);

enum class Family { gabidulin, sporadic_n7, sporadic_n8, none };
const char* family_name(Family f);
Family known_family(const ExponentSet& I, std::uint64_t q);

struct BoundsReport {
  std::uint64_t q = 0;
  ExponentSet I;
  ApInfo ap;
  std::optional<Case> case_label;        // k >= 3 and not a progression mod n
  std::optional<CurveThreshold> curve;   // k = 3
  bool curve_gcd_trigger = false;        // k = 3 and gcd(n, i, j) > 1
  std::optional<BigInt> ell;             // k = 3: q^j + q^i - q^2 - q
  std::optional<BigInt> ell_prime;       // k = 3: q^j + q^i - q^{2g} - q^g, g = gcd(i, j)
  std::optional<std::uint64_t> general_threshold;  // k > 3
  std::uint64_t zahid_f = 0;             // sum q^{i_j} - sum_{j<k} q^j
  std::uint64_t zahid_e = 0;             // sum_{j<k} q^j
  std::optional<ZahidThresholds> zahid;  // when f and e fit in 64 bits
  std::optional<BezoutGap> bezout;       // k > 3
  Family known_family = Family::none;
};

BoundsReport bounds_report(const ExponentSet& I, std::uint64_t q);

enum class Verdict {
  moore_known_family,
  not_moore_by_theorem,
  moore_by_exhaustion,
  not_moore_with_witness,
  undecided_budget
};
const char* verdict_name(Verdict v);

struct TheoremHit {
  std::string theorem;  // "curve" or "general"
  std::string trigger;  // "threshold" or "gcd"
  ExponentSet rotation;  // the shift of I the hypotheses were checked on
  std::uint64_t threshold = 0;
  Case case_label = Case::none;
};

struct FinalOptions {
  CheckOptions check;
  bool run_engine = true;  // run the engine whenever it fits the budget
};

struct FinalReport {
  Verdict verdict = Verdict::undecided_budget;
  BoundsReport bounds;
  Family family = Family::none;
  std::optional<TheoremHit> theorem;
  std::optional<MooreVerdict> engine;
  bool engine_within_budget = false;
  bool consistent = true;  // engine result agrees with the family / theorem claim
};

/// Theorem-based non-Moore claim, checked over every shift of I containing 0.
std::optional<TheoremHit> theorem_applies(const ExponentSet& I, std::uint64_t q);

FinalReport final_verdict(const FieldCtx& ctx, const ExponentSet& I, const FinalOptions& opt = {});

}  // namespace moore
