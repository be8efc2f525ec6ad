#pragma once

// Decision procedure for real border rank ≤ 2: flattening ranks plus the
// signs of all 2×2×2 sub-hyperdeterminants.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "realrank/hyperdet.hpp"
#include "realrank/tensor.hpp"

namespace realrank {

enum class Verdict {
  RankAtMostOne,
  RealRankTwo,
  RealBorderRankTwoBoundary,
  ComplexRankTwoRealRankHigher,
  BorderRankExceedsTwo,
};

const char* verdict_name(Verdict v);  // "REAL_RANK_TWO", ...
std::optional<Verdict> parse_verdict(const std::string& name);
// True for the verdicts that place the input in the real border rank ≤ 2 locus.
bool within_real_border_rank_two(Verdict v);

struct Tolerances {
  double rank = 1e-8;       // singular values ≤ rank·σ_max are dropped
  double hyperdet = 1e-10;  // |h| ≤ hyperdet·(1+max|entry|)^4 counts as zero
};

// When every sub-hyperdeterminant vanishes the signs are silent; the shape of
// a rank-two decomposition then separates interior points from the boundary.
enum class ZeroProbe { NotRun, RealPair, ConjugatePair, Tangential };
const char* zero_probe_name(ZeroProbe p);

struct Certificate {
  Shape input_shape;
  Shape shape;                          // after dropping modes of size 1
  std::vector<std::size_t> kept_modes;  // input mode of each remaining mode
  std::map<ModeSet, std::size_t> flattening_ranks;  // keyed by row modes of `shape`
  std::size_t max_flattening_rank = 0;
  bool merged_flattenings_checked = false;
  bool has_hyperdets = false;
  HyperdetReport hyperdet_report;
  ZeroProbe zero_probe = ZeroProbe::NotRun;
  Verdict verdict = Verdict::RankAtMostOne;
  Tolerances tolerances;
  std::string method;  // "tensor", "binary-hankel" or "symmetric-reduced"
};

// Decomposes t (assumed of border rank two) and reports the decomposition shape.
ZeroProbe probe_zero_locus(const Tensor& t, const Tolerances& tol);

// Re-applies the verdict rules to the recorded data.
Verdict rederive_verdict(const Certificate& c);

Certificate certify_border_rank2(const Tensor& t, const Tolerances& tol = {});

// Σ_k x_1 ⊗ … ⊗ y_k ⊗ … ⊗ x_d
Tensor tangential_witness(const std::vector<std::vector<double>>& xs, const std::vector<std::vector<double>>& ys);

// Binary forms use the Hankel test and the quartics D_i; n ≥ 3 uses the full
// tensor flattenings with the reduced symmetric sub-block set.
Certificate certify_symmetric(const SymTensorCoords& f, const Tolerances& tol = {});

}  // namespace realrank
