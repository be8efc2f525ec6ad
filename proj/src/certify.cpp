#include "realrank/certify.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "realrank/decompose.hpp"

namespace realrank {

namespace {

constexpr std::array<std::pair<Verdict, const char*>, 5> kVerdictNames{{
    {Verdict::RankAtMostOne, "RANK_AT_MOST_ONE"},
    {Verdict::RealRankTwo, "REAL_RANK_TWO"},
    {Verdict::RealBorderRankTwoBoundary, "REAL_BORDER_RANK_TWO_BOUNDARY"},
    {Verdict::ComplexRankTwoRealRankHigher, "COMPLEX_RANK_TWO_REAL_RANK_HIGHER"},
    {Verdict::BorderRankExceedsTwo, "BORDER_RANK_EXCEEDS_TWO"},
}};

}  // namespace

const char* verdict_name(Verdict v) {
  for (const auto& [k, name] : kVerdictNames)
    if (k == v) return name;
  return "UNKNOWN";
}

std::optional<Verdict> parse_verdict(const std::string& name) {
  for (const auto& [k, n] : kVerdictNames)
    if (name == n) return k;
  return std::nullopt;
}

const char* zero_probe_name(ZeroProbe p) {
  switch (p) {
    case ZeroProbe::NotRun: return "NOT_RUN";
    case ZeroProbe::RealPair: return "REAL_PAIR";
    case ZeroProbe::ConjugatePair: return "CONJUGATE_PAIR";
    case ZeroProbe::Tangential: return "TANGENTIAL";
  }
  return "UNKNOWN";
}

bool within_real_border_rank_two(Verdict v) {
  return v == Verdict::RankAtMostOne || v == Verdict::RealRankTwo || v == Verdict::RealBorderRankTwoBoundary;
}

Verdict rederive_verdict(const Certificate& c) {
  std::size_t max_rank = 0;
  for (const auto& [modes, r] : c.flattening_ranks) max_rank = std::max(max_rank, r);
  if (max_rank >= 3) return Verdict::BorderRankExceedsTwo;
  if (max_rank <= 1) return Verdict::RankAtMostOne;
  if (!c.has_hyperdets) return Verdict::RealRankTwo;  // a real matrix of rank two
  const auto& h = c.hyperdet_report;
  if (h.num_negative > 0) {
    // Only reachable when every recorded flattening, merged ones included, has rank ≤ 2.
    return c.merged_flattenings_checked ? Verdict::ComplexRankTwoRealRankHigher : Verdict::BorderRankExceedsTwo;
  }
  if (h.num_positive > 0) return Verdict::RealRankTwo;
  switch (c.zero_probe) {
    case ZeroProbe::RealPair: return Verdict::RealRankTwo;
    case ZeroProbe::ConjugatePair:
      return c.merged_flattenings_checked ? Verdict::ComplexRankTwoRealRankHigher : Verdict::BorderRankExceedsTwo;
    default: return Verdict::RealBorderRankTwoBoundary;
  }
}

namespace {

void finish(Certificate& c, const Tensor* full = nullptr) {
  c.max_flattening_rank = 0;
  for (const auto& [modes, r] : c.flattening_ranks) c.max_flattening_rank = std::max(c.max_flattening_rank, r);
  c.verdict = rederive_verdict(c);
  if (c.verdict != Verdict::RealBorderRankTwoBoundary || full == nullptr) return;
  c.zero_probe = probe_zero_locus(*full, c.tolerances);
  c.verdict = rederive_verdict(c);
}

}  // namespace

ZeroProbe probe_zero_locus(const Tensor& t, const Tolerances& tol) {
  DecomposeOptions opts;
  opts.certify = tol;
  opts.check_certificate = false;
  try {
    switch (decompose_rank2(t, opts).kind) {
      case DecompositionKind::RealPair: return ZeroProbe::RealPair;
      case DecompositionKind::ConjugatePair: return ZeroProbe::ConjugatePair;
      case DecompositionKind::Tangential: return ZeroProbe::Tangential;
    }
  } catch (const Error&) {
  }
  return ZeroProbe::Tangential;  // a singular pencil only occurs on the boundary
}

Certificate certify_border_rank2(const Tensor& input, const Tolerances& tol) {
  if (input.order() < 3) fail(ErrorCode::ArityTooSmall, "certification needs a tensor of order at least 3");
  Certificate c;
  c.input_shape = input.shape();
  c.tolerances = tol;
  c.method = "tensor";
  for (std::size_t m = 0; m < input.order(); ++m)
    if (input.shape()[m] > 1) c.kept_modes.push_back(m);
  const Tensor t = input.squeeze();
  c.shape = t.shape();
  if (c.kept_modes.empty()) c.kept_modes.push_back(0);

  if (t.order() == 1) {
    c.flattening_ranks[{0}] = t.norm() > 0.0 ? 1 : 0;
    finish(c);
    return c;
  }

  std::size_t max_single = 0;
  for (std::size_t m = 0; m < t.order(); ++m) {
    const ModeSet modes{m};
    if (t.order() == 2 && m == 1) break;  // the two flattenings of a matrix are transposes
    const std::size_t r = numeric_rank(flatten(t, modes), tol.rank);
    c.flattening_ranks[modes] = r;
    max_single = std::max(max_single, r);
  }
  if (t.order() >= 3 && max_single <= 2) {
    for (const auto& modes : bipartitions(t.order())) {
      if (modes.size() == 1) continue;
      c.flattening_ranks[modes] = numeric_rank(flatten(t, modes), tol.rank);
    }
    c.merged_flattenings_checked = true;
  }
  if (t.order() >= 3) {
    c.has_hyperdets = true;
    c.hyperdet_report = all_subhyperdets(t, hyperdet_zero_tolerance(t, tol.hyperdet));
  }
  finish(c, &t);
  return c;
}

Tensor tangential_witness(const std::vector<std::vector<double>>& xs, const std::vector<std::vector<double>>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    fail(ErrorCode::DimensionMismatch, "tangential witness needs the same positive number of x and y vectors");
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (xs[k].size() != ys[k].size() || xs[k].empty())
      fail(ErrorCode::DimensionMismatch, "x and y vectors of mode " + std::to_string(k + 1) + " differ in length");
    dims.push_back(xs[k].size());
  }
  Tensor t{Shape(dims)};
  for (std::size_t k = 0; k < xs.size(); ++k) {
    auto factors = xs;
    factors[k] = ys[k];
    t += Tensor::rank_one(factors);
  }
  return t;
}

namespace {

Certificate certify_binary(const SymTensorCoords& f, const Tolerances& tol) {
  Certificate c;
  c.tolerances = tol;
  c.method = "binary-hankel";
  const unsigned d = f.d;
  const auto x = f.binary_coords();
  c.input_shape = Shape(std::vector<std::size_t>(std::max(d, 1u), 2));
  c.shape = c.input_shape;
  for (std::size_t m = 0; m < c.shape.order(); ++m) c.kept_modes.push_back(m);
  if (d == 0) {
    c.flattening_ranks[{0}] = x[0] != 0.0 ? 1 : 0;
    finish(c);
    return c;
  }
  // Catalecticant with k rows: entry (r, c) = x_{r+c}.
  auto catalecticant = [&](unsigned k) {
    Matrix m(k + 1, d - k + 1);
    for (unsigned r = 0; r <= k; ++r)
      for (unsigned col = 0; col <= d - k; ++col) m(r, col) = x[r + col];
    return m;
  };
  c.flattening_ranks[{0}] = numeric_rank(catalecticant(1), tol.rank);
  if (d >= 3) {
    c.flattening_ranks[{0, 1}] = numeric_rank(catalecticant(2), tol.rank);
    c.merged_flattenings_checked = true;
    c.has_hyperdets = true;
    const Tensor scale_probe(Shape({d + 1}), x);
    const double zero_tol = hyperdet_zero_tolerance(scale_probe, tol.hyperdet);
    auto& h = c.hyperdet_report;
    h.zero_tol = zero_tol;
    for (unsigned i = 0; i + 3 <= d; ++i) {
      SubBlockSelector sel;
      sel.free_modes = {0, 1, 2};
      sel.index_pairs = {{{0, 1}, {0, 1}, {0, 1}}};
      sel.fixed_indices.assign(d - 3, 0);
      for (unsigned k = 0; k < i; ++k) sel.fixed_indices[k] = 1;
      h.values.push_back({sel, sym_discriminant_quartic(i, f)});
    }
    std::size_t lo = 0, hi = 0;
    for (std::size_t i = 0; i < h.values.size(); ++i) {
      const double v = h.values[i].value;
      if (v < h.values[lo].value) lo = i;
      if (v > h.values[hi].value) hi = i;
      if (std::fabs(v) <= zero_tol) ++h.num_zero;
      else if (v > 0) ++h.num_positive;
      else ++h.num_negative;
    }
    h.min_value = h.values[lo].value;
    h.argmin = h.values[lo].selector;
    h.max_value = h.values[hi].value;
    h.argmax = h.values[hi].selector;
  }
  const Tensor full = sym_to_tensor(f);
  finish(c, &full);
  return c;
}

}  // namespace

Certificate certify_symmetric(const SymTensorCoords& f, const Tolerances& tol) {
  f.validate();
  if (f.n == 2) return certify_binary(f, tol);
  if (f.n == 1 || f.d < 3) {
    if (f.d >= 3) return certify_border_rank2(sym_to_tensor(f), tol);
    Certificate c;
    c.tolerances = tol;
    c.method = "symmetric-reduced";
    const Tensor t = sym_to_tensor(f);
    c.input_shape = t.shape();
    c.shape = t.shape();
    for (std::size_t m = 0; m < t.order(); ++m) c.kept_modes.push_back(m);
    c.flattening_ranks[{0}] = t.order() == 2 ? numeric_rank(flatten(t, {0}), tol.rank) : (t.norm() > 0 ? 1 : 0);
    finish(c);
    return c;
  }
  const Tensor t = sym_to_tensor(f);
  Certificate c;
  c.tolerances = tol;
  c.method = "symmetric-reduced";
  c.input_shape = t.shape();
  c.shape = t.shape();
  for (std::size_t m = 0; m < t.order(); ++m) c.kept_modes.push_back(m);
  // Flattening ranks of a symmetric tensor depend only on the number of row modes.
  for (unsigned k = 1; 2 * k <= f.d; ++k) {
    ModeSet modes(k);
    for (unsigned i = 0; i < k; ++i) modes[i] = i;
    c.flattening_ranks[modes] = numeric_rank(flatten(t, modes), tol.rank);
  }
  c.merged_flattenings_checked = true;
  c.has_hyperdets = true;
  c.hyperdet_report = subhyperdets(t, symmetric_reduced_subblocks(f.n, f.d), hyperdet_zero_tolerance(t, tol.hyperdet));
  finish(c, &t);
  return c;
}

}  // namespace realrank
