#pragma once

// Explicit rank-two decompositions (real pair, conjugate pair or tangent
// form) and best rank-one approximation.

#include <complex>
#include <cstdint>
#include <vector>

#include "realrank/certify.hpp"
#include "realrank/tensor.hpp"

namespace realrank {

using cplx = std::complex<double>;
using CVector = std::vector<cplx>;

// weight · f[0] ⊗ … ⊗ f[d-1], unit-norm factors. Real terms have zero
// imaginary parts throughout.
struct RankOneTerm {
  std::vector<CVector> factors;
  cplx weight{0.0, 0.0};

  bool is_real(double tol = 0.0) const;
  std::vector<std::vector<double>> real_factors() const;
  // Real part of the expanded term.
  Tensor expand_real(const Shape& shape) const;
  // Imaginary part of the expanded term.
  Tensor expand_imag(const Shape& shape) const;
};

enum class DecompositionKind { RealPair, ConjugatePair, Tangential };
const char* decomposition_kind_name(DecompositionKind k);

struct Rank2Decomposition {
  DecompositionKind kind = DecompositionKind::RealPair;
  Shape shape;
  // RealPair: two real terms. ConjugatePair: one term z, tensor = 2·Re(z).
  std::vector<RankOneTerm> terms;
  // Tangential: tensor = Σ_k x_1 ⊗ … ⊗ y_k ⊗ … ⊗ x_d.
  std::vector<std::vector<double>> tangent_x, tangent_y;
  double residual = 0.0;     // ‖T − reconstruction‖ / ‖T‖
  double pencil_gap = 0.0;   // chordal distance of the two pencil roots
  double pencil_discriminant = 0.0;

  Tensor reconstruct() const;
};

struct DecomposeOptions {
  Tolerances certify;
  double tangential_gap = 1e-6;
  bool check_certificate = true;
};

// NotRankTwo when the certificate rules out real border rank two over C
// (rank ≤ 1 or border rank > 2); IllConditioned when no usable pencil exists.
Rank2Decomposition decompose_rank2(const Tensor& t, const DecomposeOptions& opts = {});

struct BestRankOne {
  RankOneTerm term;                  // real, unit factors
  double distance = 0.0;             // ‖u − term‖
  std::vector<double> history;       // distance after each sweep (index 0: initial guess)
  std::size_t iterations = 0;
  double stationarity = 0.0;         // max_k ‖T·∏_{j≠k} x_j − λ x_k‖ / ‖T‖
};

// Higher-order power iteration from the HOSVD starting point.
BestRankOne best_rank_one(const Tensor& u, std::size_t max_iters = 500, double tol = 1e-13);

// ⟨u,x⟩/⟨x,x⟩ and ⟨u,u⟩ − ⟨u,x⟩²/⟨x,x⟩.
double optimal_scale(const Tensor& u, const Tensor& x);
double projection_distance_sq(const Tensor& u, const Tensor& x);

// a(ε) on the secant line through ⊗(x_k + ε y_k) and ⊗x_k; b(ε) on the line
// through the conjugate pair ⊗(x_k ± iε y_k). Both tend to the tangent form.
std::pair<Tensor, Tensor> tangential_sequences(const std::vector<std::vector<double>>& xs,
                                               const std::vector<std::vector<double>>& ys, double eps);

struct Rank2Fit {
  Tensor approximation;
  std::vector<std::vector<std::vector<double>>> factors;  // per term, per mode
  std::vector<double> weights;
  double distance = 0.0;
};

// Alternating least squares for a real rank-two approximation with random restarts.
Rank2Fit rank2_als_fit(const Tensor& u, std::uint64_t seed, int sweeps = 200, int restarts = 5);

}  // namespace realrank
