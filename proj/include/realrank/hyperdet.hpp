#pragma once

// The 2×2×2 hyperdeterminant, sub-hyperdeterminant reports and the shifted
// discriminant quartics D_i of binary forms.

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "realrank/exactalg.hpp"
#include "realrank/tensor.hpp"

namespace realrank {

// x = (x000, x001, x010, x011, x100, x101, x110, x111).
template <typename T>
T hyperdet222(const std::array<T, 8>& x) {
  const T &x000 = x[0], &x001 = x[1], &x010 = x[2], &x011 = x[3];
  const T &x100 = x[4], &x101 = x[5], &x110 = x[6], &x111 = x[7];
  return x000 * x000 * x111 * x111 + x001 * x001 * x110 * x110 + x010 * x010 * x101 * x101 +
         x011 * x011 * x100 * x100 + T(4) * x000 * x011 * x101 * x110 + T(4) * x001 * x010 * x100 * x111 -
         T(2) * x000 * x001 * x110 * x111 - T(2) * x000 * x010 * x101 * x111 - T(2) * x000 * x011 * x100 * x111 -
         T(2) * x001 * x010 * x101 * x110 - T(2) * x001 * x011 * x100 * x110 - T(2) * x010 * x011 * x100 * x101;
}

// Same quartic in double-double arithmetic: near-degenerate real pairs lose
// only the accuracy of the entries, not eps times the size of the terms.
double hyperdet222(const std::array<double, 8>& x);
double hyperdet222(const Tensor& t);  // ShapeMismatch unless shape is 2×2×2
// The quartic as a polynomial in x000 … x111.
MultiPoly hyperdet222_poly();

struct HyperdetEntry {
  SubBlockSelector selector;
  double value = 0.0;
};

struct HyperdetReport {
  std::vector<HyperdetEntry> values;
  double min_value = 0.0;
  SubBlockSelector argmin;
  double max_value = 0.0;
  SubBlockSelector argmax;
  std::size_t num_positive = 0, num_zero = 0, num_negative = 0;
  double zero_tol = 0.0;
};

// |value| ≤ rel·(1 + max|entry|)^4 counts as zero.
double hyperdet_zero_tolerance(const Tensor& t, double rel = 1e-10);

HyperdetReport all_subhyperdets(const Tensor& t, std::optional<double> zero_tol = std::nullopt);
HyperdetReport subhyperdets(const Tensor& t, const std::vector<SubBlockSelector>& selectors, double zero_tol);

// D_i = x_i²x_{i+3}² − 6x_i x_{i+1} x_{i+2} x_{i+3} − 3x_{i+1}²x_{i+2}² + 4x_{i+1}³x_{i+3} + 4x_i x_{i+2}³
double sym_discriminant_quartic(unsigned i, const SymTensorCoords& f);
Rational sym_discriminant_quartic(unsigned i, std::span<const Rational> x);
MultiPoly sym_discriminant_quartic_poly(unsigned i, unsigned d);  // in x0..xd
// Expansion of the 4×4 determinant form of the binary cubic discriminant.
MultiPoly cubic_discriminant_determinant();

}  // namespace realrank
