#pragma once

// Binary forms f = Σ x_i C(d,i) s^(d-i) t^i: Hankel tests for real rank two.

#include <optional>
#include <string>
#include <vector>

#include "realrank/certify.hpp"
#include "realrank/exactalg.hpp"
#include "realrank/linalg.hpp"

namespace realrank {

struct BinaryForm {
  unsigned d = 0;
  std::vector<double> coords;                 // x_0..x_d
  std::optional<std::vector<Rational>> exact;  // same values, when known exactly

  static BinaryForm from_doubles(std::vector<double> x);
  static BinaryForm from_rationals(std::vector<Rational> x);
  // Plain monomial coefficients c_i = C(d,i) x_i.
  static BinaryForm from_plain(const std::vector<Rational>& c);
  SymTensorCoords sym() const;
};

Matrix hankel(const BinaryForm& f);                // 3 × (d-1); DegreeTooSmall for d < 2
RationalMatrix hankel_exact(const BinaryForm& f);  // requires exact coordinates

struct BinaryFormVerdict {
  unsigned d = 0;
  bool exact = false;
  std::size_t catalecticant_rank = 0;  // 2 × d
  std::size_t hankel_rank = 0;         // 3 × (d-1)
  std::vector<double> d_values;        // D_0..D_{d-3}
  std::optional<std::vector<Rational>> d_exact;
  ZeroProbe zero_probe = ZeroProbe::NotRun;
  Verdict verdict = Verdict::RankAtMostOne;
  std::optional<std::string> strata;  // d = 4: "++0", "+-0", "cpx" or "RANK_ONE"
};

// Exact when the form carries rational coordinates, numeric otherwise.
BinaryFormVerdict classify_binary_form(const BinaryForm& f, const Tolerances& tol = {});

struct QuinticQuadrics {
  double q0 = 0, q1 = 0, q2 = 0;
  double discriminant() const { return q1 * q1 - 4 * q0 * q2; }
};
QuinticQuadrics quintic_quadrics(const BinaryForm& f);  // WrongDegree unless d = 5
bool quintic_alternative_test(const BinaryForm& f, double tol = 1e-10, double rank_tol = 1e-8);

struct LabeledPoly {
  std::string label;
  MultiPoly poly;
};

struct IdealReport {
  unsigned d = 0;
  std::vector<LabeledPoly> curve_ideal;       // 2×2 minors of H
  std::vector<LabeledPoly> secant_ideal;      // 3×3 minors of H
  std::vector<LabeledPoly> tangential_ideal;  // generators listed for the tangential variety
};

// d >= 3; DegreeTooSmall otherwise.
IdealReport tau_sigma_ideal_report(unsigned d);

MultiPoly hankel_poly_minor(unsigned d, const std::vector<unsigned>& rows, const std::vector<unsigned>& cols);

}  // namespace realrank
