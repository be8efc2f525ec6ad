#pragma once

// Rational curves in P^3: secant lines through a point, real rank of the
// point with respect to the curve, and transitions along line segments.

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "realrank/exactalg.hpp"

namespace realrank {

// (s:t) -> (F_0 : F_1 : F_2 : F_3); F[i][j] is the coefficient of s^(d-j) t^j.
struct CurveParam {
  unsigned d = 0;
  std::array<std::vector<Rational>, 4> F;

  // Throws InvalidCurve unless all forms have degree d and the 4 × (d+1)
  // coefficient matrix has rank 4.
  void validate() const;
  std::array<std::complex<double>, 4> point(std::complex<double> s, std::complex<double> t) const;
  MultiPoly form(std::size_t i, const std::string& s, const std::string& t) const;

  static CurveParam monomial_quartic();  // (s^4, s^3 t, s t^3, t^4)
  static CurveParam twisted_cubic();     // (s^3, s^2 t, s t^2, t^3)
};

// Plücker coordinates p01, p02, p03, p12, p13, p23 of the secant line through
// (s1:t1), (s2:t2), written in a = s1 s2, b = s1 t2 + s2 t1, c = t1 t2.
struct PluckerMap {
  unsigned d = 0;
  std::array<MultiPoly, 6> p;

  static constexpr std::array<const char*, 6> kNames{"p01", "p02", "p03", "p12", "p13", "p23"};
  MultiPoly relation() const;  // p01 p23 - p02 p13 + p03 p12
  const MultiPoly& get(int i, int j) const;
};

PluckerMap plucker_map(const CurveParam& curve);

// The four rows of the skew 4 × 4 Plücker matrix applied to u = (w,x,y,z).
std::array<MultiPoly, 4> secant_system(const PluckerMap& pm, const std::array<Rational, 4>& u);

enum class SecantContact { RealPair, TangentContact, ConjugatePair };
const char* secant_contact_name(SecantContact c);

struct SecantSolution {
  std::array<double, 3> abc{};  // unit norm, first nonzero coordinate positive
  double discriminant = 0.0;    // b^2 - 4ac
  SecantContact contact = SecantContact::ConjugatePair;
  std::array<std::array<std::complex<double>, 2>, 2> roots{};         // (s:t) of the two curve points
  std::array<std::array<std::complex<double>, 4>, 2> curve_points{};  // their images in P^3
  double residual = 0.0;  // max over the four equations, relative to coefficient size
  unsigned multiplicity = 1;
};

struct SecantReport {
  std::vector<SecantSolution> real;  // real (a:b:c) solutions
  std::size_t total = 0;             // all complex solutions counted with multiplicity
  std::size_t nonreal = 0;
};

struct SecantOptions {
  double discriminant_tol = 1e-10;  // relative to a^2 + b^2 + c^2
  std::uint64_t seed = 0x5eed;
};

// Throws DegenerateQuery when u = 0 or u lies on the curve and
// ResultantIdenticallyZero when elimination degenerates for every attempt.
SecantReport solve_secants(const CurveParam& curve, const PluckerMap& pm, const std::array<Rational, 4>& u,
                           const SecantOptions& opts = {});

enum class PointClass { RealRankLe2, RealRankGe3 };
const char* point_class_name(PointClass c);

struct PointClassification {
  PointClass cls = PointClass::RealRankGe3;
  SecantReport evidence;
  std::size_t real_lines = 0;
  std::size_t real_meeting = 0;  // real lines meeting the curve in two real points
};

PointClassification classify_point(const CurveParam& curve, const PluckerMap& pm, const std::array<Rational, 4>& u,
                                   const SecantOptions& opts = {});

// u(t) = coeffs[i][0] + coeffs[i][1] t.
struct LinearPath {
  std::array<std::array<Rational, 2>, 4> coeffs;
  double t0 = 0.0, t1 = 1.0;
  std::array<Rational, 4> at(const Rational& t) const;
  std::array<Rational, 4> at(double t) const;
  static LinearPath example();  // the segment used with the monomial quartic
};

struct SurfaceFixture {
  std::string kind;  // "TANGENTIAL" or "EDGE"
  MultiPoly poly;    // in w, x, y, z
};
// Tangential and edge surfaces of the monomial quartic.
std::vector<SurfaceFixture> monomial_quartic_fixtures();

enum class TransitionKind { Tangential, Edge, NoRankChange, Unlabeled };
const char* transition_kind_name(TransitionKind k);

struct Transition {
  double t = 0.0;
  double bracket_lo = 0.0, bracket_hi = 0.0;  // classification bracket; equal to t for fixture-only roots
  TransitionKind kind = TransitionKind::Unlabeled;
  int rank_before = 0, rank_after = 0;  // 2 for REAL_RANK_LE_2, 3 otherwise
  std::string surface;                  // fixture kind that vanishes at t, if any
  double surface_residual = 0.0;
};

struct PathSample {
  double t = 0.0;
  PointClass cls = PointClass::RealRankGe3;
  std::size_t real_lines = 0, real_meeting = 0, total = 0;
  double min_discriminant = 0.0, max_discriminant = 0.0;  // over real solutions
};

struct PathSegment {
  double lo = 0.0, hi = 0.0;
  PointClass cls = PointClass::RealRankGe3;
  std::size_t real_lines = 0, real_meeting = 0;
};

struct PathReport {
  std::vector<PathSample> samples;
  std::vector<Transition> transitions;  // sorted by t
  std::vector<PathSegment> segments;
};

struct ScanOptions {
  std::size_t samples = 101;
  double bisection_width = 1e-12;
  double fixture_match = 1e-6;
  SecantOptions secant;
};

PathReport scan_path(const CurveParam& curve, const LinearPath& path, const std::vector<SurfaceFixture>& fixtures,
                     const ScanOptions& opts = {});

// Fixture restricted to the path, as a polynomial in t.
QPoly restrict_to_path(const MultiPoly& surface, const LinearPath& path);

}  // namespace realrank
