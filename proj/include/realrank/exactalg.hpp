#pragma once

// Exact rational arithmetic and multivariate polynomial algebra.
//
// Everything symbolic in the library (Plücker maps, tangential quadrics,
// discriminants, resultants) is carried by the types in this header. Values
// are immutable once built; all free functions are pure.

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "realrank/errors.hpp"

namespace realrank {

// Reduced fraction num/den with den > 0. Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long long v);           // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpz_class& integer) : value_(integer) {}
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  // Exact binary value of a finite double.
  static Rational from_double(double v);
  // Accepts "7", "-3/4", "0.125", "1.5e-3".
  static Rational parse(std::string_view text);

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
mpz_class binomial(unsigned n, unsigned k);

// ---------------------------------------------------------------------------
// Multivariate polynomials
// ---------------------------------------------------------------------------

using Exponent = std::vector<unsigned>;

// Graded lexicographic comparison, earlier variables weigh more. Used as
// "greater" so that maps iterate from the leading term downwards.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MultiPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(const Rational& c, std::vector<std::string> variables = {});
  static MultiPoly variable(const std::string& name, std::vector<std::string> variables = {});
  static MultiPoly monomial(const Rational& c, Exponent exponent, std::vector<std::string> variables);
  // Parses the canonical text form; accepts parentheses, integer powers and
  // rational/decimal coefficients. Unlisted variables are appended in order
  // of first appearance.
  static MultiPoly parse(std::string_view text, std::vector<std::string> variables = {});

  const std::vector<std::string>& variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  int total_degree() const;  // -1 for the zero polynomial
  int degree_in(const std::string& var) const;
  bool is_homogeneous() const;
  std::optional<std::size_t> variable_index(const std::string& var) const;

  Rational coefficient(const Exponent& e) const;
  // Leading term in grlex order; zero polynomial has none.
  std::pair<Exponent, Rational> leading_term() const;
  void add_term(const Exponent& e, const Rational& c);

  // Same polynomial expressed over `variables`, which must contain every
  // variable that actually occurs.
  MultiPoly with_variables(const std::vector<std::string>& variables) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;
  MultiPoly pow(unsigned exponent) const;

  // Equal as polynomials, irrespective of declared but unused variables.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  // p = Σ_i coeffs[i] · var^i.
  std::vector<MultiPoly> coefficients_in(const std::string& var) const;
  // Replaces variables()[i] by images[i]; images share a common context.
  MultiPoly substitute(const std::vector<MultiPoly>& images) const;
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  MultiPoly derivative(const std::string& var) const;

  // Integer coefficients with content 1 and positive leading coefficient.
  MultiPoly normalized() const;
  // Rational c with *this == c * other, if one exists.
  std::optional<Rational> proportionality(const MultiPoly& other) const;

  std::string to_string() const;

 private:
  std::vector<std::string> variables_;
  TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

enum class PolyOp { add, mul };
MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op);
// Exact quotient; throws NotDivisible when the remainder is nonzero.
MultiPoly poly_div_exact(const MultiPoly& p, const MultiPoly& q);

// ---------------------------------------------------------------------------
// Univariate polynomials (coefficients ascending in degree)
// ---------------------------------------------------------------------------

template <typename T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  const std::vector<T>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const T& leading() const { return coeffs_.back(); }
  T operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

  template <typename X>
  X evaluate(const X& x) const {
    X acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + X(*it);
    return acc;
  }

  UniPoly derivative() const {
    std::vector<T> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out.push_back(coeffs_[i] * T(static_cast<long>(i)));
    return UniPoly(std::move(out));
  }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
  }
  std::vector<T> coeffs_;
};

using QPoly = UniPoly<Rational>;

QPoly operator+(const QPoly& a, const QPoly& b);
QPoly operator-(const QPoly& a, const QPoly& b);
QPoly operator*(const QPoly& a, const QPoly& b);
QPoly scale(const QPoly& a, const Rational& c);
// Quotient and remainder in Q[x]; divisor nonzero.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly monic(const QPoly& a);
QPoly gcd(const QPoly& a, const QPoly& b);  // monic, gcd(0,0)=0
// Yun's square-free decomposition: factors[m-1] collects roots of multiplicity m.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);
// Univariate view of a polynomial in a single variable (other variables absent).
QPoly to_univariate(const MultiPoly& p, const std::string& var);
MultiPoly from_univariate(const QPoly& p, const std::string& var);
std::string to_string(const QPoly& p, const std::string& var = "x");
UniPoly<Rational> exact_coefficients(const UniPoly<double>& p);

// ---------------------------------------------------------------------------
// Linear algebra over Q
// ---------------------------------------------------------------------------

using RationalMatrix = std::vector<std::vector<Rational>>;

struct LinearSolution {
  std::vector<Rational> x;                  // one particular solution
  std::vector<std::vector<Rational>> nullspace;  // basis of ker A
};

// Exact solve of A·x = b. Throws Inconsistent if no solution exists.
LinearSolution linear_solve_exact(const RationalMatrix& a, const std::vector<Rational>& b);
std::size_t rank_exact(RationalMatrix a);
Rational determinant_exact(RationalMatrix a);

// Fraction-free (Bareiss) determinant over the polynomial ring.
MultiPoly determinant_bareiss(std::vector<std::vector<MultiPoly>> m);

// Sylvester resultant of p and q with respect to `var`.
MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var);

// ---------------------------------------------------------------------------
// Real root isolation
// ---------------------------------------------------------------------------

struct RealRoot {
  double value = 0.0;
  unsigned multiplicity = 1;
  bool multiple() const { return multiplicity >= 2; }
  // Isolating interval (exact endpoints, width ≤ requested tolerance).
  Rational lo, hi;
};

// Number of distinct real roots of a square-free p in the half-open (lo, hi].
std::size_t sturm_count(const QPoly& p, const Rational& lo, const Rational& hi);
// Cauchy bound: every root has absolute value below the result.
Rational root_bound(const QPoly& p);

// All real roots in [lo, hi] (infinite endpoints mean "whole line"), located
// to within tol, ascending. Multiplicities are exact.
std::vector<RealRoot> real_roots(const QPoly& p, double lo = -std::numeric_limits<double>::infinity(),
                                 double hi = std::numeric_limits<double>::infinity(), double tol = 1e-15);
std::vector<RealRoot> real_roots(const UniPoly<double>& p, double lo, double hi, double tol);

}  // namespace realrank
