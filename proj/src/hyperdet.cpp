#include "realrank/hyperdet.hpp"

#include <algorithm>
#include <cmath>

#include "realrank/parallel.hpp"

namespace realrank {

namespace {

struct DoubleDouble {
  double hi = 0.0, lo = 0.0;
};

DoubleDouble quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

DoubleDouble times(DoubleDouble a, double b) {
  const double p = a.hi * b;
  const double e = std::fma(a.hi, b, -p) + a.lo * b;
  return quick_two_sum(p, e);
}

DoubleDouble plus(DoubleDouble a, DoubleDouble b) {
  const double s = a.hi + b.hi;
  const double bb = s - a.hi;
  const double e = (a.hi - (s - bb)) + (b.hi - bb) + a.lo + b.lo;
  return quick_two_sum(s, e);
}

}  // namespace

double hyperdet222(const std::array<double, 8>& x) {
  static constexpr struct {
    double coeff;
    int i, j, k, l;
  } kTerms[12] = {{1, 0, 0, 7, 7},  {1, 1, 1, 6, 6},  {1, 2, 2, 5, 5},  {1, 3, 3, 4, 4},
                  {4, 0, 3, 5, 6},  {4, 1, 2, 4, 7},  {-2, 0, 1, 6, 7}, {-2, 0, 2, 5, 7},
                  {-2, 0, 3, 4, 7}, {-2, 1, 2, 5, 6}, {-2, 1, 3, 4, 6}, {-2, 2, 3, 4, 5}};
  DoubleDouble sum;
  for (const auto& t : kTerms) {
    DoubleDouble term{t.coeff, 0.0};
    for (int idx : {t.i, t.j, t.k, t.l}) term = times(term, x[static_cast<std::size_t>(idx)]);
    sum = plus(sum, term);
  }
  return sum.hi + sum.lo;
}

double hyperdet222(const Tensor& t) {
  if (!(t.shape() == Shape({2, 2, 2})))
    fail(ErrorCode::ShapeMismatch, "hyperdeterminant needs a 2x2x2 tensor, got " + t.shape().to_string());
  std::array<double, 8> x{};
  std::copy(t.entries().begin(), t.entries().end(), x.begin());
  return hyperdet222(x);
}

namespace {

// Lets the templated quartic run over polynomials.
struct PolyScalar {
  MultiPoly p;
  PolyScalar(int c) : p(MultiPoly::constant(Rational(c))) {}  // NOLINT(google-explicit-constructor)
  PolyScalar(MultiPoly q) : p(std::move(q)) {}               // NOLINT(google-explicit-constructor)
  friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) { return a.p * b.p; }
  friend PolyScalar operator+(const PolyScalar& a, const PolyScalar& b) { return a.p + b.p; }
  friend PolyScalar operator-(const PolyScalar& a, const PolyScalar& b) { return a.p - b.p; }
};

}  // namespace

MultiPoly hyperdet222_poly() {
  std::vector<std::string> vars;
  for (int i = 0; i < 8; ++i) vars.push_back("x" + std::to_string(i >> 2) + std::to_string((i >> 1) & 1) + std::to_string(i & 1));
  std::array<MultiPoly, 8> x;
  for (int i = 0; i < 8; ++i) x[static_cast<std::size_t>(i)] = MultiPoly::variable(vars[static_cast<std::size_t>(i)], vars);
  std::array<PolyScalar, 8> xs{x[0], x[1], x[2], x[3], x[4], x[5], x[6], x[7]};
  return hyperdet222(xs).p.with_variables(vars);
}

double hyperdet_zero_tolerance(const Tensor& t, double rel) {
  const double s = 1.0 + t.max_abs();
  return rel * s * s * s * s;
}

HyperdetReport subhyperdets(const Tensor& t, const std::vector<SubBlockSelector>& selectors, double zero_tol) {
  HyperdetReport r;
  r.zero_tol = zero_tol;
  r.values.resize(selectors.size());
  parallel_for(selectors.size(), [&](std::size_t i) {
    r.values[i] = {selectors[i], hyperdet222(extract_subblock(t, selectors[i]))};
  });
  if (r.values.empty()) return r;
  std::size_t lo = 0, hi = 0;
  for (std::size_t i = 0; i < r.values.size(); ++i) {
    const double v = r.values[i].value;
    if (v < r.values[lo].value) lo = i;
    if (v > r.values[hi].value) hi = i;
    if (std::fabs(v) <= zero_tol) ++r.num_zero;
    else if (v > 0) ++r.num_positive;
    else ++r.num_negative;
  }
  r.min_value = r.values[lo].value;
  r.argmin = r.values[lo].selector;
  r.max_value = r.values[hi].value;
  r.argmax = r.values[hi].selector;
  return r;
}

HyperdetReport all_subhyperdets(const Tensor& t, std::optional<double> zero_tol) {
  if (t.order() < 3) fail(ErrorCode::ArityTooSmall, "sub-hyperdeterminants need a tensor of order at least 3");
  return subhyperdets(t, enumerate_subblocks(t.shape()), zero_tol ? *zero_tol : hyperdet_zero_tolerance(t));
}

namespace {

template <typename T>
T shifted_quartic(const T& a, const T& b, const T& c, const T& d) {
  return a * a * d * d - T(6) * a * b * c * d - T(3) * b * b * c * c + T(4) * b * b * b * d + T(4) * a * c * c * c;
}

}  // namespace

double sym_discriminant_quartic(unsigned i, const SymTensorCoords& f) {
  if (f.n != 2) fail(ErrorCode::InvalidArgument, "shifted quartics are defined for binary forms");
  if (f.d < 3 || i > f.d - 3) fail(ErrorCode::IndexOutOfRange, "quartic index must satisfy 0 <= i <= d-3");
  const auto x = f.binary_coords();
  return shifted_quartic(x[i], x[i + 1], x[i + 2], x[i + 3]);
}

Rational sym_discriminant_quartic(unsigned i, std::span<const Rational> x) {
  if (x.size() < 4 || i + 3 >= x.size()) fail(ErrorCode::IndexOutOfRange, "quartic index must satisfy 0 <= i <= d-3");
  return shifted_quartic(x[i], x[i + 1], x[i + 2], x[i + 3]);
}

MultiPoly sym_discriminant_quartic_poly(unsigned i, unsigned d) {
  if (d < 3 || i > d - 3) fail(ErrorCode::IndexOutOfRange, "quartic index must satisfy 0 <= i <= d-3");
  std::vector<std::string> vars;
  for (unsigned k = 0; k <= d; ++k) vars.push_back("x" + std::to_string(k));
  auto v = [&](unsigned k) { return MultiPoly::variable(vars[k], vars); };
  const MultiPoly a = v(i), b = v(i + 1), c = v(i + 2), e = v(i + 3);
  auto k = [&](long c0) { return Rational(c0); };
  return a * a * e * e - k(6) * (a * b * c * e) - k(3) * (b * b * c * c) + k(4) * (b * b * b * e) + k(4) * (a * c * c * c);
}

MultiPoly cubic_discriminant_determinant() {
  const std::vector<std::string> vars{"x0", "x1", "x2", "x3"};
  auto v = [&](const std::string& name, long c = 1) { return MultiPoly::variable(name, vars) * Rational(c); };
  const MultiPoly zero(vars);
  std::vector<std::vector<MultiPoly>> m{
      {v("x0"), v("x1", 2), v("x2"), zero},
      {zero, v("x0"), v("x1", 2), v("x2")},
      {v("x1"), v("x2", 2), v("x3"), zero},
      {zero, v("x1"), v("x2", 2), v("x3")},
  };
  return determinant_bareiss(std::move(m)).with_variables(vars);
}

}  // namespace realrank
