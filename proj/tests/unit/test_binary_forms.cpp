#include <complex>
#include <random>

#include "realrank/binary_forms.hpp"
#include "realrank/veronese.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace realrank;

namespace {

BinaryForm exact(std::initializer_list<Rational> x) { return BinaryForm::from_rationals(std::vector<Rational>(x)); }

}  // namespace

TEST_SUITE("binary_forms") {

TEST_CASE("Hankel matrix layout") {
  const Matrix h = hankel(BinaryForm::from_doubles({1, 0, 0, 0, 1}));
  CHECK(h.rows() == 3);
  CHECK(h.cols() == 3);
  CHECK(h.row(0) == std::vector<double>{1, 0, 0});
  CHECK(h.row(1) == std::vector<double>{0, 0, 0});
  CHECK(h.row(2) == std::vector<double>{0, 0, 1});
  CHECK(numeric_rank(hankel(BinaryForm::from_doubles({1, 1, 1, 1, 1, 1}))) == 1);
  CHECK(numeric_rank(hankel(BinaryForm::from_doubles({1, 0, 0, 0, 0, 1}))) == 2);
  CHECK_ERROR(hankel(BinaryForm::from_doubles({1, 2})), DegreeTooSmall);
}

TEST_CASE("plain coefficients are divided by binomials") {
  const auto f = BinaryForm::from_plain({Rational(0), Rational(1), Rational(0), Rational(0), Rational(0)});
  REQUIRE(f.exact.has_value());
  CHECK((*f.exact)[1] == Rational(1, 4));
}

TEST_CASE("classification fixtures") {
  const auto cubic = classify_binary_form(exact({1, 0, 0, 1}));
  CHECK(cubic.verdict == Verdict::RealRankTwo);
  REQUIRE(cubic.d_exact.has_value());
  CHECK((*cubic.d_exact)[0] == Rational(1));

  const auto diff = classify_binary_form(exact({1, 0, 0, 0, -1}));
  CHECK(diff.verdict == Verdict::RealRankTwo);
  CHECK(diff.strata == std::optional<std::string>("+-0"));

  const auto sum = classify_binary_form(exact({1, 0, 0, 0, 1}));
  CHECK(sum.strata == std::optional<std::string>("++0"));

  const auto tangent = classify_binary_form(exact({0, Rational(1, 4), 0, 0, 0}));
  CHECK(tangent.verdict == Verdict::RealBorderRankTwoBoundary);
  const std::vector<Rational> x{0, Rational(1, 4), 0, 0, 0};
  CHECK(hankel_poly_minor(4, {0, 1, 2}, {0, 1, 2}).evaluate(x).is_zero());
  CHECK(quadric_basis(2, 4)[0].polynomial.evaluate(x).is_zero());

  // conjugate pair 2 Re((s + i t)^4): plain coefficients 2, 0, -12, 0, 2
  const auto cpx = classify_binary_form(BinaryForm::from_plain({2, 0, -12, 0, 2}));
  CHECK(cpx.verdict == Verdict::ComplexRankTwoRealRankHigher);
  CHECK(cpx.strata == std::optional<std::string>("cpx"));

  const auto one = classify_binary_form(exact({1, 1, 1, 1, 1}));
  CHECK(one.verdict == Verdict::RankAtMostOne);
  CHECK(one.strata == std::optional<std::string>("RANK_ONE"));
}

TEST_CASE("s^3 - s t^2 has a negative cubic discriminant") {
  const auto v = classify_binary_form(exact({1, 0, Rational(-1, 3), 0}));
  CHECK(v.verdict == Verdict::ComplexRankTwoRealRankHigher);
  REQUIRE(v.d_exact.has_value());
  CHECK((*v.d_exact)[0].sign() < 0);
}

TEST_CASE("boundary variety of quartics is not cut out by the D_i alone") {
  // (1,0,0,0,1): det H = D_0 = D_1 = 0 but Q = 1
  const std::vector<Rational> x{1, 0, 0, 0, 1};
  CHECK(hankel_poly_minor(4, {0, 1, 2}, {0, 1, 2}).evaluate(x).is_zero());
  CHECK(sym_discriminant_quartic(0, std::span<const Rational>(x).subspan(0, 4)).is_zero());
  CHECK(sym_discriminant_quartic(0, std::span<const Rational>(x).subspan(1, 4)).is_zero());
  CHECK(quadric_basis(2, 4)[0].polynomial.evaluate(x) == Rational(1));
}

TEST_CASE("quintic single-inequality test") {
  CHECK(quintic_alternative_test(exact({1, 0, 0, 0, 0, 1})));
  const auto q = quintic_quadrics(exact({1, 0, 0, 0, 0, 1}));
  CHECK(q.q0 == 0.0);
  CHECK(q.q1 == 1.0);
  CHECK(q.q2 == 0.0);
  CHECK(quintic_alternative_test(exact({1, 0, 0, 0, 0, 0})));
  // 2 Re((s + i t)^5)
  const auto cpx = BinaryForm::from_plain({2, 0, -20, 0, 10, 0});
  CHECK_FALSE(quintic_alternative_test(cpx));
  CHECK(classify_binary_form(cpx).verdict == Verdict::ComplexRankTwoRealRankHigher);
  CHECK_ERROR(quintic_quadrics(exact({1, 0, 0, 0, 1})), WrongDegree);
}

TEST_CASE("quintic test agrees with the D_i test on rank-two quintics") {
  std::mt19937_64 rng(60);
  for (int i = 0; i < 100; ++i) {
    // l1^5 + s * l2^5 or 2 Re(l^5), integer linear forms
    const long a0 = oracle::small_int(rng, -3, 3), a1 = oracle::small_int(rng, -3, 3);
    const long b0 = oracle::small_int(rng, -3, 3), b1 = oracle::small_int(rng, -3, 3);
    std::vector<Rational> x(6);
    if (i % 2 == 0) {
      const long sign = i % 4 == 0 ? 1 : -1;
      for (unsigned k = 0; k <= 5; ++k) x[k] = pow(Rational(a0), 5 - k) * pow(Rational(a1), k) + Rational(sign) * pow(Rational(b0), 5 - k) * pow(Rational(b1), k);
    } else {
      // ℓ = (a0 + i b0) s + (a1 + i b1) t; x_k = 2 Re(ℓ_0^(5-k) ℓ_1^k)
      for (unsigned k = 0; k <= 5; ++k) {
        std::complex<double> z = std::pow(std::complex<double>(a0, b0), 5 - k) * std::pow(std::complex<double>(a1, b1), k);
        x[k] = Rational(static_cast<long>(std::llround(2 * z.real())));
      }
    }
    const auto f = BinaryForm::from_rationals(x);
    const auto v = classify_binary_form(f);
    if (v.verdict == Verdict::BorderRankExceedsTwo) continue;
    CHECK(quintic_alternative_test(f) == within_real_border_rank_two(v.verdict));
  }
}

TEST_CASE("ideal report") {
  const auto r3 = tau_sigma_ideal_report(3);
  CHECK(r3.curve_ideal.size() == 3);
  CHECK(r3.secant_ideal.empty());
  REQUIRE(r3.tangential_ideal.size() == 1);
  CHECK(r3.tangential_ideal[0].poly == sym_discriminant_quartic_poly(0, 3));
  const auto r4 = tau_sigma_ideal_report(4);
  CHECK(r4.secant_ideal.size() == 1);
  CHECK(r4.tangential_ideal.size() == 2);
  for (unsigned d = 5; d <= 8; ++d) {
    const auto r = tau_sigma_ideal_report(d);
    CHECK(r.tangential_ideal.size() == (d - 2) * (d - 3) / 2);
    // the quadrics through the rational normal curve span a space of dimension C(d, 2)
    std::vector<Exponent> monomials;
    for (const auto& g : r.curve_ideal) {
      const auto p = g.poly.with_variables(coordinate_names(2, d));
      for (const auto& [e, c] : p.terms())
        if (std::find(monomials.begin(), monomials.end(), e) == monomials.end()) monomials.push_back(e);
    }
    oracle::QMat coeffs;
    for (const auto& g : r.curve_ideal) {
      const auto p = g.poly.with_variables(coordinate_names(2, d));
      std::vector<mpq_class> row;
      for (const auto& e : monomials) row.push_back(p.coefficient(e).raw());
      coeffs.push_back(row);
      std::vector<Rational> curve_point;
      for (unsigned k = 0; k <= d; ++k) curve_point.push_back(pow(Rational(2), d - k) * pow(Rational(-3), k));
      CHECK(p.evaluate(curve_point).is_zero());
    }
    CHECK(oracle::rank(coeffs) == d * (d - 1) / 2);
  }
  CHECK_ERROR(tau_sigma_ideal_report(2), DegreeTooSmall);
}

TEST_CASE("Hankel path agrees with the full tensor on small random forms") {
  std::mt19937_64 rng(61);
  for (unsigned d = 3; d <= 5; ++d)
    for (int i = 0; i < 60; ++i) {
      std::vector<Rational> x(d + 1);
      const long a0 = oracle::small_int(rng, -2, 2), a1 = oracle::small_int(rng, -2, 2);
      const long b0 = oracle::small_int(rng, -2, 2), b1 = oracle::small_int(rng, -2, 2);
      for (unsigned k = 0; k <= d; ++k)
        x[k] = pow(Rational(a0), d - k) * pow(Rational(a1), k) + Rational(i % 3 - 1) * pow(Rational(b0), d - k) * pow(Rational(b1), k);
      const auto f = BinaryForm::from_rationals(x);
      bool all_zero = true;
      for (const auto& v : x) all_zero = all_zero && v.is_zero();
      if (all_zero) continue;
      CHECK(classify_binary_form(f).verdict == certify_border_rank2(sym_to_tensor(f.sym())).verdict);
    }
}

}  // TEST_SUITE
