#include <random>

#include "realrank/exactalg.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace realrank;

TEST_SUITE("exactalg") {

TEST_CASE("rational parsing and normalization") {
  CHECK(Rational::parse("6/8") == Rational(3, 4));
  CHECK(Rational::parse("-0.125") == Rational(-1, 8));
  CHECK(Rational::parse("1.5e-3") == Rational(3, 2000));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational(2, -4).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::from_double(0.1).denominator() == mpz_class("36028797018963968"));
  CHECK_ERROR(Rational::parse("1/0"), Parse);
  CHECK_ERROR(Rational::parse("abc"), Parse);
  CHECK_ERROR(Rational::parse(""), Parse);
}

TEST_CASE("rational field axioms on random values") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const Rational a(oracle::small_int(rng, -50, 50), oracle::small_int(rng, 1, 30));
    const Rational b(oracle::small_int(rng, -50, 50), oracle::small_int(rng, 1, 30));
    const Rational c(oracle::small_int(rng, -50, 50), oracle::small_int(rng, 1, 30));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    const mpq_class qa = a.raw(), qb = b.raw();
    CHECK((a * b).raw() == qa * qb);
  }
  CHECK(binomial(10, 3) == 120);
  CHECK(pow(Rational(-2, 3), 3) == Rational(-8, 27));
}

TEST_CASE("polynomial parse, print and arithmetic") {
  const auto p = MultiPoly::parse("3*x2^2 - 4*x1*x3 + x0*x4", {"x0", "x1", "x2", "x3", "x4"});
  CHECK(p.to_string() == "1*x0*x4 - 4*x1*x3 + 3*x2^2");
  CHECK(MultiPoly::parse(p.to_string(), p.variables()) == p);
  CHECK(p.is_homogeneous());
  CHECK(p.total_degree() == 2);
  const auto q = MultiPoly::parse("(a + b)^3");
  CHECK(q.to_string() == "1*a^3 + 3*a^2*b + 3*a*b^2 + 1*b^3");
  CHECK(q.derivative("a") == MultiPoly::parse("3*(a+b)^2"));
  CHECK(poly_div_exact(q, MultiPoly::parse("a + b")) == MultiPoly::parse("a^2 + 2*a*b + b^2"));
  CHECK_ERROR(poly_div_exact(q, MultiPoly::parse("a - b")), NotDivisible);
  CHECK(MultiPoly::parse("6*x^2 - 4*x*y").normalized().to_string() == "3*x^2 - 2*x*y");
  CHECK(MultiPoly::parse("-2*x + 4*y").normalized().to_string() == "1*x - 2*y");
  CHECK(MultiPoly::parse("2*x - 4*y").proportionality(MultiPoly::parse("x - 2*y")) == std::optional(Rational(2)));
  CHECK_ERROR(MultiPoly::parse("x + * y"), Parse);
}

TEST_CASE("polynomial ring laws against pointwise evaluation") {
  std::mt19937_64 rng(2);
  const std::vector<std::string> vars{"x", "y", "z"};
  auto random_poly = [&] {
    MultiPoly p(vars);
    for (int t = 0; t < 4; ++t)
      p.add_term({static_cast<unsigned>(oracle::small_int(rng, 0, 2)), static_cast<unsigned>(oracle::small_int(rng, 0, 2)),
                  static_cast<unsigned>(oracle::small_int(rng, 0, 2))},
                 Rational(oracle::small_int(rng, -9, 9)));
    return p;
  };
  for (int i = 0; i < 50; ++i) {
    const auto p = random_poly(), q = random_poly();
    const std::vector<Rational> pt{Rational(oracle::small_int(rng, -5, 5), 3), Rational(oracle::small_int(rng, -5, 5)),
                                   Rational(1, oracle::small_int(rng, 1, 7))};
    CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
    CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
    CHECK(MultiPoly::parse(p.to_string(), vars) == p);
  }
}

TEST_CASE("exact linear algebra matches a GMP elimination") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = 2 + trial % 4, cols = 2 + (trial / 4) % 4;
    RationalMatrix a(rows, std::vector<Rational>(cols));
    oracle::QMat q(rows, std::vector<mpq_class>(cols));
    // low-rank products hit rank deficiency often
    const std::size_t inner = 1 + trial % 3;
    std::vector<std::vector<long>> l(rows, std::vector<long>(inner)), r(inner, std::vector<long>(cols));
    for (auto& row : l)
      for (auto& v : row) v = oracle::small_int(rng, -3, 3);
    for (auto& row : r)
      for (auto& v : row) v = oracle::small_int(rng, -3, 3);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        long s = 0;
        for (std::size_t k = 0; k < inner; ++k) s += l[i][k] * r[k][j];
        a[i][j] = Rational(s);
        q[i][j] = s;
      }
    CHECK(rank_exact(a) == oracle::rank(q));
    if (rows == cols) CHECK(determinant_exact(a).raw() == oracle::det(q));
  }
  const RationalMatrix a{{1, 2}, {2, 4}};
  const auto sol = linear_solve_exact(a, {3, 6});
  CHECK(sol.nullspace.size() == 1);
  CHECK(a[0][0] * sol.x[0] + a[0][1] * sol.x[1] == Rational(3));
  CHECK_ERROR(linear_solve_exact(a, {3, 7}), Inconsistent);
}

TEST_CASE("Bareiss determinant equals Leibniz expansion at sample points") {
  const std::vector<std::string> vars{"p", "q"};
  std::vector<std::vector<MultiPoly>> m(3, std::vector<MultiPoly>(3));
  const char* entries[3][3] = {{"p", "q", "1"}, {"q^2", "p + 1", "2*q"}, {"3", "p*q", "p - q"}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = MultiPoly::parse(entries[i][j], vars);
  const auto d = determinant_bareiss(m);
  for (int p = -2; p <= 2; ++p)
    for (int q = -2; q <= 2; ++q) {
      const std::vector<Rational> pt{p, q};
      oracle::QMat num(3, std::vector<mpq_class>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) num[i][j] = m[i][j].evaluate(pt).raw();
      CHECK(d.evaluate(pt).raw() == oracle::det(num));
    }
}

TEST_CASE("resultant vanishes exactly on common roots") {
  const auto f = MultiPoly::parse("x^2 - y");
  const auto g = MultiPoly::parse("x - 2");
  CHECK(resultant(f, g, "x") == MultiPoly::parse("4 - y", resultant(f, g, "x").variables()));
  const auto r = resultant(MultiPoly::parse("x^2 + y^2 - 5"), MultiPoly::parse("x - y + 1"), "x");
  const auto ru = to_univariate(r, "y");
  CHECK(ru.evaluate(Rational(2)) == Rational(0));
  CHECK(ru.evaluate(Rational(-1)) == Rational(0));
}

TEST_CASE("resultant of two linear forms is their determinant") {
  const auto r = resultant(MultiPoly::parse("a*x + b"), MultiPoly::parse("c*x + d"), "x");
  CHECK(r == MultiPoly::parse("a*d - b*c", r.variables()));
}

TEST_CASE("double root of x^2 inside [-1, 1]") {
  const auto roots = real_roots(QPoly({0, 0, 1}), -1.0, 1.0);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].multiple());
  CHECK(roots[0].multiplicity == 2);
  CHECK(roots[0].value == 0.0);
}

TEST_CASE("univariate gcd, square-free parts and Sturm root isolation") {
  const QPoly p({Rational(-2), Rational(0), Rational(1)});  // x^2 - 2
  const auto roots = real_roots(p, -10, 10, 1e-14);
  REQUIRE(roots.size() == 2);
  CHECK(roots[1].value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(roots[1].lo <= Rational::from_double(std::sqrt(2.0)));
  // (x-1)^3 (x+2)
  const QPoly a({Rational(-1), Rational(1)}), b({Rational(2), Rational(1)});
  const QPoly m = a * a * a * b;
  const auto mr = real_roots(m);
  REQUIRE(mr.size() == 2);
  CHECK(mr[0].multiplicity == 1);
  CHECK(mr[1].multiplicity == 3);
  CHECK(mr[1].value == doctest::Approx(1.0));
  const auto sf = squarefree_decomposition(m);
  REQUIRE(sf.size() == 3);
  CHECK(sf[2] == a);
  CHECK(gcd(m, a * a * b * b) == monic(a * a * b));
  CHECK(sturm_count(QPoly({Rational(1), Rational(0), Rational(1)}), Rational(-100), Rational(100)) == 0);
}

TEST_CASE("Sturm counts agree with a sampled sign change count") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    // product of distinct linear factors with integer roots in [-20, 20]
    std::vector<long> rts;
    while (rts.size() < 4) {
      const long r = oracle::small_int(rng, -20, 20);
      if (std::find(rts.begin(), rts.end(), r) == rts.end()) rts.push_back(r);
    }
    QPoly p({Rational(1)});
    for (long r : rts) p = p * QPoly({Rational(-r), Rational(1)});
    const auto found = real_roots(p, -5.5, 7.5, 1e-12);
    std::size_t expected = 0;
    for (long r : rts) expected += (r > -5.5 && r < 7.5);
    CHECK(found.size() == expected);
    for (const auto& root : found) CHECK(std::fabs(root.value - std::round(root.value)) < 1e-9);
  }
}

}  // TEST_SUITE
