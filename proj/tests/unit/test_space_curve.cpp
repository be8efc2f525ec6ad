#include <random>

#include "realrank/space_curve.hpp"
#include "support/oracles.hpp"
#include "support/testing.hpp"

using namespace realrank;

namespace {

const std::vector<std::string> kABC{"a", "b", "c"};

std::array<Rational, 4> point(long w, long x, long y, long z) { return {Rational(w), Rational(x), Rational(y), Rational(z)}; }

}  // namespace

TEST_SUITE("space_curve") {

TEST_CASE("curve validation") {
  CHECK_NOTHROW(CurveParam::monomial_quartic().validate());
  CurveParam bad = CurveParam::monomial_quartic();
  bad.F[3] = bad.F[2];
  CHECK_ERROR(bad.validate(), InvalidCurve);
  bad = CurveParam::monomial_quartic();
  bad.F[1].pop_back();
  CHECK_ERROR(bad.validate(), InvalidCurve);
}

TEST_CASE("Plücker coordinates of the monomial quartic") {
  const auto pm = plucker_map(CurveParam::monomial_quartic());
  const char* expected[6] = {"a^3", "a*(b^2 - a*c)", "b*(b^2 - 2*a*c)", "a*b*c", "c*(b^2 - a*c)", "c^3"};
  for (int i = 0; i < 6; ++i) CHECK(pm.p[i] == MultiPoly::parse(expected[i], kABC));
  CHECK(pm.relation().is_zero());
  CHECK(pm.get(0, 1) == pm.p[0]);
}

TEST_CASE("Plücker coordinates of the twisted cubic satisfy the relation") {
  const auto pm = plucker_map(CurveParam::twisted_cubic());
  CHECK(pm.relation().is_zero());
  for (const auto& p : pm.p) CHECK(p.is_homogeneous());
}

TEST_CASE("Plücker map agrees with 2x2 minors of two curve points") {
  const auto curve = CurveParam::monomial_quartic();
  const auto pm = plucker_map(curve);
  std::mt19937_64 rng(70);
  for (int i = 0; i < 20; ++i) {
    const long s1 = oracle::small_int(rng, -4, 4), t1 = oracle::small_int(rng, 1, 4);
    const long s2 = oracle::small_int(rng, -4, 4), t2 = oracle::small_int(rng, -4, -1);
    auto img = [&](long s, long t) {
      std::array<mpq_class, 4> out;
      const long pw[4][2] = {{4, 0}, {3, 1}, {1, 3}, {0, 4}};
      for (int k = 0; k < 4; ++k) {
        mpz_class v = 1;
        for (int e = 0; e < pw[k][0]; ++e) v *= s;
        for (int e = 0; e < pw[k][1]; ++e) v *= t;
        out[k] = v;
      }
      return out;
    };
    const auto P = img(s1, t1), Q = img(s2, t2);
    const std::vector<Rational> abc{Rational(s1 * s2), Rational(s1 * t2 + s2 * t1), Rational(t1 * t2)};
    // minors divided by the common factor (s1 t2 - s2 t1)
    const mpq_class delta = s1 * t2 - s2 * t1;
    if (delta == 0) continue;
    int idx = 0;
    std::optional<mpq_class> ratio;
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b, ++idx) {
        const mpq_class minor = (P[a] * Q[b] - P[b] * Q[a]) / delta;
        const mpq_class val = pm.p[idx].evaluate(abc).raw();
        if (val != 0 && !ratio) ratio = minor / val;
        if (ratio) CHECK(minor == *ratio * val);
      }
  }
}

TEST_CASE("secants through sample points") {
  const auto curve = CurveParam::monomial_quartic();
  const auto pm = plucker_map(curve);
  // u(0.2), u(0.45), u(0.55), u(0.7), u(0.9) on the example path
  const LinearPath path = LinearPath::example();
  struct Expect {
    double t;
    PointClass cls;
    std::size_t lines, meeting;
  };
  for (const auto& e : std::vector<Expect>{{0.2, PointClass::RealRankGe3, 1, 0},
                                           {0.45, PointClass::RealRankLe2, 1, 1},
                                           {0.55, PointClass::RealRankLe2, 3, 3},
                                           {0.7, PointClass::RealRankLe2, 3, 2},
                                           {0.9, PointClass::RealRankGe3, 1, 0}}) {
    const auto c = classify_point(curve, pm, path.at(e.t));
    CHECK(c.cls == e.cls);
    CHECK(c.real_lines == e.lines);
    CHECK(c.real_meeting == e.meeting);
    CHECK(c.evidence.total == 3);
    for (const auto& s : c.evidence.real) CHECK(s.residual < 1e-8);
  }
}

TEST_CASE("real secant solutions pass through the query point") {
  const auto curve = CurveParam::monomial_quartic();
  const auto pm = plucker_map(curve);
  std::mt19937_64 rng(71);
  for (int i = 0; i < 20; ++i) {
    const auto u = point(oracle::small_int(rng, -9, 9), oracle::small_int(rng, -9, 9), oracle::small_int(rng, -9, 9),
                         oracle::small_int(rng, 1, 9));
    const auto rep = solve_secants(curve, pm, u);
    CHECK(rep.total == 3);
    for (const auto& s : rep.real) {
      if (s.contact != SecantContact::RealPair) continue;
      // u lies in the span of the two real curve points: 3x3 minors of [P; Q; u] vanish
      std::array<std::array<double, 4>, 3> m{};
      for (int k = 0; k < 4; ++k) {
        m[0][k] = s.curve_points[0][k].real();
        m[1][k] = s.curve_points[1][k].real();
        m[2][k] = u[k].to_double();
      }
      for (int r = 0; r < 3; ++r) {
        double n = 0;
        for (int k = 0; k < 4; ++k) n += m[r][k] * m[r][k];
        for (int k = 0; k < 4; ++k) m[r][k] /= std::sqrt(n);
      }
      for (int drop = 0; drop < 4; ++drop) {
        int c[3], j = 0;
        for (int k = 0; k < 4; ++k)
          if (k != drop) c[j++] = k;
        const double det = m[0][c[0]] * (m[1][c[1]] * m[2][c[2]] - m[1][c[2]] * m[2][c[1]]) -
                           m[0][c[1]] * (m[1][c[0]] * m[2][c[2]] - m[1][c[2]] * m[2][c[0]]) +
                           m[0][c[2]] * (m[1][c[0]] * m[2][c[1]] - m[1][c[1]] * m[2][c[0]]);
        CHECK(std::fabs(det) < 1e-8);
      }
    }
  }
}

TEST_CASE("degenerate queries") {
  const auto curve = CurveParam::monomial_quartic();
  const auto pm = plucker_map(curve);
  CHECK_ERROR(solve_secants(curve, pm, point(0, 0, 0, 0)), DegenerateQuery);
  CHECK_ERROR(solve_secants(curve, pm, point(1, 2, 8, 16)), DegenerateQuery);  // (s:t) = (1:2)
}

TEST_CASE("classification does not depend on the elimination seed") {
  const auto curve = CurveParam::monomial_quartic();
  const auto pm = plucker_map(curve);
  const auto u = LinearPath::example().at(0.7);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
    SecantOptions o;
    o.seed = seed;
    const auto c = classify_point(curve, pm, u, o);
    CHECK(c.real_lines == 3);
    CHECK(c.real_meeting == 2);
  }
}

TEST_CASE("fixtures restricted to the path") {
  const auto fx = monomial_quartic_fixtures();
  REQUIRE(fx.size() == 2);
  const auto path = LinearPath::example();
  const auto tang = restrict_to_path(fx[0].poly, path);
  const auto edge = restrict_to_path(fx[1].poly, path);
  CHECK(tang.degree() == 6);
  auto roots_in = [](const QPoly& p) {
    std::vector<double> out;
    for (const auto& r : real_roots(p, 0.0, 1.0, 1e-18)) out.push_back(r.value);
    return out;
  };
  const auto tr = roots_in(tang), er = roots_in(edge);
  REQUIRE(tr.size() == 2);
  REQUIRE(er.size() == 2);
  CHECK(std::fabs(tr[0] - 0.41616468475415957221) < 1e-14);
  CHECK(std::fabs(tr[1] - 0.64786245578375696533) < 1e-14);
  CHECK(std::fabs(er[0] - 0.50734775284175190900) < 1e-14);
  CHECK(std::fabs(er[1] - 0.81105706603104911043) < 1e-14);
}

TEST_CASE("path scan without fixtures labels transitions as unlabeled") {
  const auto curve = CurveParam::monomial_quartic();
  ScanOptions o;
  o.samples = 41;
  const auto rep = scan_path(curve, LinearPath::example(), {}, o);
  REQUIRE(rep.transitions.size() == 2);
  for (const auto& t : rep.transitions) CHECK(t.kind == TransitionKind::Unlabeled);
  CHECK(std::fabs(rep.transitions[0].t - 0.41616468475415957221) < 1e-10);
  CHECK(std::fabs(rep.transitions[1].t - 0.81105706603104911043) < 1e-10);
}

}  // TEST_SUITE
