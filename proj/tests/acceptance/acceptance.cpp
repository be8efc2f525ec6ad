// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "realrank/binary_forms.hpp"
#include "realrank/decompose.hpp"
#include "realrank/hyperdet.hpp"
#include "realrank/space_curve.hpp"
#include "realrank/veronese.hpp"
#include "support/oracles.hpp"

using namespace realrank;

namespace {

struct Result {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::array<double, 8> entries8(const std::vector<double>& v) {
  std::array<double, 8> a{};
  std::copy(v.begin(), v.end(), a.begin());
  return a;
}

double det2(const std::vector<double>& p, const std::vector<double>& q) { return p[0] * q[1] - p[1] * q[0]; }

Result hyperdet_real_identity() {
  std::mt19937_64 rng(1001);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::vector<double>> v;
    for (int k = 0; k < 6; ++k) v.push_back(oracle::normal_vector(rng, 2));
    auto x = oracle::outer({v[0], v[1], v[2]});
    const auto y = oracle::outer({v[3], v[4], v[5]});
    for (int k = 0; k < 8; ++k) x[k] += y[k];
    const double m = det2(v[0], v[3]) * det2(v[1], v[4]) * det2(v[2], v[5]);
    const double h = hyperdet222(entries8(x));
    worst = std::max(worst, std::fabs(h - m * m) / std::max(std::fabs(m * m), 1e-300));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8 && secs < 1.0, "max rel err " + fmt("%.3g", worst) + ", " + fmt("%.3f", secs) + " s"};
}

Result hyperdet_conjugate_identity() {
  std::mt19937_64 rng(1002);
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    std::vector<std::vector<double>> re, im;
    for (int k = 0; k < 3; ++k) {
      re.push_back(oracle::normal_vector(rng, 2));
      im.push_back(oracle::normal_vector(rng, 2));
    }
    std::array<double, 8> x{};
    for (int idx = 0; idx < 8; ++idx) {
      std::complex<double> z = 1.0;
      for (int k = 0; k < 3; ++k) {
        const int bit = (idx >> (2 - k)) & 1;
        z *= std::complex<double>(re[k][bit], im[k][bit]);
      }
      x[idx] = 2.0 * z.real();
    }
    const double m = det2(re[0], im[0]) * det2(re[1], im[1]) * det2(re[2], im[2]);
    const double expected = -64.0 * m * m;
    worst = std::max(worst, std::fabs(hyperdet222(x) - expected) / std::max(std::fabs(expected), 1e-300));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-8, "max rel err " + fmt("%.3g", worst) + ", " + fmt("%.3f", secs) + " s"};
}

Result table_one() {
  const long expected[4][7] = {{1, 3, 6, 10, 15, 21, 28},
                               {15, 60, 153, 315, 570, 945, 1470},
                               {105, 540, 1711, 4270, 9190, 17850, 32130},
                               {490, 3150, 12145, 36155, 91395, 205905, 425425}};
  const auto t0 = Clock::now();
  int matches = 0;
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned d = 4; d <= 10; ++d) matches += quadric_count(n, d) == expected[n - 2][d - 4];
  const double secs = seconds_since(t0);
  return {matches == 28 && secs < 1.0, std::to_string(matches) + "/28 entries, " + fmt("%.4f", secs) + " s"};
}

MultiPoly coords_poly(const std::string& text, unsigned n, unsigned d) { return MultiPoly::parse(text, coordinate_names(n, d)); }

Result golden_preimages() {
  int ok = 0;
  ok += preimage_quadric(enumerate_tableaux(2, 2, 2).at(0), true).polynomial == coords_poly("x0*x2 - x1^2", 2, 2);
  ok += preimage_quadric(enumerate_tableaux(2, 4, 4).at(0)).polynomial == coords_poly("x0*x4 - 4*x1*x3 + 3*x2^2", 2, 4);
  for (const auto& t : enumerate_tableaux(3, 4, 4)) {
    if (t.label() == "f_1111_2222")
      ok += preimage_quadric(t).polynomial == coords_poly("x400*x040 - 4*x310*x130 + 3*x220^2", 3, 4);
    if (t.label() == "f_1112_2333")
      ok += preimage_quadric(t).polynomial ==
            coords_poly("x310*x013 - x301*x022 - x220*x103 - x211*x112 + 2*x202*x121", 3, 4);
  }
  return {ok == 4, std::to_string(ok) + "/4 polynomials equal"};
}

Result quintic_basis() {
  const auto basis = quadric_basis(2, 5);
  const std::vector<MultiPoly> q{coords_poly("3*x2^2 - 4*x1*x3 + x0*x4", 2, 5), coords_poly("2*x2*x3 - 3*x1*x4 + x0*x5", 2, 5),
                                 coords_poly("3*x3^2 - 4*x2*x4 + x1*x5", 2, 5)};
  std::vector<bool> used(basis.size(), false);
  int matched = 0;
  for (const auto& target : q)
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (!used[i] && basis[i].polynomial.proportionality(target)) {
        used[i] = true;
        ++matched;
        break;
      }
  const auto d4 = quadric_basis(2, 4);
  const bool q4 = d4.size() == 1 && d4[0].polynomial.proportionality(coords_poly("x0*x4 - 4*x1*x3 + 3*x2^2", 2, 4)).has_value();
  return {basis.size() == 3 && matched == 3 && q4,
          "basis size " + std::to_string(basis.size()) + ", matched " + std::to_string(matched) + "/3, d=4 Q " + (q4 ? "ok" : "missing")};
}

Result example_crossings() {
  const auto t0 = Clock::now();
  const auto rep = scan_path(CurveParam::monomial_quartic(), LinearPath::example(), monomial_quartic_fixtures());
  const double secs = seconds_since(t0);
  const double expected_t[4] = {0.41616468475415957221, 0.50734775284175190900, 0.64786245578375696533, 0.81105706603104911043};
  const TransitionKind kinds[4] = {TransitionKind::Tangential, TransitionKind::NoRankChange, TransitionKind::NoRankChange,
                                   TransitionKind::Edge};
  bool ok = rep.transitions.size() == 4;
  double worst = 0.0;
  for (std::size_t i = 0; ok && i < 4; ++i) {
    const auto& tr = rep.transitions[i];
    worst = std::max(worst, std::fabs(tr.t - expected_t[i]));
    ok = ok && tr.kind == kinds[i];
  }
  ok = ok && worst <= 1e-12;
  ok = ok && rep.transitions[0].rank_before == 3 && rep.transitions[0].rank_after == 2;
  ok = ok && rep.transitions[3].rank_before == 2 && rep.transitions[3].rank_after == 3;
  const std::size_t lines[5] = {1, 1, 3, 3, 1}, meeting[5] = {0, 1, 3, 2, 0};
  bool seg_ok = rep.segments.size() == 5;
  for (std::size_t i = 0; seg_ok && i < 5; ++i)
    seg_ok = rep.segments[i].real_lines == lines[i] && rep.segments[i].real_meeting == meeting[i];
  std::ostringstream det;
  det << rep.transitions.size() << " transitions, max |t - t_expected| " << fmt("%.3g", worst) << ", segments "
      << (seg_ok ? "match" : "differ") << ", " << fmt("%.2f", secs) << " s";
  return {ok && seg_ok && secs < 30.0, det.str()};
}

Result plucker_golden() {
  const auto pm = plucker_map(CurveParam::monomial_quartic());
  const char* expected[6] = {"a^3", "a*(b^2 - a*c)", "b*(b^2 - 2*a*c)", "a*b*c", "c*(b^2 - a*c)", "c^3"};
  int ok = 0;
  for (int i = 0; i < 6; ++i) ok += pm.p[i] == MultiPoly::parse(expected[i], {"a", "b", "c"});
  return {ok == 6, std::to_string(ok) + "/6 coordinates equal"};
}

Result determinant_identity() {
  const auto d = MultiPoly::parse("x0^2*x3^2 - 6*x0*x1*x2*x3 - 3*x1^2*x2^2 + 4*x1^3*x3 + 4*x0*x2^3", {"x0", "x1", "x2", "x3"});
  const auto det = cubic_discriminant_determinant();
  return {det == d, "det = " + det.to_string()};
}

// Rank-two-rich sample of binary forms with small rational coordinates.
std::vector<Rational> sample_form(std::mt19937_64& rng, unsigned d, int kind) {
  auto r = [&](long lo, long hi) { return oracle::small_int(rng, lo, hi); };
  std::vector<Rational> x(d + 1);
  const long a0 = r(-3, 3), a1 = r(-3, 3), b0 = r(-3, 3), b1 = r(-3, 3);
  switch (kind) {
    case 0:
    case 1: {  // α ℓ1^d + β ℓ2^d
      const long alpha = r(1, 3) * (kind == 0 ? 1 : -1), beta = r(1, 3);
      for (unsigned k = 0; k <= d; ++k)
        x[k] = Rational(alpha) * pow(Rational(a0), d - k) * pow(Rational(a1), k) + Rational(beta) * pow(Rational(b0), d - k) * pow(Rational(b1), k);
      break;
    }
    case 2: {  // 2 Re(ℓ^d) with ℓ = (a0 + i b0) s + (a1 + i b1) t
      for (unsigned k = 0; k <= d; ++k) {
        mpz_class re = 1, im = 0;
        auto mul = [&](long p, long q) {
          const mpz_class nre = re * p - im * q, nim = re * q + im * p;
          re = nre;
          im = nim;
        };
        for (unsigned e = 0; e < d - k; ++e) mul(a0, b0);
        for (unsigned e = 0; e < k; ++e) mul(a1, b1);
        x[k] = Rational(mpz_class(2 * re));
      }
      break;
    }
    case 3: {  // ℓ1^(d-1) ℓ2 up to the factor d
      for (unsigned k = 0; k <= d; ++k) {
        Rational v = 0;
        if (k < d) v += Rational(static_cast<long>(d - k)) * pow(Rational(a0), d - k - 1) * pow(Rational(a1), k) * Rational(b0);
        if (k > 0) v += Rational(static_cast<long>(k)) * pow(Rational(a0), d - k) * pow(Rational(a1), k - 1) * Rational(b1);
        x[k] = v;
      }
      break;
    }
    case 4: {  // ℓ^d
      for (unsigned k = 0; k <= d; ++k) x[k] = pow(Rational(a0), d - k) * pow(Rational(a1), k) * Rational(r(1, 3));
      break;
    }
    default:
      for (auto& v : x) v = Rational(r(-5, 5));
  }
  const Rational scale(1, r(1, 4));
  for (auto& v : x) v *= scale;
  return x;
}

Result oracle_equivalence() {
  std::mt19937_64 rng(1009);
  std::size_t disagreements = 0, compared = 0;
  std::map<std::string, std::size_t> seen;
  for (unsigned d = 3; d <= 6; ++d) {
    int made = 0;
    while (made < 1000) {
      const auto x = sample_form(rng, d, static_cast<int>(rng() % 6));
      bool zero = true;
      for (const auto& v : x) zero = zero && v.is_zero();
      if (zero) continue;
      ++made;
      const auto f = BinaryForm::from_rationals(x);
      const auto fast = classify_binary_form(f);
      const auto full = certify_border_rank2(sym_to_tensor(f.sym()));
      ++compared;
      ++seen[verdict_name(full.verdict)];
      if (fast.verdict != full.verdict) ++disagreements;
    }
  }
  std::ostringstream det;
  det << disagreements << " disagreements in " << compared << " forms (";
  bool first = true;
  for (const auto& [name, count] : seen) {
    det << (first ? "" : ", ") << name << " " << count;
    first = false;
  }
  det << ")";
  return {disagreements == 0 && compared == 4000, det.str()};
}

Result interior_witness() {
  Tensor t(Shape({2, 2, 2, 2}));
  t[0] = t[15] = 1.0;
  const auto rep = all_subhyperdets(t);
  bool all_zero = rep.values.size() == 8;
  for (const auto& v : rep.values) all_zero = all_zero && v.value == 0.0;
  bool ranks_two = true;
  std::size_t flattenings = 0;
  for (const auto& modes : bipartitions(4)) {
    ranks_two = ranks_two && numeric_rank(flatten(t, modes)) == 2;
    ++flattenings;
  }
  for (std::size_t m = 1; m < 4; ++m) ranks_two = ranks_two && numeric_rank(flatten(t, {m})) == 2;
  const auto d = decompose_rank2(t);
  const bool real = d.kind == DecompositionKind::RealPair && d.residual <= 1e-10;
  return {all_zero && ranks_two && real, std::to_string(rep.values.size()) + " sub-hyperdets all zero: " + (all_zero ? "yes" : "no") +
                                             ", flattenings rank 2: " + (ranks_two ? "yes" : "no") + ", decomposition " +
                                             decomposition_kind_name(d.kind) + " residual " + fmt("%.3g", d.residual)};
}

Result tangential_vanishing() {
  std::mt19937_64 rng(1011);
  auto rationals = [&](unsigned n) {
    std::vector<Rational> v;
    for (unsigned i = 0; i < n; ++i) v.emplace_back(oracle::small_int(rng, -20, 20), oracle::small_int(rng, 1, 9));
    return v;
  };
  std::size_t checks = 0, failures = 0;
  for (auto [n, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {2, 6}, {3, 4}, {3, 5}}) {
    const auto basis = quadric_basis(n, d);
    for (int i = 0; i < 50; ++i) {
      const auto x = tangential_point(d, rationals(n), rationals(n));
      for (const auto& g : basis) {
        ++checks;
        failures += !g.polynomial.evaluate(x).is_zero();
      }
    }
  }
  const auto k2 = preimage_quadric(enumerate_tableaux(2, 2, 2).at(0), true).polynomial;
  const Rational at_tangent = k2.evaluate(tangential_point(2, rationals(2), rationals(2)));
  const bool k2_nonzero = !at_tangent.is_zero();
  return {failures == 0 && k2_nonzero, std::to_string(checks - failures) + "/" + std::to_string(checks) +
                                           " exact zeros; k=2 preimage at a tangent point = " + at_tangent.to_string()};
}

Result decomposition_round_trip() {
  std::mt19937_64 rng(1012);
  const std::vector<std::vector<std::size_t>> shapes{{2, 2, 2}, {3, 2, 2}, {2, 2, 2, 2}, {3, 3, 3}};
  double worst = 0.0;
  std::size_t mismatches = 0, conjugate = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto& dims = shapes[i % 4];
    Tensor t{Shape(dims)};
    const bool conj = i % 4 == 3 || i % 7 == 0;
    if (!conj) {
      std::vector<std::vector<double>> a, b;
      for (auto n : dims) {
        a.push_back(oracle::normal_vector(rng, n));
        b.push_back(oracle::normal_vector(rng, n));
      }
      t = Tensor::rank_one(a) + Tensor::rank_one(b);
    } else {
      ++conjugate;
      std::vector<std::vector<double>> re, im;
      for (auto n : dims) {
        re.push_back(oracle::normal_vector(rng, n));
        im.push_back(oracle::normal_vector(rng, n));
      }
      for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const auto idx = t.multi_index(flat);
        std::complex<double> z = 1.0;
        for (std::size_t k = 0; k < dims.size(); ++k) z *= std::complex<double>(re[k][idx[k]], im[k][idx[k]]);
        t[flat] = 2.0 * z.real();
      }
    }
    const auto c = certify_border_rank2(t);
    const auto d = decompose_rank2(t);
    worst = std::max(worst, (d.reconstruct() - t).norm() / t.norm());
    const bool agree = (d.kind == DecompositionKind::RealPair && c.verdict == Verdict::RealRankTwo) ||
                       (d.kind == DecompositionKind::ConjugatePair && c.verdict == Verdict::ComplexRankTwoRealRankHigher);
    mismatches += !agree;
  }
  return {worst <= 1e-8 && mismatches == 0, "max rel reconstruction err " + fmt("%.3g", worst) + ", kind/verdict mismatches " +
                                                std::to_string(mismatches) + " (" + std::to_string(conjugate) + " conjugate pairs)"};
}

Result projection_formula() {
  std::mt19937_64 rng(1013);
  double worst = 0.0;
  std::size_t nonmonotone = 0;
  const std::vector<std::vector<std::size_t>> shapes{{2, 2, 2}, {3, 2, 2}, {2, 3, 2, 2}};
  for (int i = 0; i < 1000; ++i) {
    const auto& dims = shapes[i % 3];
    const Shape s(dims);
    const Tensor u(s, oracle::normal_vector(rng, s.num_entries()));
    std::vector<std::vector<double>> f;
    for (auto n : dims) f.push_back(oracle::normal_vector(rng, n));
    const Tensor x = Tensor::rank_one(f);
    const double uu = u.inner(u), ux = u.inner(x), xx = x.inner(x);
    const double formula = uu - ux * ux / xx;
    const double lam = optimal_scale(u, x);
    const double direct = (u - lam * x).norm();
    worst = std::max(worst, std::fabs(direct * direct - formula) / std::max(1.0, uu));
    worst = std::max(worst, std::fabs(projection_distance_sq(u, x) - formula) / std::max(1.0, uu));
    const auto b = best_rank_one(u, 200);
    for (std::size_t k = 1; k < b.history.size(); ++k)
      if (b.history[k] > b.history[k - 1] * (1 + 1e-12) + 1e-15) ++nonmonotone;
  }
  return {worst <= 1e-10 && nonmonotone == 0,
          "max rel deviation " + fmt("%.3g", worst) + ", non-monotone sweeps " + std::to_string(nonmonotone)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Result()>>> criteria{
      {"hyperdet equals product of squared determinants on real pairs", hyperdet_real_identity},
      {"hyperdet equals -64 times squared determinants on conjugate pairs", hyperdet_conjugate_identity},
      {"quadric counts for n=2..5, d=4..10", table_one},
      {"golden quadric preimages", golden_preimages},
      {"quintic quadrics Q0, Q1, Q2 and the quartic Q", quintic_basis},
      {"monomial quartic path crossings, labels and secant counts", example_crossings},
      {"Pluecker coordinates of the monomial quartic", plucker_golden},
      {"4x4 determinant expands to the cubic discriminant", determinant_identity},
      {"Hankel classification agrees with full tensor certification", oracle_equivalence},
      {"diagonal 2x2x2x2 tensor: zero hyperdets, rank-two flattenings, real pair", interior_witness},
      {"tangential quadrics vanish on tangent points", tangential_vanishing},
      {"rank-two decomposition round trip and kind agreement", decomposition_round_trip},
      {"projection distance formula and monotone power iteration", projection_formula},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.pass;
    std::printf("criterion %2zu %s: %s [%s]\n", i + 1, r.pass ? "PASS" : "FAIL", criteria[i].first, r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
