#include "realrank/space_curve.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>

#include "realrank/linalg.hpp"
#include "realrank/parallel.hpp"

namespace realrank {

using cplx = std::complex<double>;

namespace {

const std::vector<std::string> kAbc{"a", "b", "c"};
const std::vector<std::string> kST{"s1", "t1", "s2", "t2"};
const std::vector<std::string> kWXYZ{"w", "x", "y", "z"};

}  // namespace

// ---------------------------------------------------------------------------
// Curves
// ---------------------------------------------------------------------------

void CurveParam::validate() const {
  if (d < 3) fail(ErrorCode::InvalidCurve, "a curve spanning P^3 needs degree at least 3");
  RationalMatrix m;
  for (const auto& f : F) {
    if (f.size() != d + 1)
      fail(ErrorCode::InvalidCurve, "each form needs d+1 = " + std::to_string(d + 1) + " coefficients");
    m.push_back(f);
  }
  if (rank_exact(m) != 4) fail(ErrorCode::InvalidCurve, "the four forms are linearly dependent; the curve does not span P^3");
}

std::array<cplx, 4> CurveParam::point(cplx s, cplx t) const {
  std::array<cplx, 4> out{};
  for (std::size_t i = 0; i < 4; ++i)
    for (unsigned j = 0; j <= d; ++j)
      out[i] += F[i][j].to_double() * std::pow(s, static_cast<int>(d - j)) * std::pow(t, static_cast<int>(j));
  return out;
}

MultiPoly CurveParam::form(std::size_t i, const std::string& s, const std::string& t) const {
  const std::vector<std::string> vars{s, t};
  MultiPoly p(vars);
  for (unsigned j = 0; j <= d; ++j)
    if (!F[i][j].is_zero()) p.add_term({d - j, j}, F[i][j]);
  return p;
}

namespace {

CurveParam unit_curve(unsigned d, std::array<unsigned, 4> powers_of_t) {
  CurveParam c;
  c.d = d;
  for (std::size_t i = 0; i < 4; ++i) {
    c.F[i].assign(d + 1, Rational(0));
    c.F[i][powers_of_t[i]] = 1;
  }
  return c;
}

}  // namespace

CurveParam CurveParam::monomial_quartic() { return unit_curve(4, {0, 1, 3, 4}); }
CurveParam CurveParam::twisted_cubic() { return unit_curve(3, {0, 1, 2, 3}); }

// ---------------------------------------------------------------------------
// Plücker map
// ---------------------------------------------------------------------------

MultiPoly PluckerMap::relation() const { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

const MultiPoly& PluckerMap::get(int i, int j) const {
  static constexpr int kIndex[4][4] = {{-1, 0, 1, 2}, {-1, -1, 3, 4}, {-1, -1, -1, 5}, {-1, -1, -1, -1}};
  if (i < 0 || j > 3 || i >= j) fail(ErrorCode::IndexOutOfRange, "Plücker index needs 0 <= i < j <= 3");
  return p[static_cast<std::size_t>(kIndex[i][j])];
}

PluckerMap plucker_map(const CurveParam& curve) {
  curve.validate();
  const unsigned e = curve.d - 1;
  const MultiPoly s1 = MultiPoly::variable("s1", kST), t1 = MultiPoly::variable("t1", kST);
  const MultiPoly s2 = MultiPoly::variable("s2", kST), t2 = MultiPoly::variable("t2", kST);
  const MultiPoly a = s1 * s2, b = s1 * t2 + s2 * t1, c = t1 * t2;
  const MultiPoly den = s1 * t2 - s2 * t1;

  // Monomials a^i b^j c^k of degree e and their expansions in s, t.
  std::vector<Exponent> basis;
  std::vector<MultiPoly> expanded;
  for (unsigned i = 0; i <= e; ++i)
    for (unsigned j = 0; i + j <= e; ++j) {
      basis.push_back({i, j, e - i - j});
      expanded.push_back((a.pow(i) * b.pow(j) * c.pow(e - i - j)).with_variables(kST));
    }
  std::map<Exponent, std::size_t, GrlexGreater> rows;
  for (const auto& q : expanded)
    for (const auto& [mono, coef] : q.terms()) rows.emplace(mono, rows.size());

  std::array<MultiPoly, 4> first, second;
  for (std::size_t i = 0; i < 4; ++i) {
    first[i] = curve.form(i, "s1", "t1").with_variables(kST);
    second[i] = curve.form(i, "s2", "t2").with_variables(kST);
  }
  PluckerMap pm;
  pm.d = curve.d;
  std::size_t slot = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const MultiPoly num = first[i] * second[j] - second[i] * first[j];
      const MultiPoly q = poly_div_exact(num, den).with_variables(kST);
      RationalMatrix m(rows.size(), std::vector<Rational>(basis.size()));
      std::vector<Rational> rhs(rows.size());
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (const auto& [mono, coef] : expanded[k].terms()) m[rows.at(mono)][k] = coef;
      bool representable = true;
      for (const auto& [mono, coef] : q.terms()) {
        auto it = rows.find(mono);
        if (it == rows.end()) {
          representable = false;
          break;
        }
        rhs[it->second] = coef;
      }
      if (!representable)
        fail(ErrorCode::RewriteFailed, std::string("p") + std::to_string(i) + std::to_string(j) + " is not symmetric");
      LinearSolution sol;
      try {
        sol = linear_solve_exact(m, rhs);
      } catch (const Error&) {
        fail(ErrorCode::RewriteFailed, std::string("p") + std::to_string(i) + std::to_string(j) + " has no expression in a, b, c");
      }
      MultiPoly out(kAbc);
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (!sol.x[k].is_zero()) out.add_term(basis[k], sol.x[k]);
      pm.p[slot++] = out;
    }
  return pm;
}

std::array<MultiPoly, 4> secant_system(const PluckerMap& pm, const std::array<Rational, 4>& u) {
  auto P = [&](int i, int j) { return pm.get(i, j).with_variables(kAbc); };
  const Rational &w = u[0], &x = u[1], &y = u[2], &z = u[3];
  return {P(2, 3) * x - P(1, 3) * y + P(1, 2) * z,
          P(2, 3) * (-w) + P(0, 3) * y - P(0, 2) * z,
          P(1, 3) * w - P(0, 3) * x + P(0, 1) * z,
          P(1, 2) * (-w) + P(0, 2) * x - P(0, 1) * y};
}

const char* secant_contact_name(SecantContact c) {
  switch (c) {
    case SecantContact::RealPair: return "REAL_PAIR";
    case SecantContact::TangentContact: return "TANGENT_CONTACT";
    case SecantContact::ConjugatePair: return "CONJUGATE_PAIR";
  }
  return "UNKNOWN";
}

const char* point_class_name(PointClass c) {
  return c == PointClass::RealRankLe2 ? "REAL_RANK_LE_2" : "REAL_RANK_GE_3";
}

// ---------------------------------------------------------------------------
// Secant solver
// ---------------------------------------------------------------------------

namespace {

double coefficient_scale(const MultiPoly& p) {
  double s = 0.0;
  for (const auto& [e, c] : p.terms()) s += std::fabs(c.to_double());
  return s;
}

bool on_curve(const CurveParam& curve, const std::array<Rational, 4>& u) {
  // Point (1:0).
  {
    bool proportional = true;
    for (int i = 0; i < 4 && proportional; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (!(u[i] * curve.F[j][0] - u[j] * curve.F[i][0]).is_zero()) {
          proportional = false;
          break;
        }
    if (proportional) return true;
  }
  // Points (s:1): common roots of the 2×2 minors of [u; F(s,1)].
  QPoly g;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      std::vector<Rational> c(curve.d + 1);
      for (unsigned k = 0; k <= curve.d; ++k) c[curve.d - k] = u[i] * curve.F[j][k] - u[j] * curve.F[i][k];
      g = gcd(g, QPoly(c));
    }
  return g.degree() >= 1;
}

struct Attempt {
  std::array<std::array<long, 3>, 3> m{};
  std::array<MultiPoly, 4> g;  // system in (al, be) after the change of chart
  QPoly alpha_poly, beta_poly;
};

std::optional<Attempt> eliminate(const std::array<MultiPoly, 4>& rows, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> small(-4, 4);
  const std::vector<std::string> ab{"al", "be"};
  Attempt at;
  long det = 0;
  while (det == 0) {
    for (auto& r : at.m)
      for (auto& v : r) v = small(rng);
    const auto& m = at.m;
    det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
          m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  const MultiPoly al = MultiPoly::variable("al", ab), be = MultiPoly::variable("be", ab);
  std::vector<MultiPoly> images;
  for (const auto& r : at.m)
    images.push_back(al * Rational(r[0]) + be * Rational(r[1]) + MultiPoly::constant(Rational(r[2]), ab));
  for (std::size_t i = 0; i < 4; ++i) at.g[i] = rows[i].with_variables(kAbc).substitute(images).with_variables(ab);
  // Two combinations can be dependent modulo the row relations, in which case
  // their resultant is zero or shares spurious factors with another one; the
  // gcd over all pairs of four combinations removes both effects.
  std::array<MultiPoly, 4> h;
  for (auto& hi : h) {
    hi = MultiPoly(ab);
    for (const auto& gi : at.g) hi += gi * Rational(small(rng));
    if (hi.is_zero()) return std::nullopt;
  }
  auto eliminated = [&](const std::string& var, const std::string& keep) -> std::optional<QPoly> {
    std::optional<QPoly> g;
    std::size_t used = 0;
    for (std::size_t i = 0; i < h.size(); ++i)
      for (std::size_t j = i + 1; j < h.size(); ++j) {
        const MultiPoly r = resultant(h[i], h[j], var);
        if (r.is_zero()) continue;
        const QPoly ru = to_univariate(r.with_variables({keep}), keep);
        g = g ? gcd(*g, ru) : ru;
        ++used;
      }
    if (used < 3) return std::nullopt;
    return g;
  };
  const auto pa = eliminated("be", "al");
  const auto pb = eliminated("al", "be");
  if (!pa || !pb) return std::nullopt;
  at.alpha_poly = *pa;
  at.beta_poly = *pb;
  return at;
}

double system_residual(const std::array<MultiPoly, 4>& g, const std::array<double, 2>& p) {
  double r = 0.0;
  for (const auto& gi : g) r = std::max(r, std::fabs(gi.evaluate(std::span<const double>(p.data(), 2))) / std::max(coefficient_scale(gi), 1e-300));
  return r;
}

std::array<double, 2> polish(const std::array<MultiPoly, 4>& g, std::array<double, 2> p) {
  std::array<MultiPoly, 4> da, db;
  for (std::size_t i = 0; i < 4; ++i) {
    da[i] = g[i].derivative("al");
    db[i] = g[i].derivative("be");
  }
  double best = system_residual(g, p);
  for (int it = 0; it < 8; ++it) {
    Matrix j(4, 2);
    std::vector<double> rhs(4);
    const std::span<const double> sp(p.data(), 2);
    for (std::size_t i = 0; i < 4; ++i) {
      const double sc = std::max(coefficient_scale(g[i]), 1e-300);
      j(i, 0) = da[i].evaluate(sp) / sc;
      j(i, 1) = db[i].evaluate(sp) / sc;
      rhs[i] = -g[i].evaluate(sp) / sc;
    }
    const auto step = least_squares(j, rhs, 1e-10);
    const std::array<double, 2> q{p[0] + step[0], p[1] + step[1]};
    const double r = system_residual(g, q);
    if (!(r < best)) break;
    best = r;
    p = q;
  }
  return p;
}

std::array<double, 3> normalize_projective(std::array<double, 3> v) {
  const double n = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
  for (double& x : v) x /= n;
  for (double x : v) {
    if (std::fabs(x) < 1e-14) continue;
    if (x < 0)
      for (double& y : v) y = -y;
    break;
  }
  return v;
}

void fill_points(const CurveParam& curve, SecantSolution& s) {
  const double a = s.abc[0], b = s.abc[1], c = s.abc[2];
  const cplx sq = std::sqrt(cplx(s.discriminant, 0.0));
  for (int k = 0; k < 2; ++k) {
    const cplx pm = k == 0 ? sq : -sq;
    if (std::fabs(a) >= std::fabs(c)) s.roots[k] = {cplx(2 * a), b + pm};
    else s.roots[k] = {b + pm, cplx(2 * c)};
    const double n = std::sqrt(std::norm(s.roots[k][0]) + std::norm(s.roots[k][1]));
    s.roots[k][0] /= n;
    s.roots[k][1] /= n;
    s.curve_points[k] = curve.point(s.roots[k][0], s.roots[k][1]);
  }
}

}  // namespace

SecantReport solve_secants(const CurveParam& curve, const PluckerMap& pm, const std::array<Rational, 4>& u,
                           const SecantOptions& opts) {
  if (std::all_of(u.begin(), u.end(), [](const Rational& v) { return v.is_zero(); }))
    fail(ErrorCode::DegenerateQuery, "query point is zero");
  if (on_curve(curve, u)) fail(ErrorCode::DegenerateQuery, "query point lies on the curve");
  const auto rows = secant_system(pm, u);
  std::mt19937_64 rng(opts.seed);
  std::optional<Attempt> at;
  for (int attempt = 0; attempt < 8 && !at; ++attempt) at = eliminate(rows, rng);
  if (!at) fail(ErrorCode::ResultantIdenticallyZero, "elimination degenerated for every random chart");

  SecantReport report;
  report.total = static_cast<std::size_t>(std::max(at->alpha_poly.degree(), 0));
  const auto alphas = real_roots(at->alpha_poly);
  const auto betas = real_roots(at->beta_poly);
  std::size_t real_mult = 0;
  for (const auto& ra : alphas) {
    real_mult += ra.multiplicity;
    if (betas.empty()) continue;
    std::array<double, 2> best{ra.value, betas[0].value};
    double best_res = std::numeric_limits<double>::infinity();
    for (const auto& rb : betas) {
      const std::array<double, 2> p{ra.value, rb.value};
      const double r = system_residual(at->g, p);
      if (r < best_res) {
        best_res = r;
        best = p;
      }
    }
    if (!ra.multiple()) best = polish(at->g, best);
    std::array<double, 3> abc{};
    for (std::size_t i = 0; i < 3; ++i) abc[i] = static_cast<double>(at->m[i][0]) * best[0] + static_cast<double>(at->m[i][1]) * best[1] + static_cast<double>(at->m[i][2]);
    SecantSolution s;
    s.abc = normalize_projective(abc);
    s.multiplicity = ra.multiplicity;
    // Base points of the Plücker map carry no line.
    double pmax = 0.0;
    for (const auto& p : pm.p) pmax = std::max(pmax, std::fabs(p.with_variables(kAbc).evaluate(std::span<const double>(s.abc.data(), 3))) / std::max(coefficient_scale(p), 1e-300));
    if (pmax < 1e-12) continue;
    const double *v = s.abc.data();
    s.discriminant = v[1] * v[1] - 4 * v[0] * v[2];
    s.contact = s.discriminant > opts.discriminant_tol ? SecantContact::RealPair
              : s.discriminant < -opts.discriminant_tol ? SecantContact::ConjugatePair
                                                        : SecantContact::TangentContact;
    for (const auto& r : rows)
      s.residual = std::max(s.residual, std::fabs(r.with_variables(kAbc).evaluate(std::span<const double>(s.abc.data(), 3))) / std::max(coefficient_scale(r), 1e-300));
    fill_points(curve, s);
    bool duplicate = false;
    for (auto& o : report.real) {
      double dist = 0.0;
      for (int i = 0; i < 3; ++i) dist = std::max(dist, std::fabs(o.abc[i] - s.abc[i]));
      if (dist < 1e-6) {
        o.multiplicity += s.multiplicity;
        duplicate = true;
        break;
      }
    }
    if (!duplicate) report.real.push_back(s);
  }
  report.nonreal = report.total >= real_mult ? report.total - real_mult : 0;
  std::sort(report.real.begin(), report.real.end(), [](const SecantSolution& x, const SecantSolution& y) { return x.abc < y.abc; });
  return report;
}

PointClassification classify_point(const CurveParam& curve, const PluckerMap& pm, const std::array<Rational, 4>& u,
                                   const SecantOptions& opts) {
  PointClassification c;
  c.evidence = solve_secants(curve, pm, u, opts);
  for (const auto& s : c.evidence.real) {
    c.real_lines += s.multiplicity;
    if (s.contact == SecantContact::RealPair) c.real_meeting += s.multiplicity;
  }
  c.cls = c.real_meeting > 0 ? PointClass::RealRankLe2 : PointClass::RealRankGe3;
  return c;
}

// ---------------------------------------------------------------------------
// Paths
// ---------------------------------------------------------------------------

std::array<Rational, 4> LinearPath::at(const Rational& t) const {
  std::array<Rational, 4> u;
  for (std::size_t i = 0; i < 4; ++i) u[i] = coeffs[i][0] + coeffs[i][1] * t;
  return u;
}

std::array<Rational, 4> LinearPath::at(double t) const { return at(Rational::from_double(t)); }

LinearPath LinearPath::example() {
  LinearPath p;
  p.coeffs = {{{Rational(84), Rational(-74)}, {Rational(13), Rational(59)}, {Rational(62), Rational(-19)}, {Rational(-38), Rational(-10)}}};
  p.t0 = 0.0;
  p.t1 = 1.0;
  return p;
}

std::vector<SurfaceFixture> monomial_quartic_fixtures() {
  return {
      {"TANGENTIAL", MultiPoly::parse("16*x^3*y^3 - 27*w^2*y^4 + 6*w*x^2*y^2*z - 27*x^4*z^2 + 48*w^2*x*y*z^2 - 16*w^3*z^3", kWXYZ)},
      {"EDGE", MultiPoly::parse("32*x^3*y^3 - 27*w^2*y^4 - 6*w*x^2*y^2*z - 27*x^4*z^2 + 24*w^2*x*y*z^2 + 4*w^3*z^3", kWXYZ)},
  };
}

const char* transition_kind_name(TransitionKind k) {
  switch (k) {
    case TransitionKind::Tangential: return "TANGENTIAL";
    case TransitionKind::Edge: return "EDGE";
    case TransitionKind::NoRankChange: return "NO_RANK_CHANGE";
    case TransitionKind::Unlabeled: return "UNLABELED";
  }
  return "UNKNOWN";
}

QPoly restrict_to_path(const MultiPoly& surface, const LinearPath& path) {
  const std::vector<std::string> tv{"t"};
  const MultiPoly t = MultiPoly::variable("t", tv);
  std::vector<MultiPoly> images;
  for (const auto& c : path.coeffs) images.push_back(MultiPoly::constant(c[0], tv) + t * c[1]);
  return to_univariate(surface.with_variables(kWXYZ).substitute(images).with_variables(tv), "t");
}

namespace {

int rank_of(PointClass c) { return c == PointClass::RealRankLe2 ? 2 : 3; }

PathSample sample_at(const CurveParam& curve, const PluckerMap& pm, const LinearPath& path, double t, const SecantOptions& opts) {
  const PointClassification c = classify_point(curve, pm, path.at(t), opts);
  PathSample s;
  s.t = t;
  s.cls = c.cls;
  s.real_lines = c.real_lines;
  s.real_meeting = c.real_meeting;
  s.total = c.evidence.total;
  if (!c.evidence.real.empty()) {
    s.min_discriminant = std::numeric_limits<double>::infinity();
    s.max_discriminant = -std::numeric_limits<double>::infinity();
    for (const auto& r : c.evidence.real) {
      s.min_discriminant = std::min(s.min_discriminant, r.discriminant);
      s.max_discriminant = std::max(s.max_discriminant, r.discriminant);
    }
  }
  return s;
}

// Rank test without the dead zone, used while bisecting.
bool strictly_le2(const CurveParam& curve, const PluckerMap& pm, const LinearPath& path, double t, const SecantOptions& opts) {
  SecantOptions strict = opts;
  strict.discriminant_tol = 0.0;
  return classify_point(curve, pm, path.at(t), strict).cls == PointClass::RealRankLe2;
}

}  // namespace

PathReport scan_path(const CurveParam& curve, const LinearPath& path, const std::vector<SurfaceFixture>& fixtures,
                     const ScanOptions& opts) {
  if (opts.samples < 2) fail(ErrorCode::InvalidArgument, "a path scan needs at least two samples");
  if (!(path.t1 > path.t0)) fail(ErrorCode::InvalidArgument, "path interval must have t0 < t1");
  const PluckerMap pm = plucker_map(curve);
  PathReport rep;
  rep.samples.resize(opts.samples);
  const double h = (path.t1 - path.t0) / static_cast<double>(opts.samples - 1);
  parallel_for(opts.samples, [&](std::size_t i) {
    const double t = i + 1 == opts.samples ? path.t1 : path.t0 + h * static_cast<double>(i);
    rep.samples[i] = sample_at(curve, pm, path, t, opts.secant);
  }, 1);

  struct FixtureRoot {
    double t;
    std::string kind;
    double residual;
    bool used = false;
  };
  std::vector<FixtureRoot> roots;
  for (const auto& f : fixtures) {
    const QPoly q = restrict_to_path(f.poly, path);
    if (q.is_zero()) continue;
    double scale = 0.0;
    for (const auto& c : q.coeffs()) scale += std::fabs(c.to_double());
    for (const auto& r : real_roots(q, path.t0, path.t1)) {
      const double v = q.evaluate(Rational::from_double(r.value)).to_double();
      roots.push_back({r.value, f.kind, std::fabs(v) / scale});
    }
  }

  for (std::size_t i = 0; i + 1 < rep.samples.size(); ++i) {
    const auto& a = rep.samples[i];
    const auto& b = rep.samples[i + 1];
    if (a.cls == b.cls) continue;
    double lo = a.t, hi = b.t;
    const bool lo_le2 = a.cls == PointClass::RealRankLe2;
    while (hi - lo > opts.bisection_width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (strictly_le2(curve, pm, path, mid, opts.secant) == lo_le2 ? lo : hi) = mid;
    }
    Transition tr;
    tr.bracket_lo = lo;
    tr.bracket_hi = hi;
    tr.t = 0.5 * (lo + hi);
    tr.rank_before = rank_of(a.cls);
    tr.rank_after = rank_of(b.cls);
    FixtureRoot* match = nullptr;
    for (auto& r : roots)
      if (!r.used && std::fabs(r.t - tr.t) <= opts.fixture_match && (!match || std::fabs(r.t - tr.t) < std::fabs(match->t - tr.t))) match = &r;
    if (match) {
      match->used = true;
      tr.t = match->t;
      tr.surface = match->kind;
      tr.surface_residual = match->residual;
      tr.kind = match->kind == "TANGENTIAL" ? TransitionKind::Tangential
              : match->kind == "EDGE"       ? TransitionKind::Edge
                                            : TransitionKind::Unlabeled;
    }
    rep.transitions.push_back(tr);
  }
  for (const auto& r : roots) {
    if (r.used) continue;
    Transition tr;
    tr.t = tr.bracket_lo = tr.bracket_hi = r.t;
    tr.kind = TransitionKind::NoRankChange;
    tr.surface = r.kind;
    tr.surface_residual = r.residual;
    const double before = std::max(path.t0, r.t - 1e-6), after = std::min(path.t1, r.t + 1e-6);
    tr.rank_before = rank_of(sample_at(curve, pm, path, before, opts.secant).cls);
    tr.rank_after = rank_of(sample_at(curve, pm, path, after, opts.secant).cls);
    rep.transitions.push_back(tr);
  }
  std::sort(rep.transitions.begin(), rep.transitions.end(), [](const Transition& x, const Transition& y) { return x.t < y.t; });

  std::vector<double> cuts{path.t0};
  for (const auto& tr : rep.transitions)
    if (tr.t > path.t0 && tr.t < path.t1) cuts.push_back(tr.t);
  cuts.push_back(path.t1);
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const PathSample s = sample_at(curve, pm, path, 0.5 * (cuts[i] + cuts[i + 1]), opts.secant);
    rep.segments.push_back({cuts[i], cuts[i + 1], s.cls, s.real_lines, s.real_meeting});
  }
  return rep;
}

}  // namespace realrank
