#include "realrank/decompose.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <random>

#include "realrank/linalg.hpp"

namespace realrank {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Outer product of complex factors, row-major.
CVector outer(const std::vector<CVector>& factors) {
  CVector acc{cplx(1.0, 0.0)};
  for (const auto& f : factors) {
    CVector next;
    next.reserve(acc.size() * f.size());
    for (const cplx& a : acc)
      for (const cplx& b : f) next.push_back(a * b);
    acc = std::move(next);
  }
  return acc;
}

CVector to_complex(const std::vector<double>& v) { return CVector(v.begin(), v.end()); }

double cnorm(const CVector& v) {
  double s = 0.0;
  for (const cplx& z : v) s += std::norm(z);
  return std::sqrt(s);
}

// Unit norm with the largest-magnitude entry real and positive; returns the
// scalar that was divided out.
cplx normalize_phase(CVector& v) {
  const double n = cnorm(v);
  if (n == 0.0) return cplx(0.0, 0.0);
  std::size_t j = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (std::abs(v[i]) > std::abs(v[j]) * (1.0 + 1e-12)) j = i;
  const cplx scale = n * v[j] / std::abs(v[j]);
  for (cplx& z : v) z /= scale;
  return scale;
}

CVector lift(const Matrix& u, const CVector& x) {
  CVector out(u.rows(), cplx(0.0, 0.0));
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) out[i] += u(i, j) * x[j];
  return out;
}

// t ×_mode m, where m has shape new_dim × old_dim.
Tensor mode_product(const Tensor& t, std::size_t mode, const Matrix& m) {
  std::vector<std::size_t> dims = t.shape().dims();
  if (m.cols() != dims[mode]) fail(ErrorCode::DimensionMismatch, "mode product dimension mismatch");
  if (t.order() == 1) return Tensor(Shape({m.rows()}), m * t.entries());
  const Matrix f = flatten(t, {mode});
  dims[mode] = m.rows();
  return unflatten(m * f, Shape(dims), {mode});
}

// Factors of a rank-one complex tensor by reading the fibres through its
// largest entry: Z = λ·⊗ f_m with f_m the fibre along mode m.
std::pair<std::vector<CVector>, cplx> rank_one_factors(const CVector& z, const std::vector<std::size_t>& dims) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < z.size(); ++i)
    if (std::abs(z[i]) > std::abs(z[best])) best = i;
  const Tensor probe{Shape(dims)};
  const Index pivot = probe.multi_index(best);
  std::vector<CVector> factors;
  for (std::size_t m = 0; m < dims.size(); ++m) {
    CVector f(dims[m]);
    Index idx = pivot;
    for (std::size_t j = 0; j < dims[m]; ++j) {
      idx[m] = j;
      f[j] = z[probe.flat_index(idx)];
    }
    factors.push_back(std::move(f));
  }
  const cplx lambda = std::pow(z[best], 1.0 - static_cast<double>(dims.size()));
  return {std::move(factors), lambda};
}

struct PencilRoots {
  std::array<std::array<cplx, 2>, 2> phi{};  // projective roots of det(φ0 M0 + φ1 M1)
  bool real = true;
  double gap = 0.0;
  double discriminant = 0.0;
};

Matrix slice3(const Tensor& c, std::size_t k) {
  Matrix m(2, 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) m(i, j) = c.at({i, j, k});
  return m;
}

double det2(const Matrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

PencilRoots pencil_roots(const Tensor& c) {
  const Matrix m0 = slice3(c, 0), m1 = slice3(c, 1);
  auto combo = [&](double a, double b) {
    Matrix n(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) n(i, j) = a * m0(i, j) + b * m1(i, j);
    return n;
  };
  // Rotate the slice pair so the leading slice is as far from singular as possible.
  double theta = 0.0, best = -1.0;
  for (int k = 0; k < 8; ++k) {
    const double th = kPi * k / 8.0;
    const double v = std::fabs(det2(combo(std::cos(th), std::sin(th))));
    if (v > best) {
      best = v;
      theta = th;
    }
  }
  const double ct = std::cos(theta), st = std::sin(theta);
  const Matrix n0 = combo(ct, st), n1 = combo(-st, ct);
  const double alpha = det2(n0), gamma = det2(n1);
  const double beta = n0(0, 0) * n1(1, 1) + n1(0, 0) * n0(1, 1) - n0(0, 1) * n1(1, 0) - n1(0, 1) * n0(1, 0);
  const double scale = std::fabs(alpha) + std::fabs(beta) + std::fabs(gamma);
  if (scale < 1e-14 || std::fabs(alpha) < 1e-14) fail(ErrorCode::IllConditioned, "slice pencil is singular");
  PencilRoots r;
  const double disc = beta * beta - 4.0 * alpha * gamma;
  r.discriminant = disc / (scale * scale);
  std::array<cplx, 2> z;
  if (disc >= 0.0) {
    const double sq = std::sqrt(disc);
    const double qq = -0.5 * (beta + std::copysign(sq, beta));
    z[0] = qq / alpha;
    z[1] = qq != 0.0 ? gamma / qq : z[0];
  } else {
    r.real = false;
    const double sq = std::sqrt(-disc);
    z[0] = cplx(-beta, sq) / (2.0 * alpha);
    z[1] = std::conj(z[0]);
  }
  for (std::size_t k = 0; k < 2; ++k) {
    std::array<cplx, 2> phi{z[k] * ct - st, z[k] * st + ct};
    const double n = std::sqrt(std::norm(phi[0]) + std::norm(phi[1]));
    r.phi[k] = {phi[0] / n, phi[1] / n};
  }
  r.gap = std::abs(z[0] - z[1]) / std::sqrt((1.0 + std::norm(z[0])) * (1.0 + std::norm(z[1])));
  return r;
}

std::array<CVector, 2> complex_pencil_rank_one(const Tensor& c, const std::array<cplx, 2>& phi) {
  std::array<std::array<cplx, 2>, 2> n{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) n[i][j] = phi[0] * c.at({i, j, 0}) + phi[1] * c.at({i, j, 1});
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      if (std::abs(n[i][j]) > std::abs(n[bi][bj])) {
        bi = i;
        bj = j;
      }
  return {CVector{n[0][bj], n[1][bj]}, CVector{n[bi][0], n[bi][1]}};
}

// Compressed problem: all modes have dimension 2.
struct CoreResult {
  DecompositionKind kind = DecompositionKind::RealPair;
  std::vector<RankOneTerm> terms;  // factors in compressed coordinates, unnormalized
  std::vector<std::vector<double>> tx, ty;
  double gap = 1.0;
  double discriminant = 0.0;
};

// Groups modes as (a | b | rest) and compresses the rest to dimension 2.
struct Grouping {
  Tensor core;  // 2×2×2
  Matrix w;     // 2^{|rest|} × 2 basis of the grouped mode
  std::vector<std::size_t> perm;
};

Grouping group_modes(const Tensor& g, std::size_t a, const std::vector<std::size_t>& middle, const std::vector<std::size_t>& last,
                     bool compress_last) {
  std::vector<std::size_t> perm{a};
  perm.insert(perm.end(), middle.begin(), middle.end());
  perm.insert(perm.end(), last.begin(), last.end());
  const Tensor p = g.permuted(perm);
  const std::size_t mid_dim = std::size_t{1} << middle.size(), last_dim = std::size_t{1} << last.size();
  const Tensor c0(Shape({2, mid_dim, last_dim}), p.entries());
  const std::size_t grouped = compress_last ? 2 : 1;
  const Svd s = svd(flatten(c0, {grouped}));
  Matrix w(s.u.rows(), 2);
  for (std::size_t i = 0; i < s.u.rows(); ++i)
    for (std::size_t k = 0; k < std::min<std::size_t>(2, s.u.cols()); ++k) w(i, k) = s.u(i, k);
  return {mode_product(c0, grouped, w.transpose()), w, perm};
}

CoreResult decompose_core(const Tensor& g, double tangential_gap) {
  const std::size_t r = g.order();
  CoreResult out;
  if (r == 2) {
    const Svd s = svd(flatten(g, {0}));
    for (std::size_t k = 0; k < 2; ++k) {
      RankOneTerm t;
      t.factors = {to_complex(s.u.column(k)), to_complex(s.v.column(k))};
      t.weight = s.s[k];
      out.terms.push_back(std::move(t));
    }
    return out;
  }
  // The two modes with the largest second singular value carry the pencil.
  std::vector<double> sigma2(r);
  for (std::size_t m = 0; m < r; ++m) sigma2[m] = singular_values(flatten(g, {m}))[1];
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma2[x] > sigma2[y]; });
  const std::size_t p = std::min(order[0], order[1]), q = std::max(order[0], order[1]);
  std::vector<std::size_t> rest;
  for (std::size_t m = 0; m < r; ++m)
    if (m != p && m != q) rest.push_back(m);
  const Grouping gr = group_modes(g, p, {q}, rest, true);
  const PencilRoots roots = pencil_roots(gr.core);
  out.gap = roots.gap;
  out.discriminant = roots.discriminant;

  if (roots.gap < tangential_gap) {
    out.kind = DecompositionKind::Tangential;
    out.tx.resize(r);
    for (std::size_t m = 0; m < r; ++m) {
      std::vector<std::size_t> others;
      for (std::size_t k = 0; k < r; ++k)
        if (k != m) others.push_back(k);
      const std::vector<std::size_t> middle(others.begin() + 1, others.end());
      const Grouping gm = group_modes(g, others[0], middle, {m}, false);
      const PencilRoots rm = pencil_roots(gm.core);
      std::array<double, 2> phi{0.5 * (rm.phi[0][0].real() + rm.phi[1][0].real() * (rm.phi[0][0].real() * rm.phi[1][0].real() + rm.phi[0][1].real() * rm.phi[1][1].real() < 0 ? -1.0 : 1.0)),
                                0.5 * (rm.phi[0][1].real() + rm.phi[1][1].real() * (rm.phi[0][0].real() * rm.phi[1][0].real() + rm.phi[0][1].real() * rm.phi[1][1].real() < 0 ? -1.0 : 1.0))};
      const double n = std::hypot(phi[0], phi[1]);
      out.tx[m] = {-phi[1] / n, phi[0] / n};
    }
    Matrix a(g.size(), 2 * r);
    for (std::size_t m = 0; m < r; ++m)
      for (std::size_t j = 0; j < 2; ++j) {
        auto factors = out.tx;
        factors[m] = {j == 0 ? 1.0 : 0.0, j == 1 ? 1.0 : 0.0};
        const Tensor col = Tensor::rank_one(factors);
        for (std::size_t i = 0; i < g.size(); ++i) a(i, 2 * m + j) = col[i];
      }
    const std::vector<double> y = least_squares(a, g.entries());
    out.ty.resize(r);
    for (std::size_t m = 0; m < r; ++m) out.ty[m] = {y[2 * m], y[2 * m + 1]};
    return out;
  }

  std::vector<std::array<CVector, 3>> core_terms;  // (mode p, mode q, grouped)
  if (roots.real) {
    out.kind = DecompositionKind::RealPair;
    for (std::size_t k = 0; k < 2; ++k) {
      const auto& other = roots.phi[1 - k];
      const double o0 = other[0].real(), o1 = other[1].real();
      Matrix n(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) n(i, j) = o0 * gr.core.at({i, j, 0}) + o1 * gr.core.at({i, j, 1});
      const Svd s = svd(n);
      const CVector c{-roots.phi[k][1].real(), roots.phi[k][0].real()};
      core_terms.push_back({to_complex(s.u.column(0)), to_complex(s.v.column(0)), c});
    }
    Matrix ls(8, 2);
    for (std::size_t k = 0; k < 2; ++k) {
      const CVector e = outer({core_terms[k][0], core_terms[k][1], core_terms[k][2]});
      for (std::size_t i = 0; i < 8; ++i) ls(i, k) = e[i].real();
    }
    const auto w = least_squares(ls, gr.core.entries());
    for (std::size_t k = 0; k < 2; ++k) {
      RankOneTerm t;
      t.weight = w[k];
      t.factors = {core_terms[k][0], core_terms[k][1], core_terms[k][2]};
      out.terms.push_back(std::move(t));
    }
  } else {
    out.kind = DecompositionKind::ConjugatePair;
    // The pencil matrix at root φ kills one term and leaves the conjugate one.
    const auto [col, row] = complex_pencil_rank_one(gr.core, roots.phi[0]);
    CVector a(2), b(2);
    for (std::size_t i = 0; i < 2; ++i) {
      a[i] = std::conj(col[i]);
      b[i] = std::conj(row[i]);
    }
    const CVector c{-roots.phi[0][1], roots.phi[0][0]};
    const CVector e = outer({a, b, c});
    Matrix ls(8, 2);
    for (std::size_t i = 0; i < 8; ++i) {
      ls(i, 0) = 2.0 * e[i].real();
      ls(i, 1) = -2.0 * e[i].imag();
    }
    const auto w = least_squares(ls, gr.core.entries());
    RankOneTerm t;
    t.weight = cplx(w[0], w[1]);
    t.factors = {a, b, c};
    out.terms.push_back(std::move(t));
  }

  // Split the grouped factor back into one factor per remaining mode.
  for (auto& t : out.terms) {
    const CVector grouped = lift(gr.w, t.factors[2]);
    const auto [rest_factors, lambda] = rank_one_factors(grouped, std::vector<std::size_t>(rest.size(), 2));
    std::vector<CVector> factors(r);
    factors[p] = t.factors[0];
    factors[q] = t.factors[1];
    for (std::size_t k = 0; k < rest.size(); ++k) factors[rest[k]] = rest_factors[k];
    t.factors = std::move(factors);
    t.weight *= lambda;
  }
  return out;
}

std::vector<double> real_part(const CVector& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].real();
  return out;
}

}  // namespace

bool RankOneTerm::is_real(double tol) const {
  if (std::fabs(weight.imag()) > tol * std::max(1.0, std::abs(weight))) return false;
  for (const auto& f : factors)
    for (const cplx& z : f)
      if (std::fabs(z.imag()) > tol) return false;
  return true;
}

std::vector<std::vector<double>> RankOneTerm::real_factors() const {
  std::vector<std::vector<double>> out;
  for (const auto& f : factors) out.push_back(real_part(f));
  return out;
}

Tensor RankOneTerm::expand_real(const Shape& shape) const {
  const CVector e = outer(factors);
  std::vector<double> v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) v[i] = (weight * e[i]).real();
  return Tensor(shape, std::move(v));
}

Tensor RankOneTerm::expand_imag(const Shape& shape) const {
  const CVector e = outer(factors);
  std::vector<double> v(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) v[i] = (weight * e[i]).imag();
  return Tensor(shape, std::move(v));
}

const char* decomposition_kind_name(DecompositionKind k) {
  switch (k) {
    case DecompositionKind::RealPair: return "REAL_PAIR";
    case DecompositionKind::ConjugatePair: return "CONJUGATE_PAIR";
    case DecompositionKind::Tangential: return "TANGENTIAL";
  }
  return "UNKNOWN";
}

Tensor Rank2Decomposition::reconstruct() const {
  switch (kind) {
    case DecompositionKind::RealPair: {
      Tensor t{shape};
      for (const auto& term : terms) t += term.expand_real(shape);
      return t;
    }
    case DecompositionKind::ConjugatePair: return 2.0 * terms.at(0).expand_real(shape);
    case DecompositionKind::Tangential: return tangential_witness(tangent_x, tangent_y);
  }
  return Tensor{shape};
}

Rank2Decomposition decompose_rank2(const Tensor& t, const DecomposeOptions& opts) {
  if (opts.check_certificate && t.order() >= 3) {
    const Certificate c = certify_border_rank2(t, opts.certify);
    if (c.verdict == Verdict::RankAtMostOne || c.verdict == Verdict::BorderRankExceedsTwo)
      fail(ErrorCode::NotRankTwo, std::string("tensor is not of rank two: certificate verdict ") + verdict_name(c.verdict));
  }
  const double norm = t.norm();
  if (norm == 0.0) fail(ErrorCode::NotRankTwo, "zero tensor has no rank-two decomposition");
  Tensor u = t;
  u *= 1.0 / norm;

  const std::size_t d = u.order();
  std::vector<Matrix> bases(d);
  std::vector<std::size_t> two_modes;
  Tensor core = u;
  for (std::size_t m = 0; m < d; ++m) {
    const Matrix f = d == 1 ? Matrix(u.size(), 1, u.entries()) : flatten(u, {m});
    const Svd s = svd(f);
    const std::size_t rank = numeric_rank(f, opts.certify.rank);
    if (rank > 2) fail(ErrorCode::NotRankTwo, "mode " + std::to_string(m + 1) + " flattening has rank above two");
    Matrix b(f.rows(), std::max<std::size_t>(rank, 1));
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t k = 0; k < b.cols(); ++k) b(i, k) = s.u(i, k);
    bases[m] = b;
    if (rank == 2) two_modes.push_back(m);
    core = mode_product(core, m, b.transpose());
  }
  if (two_modes.size() < 2) fail(ErrorCode::NotRankTwo, "tensor has rank at most one");
  const Tensor g(Shape(std::vector<std::size_t>(two_modes.size(), 2)), core.entries());
  const CoreResult cr = decompose_core(g, opts.tangential_gap);

  Rank2Decomposition out;
  out.kind = cr.kind;
  out.shape = t.shape();
  out.pencil_gap = cr.gap;
  out.pencil_discriminant = cr.discriminant;

  auto slot = [&](std::size_t m) -> std::ptrdiff_t {
    auto it = std::find(two_modes.begin(), two_modes.end(), m);
    return it == two_modes.end() ? -1 : it - two_modes.begin();
  };

  if (cr.kind == DecompositionKind::Tangential) {
    for (std::size_t m = 0; m < d; ++m) {
      const std::ptrdiff_t s = slot(m);
      if (s < 0) {
        out.tangent_x.push_back(bases[m].column(0));
        out.tangent_y.push_back(std::vector<double>(bases[m].rows(), 0.0));
      } else {
        out.tangent_x.push_back(bases[m] * cr.tx[static_cast<std::size_t>(s)]);
        out.tangent_y.push_back(bases[m] * cr.ty[static_cast<std::size_t>(s)]);
      }
    }
    for (double& v : out.tangent_x[0]) v *= norm;
    for (double& v : out.tangent_y[0]) v *= norm;
  } else {
    for (const auto& ct : cr.terms) {
      RankOneTerm term;
      term.weight = ct.weight;
      for (std::size_t m = 0; m < d; ++m) {
        const std::ptrdiff_t s = slot(m);
        CVector f = s < 0 ? to_complex(bases[m].column(0)) : lift(bases[m], ct.factors[static_cast<std::size_t>(s)]);
        term.weight *= normalize_phase(f);
        term.factors.push_back(std::move(f));
      }
      if (out.kind == DecompositionKind::RealPair) {
        for (auto& f : term.factors)
          for (cplx& z : f) z = cplx(z.real(), 0.0);
        term.weight = cplx(term.weight.real(), 0.0);
      }
      out.terms.push_back(std::move(term));
    }
    // Weights refitted against the original tensor.
    Matrix ls(t.size(), 2);
    if (out.kind == DecompositionKind::RealPair) {
      for (std::size_t k = 0; k < 2; ++k) {
        RankOneTerm unit = out.terms[k];
        unit.weight = 1.0;
        const Tensor e = unit.expand_real(t.shape());
        for (std::size_t i = 0; i < t.size(); ++i) ls(i, k) = e[i];
      }
      const auto w = least_squares(ls, t.entries());
      out.terms[0].weight = w[0];
      out.terms[1].weight = w[1];
    } else {
      RankOneTerm unit = out.terms[0];
      unit.weight = 1.0;
      const Tensor re = unit.expand_real(t.shape()), im = unit.expand_imag(t.shape());
      for (std::size_t i = 0; i < t.size(); ++i) {
        ls(i, 0) = 2.0 * re[i];
        ls(i, 1) = -2.0 * im[i];
      }
      const auto w = least_squares(ls, t.entries());
      out.terms[0].weight = cplx(w[0], w[1]);
    }
  }
  out.residual = (t - out.reconstruct()).norm() / norm;
  return out;
}

// ---------------------------------------------------------------------------
// Best rank-one approximation
// ---------------------------------------------------------------------------

namespace {

std::vector<double> contract_except(const Tensor& u, const std::vector<std::vector<double>>& x, std::size_t k) {
  std::vector<double> out(u.shape()[k], 0.0);
  for (std::size_t flat = 0; flat < u.size(); ++flat) {
    if (u[flat] == 0.0) continue;
    const Index idx = u.multi_index(flat);
    double w = u[flat];
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != k) w *= x[j][idx[j]];
    out[idx[k]] += w;
  }
  return out;
}

}  // namespace

double optimal_scale(const Tensor& u, const Tensor& x) {
  const double xx = x.inner(x);
  if (xx == 0.0) fail(ErrorCode::ZeroTensor, "direction must be nonzero");
  return u.inner(x) / xx;
}

double projection_distance_sq(const Tensor& u, const Tensor& x) {
  const double xx = x.inner(x);
  if (xx == 0.0) fail(ErrorCode::ZeroTensor, "direction must be nonzero");
  const double ux = u.inner(x);
  return u.inner(u) - ux * ux / xx;
}

BestRankOne best_rank_one(const Tensor& u, std::size_t max_iters, double tol) {
  const double un = u.norm();
  if (un == 0.0) fail(ErrorCode::ZeroTensor, "best rank-one approximation of the zero tensor");
  const std::size_t d = u.order();
  std::vector<std::vector<double>> x(d);
  for (std::size_t m = 0; m < d; ++m) {
    if (d == 1) {
      x[m] = u.entries();
    } else {
      x[m] = svd(flatten(u, {m})).u.column(0);
    }
    const double n = norm2(x[m]);
    for (double& v : x[m]) v /= n;
  }
  auto lambda_of = [&] { return dot(contract_except(u, x, 0), x[0]); };
  auto dist_of = [&](double lambda) { return std::sqrt(std::max(0.0, un * un - lambda * lambda)); };
  BestRankOne r;
  double lambda = lambda_of();
  r.history.push_back(dist_of(lambda));
  for (std::size_t it = 0; it < max_iters; ++it) {
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<double> v = contract_except(u, x, k);
      const double n = norm2(v);
      if (n == 0.0) continue;
      for (double& e : v) e /= n;
      x[k] = std::move(v);
    }
    lambda = lambda_of();
    r.history.push_back(dist_of(lambda));
    r.iterations = it + 1;
    if (std::fabs(r.history[r.history.size() - 2] - r.history.back()) <= tol * un) break;
  }
  for (auto& f : x) r.term.factors.push_back(to_complex(f));
  r.term.weight = lambda;
  const Tensor approx = Tensor::rank_one(x, lambda);
  r.distance = (u - approx).norm();
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<double> g = contract_except(u, x, k);
    for (std::size_t i = 0; i < g.size(); ++i) g[i] -= lambda * x[k][i];
    r.stationarity = std::max(r.stationarity, norm2(g) / un);
  }
  return r;
}

std::pair<Tensor, Tensor> tangential_sequences(const std::vector<std::vector<double>>& xs,
                                               const std::vector<std::vector<double>>& ys, double eps) {
  const Tensor base = tangential_witness(xs, ys);  // validates dimensions
  if (eps == 0.0) return {base, base};
  std::vector<std::vector<double>> shifted = xs;
  std::vector<CVector> cshift;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    CVector c(xs[k].size());
    for (std::size_t i = 0; i < xs[k].size(); ++i) {
      shifted[k][i] += eps * ys[k][i];
      c[i] = cplx(xs[k][i], eps * ys[k][i]);
    }
    cshift.push_back(std::move(c));
  }
  Tensor a = Tensor::rank_one(shifted) - Tensor::rank_one(xs);
  a *= 1.0 / eps;
  const CVector z = outer(cshift);
  std::vector<double> im(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) im[i] = z[i].imag() / eps;
  return {a, Tensor(base.shape(), std::move(im))};
}

Rank2Fit rank2_als_fit(const Tensor& u, std::uint64_t seed, int sweeps, int restarts) {
  const std::size_t d = u.order();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Rank2Fit best;
  best.distance = std::numeric_limits<double>::infinity();
  std::vector<Matrix> flats(d);
  for (std::size_t m = 0; m < d; ++m) flats[m] = d == 1 ? Matrix(u.size(), 1, u.entries()) : flatten(u, {m});
  for (int restart = 0; restart < std::max(restarts, 1); ++restart) {
    // a[m] is n_m × 2, column r the mode-m factor of term r.
    std::vector<Matrix> a(d);
    for (std::size_t m = 0; m < d; ++m) {
      a[m] = Matrix(u.shape()[m], 2);
      for (std::size_t i = 0; i < a[m].rows(); ++i)
        for (std::size_t r = 0; r < 2; ++r) a[m](i, r) = normal(rng);
    }
    for (int sweep = 0; sweep < sweeps; ++sweep) {
      for (std::size_t m = 0; m < d; ++m) {
        // Khatri-Rao product of the other factors in flattening column order.
        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < d; ++j)
          if (j != m) others.push_back(j);
        Matrix z(flats[m].cols(), 2);
        for (std::size_t r = 0; r < 2; ++r) {
          std::vector<std::vector<double>> fs;
          for (std::size_t j : others) fs.push_back(a[j].column(r));
          const Tensor kr = Tensor::rank_one(fs);
          for (std::size_t i = 0; i < z.rows(); ++i) z(i, r) = kr[i];
        }
        for (std::size_t i = 0; i < a[m].rows(); ++i) {
          const auto row = least_squares(z, flats[m].row(i), 1e-14);
          a[m](i, 0) = row[0];
          a[m](i, 1) = row[1];
        }
      }
      // Balance the factor norms of each term across modes.
      for (std::size_t r = 0; r < 2; ++r) {
        double logsum = 0.0;
        std::vector<double> norms(d);
        for (std::size_t m = 0; m < d; ++m) {
          norms[m] = norm2(a[m].column(r));
          logsum += std::log(std::max(norms[m], 1e-300));
        }
        const double target = std::exp(logsum / static_cast<double>(d));
        for (std::size_t m = 0; m < d; ++m) {
          if (norms[m] == 0.0) continue;
          for (std::size_t i = 0; i < a[m].rows(); ++i) a[m](i, r) *= target / norms[m];
        }
      }
    }
    Tensor approx{u.shape()};
    std::vector<std::vector<std::vector<double>>> factors(2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t m = 0; m < d; ++m) factors[r].push_back(a[m].column(r));
      approx += Tensor::rank_one(factors[r]);
    }
    const double dist = (u - approx).norm();
    if (dist < best.distance) {
      best.distance = dist;
      best.approximation = approx;
      best.factors = factors;
      best.weights = {1.0, 1.0};
    }
  }
  return best;
}

}  // namespace realrank
