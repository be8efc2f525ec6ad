#include "realrank/veronese.hpp"

#include <algorithm>
#include <functional>

#include "realrank/tensor.hpp"

namespace realrank {

namespace {

void check_shape(unsigned n, unsigned d, unsigned k) {
  if (n < 2 || d < 1 || k > d || k % 2 != 0)
    fail(ErrorCode::BadShape, "tableau shape needs n >= 2, d >= 1 and even k <= d (got n=" + std::to_string(n) +
                                  ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
}

// Weakly increasing sequences of given length with entries in [lo_i, n].
void weakly_increasing(unsigned length, unsigned n, const std::function<unsigned(std::size_t)>& lower,
                       const std::function<void(const std::vector<unsigned>&)>& emit) {
  std::vector<unsigned> seq(length);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned prev) {
    if (pos == length) {
      emit(seq);
      return;
    }
    for (unsigned v = std::max(prev, lower(pos)); v <= n; ++v) {
      seq[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 1);
}

}  // namespace

std::string TwoRowTableau::label() const {
  std::string s = "f_";
  for (unsigned v : mu) s += std::to_string(v);
  s += "_";
  for (unsigned v : nu) s += std::to_string(v);
  return s;
}

std::vector<TwoRowTableau> enumerate_tableaux(unsigned n, unsigned d, unsigned k) {
  check_shape(n, d, k);
  std::vector<TwoRowTableau> out;
  weakly_increasing(2 * d - k, n, [](std::size_t) { return 1u; }, [&](const std::vector<unsigned>& mu) {
    weakly_increasing(k, n, [&](std::size_t i) { return mu[i] + 1; }, [&](const std::vector<unsigned>& nu) {
      out.push_back(TwoRowTableau{n, d, k, mu, nu});
    });
  });
  return out;  // the recursion already yields lexicographic order
}

mpz_class hook_length_dim(unsigned n, unsigned d, unsigned k) {
  check_shape(n, d, k);
  Rational r(1);
  const long N = n, D = d, K = k;
  for (long i = 1; i <= K; ++i) r *= Rational(N - 1 + i, 2 * D + 2 - K - i);
  for (long i = K + 1; i <= 2 * D - K; ++i) r *= Rational(N - 1 + i, 2 * D + 1 - K - i);
  for (long j = 1; j <= K; ++j) r *= Rational(N - 2 + j, K + 1 - j);
  if (!r.is_integer()) fail(ErrorCode::NonIntegral, "hook length product is not an integer: " + r.to_string());
  return r.numerator();
}

mpz_class quadric_count(unsigned n, unsigned d) {
  mpz_class total = 0;
  for (unsigned k = 4; k <= d; k += 2) total += hook_length_dim(n, d, k);
  return total;
}

std::vector<std::string> parameter_variables(unsigned n) {
  std::vector<std::string> v;
  for (unsigned i = 1; i <= n; ++i) v.push_back("a" + std::to_string(i));
  for (unsigned i = 1; i <= n; ++i) v.push_back("b" + std::to_string(i));
  return v;
}

MultiPoly target_polynomial(const TwoRowTableau& t) {
  const auto vars = parameter_variables(t.n);
  auto a = [&](unsigned i) { return MultiPoly::variable(vars[i - 1], vars); };
  auto b = [&](unsigned i) { return MultiPoly::variable(vars[t.n + i - 1], vars); };
  MultiPoly prod = MultiPoly::constant(1, vars);
  for (unsigned i = 0; i < t.k; ++i) prod *= a(t.mu[i]) * b(t.nu[i]) - a(t.nu[i]) * b(t.mu[i]);
  // Split the trailing mu entries into d-k going to a and d-k going to b.
  const std::vector<unsigned> tail(t.mu.begin() + t.k, t.mu.end());
  const std::size_t half = t.d - t.k;
  MultiPoly sum(vars);
  std::vector<bool> pick(tail.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(half), true);
  // prev_permutation over a sorted-descending mask walks every subset once.
  do {
    MultiPoly term = MultiPoly::constant(1, vars);
    for (std::size_t j = 0; j < tail.size(); ++j) term *= pick[j] ? a(tail[j]) : b(tail[j]);
    sum += term;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return prod * sum;
}

MultiPoly pushforward(const MultiPoly& p, unsigned n, unsigned d) {
  const auto params = parameter_variables(n);
  const auto us = SymTensorCoords::multidegrees(n, d);
  std::vector<MultiPoly> images;
  for (const auto& u : us) {
    Exponent ea(2 * n, 0), eb(2 * n, 0);
    for (unsigned i = 0; i < n; ++i) {
      ea[i] = u[i];
      eb[n + i] = u[i];
    }
    images.push_back(MultiPoly::monomial(1, ea, params) + MultiPoly::monomial(1, eb, params));
  }
  return p.with_variables(coordinate_names(n, d)).substitute(images);
}

QuadricGenerator preimage_quadric(const TwoRowTableau& t, bool allow_k2) {
  check_shape(t.n, t.d, t.k);
  if (t.k < 2 || (t.k == 2 && !allow_k2))
    fail(ErrorCode::BadShape, "preimage quadrics are generated for k >= 4 (k = 2 needs an explicit opt-in)");
  const MultiPoly target = target_polynomial(t);
  const auto us = SymTensorCoords::multidegrees(t.n, t.d);
  const auto names = coordinate_names(t.n, t.d);
  const std::size_t m = us.size();
  // x_u x_v pushes forward to a^(u+v) + b^(u+v) + a^u b^v + a^v b^u, so the
  // bidegree (d,d) coefficients of the target fix every c_uv; the remaining
  // equations are checked below by comparing the full pushforward.
  MultiPoly q(names);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      Exponent e(2 * t.n, 0);
      for (unsigned r = 0; r < t.n; ++r) {
        e[r] = us[i][r];
        e[t.n + r] = us[j][r];
      }
      Rational c = target.coefficient(e);
      if (c.is_zero()) continue;
      if (i == j) c /= Rational(2);
      Exponent xe(m, 0);
      ++xe[i];
      ++xe[j];
      q.add_term(xe, c);
    }
  if (!(pushforward(q, t.n, t.d) == target))
    fail(ErrorCode::Inconsistent, "target polynomial of " + t.label() + " has no quadric preimage");
  return {t, q.normalized()};
}

std::vector<QuadricGenerator> quadric_basis(unsigned n, unsigned d) {
  if (d <= 3) fail(ErrorCode::DegreeTooSmall, "no quadrics vanish on the tangential variety for d <= 3");
  std::vector<QuadricGenerator> out;
  for (unsigned k = 4; k <= d; k += 2)
    for (const auto& t : enumerate_tableaux(n, d, k)) out.push_back(preimage_quadric(t));
  // Linear independence via the exact rank of the coefficient matrix.
  std::map<Exponent, std::size_t, GrlexGreater> columns;
  for (const auto& g : out)
    for (const auto& [e, c] : g.polynomial.terms()) columns.emplace(e, columns.size());
  RationalMatrix mat(out.size(), std::vector<Rational>(columns.size()));
  for (std::size_t r = 0; r < out.size(); ++r)
    for (const auto& [e, c] : out[r].polynomial.terms()) mat[r][columns.at(e)] = c;
  if (rank_exact(mat) != out.size())
    fail(ErrorCode::Internal, "generated quadrics are linearly dependent");
  return out;
}

std::vector<Rational> tangential_point(unsigned d, const std::vector<Rational>& a, const std::vector<Rational>& b) {
  if (a.size() != b.size() || a.size() < 2) fail(ErrorCode::DimensionMismatch, "linear forms need matching length >= 2");
  const unsigned n = static_cast<unsigned>(a.size());
  std::vector<Rational> x;
  for (const auto& u : SymTensorCoords::multidegrees(n, d)) {
    Rational s(0);
    for (unsigned i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      Rational term = Rational(static_cast<long>(u[i])) * b[i];
      for (unsigned j = 0; j < n; ++j) term *= pow(a[j], u[j] - (i == j ? 1 : 0));
      s += term;
    }
    x.push_back(s);
  }
  return x;
}

}  // namespace realrank
