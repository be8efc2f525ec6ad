#pragma once

// Reference computations that share no code with the library: plain GMP
// rationals, brute-force enumeration and textbook formulas.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using QMat = std::vector<std::vector<mpq_class>>;

// Cayley's hyperdeterminant as the discriminant of λ ↦ det(A0 + λ A1),
// slices taken along the first index.
template <typename T>
T pencil_hyperdet(const std::array<T, 8>& x) {
  const T det0 = x[0] * x[3] - x[1] * x[2];
  const T det1 = x[4] * x[7] - x[5] * x[6];
  const T mixed = x[0] * x[7] + x[3] * x[4] - x[1] * x[6] - x[2] * x[5];
  return mixed * mixed - T(4) * det0 * det1;
}

inline std::size_t rank(QMat m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; fine up to 6×6.
inline mpq_class det(const QMat& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpq_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    mpq_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Semistandard tableaux of shape (a, b), a >= b, entries 1..n, counted column
// by column: the state is the (top, bottom) pair of the last full column,
// then the last top entry of the single-row tail.
inline mpz_class ssyt_two_row(unsigned n, unsigned a, unsigned b) {
  std::vector<std::vector<mpz_class>> pair(n + 2, std::vector<mpz_class>(n + 2, 0));
  for (unsigned t = 1; t <= n; ++t)
    for (unsigned u = t + 1; u <= n; ++u) pair[t][u] = b > 0 ? 1 : 0;
  for (unsigned col = 1; col < b; ++col) {
    std::vector<std::vector<mpz_class>> next(n + 2, std::vector<mpz_class>(n + 2, 0));
    for (unsigned t = 1; t <= n; ++t)
      for (unsigned u = t + 1; u <= n; ++u)
        for (unsigned t2 = t; t2 <= n; ++t2)
          for (unsigned u2 = std::max(u, t2 + 1); u2 <= n; ++u2) next[t2][u2] += pair[t][u];
    pair = std::move(next);
  }
  std::vector<mpz_class> top(n + 2, 0);
  if (b == 0) {
    if (a == 0) return 1;
    for (unsigned t = 1; t <= n; ++t) top[t] = 1;
  } else {
    for (unsigned t = 1; t <= n; ++t)
      for (unsigned u = 1; u <= n; ++u) top[t] += pair[t][u];
  }
  const unsigned tail = b == 0 ? a - 1 : a - b;
  for (unsigned col = 0; col < tail; ++col) {
    std::vector<mpz_class> next(n + 2, 0);
    for (unsigned t = 1; t <= n; ++t)
      for (unsigned t2 = t; t2 <= n; ++t2) next[t2] += top[t];
    top = std::move(next);
  }
  mpz_class total = 0;
  for (unsigned t = 1; t <= n; ++t) total += top[t];
  return total;
}

inline mpz_class binom(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline std::vector<double> normal_vector(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g;
  std::vector<double> v(n);
  for (auto& x : v) x = g(rng);
  return v;
}

inline long small_int(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

// Row-major outer product of the factors, times w.
inline std::vector<double> outer(const std::vector<std::vector<double>>& f, double w = 1.0) {
  std::vector<double> out{w};
  for (const auto& v : f) {
    std::vector<double> next;
    next.reserve(out.size() * v.size());
    for (double a : out)
      for (double b : v) next.push_back(a * b);
    out = std::move(next);
  }
  return out;
}

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::max({1.0, std::fabs(a), std::fabs(b)}); }

}  // namespace oracle
