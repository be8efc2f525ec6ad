#pragma once

// Quadrics in the ideal of the tangential variety of a Veronese variety,
// indexed by two-row semistandard tableaux.

#include <string>
#include <vector>

#include "realrank/exactalg.hpp"

namespace realrank {

// Shape (2d-k, k); entries in 1..n.
struct TwoRowTableau {
  unsigned n = 0, d = 0, k = 0;
  std::vector<unsigned> mu, nu;

  std::string label() const;  // f_1112_2333
  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;
};

struct QuadricGenerator {
  TwoRowTableau tableau;
  MultiPoly polynomial;  // in the variables coordinate_names(n, d)
};

// Lexicographic in (mu, nu). Throws BadShape unless n >= 2, d >= 1, k even, k <= d.
std::vector<TwoRowTableau> enumerate_tableaux(unsigned n, unsigned d, unsigned k);
mpz_class hook_length_dim(unsigned n, unsigned d, unsigned k);
// Sum over even k from 4 to d: the number of independent quadrics.
mpz_class quadric_count(unsigned n, unsigned d);

std::vector<std::string> parameter_variables(unsigned n);  // a1..an, b1..bn
MultiPoly target_polynomial(const TwoRowTableau& t);
// Substitutes x_u -> a^u + b^u.
MultiPoly pushforward(const MultiPoly& p, unsigned n, unsigned d);

// Unique quadric whose pushforward is the target polynomial. k = 2 is only
// accepted with allow_k2 (such quadrics do not vanish on the tangential variety).
QuadricGenerator preimage_quadric(const TwoRowTableau& t, bool allow_k2 = false);
// Throws DegreeTooSmall for d <= 3.
std::vector<QuadricGenerator> quadric_basis(unsigned n, unsigned d);

// Coordinates x_u of l1^(d-1) * l2 with l1 = a.t, l2 = b.t (up to the factor d).
std::vector<Rational> tangential_point(unsigned d, const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace realrank
