#include "realrank/binary_forms.hpp"

#include <cmath>
#include <functional>

#include "realrank/decompose.hpp"
#include "realrank/hyperdet.hpp"
#include "realrank/veronese.hpp"

namespace realrank {

BinaryForm BinaryForm::from_doubles(std::vector<double> x) {
  if (x.empty()) fail(ErrorCode::InvalidArgument, "a binary form needs at least one coordinate");
  BinaryForm f;
  f.d = static_cast<unsigned>(x.size() - 1);
  f.coords = std::move(x);
  return f;
}

BinaryForm BinaryForm::from_rationals(std::vector<Rational> x) {
  if (x.empty()) fail(ErrorCode::InvalidArgument, "a binary form needs at least one coordinate");
  BinaryForm f;
  f.d = static_cast<unsigned>(x.size() - 1);
  for (const auto& v : x) f.coords.push_back(v.to_double());
  f.exact = std::move(x);
  return f;
}

BinaryForm BinaryForm::from_plain(const std::vector<Rational>& c) {
  std::vector<Rational> x;
  const unsigned d = c.empty() ? 0 : static_cast<unsigned>(c.size() - 1);
  for (unsigned i = 0; i < c.size(); ++i) x.push_back(c[i] / Rational(binomial(d, i)));
  return from_rationals(std::move(x));
}

SymTensorCoords BinaryForm::sym() const { return SymTensorCoords::binary(coords); }

Matrix hankel(const BinaryForm& f) {
  if (f.d < 2) fail(ErrorCode::DegreeTooSmall, "the Hankel matrix needs d >= 2");
  Matrix h(3, f.d - 1);
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned c = 0; c + 1 < f.d; ++c) h(r, c) = f.coords[r + c];
  return h;
}

RationalMatrix hankel_exact(const BinaryForm& f) {
  if (f.d < 2) fail(ErrorCode::DegreeTooSmall, "the Hankel matrix needs d >= 2");
  if (!f.exact) fail(ErrorCode::InvalidArgument, "form has no exact coordinates");
  RationalMatrix h(3, std::vector<Rational>(f.d - 1));
  for (unsigned r = 0; r < 3; ++r)
    for (unsigned c = 0; c + 1 < f.d; ++c) h[r][c] = (*f.exact)[r + c];
  return h;
}

namespace {

std::optional<std::string> quartic_strata(const BinaryForm& f, Verdict v, const Tolerances& tol) {
  if (v == Verdict::RankAtMostOne) return "RANK_ONE";
  if (v == Verdict::BorderRankExceedsTwo) return std::nullopt;
  DecomposeOptions opts;
  opts.certify = tol;
  opts.check_certificate = false;
  try {
    const Rank2Decomposition r = decompose_rank2(sym_to_tensor(f.sym()), opts);
    switch (r.kind) {
      case DecompositionKind::ConjugatePair: return "cpx";
      case DecompositionKind::Tangential: return "+-0";
      case DecompositionKind::RealPair: {
        const double w0 = r.terms[0].weight.real(), w1 = r.terms[1].weight.real();
        return (w0 > 0) == (w1 > 0) ? "++0" : "+-0";
      }
    }
  } catch (const Error&) {
  }
  return v == Verdict::ComplexRankTwoRealRankHigher ? std::optional<std::string>("cpx") : std::optional<std::string>("+-0");
}

}  // namespace

BinaryFormVerdict classify_binary_form(const BinaryForm& f, const Tolerances& tol) {
  if (f.d < 3) fail(ErrorCode::DegreeTooSmall, "classification of binary forms needs d >= 3");
  BinaryFormVerdict out;
  out.d = f.d;
  if (!f.exact) {
    const Certificate c = certify_symmetric(f.sym(), tol);
    out.catalecticant_rank = c.flattening_ranks.at({0});
    out.hankel_rank = c.flattening_ranks.at({0, 1});
    for (const auto& e : c.hyperdet_report.values) out.d_values.push_back(e.value);
    out.zero_probe = c.zero_probe;
    out.verdict = c.verdict;
  } else {
    out.exact = true;
    const auto& x = *f.exact;
    RationalMatrix cat(2, std::vector<Rational>(f.d));
    for (unsigned r = 0; r < 2; ++r)
      for (unsigned col = 0; col < f.d; ++col) cat[r][col] = x[r + col];
    Certificate c;
    c.method = "binary-hankel";
    c.tolerances = tol;
    c.flattening_ranks[{0}] = out.catalecticant_rank = rank_exact(cat);
    c.flattening_ranks[{0, 1}] = out.hankel_rank = rank_exact(hankel_exact(f));
    c.merged_flattenings_checked = true;
    c.has_hyperdets = true;
    std::vector<Rational> dv;
    for (unsigned i = 0; i + 3 <= f.d; ++i) {
      dv.push_back(sym_discriminant_quartic(i, std::span<const Rational>(x)));
      out.d_values.push_back(dv.back().to_double());
      const int s = dv.back().sign();
      (s > 0 ? c.hyperdet_report.num_positive : s < 0 ? c.hyperdet_report.num_negative : c.hyperdet_report.num_zero)++;
    }
    out.d_exact = std::move(dv);
    c.verdict = rederive_verdict(c);
    if (c.verdict == Verdict::RealBorderRankTwoBoundary) {
      c.zero_probe = probe_zero_locus(sym_to_tensor(f.sym()), tol);
      c.verdict = rederive_verdict(c);
    }
    out.zero_probe = c.zero_probe;
    out.verdict = c.verdict;
  }
  if (f.d == 4) out.strata = quartic_strata(f, out.verdict, tol);
  return out;
}

QuinticQuadrics quintic_quadrics(const BinaryForm& f) {
  if (f.d != 5) fail(ErrorCode::WrongDegree, "the quintic test needs d = 5, got d = " + std::to_string(f.d));
  const auto& x = f.coords;
  QuinticQuadrics q;
  q.q0 = 3 * x[2] * x[2] - 4 * x[1] * x[3] + x[0] * x[4];
  q.q1 = 2 * x[2] * x[3] - 3 * x[1] * x[4] + x[0] * x[5];
  q.q2 = 3 * x[3] * x[3] - 4 * x[2] * x[4] + x[1] * x[5];
  return q;
}

bool quintic_alternative_test(const BinaryForm& f, double tol, double rank_tol) {
  const QuinticQuadrics q = quintic_quadrics(f);
  if (f.exact) {
    const auto& x = *f.exact;
    const Rational q0 = Rational(3) * x[2] * x[2] - Rational(4) * x[1] * x[3] + x[0] * x[4];
    const Rational q1 = Rational(2) * x[2] * x[3] - Rational(3) * x[1] * x[4] + x[0] * x[5];
    const Rational q2 = Rational(3) * x[3] * x[3] - Rational(4) * x[2] * x[4] + x[1] * x[5];
    return rank_exact(hankel_exact(f)) <= 2 && (q1 * q1 - Rational(4) * q0 * q2).sign() >= 0;
  }
  double scale = 0.0;
  for (double v : f.coords) scale = std::max(scale, std::fabs(v));
  return numeric_rank(hankel(f), rank_tol) <= 2 && q.discriminant() >= -tol * std::pow(1.0 + scale, 4);
}

MultiPoly hankel_poly_minor(unsigned d, const std::vector<unsigned>& rows, const std::vector<unsigned>& cols) {
  std::vector<std::string> vars;
  for (unsigned i = 0; i <= d; ++i) vars.push_back("x" + std::to_string(i));
  std::vector<std::vector<MultiPoly>> m;
  for (unsigned r : rows) {
    std::vector<MultiPoly> row;
    for (unsigned c : cols) row.push_back(MultiPoly::variable(vars[r + c], vars));
    m.push_back(std::move(row));
  }
  return determinant_bareiss(std::move(m));
}

namespace {

void choose(unsigned n, unsigned k, const std::function<void(const std::vector<unsigned>&)>& emit) {
  std::vector<unsigned> idx(k);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned start) {
    if (pos == k) {
      emit(idx);
      return;
    }
    for (unsigned v = start; v < n; ++v) {
      idx[pos] = v;
      rec(pos + 1, v + 1);
    }
  };
  rec(0, 0);
}

std::string index_label(const std::vector<unsigned>& v) {
  std::string s;
  for (unsigned i : v) s += std::to_string(i);
  return s;
}

// Distinct nonzero minors of the given size, normalized.
std::vector<LabeledPoly> minors(unsigned d, unsigned size) {
  std::vector<LabeledPoly> out;
  if (d - 1 < size) return out;
  choose(3, size, [&](const std::vector<unsigned>& rows) {
    choose(d - 1, size, [&](const std::vector<unsigned>& cols) {
      MultiPoly p = hankel_poly_minor(d, rows, cols);
      if (p.is_zero()) return;
      p = p.normalized();
      for (const auto& q : out)
        if (q.poly == p) return;
      out.push_back({"minor_r" + index_label(rows) + "_c" + index_label(cols), p});
    });
  });
  return out;
}

}  // namespace

IdealReport tau_sigma_ideal_report(unsigned d) {
  if (d < 3) fail(ErrorCode::DegreeTooSmall, "the ideal report needs d >= 3");
  IdealReport r;
  r.d = d;
  r.curve_ideal = minors(d, 2);
  r.secant_ideal = minors(d, 3);
  if (d == 3) {
    r.tangential_ideal.push_back({"D", sym_discriminant_quartic_poly(0, 3)});
  } else if (d == 4) {
    r.tangential_ideal.push_back({"detH", hankel_poly_minor(4, {0, 1, 2}, {0, 1, 2}).normalized()});
    r.tangential_ideal.push_back({"Q", quadric_basis(2, 4).at(0).polynomial});
  } else {
    for (const auto& g : quadric_basis(2, d)) r.tangential_ideal.push_back({g.tableau.label(), g.polynomial});
  }
  return r;
}

}  // namespace realrank
