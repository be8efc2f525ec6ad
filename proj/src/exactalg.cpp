#include "realrank/exactalg.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

namespace realrank {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ArityTooSmall: return "ArityTooSmall";
    case ErrorCode::InvalidModes: return "InvalidModes";
    case ErrorCode::InvalidSelector: return "InvalidSelector";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::NotRankTwo: return "NotRankTwo";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::ZeroTensor: return "ZeroTensor";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::DegenerateQuery: return "DegenerateQuery";
    case ErrorCode::ResultantIdenticallyZero: return "ResultantIdenticallyZero";
    case ErrorCode::RewriteFailed: return "RewriteFailed";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::WrongDegree: return "WrongDegree";
    case ErrorCode::InvalidCurve: return "InvalidCurve";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational
// ---------------------------------------------------------------------------

Rational::Rational(long long v) {
  mpz_class z;
  z = std::to_string(v);
  value_ = z;
}

Rational::Rational(long num, long den) : value_(num, den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : value_(num, den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  value_.canonicalize();
}

Rational::Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

Rational Rational::from_double(double v) {
  if (!std::isfinite(v)) fail(ErrorCode::InvalidArgument, "cannot convert non-finite double to Rational");
  Rational r;
  r.value_ = mpq_class(v);
  r.value_.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  std::string digits(s);
  if (!digits.empty() && digits[0] == '+') digits.erase(0, 1);
  if (digits.empty() || digits == "-") fail(ErrorCode::Parse, "empty integer");
  for (std::size_t i = (digits[0] == '-') ? 1 : 0; i < digits.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(digits[i]))) fail(ErrorCode::Parse, "bad integer '" + digits + "'");
  return mpz_class(digits, 10);
}

mpz_class pow10(unsigned e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) fail(ErrorCode::Parse, "empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const mpz_class num = parse_integer(text.substr(0, slash));
    const mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) fail(ErrorCode::Parse, "zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';
  std::string mantissa;
  long frac_digits = 0;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    const char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      mantissa.push_back(ch);
      if (seen_dot) ++frac_digits;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (mantissa.empty()) fail(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
  long exponent = 0;
  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') fail(ErrorCode::Parse, "bad number '" + std::string(text) + "'");
    const std::string exp_text(text.substr(pos + 1));
    try {
      std::size_t used = 0;
      exponent = std::stol(exp_text, &used);
      if (used != exp_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      fail(ErrorCode::Parse, "bad exponent in '" + std::string(text) + "'");
    }
  }
  mpz_class num(mantissa, 10);
  if (negative) num = -num;
  const long shift = exponent - frac_digits;
  if (std::labs(shift) > 100000) fail(ErrorCode::Parse, "exponent out of range");
  if (shift >= 0) return Rational(mpz_class(num * pow10(static_cast<unsigned>(shift))));
  return Rational(num, pow10(static_cast<unsigned>(-shift)));
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}
Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational pow(const Rational& base, unsigned exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), exponent);
  return Rational(num, den);
}

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// ---------------------------------------------------------------------------
// MultiPoly
// ---------------------------------------------------------------------------

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  const unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponent(p.variables_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> variables) {
  if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
  MultiPoly p(std::move(variables));
  Exponent e(p.variables_.size(), 0);
  e[*p.variable_index(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& c, Exponent exponent, std::vector<std::string> variables) {
  if (exponent.size() != variables.size()) fail(ErrorCode::InvalidArgument, "exponent length mismatch");
  MultiPoly p(std::move(variables));
  p.add_term(exponent, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](unsigned e) { return e == 0; }));
}

int MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  const Exponent& e = terms_.begin()->first;
  return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree_in(const std::string& var) const {
  if (terms_.empty()) return -1;
  const auto idx = variable_index(var);
  if (!idx) return 0;
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*idx]);
  return static_cast<int>(d);
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return static_cast<int>(std::accumulate(t.first.begin(), t.first.end(), 0u)) == d;
  });
}

std::optional<std::size_t> MultiPoly::variable_index(const std::string& var) const {
  auto it = std::find(variables_.begin(), variables_.end(), var);
  if (it == variables_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - variables_.begin());
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::pair<Exponent, Rational> MultiPoly::leading_term() const {
  if (terms_.empty()) fail(ErrorCode::InvalidArgument, "zero polynomial has no leading term");
  return *terms_.begin();
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != variables_.size()) fail(ErrorCode::InvalidArgument, "exponent length mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> out = a;
  for (const auto& v : b)
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& variables) const {
  if (variables == variables_) return *this;
  std::vector<std::optional<std::size_t>> target(variables_.size());
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    auto it = std::find(variables.begin(), variables.end(), variables_[i]);
    if (it != variables.end()) target[i] = static_cast<std::size_t>(it - variables.begin());
  }
  MultiPoly out(variables);
  for (const auto& [e, c] : terms_) {
    Exponent ne(variables.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!target[i]) fail(ErrorCode::InvalidArgument, "variable '" + variables_[i] + "' missing from target context");
      ne[*target[i]] = e[i];
    }
    out.terms_.emplace(std::move(ne), c);
  }
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.variables_ != variables_) {
    const auto vars = merge_variables(variables_, o.variables_);
    *this = with_variables(vars);
    return *this += o.with_variables(vars);
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables_ != b.variables_) {
    const auto vars = merge_variables(a.variables_, b.variables_);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  MultiPoly out(a.variables_);
  Exponent e(a.variables_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result = constant(Rational(1), variables_);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.variables_ == b.variables_) return a.terms_ == b.terms_;
  const auto vars = merge_variables(a.variables_, b.variables_);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
  const auto idx = variable_index(var);
  if (!idx) return {*this};
  std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(degree_in(var), 0)) + 1, MultiPoly(variables_));
  for (const auto& [e, c] : terms_) {
    Exponent ne = e;
    ne[*idx] = 0;
    out[e[*idx]].add_term(ne, c);
  }
  return out;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& images) const {
  if (images.size() != variables_.size()) fail(ErrorCode::InvalidArgument, "substitute: one image per variable required");
  std::vector<std::string> ctx;
  for (const auto& img : images) ctx = merge_variables(ctx, img.variables());
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(constant(Rational(1), ctx));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i].with_variables(ctx));
    return cache[k];
  };
  MultiPoly out(ctx);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c, ctx);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power_of(i, e[i]);
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_.size()) fail(ErrorCode::InvalidArgument, "evaluate: point dimension mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term *= realrank::pow(point[i], e[i]);
    acc += term;
  }
  return acc;
}

double MultiPoly::evaluate(std::span<const double> point) const {
  if (point.size() != variables_.size()) fail(ErrorCode::InvalidArgument, "evaluate: point dimension mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.to_double();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (unsigned k = 0; k < e[i]; ++k) term *= point[i];
    acc += term;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  MultiPoly out(variables_);
  const auto idx = variable_index(var);
  if (!idx) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*idx] == 0) continue;
    Exponent ne = e;
    --ne[*idx];
    out.add_term(ne, c * Rational(static_cast<long>(e[*idx])));
  }
  return out;
}

MultiPoly MultiPoly::normalized() const {
  if (terms_.empty()) return *this;
  mpz_class lcm_den = 1, gcd_num = 0;
  for (const auto& [e, c] : terms_) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.raw().get_den_mpz_t());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), c.raw().get_num_mpz_t());
  }
  Rational factor(lcm_den, gcd_num);
  if (terms_.begin()->second.sign() < 0) factor = -factor;
  MultiPoly out = *this;
  out *= factor;
  return out;
}

std::optional<Rational> MultiPoly::proportionality(const MultiPoly& other) const {
  if (is_zero() && other.is_zero()) return Rational(1);
  if (is_zero() || other.is_zero()) return std::nullopt;
  const auto vars = merge_variables(variables_, other.variables_);
  const MultiPoly a = with_variables(vars), b = other.with_variables(vars);
  const Rational ratio = a.leading_term().second / b.leading_term().second;
  if (a.leading_term().first != b.leading_term().first) return std::nullopt;
  if (!(a == b * ratio)) return std::nullopt;
  return ratio;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (first) {
      if (c.sign() < 0) out << "-";
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    out << c.abs().to_string();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      out << "*" << variables_[i];
      if (e[i] > 1) out << "^" << e[i];
    }
  }
  return out.str();
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::vector<std::string> vars) : text_(text), vars_(std::move(vars)) {}

  MultiPoly run() {
    MultiPoly p = expression();
    skip_ws();
    if (pos_ != text_.size()) error("unexpected trailing input");
    return p.with_variables(merge_variables(vars_, p.variables()));
  }

 private:
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorCode::Parse, "polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expression() {
    MultiPoly acc(vars_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    MultiPoly t = term();
    acc += negate ? -t : t;
    while (true) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc = acc * power();
      } else if (accept('/')) {
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) error("division only by nonzero constants");
        acc *= Rational(1) / d.leading_term().second;
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) error("expected integer exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) error("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expression();
      if (!accept(')')) error("expected ')'");
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -power();
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) ++pos_;
      if (pos_ + 1 < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E') &&
          (std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])) || text_[pos_ + 1] == '-' || text_[pos_ + 1] == '+')) {
        ++pos_;
        if (text_[pos_] == '-' || text_[pos_] == '+') ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      }
      return MultiPoly::constant(Rational::parse(text_.substr(start, pos_ - start)), vars_);
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      if (std::find(vars_.begin(), vars_.end(), name) == vars_.end()) vars_.push_back(name);
      return MultiPoly::variable(name, vars_);
    }
    error(std::string("unexpected character '") + ch + "'");
  }

  std::string_view text_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text, std::vector<std::string> variables) {
  return PolyParser(text, std::move(variables)).run();
}

MultiPoly poly_arith(const MultiPoly& p, const MultiPoly& q, PolyOp op) {
  return op == PolyOp::add ? p + q : p * q;
}

MultiPoly poly_div_exact(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero polynomial");
  const auto vars = merge_variables(p.variables(), q.variables());
  MultiPoly rem = p.with_variables(vars);
  const MultiPoly divisor = q.with_variables(vars);
  const auto [lead_e, lead_c] = divisor.leading_term();
  MultiPoly quotient(vars);
  while (!rem.is_zero()) {
    const auto [re, rc] = rem.leading_term();
    Exponent qe(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) {
      if (re[i] < lead_e[i]) fail(ErrorCode::NotDivisible, "polynomial is not divisible by " + q.to_string());
      qe[i] = re[i] - lead_e[i];
    }
    const MultiPoly step = MultiPoly::monomial(rc / lead_c, qe, vars);
    quotient += step;
    rem -= step * divisor;
  }
  return quotient;
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q
// ---------------------------------------------------------------------------

QPoly operator+(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
  return QPoly(std::move(c));
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  std::vector<Rational> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
  return QPoly(std::move(c));
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return QPoly(std::move(c));
}

QPoly scale(const QPoly& a, const Rational& c) {
  std::vector<Rational> out = a.coeffs();
  for (auto& v : out) v *= c;
  return QPoly(std::move(out));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {QPoly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv_lead = Rational(1) / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    const Rational f = top * inv_lead;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return scale(a, Rational(1) / a.leading());
}

QPoly gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly r = divmod(x, y).second;
    x = std::move(y);
    y = monic(r);
  }
  return monic(x);
}

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  std::vector<QPoly> out;
  if (p.degree() <= 0) return out;
  const QPoly dp = p.derivative();
  QPoly a = gcd(p, dp);
  QPoly b = divmod(p, a).first;
  QPoly c = divmod(dp, a).first;
  QPoly d = c - b.derivative();
  while (b.degree() > 0) {
    a = gcd(b, d);
    out.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return out;
}

QPoly to_univariate(const MultiPoly& p, const std::string& var) {
  std::vector<Rational> c;
  const auto idx = p.variable_index(var);
  for (const auto& [e, v] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] != 0 && (!idx || i != *idx)) fail(ErrorCode::InvalidArgument, "polynomial is not univariate in " + var);
    const unsigned k = idx ? e[*idx] : 0;
    if (c.size() <= k) c.resize(k + 1);
    c[k] += v;
  }
  return QPoly(std::move(c));
}

MultiPoly from_univariate(const QPoly& p, const std::string& var) {
  MultiPoly out({var});
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out.add_term({static_cast<unsigned>(i)}, p.coeffs()[i]);
  return out;
}

std::string to_string(const QPoly& p, const std::string& var) { return from_univariate(p, var).to_string(); }

UniPoly<Rational> exact_coefficients(const UniPoly<double>& p) {
  std::vector<Rational> c;
  c.reserve(p.coeffs().size());
  for (double v : p.coeffs()) c.push_back(Rational::from_double(v));
  return QPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Linear algebra over Q
// ---------------------------------------------------------------------------

namespace {

struct Echelon {
  RationalMatrix rows;
  std::vector<std::size_t> pivot_cols;
  int swaps = 0;
};

// Gauss-Jordan elimination restricted to the first `ncols` columns. Rows are
// reduced in place; zero multipliers are skipped, which keeps sparse systems
// (tableau preimages, Plücker rewrites) cheap.
Echelon eliminate(RationalMatrix m, std::size_t ncols, bool full_reduce) {
  Echelon out;
  std::size_t r = 0;
  const std::size_t nrows = m.size();
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t piv = nrows;
    for (std::size_t i = r; i < nrows; ++i)
      if (!m[i][c].is_zero()) {
        piv = i;
        break;
      }
    if (piv == nrows) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      ++out.swaps;
    }
    const std::size_t width = m[r].size();
    std::vector<std::size_t> nz;
    for (std::size_t j = c; j < width; ++j)
      if (!m[r][j].is_zero()) nz.push_back(j);
    if (full_reduce) {
      const Rational inv = Rational(1) / m[r][c];
      for (std::size_t j : nz) m[r][j] *= inv;
    }
    const Rational pivot = m[r][c];
    for (std::size_t i = full_reduce ? 0 : r + 1; i < nrows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Rational f = m[i][c] / pivot;
      for (std::size_t j : nz) m[i][j] -= f * m[r][j];
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rows = std::move(m);
  return out;
}

}  // namespace

LinearSolution linear_solve_exact(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) fail(ErrorCode::DimensionMismatch, "linear_solve_exact: rows of A and b differ");
  const std::size_t n = a.empty() ? 0 : a.front().size();
  RationalMatrix aug(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != n) fail(ErrorCode::DimensionMismatch, "linear_solve_exact: ragged matrix");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  Echelon e = eliminate(std::move(aug), n, true);
  const std::size_t rank = e.pivot_cols.size();
  for (std::size_t i = rank; i < e.rows.size(); ++i)
    if (!e.rows[i][n].is_zero()) fail(ErrorCode::Inconsistent, "linear system has no solution");
  LinearSolution sol;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) sol.x[e.pivot_cols[i]] = e.rows[i][n];
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[f] = Rational(1);
    for (std::size_t i = 0; i < rank; ++i) v[e.pivot_cols[i]] = -e.rows[i][f];
    sol.nullspace.push_back(std::move(v));
  }
  return sol;
}

std::size_t rank_exact(RationalMatrix a) {
  if (a.empty()) return 0;
  const std::size_t n = a.front().size();
  return eliminate(std::move(a), n, false).pivot_cols.size();
}

Rational determinant_exact(RationalMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  if (n == 0) return Rational(1);
  Echelon e = eliminate(std::move(a), n, false);
  if (e.pivot_cols.size() < n) return Rational(0);
  Rational det = (e.swaps % 2) ? Rational(-1) : Rational(1);
  for (std::size_t i = 0; i < n; ++i) det *= e.rows[i][i];
  return det;
}

MultiPoly determinant_bareiss(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  std::vector<std::string> ctx;
  for (const auto& row : m) {
    if (row.size() != n) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    for (const auto& e : row) ctx = merge_variables(ctx, e.variables());
  }
  if (n == 0) return MultiPoly::constant(Rational(1), ctx);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(Rational(1), ctx);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return MultiPoly(ctx);
      std::swap(m[k], m[swap_row]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = num.is_zero() ? MultiPoly(ctx) : poly_div_exact(num, prev);
      }
      m[i][k] = MultiPoly(ctx);
    }
    prev = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1].with_variables(merge_variables(ctx, m[n - 1][n - 1].variables()));
  return negate ? -det : det;
}

MultiPoly resultant(const MultiPoly& p, const MultiPoly& q, const std::string& var) {
  const auto ctx = merge_variables(p.variables(), q.variables());
  std::vector<std::string> out_ctx;
  for (const auto& v : ctx)
    if (v != var) out_ctx.push_back(v);
  if (p.is_zero() || q.is_zero()) return MultiPoly(out_ctx);
  const auto pc = p.with_variables(ctx).coefficients_in(var);
  const auto qc = q.with_variables(ctx).coefficients_in(var);
  const std::size_t m = pc.size() - 1, n = qc.size() - 1;
  if (m == 0 && n == 0) return MultiPoly::constant(Rational(1), out_ctx);
  if (m == 0) return pc[0].pow(static_cast<unsigned>(n)).with_variables(out_ctx);
  if (n == 0) return qc[0].pow(static_cast<unsigned>(m)).with_variables(out_ctx);
  const std::size_t size = m + n;
  std::vector<std::vector<MultiPoly>> syl(size, std::vector<MultiPoly>(size, MultiPoly(ctx)));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) syl[r][r + i] = pc[m - i];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) syl[n + r][r + j] = qc[n - j];
  return determinant_bareiss(std::move(syl)).with_variables(out_ctx);
}

// ---------------------------------------------------------------------------
// Real roots
// ---------------------------------------------------------------------------

namespace {

int sign_at(const QPoly& p, const Rational& x) { return p.evaluate(x).sign(); }

std::vector<QPoly> sturm_chain(const QPoly& p) {
  std::vector<QPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    QPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    // Only positive rescaling is allowed in a Sturm chain.
    chain.push_back(scale(r, Rational(-1) / r.leading().abs()));
  }
  return chain;
}

int sign_variations(const std::vector<QPoly>& chain, const Rational& x) {
  int variations = 0, last = 0;
  for (const auto& q : chain) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

struct Isolator {
  struct Cell {
    QPoly f;  // square-free polynomial with exactly one root in (lo, hi]
    Rational lo, hi;
  };
  std::vector<Cell> cells;
  std::vector<Rational> exact;

  void run(const QPoly& f, const Rational& lo, const Rational& hi) {
    const auto chain = sturm_chain(f);
    isolate(f, chain, lo, hi);
  }

  void isolate(const QPoly& f, const std::vector<QPoly>& chain, const Rational& lo, const Rational& hi) {
    const int count = sign_variations(chain, lo) - sign_variations(chain, hi);
    if (count <= 0) return;
    if (count == 1) {
      cells.push_back({f, lo, hi});
      return;
    }
    const Rational mid = (lo + hi) / Rational(2);
    if (sign_at(f, mid) == 0) {
      exact.push_back(mid);
      const QPoly g = divmod(f, QPoly({-mid, Rational(1)})).first;
      const auto gchain = sturm_chain(g);
      isolate(g, gchain, lo, mid);
      isolate(g, gchain, mid, hi);
      return;
    }
    isolate(f, chain, lo, mid);
    isolate(f, chain, mid, hi);
  }
};

// Bisection inside an isolating cell. Returns an exact root when one is hit.
RealRoot refine(const Isolator::Cell& cell, double tol, unsigned multiplicity) {
  Rational lo = cell.lo, hi = cell.hi;
  RealRoot root;
  root.multiplicity = multiplicity;
  if (sign_at(cell.f, hi) == 0) {
    root.value = hi.to_double();
    root.lo = root.hi = hi;
    return root;
  }
  int slo = sign_at(cell.f, lo);
  const Rational isolation_width = Rational::from_double(std::ldexp(1.0, -40));
  const Rational target = Rational::from_double(tol);
  unsigned extra_steps = 0;
  while (true) {
    const Rational width = hi - lo;
    if (width <= isolation_width) {
      if (width <= target || extra_steps >= 60) break;
      const double mid_abs = std::fabs(((lo + hi) / Rational(2)).to_double());
      if (width.to_double() <= std::ldexp(mid_abs, -55)) break;
      ++extra_steps;
    }
    const Rational mid = (lo + hi) / Rational(2);
    const int sm = sign_at(cell.f, mid);
    if (sm == 0) {
      root.value = mid.to_double();
      root.lo = root.hi = mid;
      return root;
    }
    if (sm == slo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  root.lo = lo;
  root.hi = hi;
  root.value = ((lo + hi) / Rational(2)).to_double();
  return root;
}

}  // namespace

std::size_t sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "sturm_count of the zero polynomial");
  const auto chain = sturm_chain(p);
  const int c = sign_variations(chain, lo) - sign_variations(chain, hi);
  return c > 0 ? static_cast<std::size_t>(c) : 0;
}

Rational root_bound(const QPoly& p) {
  if (p.degree() <= 0) return Rational(1);
  Rational m(0);
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, (p.coeffs()[static_cast<std::size_t>(i)] / p.leading()).abs());
  return Rational(1) + m;
}

std::vector<RealRoot> real_roots(const QPoly& p, double lo, double hi, double tol) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "real_roots of the zero polynomial");
  if (!(tol > 0)) fail(ErrorCode::InvalidArgument, "real_roots: tol must be positive");
  if (lo > hi) fail(ErrorCode::InvalidArgument, "real_roots: empty interval");
  const Rational bound = root_bound(p);
  const Rational qlo = std::isfinite(lo) ? Rational::from_double(lo) : -bound;
  const Rational qhi = std::isfinite(hi) ? Rational::from_double(hi) : bound;
  std::vector<RealRoot> out;
  const auto factors = squarefree_decomposition(p);
  for (std::size_t m = 0; m < factors.size(); ++m) {
    QPoly f = factors[m];
    if (f.degree() <= 0) continue;
    const auto mult = static_cast<unsigned>(m + 1);
    Isolator iso;
    if (sign_at(f, qlo) == 0) {
      iso.exact.push_back(qlo);
      f = divmod(f, QPoly({-qlo, Rational(1)})).first;
    }
    if (f.degree() > 0 && qlo < qhi) iso.run(f, qlo, qhi);
    for (const auto& r : iso.exact) out.push_back(RealRoot{r.to_double(), mult, r, r});
    for (const auto& cell : iso.cells) out.push_back(refine(cell, tol, mult));
  }
  std::sort(out.begin(), out.end(), [](const RealRoot& a, const RealRoot& b) { return a.lo < b.lo; });
  return out;
}

std::vector<RealRoot> real_roots(const UniPoly<double>& p, double lo, double hi, double tol) {
  return real_roots(exact_coefficients(p), lo, hi, tol);
}

}  // namespace realrank
