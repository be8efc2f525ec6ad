#include "realrank/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "realrank/errors.hpp"

namespace realrank {

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) fail(ErrorCode::BadShape, "shape must have at least one mode");
  for (std::size_t n : dims_)
    if (n == 0) fail(ErrorCode::BadShape, "shape dimensions must be positive");
}

std::size_t Shape::num_entries() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::string Shape::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < dims_.size(); ++i) out << (i ? "x" : "") << dims_[i];
  return out.str();
}

Tensor::Tensor(Shape shape) : shape_(std::move(shape)), entries_(shape_.num_entries(), 0.0) {}

Tensor::Tensor(Shape shape, std::vector<double> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
  if (entries_.size() != shape_.num_entries())
    fail(ErrorCode::ShapeMismatch, "tensor of shape " + shape_.to_string() + " needs " +
                                       std::to_string(shape_.num_entries()) + " entries, got " +
                                       std::to_string(entries_.size()));
}

Tensor Tensor::rank_one(const std::vector<std::vector<double>>& factors, double weight) {
  std::vector<std::size_t> dims;
  for (const auto& f : factors) dims.push_back(f.size());
  Tensor t{Shape(dims)};
  std::vector<double> acc{weight};
  for (const auto& f : factors) {
    std::vector<double> next;
    next.reserve(acc.size() * f.size());
    for (double a : acc)
      for (double b : f) next.push_back(a * b);
    acc = std::move(next);
  }
  t.entries_ = std::move(acc);
  return t;
}

std::size_t Tensor::flat_index(const Index& idx) const {
  if (idx.size() != order()) fail(ErrorCode::IndexOutOfRange, "index arity does not match tensor order");
  std::size_t flat = 0;
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (idx[m] >= shape_[m]) fail(ErrorCode::IndexOutOfRange, "tensor index out of range");
    flat = flat * shape_[m] + idx[m];
  }
  return flat;
}

Index Tensor::multi_index(std::size_t flat) const {
  Index idx(order());
  for (std::size_t m = order(); m-- > 0;) {
    idx[m] = flat % shape_[m];
    flat /= shape_[m];
  }
  return idx;
}

double Tensor::norm() const { return norm2(entries_); }

double Tensor::max_abs() const {
  double m = 0.0;
  for (double v : entries_) m = std::max(m, std::fabs(v));
  return m;
}

double Tensor::inner(const Tensor& o) const {
  if (!(shape_ == o.shape_)) fail(ErrorCode::ShapeMismatch, "inner product of tensors of different shape");
  return dot(entries_, o.entries_);
}

Tensor& Tensor::operator+=(const Tensor& o) {
  if (!(shape_ == o.shape_)) fail(ErrorCode::ShapeMismatch, "sum of tensors of different shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& o) {
  if (!(shape_ == o.shape_)) fail(ErrorCode::ShapeMismatch, "difference of tensors of different shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

Tensor& Tensor::operator*=(double c) {
  for (double& v : entries_) v *= c;
  return *this;
}

Tensor Tensor::squeeze() const {
  std::vector<std::size_t> dims;
  for (std::size_t n : shape_.dims())
    if (n > 1) dims.push_back(n);
  if (dims.empty()) dims.push_back(1);
  return Tensor(Shape(dims), entries_);
}

Tensor Tensor::permuted(const std::vector<std::size_t>& perm) const {
  if (perm.size() != order()) fail(ErrorCode::InvalidModes, "permutation length does not match order");
  std::vector<bool> seen(order(), false);
  std::vector<std::size_t> dims(order());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (perm[i] >= order() || seen[perm[i]]) fail(ErrorCode::InvalidModes, "not a permutation of the modes");
    seen[perm[i]] = true;
    dims[i] = shape_[perm[i]];
  }
  Tensor out{Shape(dims)};
  Index src(order());
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const Index dst = out.multi_index(flat);
    for (std::size_t i = 0; i < perm.size(); ++i) src[perm[i]] = dst[i];
    out.entries_[flat] = at(src);
  }
  return out;
}

namespace {

void check_row_modes(const Shape& shape, const ModeSet& row_modes) {
  if (row_modes.empty() || row_modes.size() >= shape.order())
    fail(ErrorCode::InvalidModes, "row modes must be a nonempty proper subset");
  for (std::size_t i = 0; i < row_modes.size(); ++i) {
    if (row_modes[i] >= shape.order()) fail(ErrorCode::InvalidModes, "mode out of range");
    if (i > 0 && row_modes[i] <= row_modes[i - 1]) fail(ErrorCode::InvalidModes, "row modes must be strictly increasing");
  }
}

// (row, col) position of every flat tensor index under the given flattening.
std::pair<std::size_t, std::size_t> flat_position(const Index& idx, const Shape& shape, const std::vector<bool>& is_row) {
  std::size_t r = 0, c = 0;
  for (std::size_t m = 0; m < idx.size(); ++m) {
    if (is_row[m]) r = r * shape[m] + idx[m];
    else c = c * shape[m] + idx[m];
  }
  return {r, c};
}

}  // namespace

Matrix flatten(const Tensor& t, const ModeSet& row_modes) {
  check_row_modes(t.shape(), row_modes);
  std::vector<bool> is_row(t.order(), false);
  std::size_t nr = 1;
  for (std::size_t m : row_modes) {
    is_row[m] = true;
    nr *= t.shape()[m];
  }
  Matrix out(nr, t.size() / nr);
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const auto [r, c] = flat_position(t.multi_index(flat), t.shape(), is_row);
    out(r, c) = t[flat];
  }
  return out;
}

Tensor unflatten(const Matrix& m, const Shape& shape, const ModeSet& row_modes) {
  check_row_modes(shape, row_modes);
  std::vector<bool> is_row(shape.order(), false);
  std::size_t nr = 1;
  for (std::size_t mode : row_modes) {
    is_row[mode] = true;
    nr *= shape[mode];
  }
  if (m.rows() != nr || m.rows() * m.cols() != shape.num_entries())
    fail(ErrorCode::ShapeMismatch, "matrix size does not match the flattening");
  Tensor t{shape};
  for (std::size_t flat = 0; flat < t.size(); ++flat) {
    const auto [r, c] = flat_position(t.multi_index(flat), shape, is_row);
    t[flat] = m(r, c);
  }
  return t;
}

std::vector<ModeSet> bipartitions(std::size_t order) {
  std::vector<ModeSet> out;
  if (order < 2) return out;
  const std::size_t full = (std::size_t{1} << order) - 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    if (!(mask & 1u)) continue;
    ModeSet s;
    for (std::size_t m = 0; m < order; ++m)
      if (mask & (std::size_t{1} << m)) s.push_back(m);
    out.push_back(std::move(s));
  }
  std::stable_sort(out.begin(), out.end(), [](const ModeSet& a, const ModeSet& b) { return a.size() < b.size(); });
  return out;
}

std::string SubBlockSelector::to_string() const {
  std::ostringstream out;
  out << "modes(" << free_modes[0] + 1 << "," << free_modes[1] + 1 << "," << free_modes[2] + 1 << ")";
  for (const auto& p : index_pairs) out << "[" << p[0] << "," << p[1] << "]";
  if (!fixed_indices.empty()) {
    out << " fixed(";
    for (std::size_t i = 0; i < fixed_indices.size(); ++i) out << (i ? "," : "") << fixed_indices[i];
    out << ")";
  }
  return out.str();
}

void validate_selector(const SubBlockSelector& sel, const Shape& shape) {
  const std::size_t d = shape.order();
  if (d < 3) fail(ErrorCode::InvalidSelector, "selectors need a tensor of order at least 3");
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t m = sel.free_modes[i];
    if (m >= d || (i > 0 && m <= sel.free_modes[i - 1]))
      fail(ErrorCode::InvalidSelector, "free modes must be distinct, increasing and within the order");
    if (shape[m] < 2) fail(ErrorCode::InvalidSelector, "free mode has dimension below 2");
    const auto& p = sel.index_pairs[i];
    if (!(p[0] < p[1]) || p[1] >= shape[m]) fail(ErrorCode::InvalidSelector, "index pair must be increasing and in range");
  }
  if (sel.fixed_indices.size() != d - 3) fail(ErrorCode::InvalidSelector, "one fixed index per non-free mode required");
  std::size_t k = 0;
  for (std::size_t m = 0; m < d; ++m) {
    if (m == sel.free_modes[0] || m == sel.free_modes[1] || m == sel.free_modes[2]) continue;
    if (sel.fixed_indices[k++] >= shape[m]) fail(ErrorCode::InvalidSelector, "fixed index out of range");
  }
}

namespace {

std::vector<std::array<std::size_t, 2>> pairs_of(std::size_t n) {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back({i, j});
  return out;
}

}  // namespace

std::vector<SubBlockSelector> enumerate_subblocks(const Shape& shape) {
  const std::size_t d = shape.order();
  if (d < 3) fail(ErrorCode::ArityTooSmall, "sub-blocks need a tensor of order at least 3");
  std::vector<SubBlockSelector> out;
  out.reserve(subblock_count(shape));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        if (shape[i] < 2 || shape[j] < 2 || shape[k] < 2) continue;
        std::vector<std::size_t> rest;
        for (std::size_t m = 0; m < d; ++m)
          if (m != i && m != j && m != k) rest.push_back(m);
        const auto pi = pairs_of(shape[i]), pj = pairs_of(shape[j]), pk = pairs_of(shape[k]);
        std::vector<std::size_t> fixed(rest.size(), 0);
        while (true) {
          for (const auto& a : pi)
            for (const auto& b : pj)
              for (const auto& c : pk) out.push_back(SubBlockSelector{{i, j, k}, {a, b, c}, fixed});
          bool done = true;
          for (std::size_t pos = rest.size(); pos-- > 0;) {
            if (++fixed[pos] < shape[rest[pos]]) {
              done = false;
              break;
            }
            fixed[pos] = 0;
          }
          if (done) break;
        }
      }
  return out;
}

std::size_t subblock_count(const Shape& shape) {
  const std::size_t d = shape.order();
  if (d < 3) fail(ErrorCode::ArityTooSmall, "sub-blocks need a tensor of order at least 3");
  auto c2 = [](std::size_t n) { return n * (n - 1) / 2; };
  std::size_t total = 0;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        std::size_t term = c2(shape[i]) * c2(shape[j]) * c2(shape[k]);
        for (std::size_t m = 0; m < d; ++m)
          if (m != i && m != j && m != k) term *= shape[m];
        total += term;
      }
  return total;
}

Tensor extract_subblock(const Tensor& t, const SubBlockSelector& sel) {
  validate_selector(sel, t.shape());
  const std::size_t d = t.order();
  Index idx(d);
  std::size_t k = 0;
  for (std::size_t m = 0; m < d; ++m)
    if (m != sel.free_modes[0] && m != sel.free_modes[1] && m != sel.free_modes[2]) idx[m] = sel.fixed_indices[k++];
  std::vector<double> e(8);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b)
      for (std::size_t c = 0; c < 2; ++c) {
        idx[sel.free_modes[0]] = sel.index_pairs[0][a];
        idx[sel.free_modes[1]] = sel.index_pairs[1][b];
        idx[sel.free_modes[2]] = sel.index_pairs[2][c];
        e[a * 4 + b * 2 + c] = t.at(idx);
      }
  return Tensor(Shape({2, 2, 2}), std::move(e));
}

// ---------------------------------------------------------------------------

std::vector<Exponent> SymTensorCoords::multidegrees(unsigned n, unsigned d) {
  if (n == 0) fail(ErrorCode::BadShape, "need at least one variable");
  std::vector<Exponent> out;
  Exponent u(n, 0);
  std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned left) {
    if (pos + 1 == n) {
      u[pos] = left;
      out.push_back(u);
      return;
    }
    for (unsigned v = left + 1; v-- > 0;) {
      u[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

SymTensorCoords SymTensorCoords::binary(const std::vector<double>& x) {
  if (x.empty()) fail(ErrorCode::InvalidArgument, "binary form needs at least one coordinate");
  SymTensorCoords f;
  f.n = 2;
  f.d = static_cast<unsigned>(x.size() - 1);
  for (unsigned i = 0; i <= f.d; ++i) f.coeffs[{f.d - i, i}] = x[i];
  return f;
}

std::vector<double> SymTensorCoords::binary_coords() const {
  if (n != 2) fail(ErrorCode::InvalidArgument, "binary coordinates need n = 2");
  std::vector<double> x(d + 1);
  for (unsigned i = 0; i <= d; ++i) x[i] = get({d - i, i});
  return x;
}

double SymTensorCoords::get(const Exponent& u) const {
  auto it = coeffs.find(u);
  return it == coeffs.end() ? 0.0 : it->second;
}

void SymTensorCoords::validate() const {
  if (n < 1) fail(ErrorCode::BadShape, "need at least one variable");
  const auto expected = binomial(n + d - 1, d);
  if (mpz_class(static_cast<unsigned long>(coeffs.size())) != expected)
    fail(ErrorCode::ShapeMismatch, "symmetric tensor needs " + expected.get_str() + " coefficients, got " +
                                       std::to_string(coeffs.size()));
  for (const auto& [u, v] : coeffs) {
    if (u.size() != n || std::accumulate(u.begin(), u.end(), 0u) != d)
      fail(ErrorCode::ShapeMismatch, "multidegree does not have n parts summing to d");
  }
}

std::string coordinate_name(unsigned n, const Exponent& u) {
  if (n == 2) return "x" + std::to_string(u[1]);
  std::string name = "x";
  const bool wide = std::any_of(u.begin(), u.end(), [](unsigned v) { return v > 9; });
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (wide && i > 0) name += "_";
    name += std::to_string(u[i]);
  }
  return name;
}

std::vector<std::string> coordinate_names(unsigned n, unsigned d) {
  std::vector<std::string> out;
  auto us = SymTensorCoords::multidegrees(n, d);
  if (n == 2) std::sort(us.begin(), us.end(), [](const Exponent& a, const Exponent& b) { return a[1] < b[1]; });
  for (const auto& u : us) out.push_back(coordinate_name(n, u));
  return out;
}

Exponent multidegree_of(const Index& idx, unsigned n) {
  Exponent u(n, 0);
  for (std::size_t i : idx) {
    if (i >= n) fail(ErrorCode::IndexOutOfRange, "index letter exceeds n");
    ++u[i];
  }
  return u;
}

Tensor sym_to_tensor(const SymTensorCoords& f) {
  f.validate();
  if (f.d == 0) return Tensor(Shape({1}), {f.get(Exponent(f.n, 0))});
  Tensor t{Shape(std::vector<std::size_t>(f.d, f.n))};
  for (std::size_t flat = 0; flat < t.size(); ++flat) t[flat] = f.get(multidegree_of(t.multi_index(flat), f.n));
  return t;
}

std::vector<SubBlockSelector> symmetric_reduced_subblocks(unsigned n, unsigned d) {
  if (d < 3) fail(ErrorCode::ArityTooSmall, "sub-blocks need degree at least 3");
  std::vector<SubBlockSelector> out;
  const auto pairs = pairs_of(n);
  std::vector<std::size_t> fixed(d - 3, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == fixed.size()) {
      for (const auto& p : pairs) out.push_back(SubBlockSelector{{0, 1, 2}, {p, p, p}, fixed});
      return;
    }
    for (std::size_t v = start; v < n; ++v) {
      fixed[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace realrank
