#pragma once

// Dense real tensors, flattenings and 2×2×2 sub-blocks.
//
// Modes are numbered from 0 in the C++ API and from 1 in every file format
// and in CLI output. Entries are stored row-major (last index fastest).

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "realrank/exactalg.hpp"
#include "realrank/linalg.hpp"

namespace realrank {

class Shape {
 public:
  Shape() = default;
  explicit Shape(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t order() const { return dims_.size(); }
  std::size_t operator[](std::size_t mode) const { return dims_[mode]; }
  std::size_t num_entries() const;
  std::string to_string() const;  // "3x2x2"

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<std::size_t> dims_;
};

using Index = std::vector<std::size_t>;
using ModeSet = std::vector<std::size_t>;  // sorted, 0-based

class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape);  // zeros
  Tensor(Shape shape, std::vector<double> entries);
  // weight · f[0] ⊗ f[1] ⊗ … ⊗ f[d-1]
  static Tensor rank_one(const std::vector<std::vector<double>>& factors, double weight = 1.0);

  const Shape& shape() const { return shape_; }
  std::size_t order() const { return shape_.order(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<double>& entries() const { return entries_; }
  double operator[](std::size_t flat) const { return entries_[flat]; }
  double& operator[](std::size_t flat) { return entries_[flat]; }
  double at(const Index& idx) const { return entries_[flat_index(idx)]; }
  double& at(const Index& idx) { return entries_[flat_index(idx)]; }

  std::size_t flat_index(const Index& idx) const;
  Index multi_index(std::size_t flat) const;

  double norm() const;
  double max_abs() const;
  double inner(const Tensor& o) const;

  Tensor& operator+=(const Tensor& o);
  Tensor& operator-=(const Tensor& o);
  Tensor& operator*=(double c);
  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(double c, Tensor a) { return a *= c; }

  // Drops modes of size 1. A tensor whose modes are all of size 1 keeps one.
  Tensor squeeze() const;
  // Mode i of the result is mode perm[i] of this tensor.
  Tensor permuted(const std::vector<std::size_t>& perm) const;

 private:
  Shape shape_;
  std::vector<double> entries_;
};

// Rows indexed by the modes in row_modes (row-major over them), columns by
// the remaining modes in increasing order.
Matrix flatten(const Tensor& t, const ModeSet& row_modes);
Tensor unflatten(const Matrix& m, const Shape& shape, const ModeSet& row_modes);

// One row set per bipartition {S, complement}: the side containing mode 0.
std::vector<ModeSet> bipartitions(std::size_t order);

struct SubBlockSelector {
  std::array<std::size_t, 3> free_modes{};                 // increasing
  std::array<std::array<std::size_t, 2>, 3> index_pairs{};  // i1 < i2 per free mode
  std::vector<std::size_t> fixed_indices;                   // one per remaining mode, increasing mode order

  friend bool operator==(const SubBlockSelector&, const SubBlockSelector&) = default;
  std::string to_string() const;  // 1-based modes, 0-based slice indices
};

void validate_selector(const SubBlockSelector& sel, const Shape& shape);
std::vector<SubBlockSelector> enumerate_subblocks(const Shape& shape);
// Σ_{i<j<k} C(n_i,2)C(n_j,2)C(n_k,2)·∏_{other m} n_m
std::size_t subblock_count(const Shape& shape);
Tensor extract_subblock(const Tensor& t, const SubBlockSelector& sel);

// ---------------------------------------------------------------------------
// Symmetric tensors ↔ forms
// ---------------------------------------------------------------------------

// Coefficients x_u of the form Σ_u binom(d,u) x_u z^u indexed by multidegree.
struct SymTensorCoords {
  unsigned n = 2;
  unsigned d = 0;
  std::map<Exponent, double> coeffs;

  // All multidegrees |u| = d in lexicographically decreasing order, so for
  // n = 2 position i holds (d-i, i).
  static std::vector<Exponent> multidegrees(unsigned n, unsigned d);
  static SymTensorCoords binary(const std::vector<double>& x);  // x_0..x_d
  std::vector<double> binary_coords() const;                    // requires n = 2
  double get(const Exponent& u) const;
  void validate() const;
};

// Variable name of the coordinate x_u: "x<i>" for n = 2, else digits of u.
std::string coordinate_name(unsigned n, const Exponent& u);
std::vector<std::string> coordinate_names(unsigned n, unsigned d);

Tensor sym_to_tensor(const SymTensorCoords& f);
// Multidegree of a tensor index over n letters.
Exponent multidegree_of(const Index& idx, unsigned n);

// Sub-blocks of a symmetric tensor that use the same index pair in all three
// free modes; count C(n+d-4, n-1)·C(n,2).
std::vector<SubBlockSelector> symmetric_reduced_subblocks(unsigned n, unsigned d);

}  // namespace realrank
