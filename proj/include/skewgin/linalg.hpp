#pragma once

// Exact sparse row reduction. Vectors are sorted (index, nonzero scalar) lists;
// the pivot of a row is its smallest index, so pivot order follows whatever
// term order the caller used to number the columns.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "skewgin/scalar.hpp"

namespace skewgin {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// y += a * x
void add_scaled(SparseVector& y, const Scalar& a, const SparseVector& x);

/// Sorts by index, merges duplicates and drops zeros.
SparseVector normalized(SparseVector v);

class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  SparseVector reduce(SparseVector v) const;
  /// Returns true when v was independent of the rows already stored.
  bool insert(SparseVector v);
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// Reduced row echelon form, one row per pivot, in pivot order.
  std::vector<SparseVector> reduced_rows() const;
  std::vector<std::size_t> pivots() const;

 private:
  Field field_;
  std::map<std::size_t, SparseVector> rows_;
};

/// Row reduction that remembers how each stored row was combined from the
/// generators, so membership queries come back with explicit coefficients.
class LinearSolver {
 public:
  explicit LinearSolver(Field field) : field_(field) {}

  /// Returns the generator's index; dependent generators are counted but not stored.
  std::size_t add(SparseVector generator);
  std::size_t generator_count() const noexcept { return generators_; }
  std::size_t rank() const noexcept { return rows_.size(); }

  /// Coefficients c (sparse over generator indices) with sum c_k g_k = target.
  std::optional<SparseVector> solve(SparseVector target) const;

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };

  Field field_;
  std::map<std::size_t, Row> rows_;
  std::size_t generators_ = 0;
};

std::size_t rank_of(const Field& field, const std::vector<SparseVector>& vectors);

/// Row-major dense matrix; only used for small blocks.
using DenseMatrix = std::vector<std::vector<Scalar>>;

DenseMatrix identity_matrix(const Field& field, std::size_t n);
DenseMatrix matmul(const Field& field, const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix transpose(const DenseMatrix& a);
/// nullopt when singular or not square.
std::optional<DenseMatrix> inverse(const Field& field, DenseMatrix a);

/// Assigns dense column numbers to keys, in first-seen order.
template <class Key>
class TermIndex {
 public:
  TermIndex() = default;
  explicit TermIndex(const std::vector<Key>& ordered) {
    for (const auto& key : ordered) add(key);
  }

  std::size_t add(const Key& key) {
    auto [it, inserted] = index_.try_emplace(key, keys_.size());
    if (inserted) keys_.push_back(key);
    return it->second;
  }
  std::optional<std::size_t> find(const Key& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  const Key& key(std::size_t column) const { return keys_.at(column); }
  std::size_t size() const noexcept { return keys_.size(); }

  /// Converts a key -> scalar map; unknown keys are added as new columns.
  template <class Map>
  SparseVector vectorize(const Map& terms) {
    SparseVector v;
    v.reserve(terms.size());
    for (const auto& [key, coeff] : terms) v.emplace_back(add(key), coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }

 private:
  std::map<Key, std::size_t> index_;
  std::vector<Key> keys_;
};

}  // namespace skewgin
