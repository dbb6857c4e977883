#include "skewgin/linalg.hpp"

namespace skewgin {

void add_scaled(SparseVector& y, const Scalar& a, const SparseVector& x) {
  if (a.is_zero() || x.empty()) return;
  SparseVector out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->first < xi->first)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->first < yi->first) {
      out.emplace_back(xi->first, a * xi->second);
      ++xi;
    } else {
      Scalar sum = yi->second + a * xi->second;
      if (!sum.is_zero()) out.emplace_back(yi->first, std::move(sum));
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

SparseVector normalized(SparseVector v) {
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& [index, coeff] : v) {
    if (!out.empty() && out.back().first == index) {
      out.back().second += coeff;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!coeff.is_zero()) {
      out.emplace_back(index, std::move(coeff));
    }
  }
  return out;
}

SparseVector EchelonBasis::reduce(SparseVector v) const {
  std::size_t pos = 0;
  while (pos < v.size()) {
    auto it = rows_.find(v[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Scalar c = -v[pos].second;
    add_scaled(v, c, it->second);
  }
  return v;
}

bool EchelonBasis::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead_inv = v.front().second.inverse();
  for (auto& entry : v) entry.second *= lead_inv;
  std::size_t pivot = v.front().first;
  rows_.emplace(pivot, std::move(v));
  return true;
}

std::vector<SparseVector> EchelonBasis::reduced_rows() const {
  std::map<std::size_t, SparseVector> reduced;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    SparseVector row = it->second;
    // Clear every non-pivot entry that is itself a later pivot.
    std::size_t pos = 1;
    while (pos < row.size()) {
      auto found = reduced.find(row[pos].first);
      if (found == reduced.end()) {
        ++pos;
        continue;
      }
      Scalar c = -row[pos].second;
      add_scaled(row, c, found->second);
    }
    reduced.emplace(it->first, std::move(row));
  }
  std::vector<SparseVector> out;
  out.reserve(reduced.size());
  for (auto& [pivot, row] : reduced) out.push_back(std::move(row));
  return out;
}

std::vector<std::size_t> EchelonBasis::pivots() const {
  std::vector<std::size_t> out;
  for (const auto& [pivot, row] : rows_) out.push_back(pivot);
  return out;
}

std::size_t LinearSolver::add(SparseVector generator) {
  std::size_t id = generators_++;
  Row row{std::move(generator), SparseVector{{id, field_.one()}}};
  std::size_t pos = 0;
  while (pos < row.vec.size()) {
    auto it = rows_.find(row.vec[pos].first);
    if (it == rows_.end()) {
      ++pos;
      continue;
    }
    Scalar c = -row.vec[pos].second;
    add_scaled(row.vec, c, it->second.vec);
    add_scaled(row.combo, c, it->second.combo);
  }
  if (row.vec.empty()) return id;
  Scalar lead_inv = row.vec.front().second.inverse();
  for (auto& entry : row.vec) entry.second *= lead_inv;
  for (auto& entry : row.combo) entry.second *= lead_inv;
  std::size_t pivot = row.vec.front().first;
  rows_.emplace(pivot, std::move(row));
  return id;
}

std::optional<SparseVector> LinearSolver::solve(SparseVector target) const {
  SparseVector combo;
  std::size_t pos = 0;
  while (pos < target.size()) {
    auto it = rows_.find(target[pos].first);
    if (it == rows_.end()) return std::nullopt;
    Scalar c = target[pos].second;
    add_scaled(target, -c, it->second.vec);
    add_scaled(combo, c, it->second.combo);
  }
  return combo;
}

std::size_t rank_of(const Field& field, const std::vector<SparseVector>& vectors) {
  EchelonBasis basis(field);
  for (const auto& v : vectors) basis.insert(v);
  return basis.rank();
}

DenseMatrix identity_matrix(const Field& field, std::size_t n) {
  DenseMatrix out(n, std::vector<Scalar>(n, field.zero()));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = field.one();
  return out;
}

DenseMatrix matmul(const Field& field, const DenseMatrix& a, const DenseMatrix& b) {
  std::size_t inner = b.size();
  std::size_t cols = inner == 0 ? 0 : b.front().size();
  DenseMatrix out(a.size(), std::vector<Scalar>(cols, field.zero()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

DenseMatrix transpose(const DenseMatrix& a) {
  if (a.empty()) return {};
  DenseMatrix out(a.front().size(), std::vector<Scalar>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  }
  return out;
}

std::optional<DenseMatrix> inverse(const Field& field, DenseMatrix a) {
  const std::size_t n = a.size();
  for (const auto& row : a) {
    if (row.size() != n) return std::nullopt;
  }
  DenseMatrix inv = identity_matrix(field, n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    Scalar scale = a[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Scalar f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace skewgin
