#pragma once

// Slow, independent reimplementations used to cross-check the library. They
// share only Scalar arithmetic and the quiver's arrow table with the code
// under test.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "skewgin/quiver.hpp"
#include "skewgin/scalar.hpp"
#include "skewgin/weyl.hpp"

namespace oracle {

using namespace skewgin;

/// A path given by its start vertex and arrow word.
struct Word {
  VertexId start;
  std::vector<ArrowId> arrows;
  auto operator<=>(const Word&) const = default;
};

inline VertexId word_end(const GradedQuiver& q, const Word& w) {
  return w.arrows.empty() ? w.start : q.arrow(w.arrows.back()).tgt;
}

inline std::vector<Word> words(const GradedQuiver& q, std::size_t length) {
  std::vector<Word> level;
  for (VertexId v = 0; v < q.vertex_count(); ++v) level.push_back({v, {}});
  for (std::size_t l = 0; l < length; ++l) {
    std::vector<Word> next;
    for (const auto& w : level) {
      for (ArrowId a = 0; a < q.arrow_count(); ++a) {
        if (q.arrow(a).src != word_end(q, w)) continue;
        Word x = w;
        x.arrows.push_back(a);
        next.push_back(x);
      }
    }
    level = std::move(next);
  }
  std::sort(level.begin(), level.end());
  return level;
}

using Combination = std::map<Word, Scalar>;

/// Sum over cuts at each occurrence of a of the rotated remainder, degree 0.
inline Combination cut(const GradedQuiver& q, const Field& f,
                       const std::vector<std::pair<Scalar, std::vector<ArrowId>>>& cycles, ArrowId a) {
  Combination out;
  for (const auto& [c, w] : cycles) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] != a) continue;
      Word x{q.arrow(a).tgt, {}};
      for (std::size_t j = k + 1; j < w.size(); ++j) x.arrows.push_back(w[j]);
      for (std::size_t j = 0; j < k; ++j) x.arrows.push_back(w[j]);
      auto [it, fresh] = out.try_emplace(x, f.zero());
      it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

/// Rank of a dense matrix by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Scalar>> m, const Field& f) {
  std::size_t rank = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    Scalar inv = m[rank][c].inverse();
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      Scalar factor = m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  (void)f;
  return rank;
}

/// dim of the length-l part of kQ / (cyclic derivatives), l = 0..max_length,
/// for a length-homogeneous list of cycles on a degree-0 quiver.
inline std::vector<std::size_t> jacobian_dims(const GradedQuiver& q, const Field& f,
                                              const std::vector<std::pair<Scalar, std::vector<ArrowId>>>& cycles,
                                              std::size_t max_length) {
  std::vector<Combination> relations;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    auto r = cut(q, f, cycles, a);
    if (!r.empty()) relations.push_back(std::move(r));
  }
  std::vector<std::size_t> out;
  for (std::size_t l = 0; l <= max_length; ++l) {
    auto basis = words(q, l);
    std::map<Word, std::size_t> column;
    for (std::size_t k = 0; k < basis.size(); ++k) column[basis[k]] = k;
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : relations) {
      std::size_t m = r.begin()->first.arrows.size();
      if (m > l) continue;
      VertexId rs = r.begin()->first.start;
      VertexId re = word_end(q, r.begin()->first);
      for (std::size_t i = 0; i + m <= l; ++i) {
        for (const auto& left : words(q, i)) {
          if (word_end(q, left) != rs) continue;
          for (const auto& right : words(q, l - m - i)) {
            if (right.start != re) continue;
            std::vector<Scalar> row(basis.size(), f.zero());
            for (const auto& [w, c] : r) {
              Word full{left.start, left.arrows};
              full.arrows.insert(full.arrows.end(), w.arrows.begin(), w.arrows.end());
              full.arrows.insert(full.arrows.end(), right.arrows.begin(), right.arrows.end());
              row[column.at(full)] += c;
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    out.push_back(basis.size() - dense_rank(rows, f));
  }
  return out;
}

/// Weyl algebra product by rewriting words: generator k < n is x_{k+1},
/// k >= n is d_{k-n+1}, and d_i x_i = x_i d_i + 1.
inline WeylElement weyl_rewrite(std::size_t n, const Field& f, const std::vector<std::size_t>& word) {
  std::map<std::vector<std::size_t>, Scalar> pending{{word, f.one()}};
  WeylElement out(n, f);
  while (!pending.empty()) {
    auto [w, c] = *pending.begin();
    pending.erase(pending.begin());
    std::size_t k = 0;
    while (k + 1 < w.size() && !(w[k] >= n && w[k + 1] < n)) ++k;
    if (k + 1 >= w.size()) {
      WeylMonomial m = WeylMonomial::one(n);
      for (auto g : w) (g < n ? m.x[g] : m.d[g - n]) += 1;
      out.add_term(m, c);
      continue;
    }
    auto swapped = w;
    std::swap(swapped[k], swapped[k + 1]);
    auto add = [&](std::vector<std::size_t> key, const Scalar& s) {
      auto [it, fresh] = pending.try_emplace(std::move(key), f.zero());
      it->second += s;
    };
    add(swapped, c);
    if (w[k] - n == w[k + 1]) {
      auto shorter = w;
      shorter.erase(shorter.begin() + k, shorter.begin() + k + 2);
      add(shorter, c);
    }
  }
  return out;
}

inline std::vector<std::size_t> monomial_word(std::size_t n, const WeylMonomial& m) {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i < n; ++i) w.insert(w.end(), m.x[i], i);
  for (std::size_t i = 0; i < n; ++i) w.insert(w.end(), m.d[i], n + i);
  return w;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
