#pragma once

// Weyl algebras A_n in normal order x^a d^b, the Koszul bimodule resolution
// of A_n with terms Wedge^k V (x) A_n (x) A_n, and its dual.
//
// V has basis (x_1, ..., x_n, d_1, ..., d_n); index s < n is x_{s+1}, the
// rest are the d's. On A_n (x) A_n the generator v acts by
//   u1 (x) u2  ->  u1 v (x) u2 - u1 (x) v u2,
// which is right multiplication by v (x) 1 - 1 (x) v in A (x) A^op.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewgin/linalg.hpp"
#include "skewgin/scalar.hpp"

namespace skewgin {

struct WeylMonomial {
  std::vector<unsigned> x;  ///< exponents of x_1..x_n
  std::vector<unsigned> d;  ///< exponents of d_1..d_n

  static WeylMonomial one(std::size_t n) { return {std::vector<unsigned>(n, 0), std::vector<unsigned>(n, 0)}; }
  std::size_t total_degree() const;
  auto operator<=>(const WeylMonomial&) const = default;
};

class WeylElement {
 public:
  WeylElement(std::size_t n, Field field) : n_(n), field_(field) {}

  static WeylElement of(std::size_t n, Field field, const WeylMonomial& m, const Scalar& c);
  static WeylElement one(std::size_t n, Field field);
  /// The basis vector of V with the given index.
  static WeylElement generator(std::size_t n, Field field, std::size_t index);

  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const std::map<WeylMonomial, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const WeylMonomial& m) const;
  void add_term(const WeylMonomial& m, const Scalar& c);

  WeylElement& operator+=(const WeylElement& rhs);
  WeylElement& operator-=(const WeylElement& rhs);
  WeylElement& operator*=(const Scalar& s);
  friend WeylElement operator+(WeylElement a, const WeylElement& b) { return a += b; }
  friend WeylElement operator-(WeylElement a, const WeylElement& b) { return a -= b; }
  friend WeylElement operator*(WeylElement a, const Scalar& s) { return a *= s; }
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  bool operator==(const WeylElement& rhs) const { return n_ == rhs.n_ && terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_;
  Field field_;
  std::map<WeylMonomial, Scalar> terms_;
};

/// Normal-ordered product; d_i^b x_i^c is expanded by the Leibniz rule.
WeylElement weyl_multiply(const WeylElement& a, const WeylElement& b);

std::string to_string(const WeylMonomial& m);

/// Monomials of total degree <= bound, by degree then exponents.
std::vector<WeylMonomial> weyl_monomials(std::size_t n, std::size_t bound);

/// Sorted wedge indices.
using Wedge = std::vector<std::size_t>;

struct ChainKey {
  Wedge wedge;
  WeylMonomial left;
  WeylMonomial right;
  auto operator<=>(const ChainKey&) const = default;
};

/// Element of Wedge^* V (x) A_n (x) A_n (or its dual, with wedges of V*).
class ChainElement {
 public:
  ChainElement(std::size_t n, Field field) : n_(n), field_(field) {}
  static ChainElement of(std::size_t n, Field field, const ChainKey& key);

  std::size_t n() const noexcept { return n_; }
  const Field& field() const noexcept { return field_; }
  const std::map<ChainKey, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  void add_term(const ChainKey& key, const Scalar& c);
  /// Adds c * wedge (x) (a (x) b), expanding both tensor factors.
  void add_product(const Wedge& wedge, const WeylElement& a, const WeylElement& b, const Scalar& c);

  ChainElement& operator+=(const ChainElement& rhs);
  ChainElement& operator-=(const ChainElement& rhs);
  friend ChainElement operator-(ChainElement a, const ChainElement& b) { return a -= b; }
  bool operator==(const ChainElement& rhs) const { return terms_ == rhs.terms_; }

  std::string to_string() const;

 private:
  std::size_t n_;
  Field field_;
  std::map<ChainKey, Scalar> terms_;
};

/// Wedge^{k+1} V (x) A^e -> Wedge^k V (x) A^e:
///   v_1 ^ ... ^ v_{k+1} (x) u  ->  sum_i (-1)^{k-i+1} (... no v_i ...) (x) u.(v_i (x) 1 - 1 (x) v_i)
ChainElement koszul_differential(const ChainElement& c);

/// Wedge^0 V (x) A^e -> A_n, u1 (x) u2 -> u1 u2.
WeylElement augmentation(const ChainElement& c);

/// A^e (x) Wedge^k V* -> A^e (x) Wedge^{k+1} V*:
///   u (x) xi  ->  sum_j u.(e_j (x) 1 - 1 (x) e_j) (x) xi ^ e_j*
ChainElement dual_differential(const ChainElement& c);

/// Bernstein degree of a term: wedge size plus the degrees of both factors.
std::size_t filtration_degree(const ChainKey& key);
/// Dual truncation degree: (2n - wedge size) plus the degrees of both factors.
std::size_t dual_filtration_degree(std::size_t n, const ChainKey& key);

/// Basis of the wedge-k term in filtration degree <= bound, sorted.
std::vector<ChainKey> chain_basis(std::size_t n, std::size_t k, std::size_t bound, bool dual);

struct PositionHomology {
  std::size_t position = 0;  ///< wedge degree
  std::size_t dimension = 0;
  std::size_t rank_out = 0;  ///< rank of the differential leaving this term
  std::size_t homology = 0;
};

struct ExactnessReport {
  std::size_t n = 0;
  std::size_t bound = 0;
  std::vector<PositionHomology> positions;
  std::size_t cokernel = 0;           ///< homology at the augmentation (primal) or top (dual) end
  std::size_t expected_cokernel = 0;  ///< dim of the filtered piece of A_n
  std::size_t multiplication_rank = 0;
  bool d_squared_zero = true;
  bool multiplication_kills_boundaries = true;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

constexpr std::size_t kDefaultWeylCap = 50000;

/// Filtered piece of the resolution, exact ranks, homology per position.
/// Throws SizeGuard for n > 2 or when the truncation exceeds cap.
ExactnessReport bounded_exactness(std::size_t n, std::size_t bound, const Field& field,
                                  std::size_t cap = kDefaultWeylCap);
ExactnessReport dual_bounded_exactness(std::size_t n, std::size_t bound, const Field& field,
                                       std::size_t cap = kDefaultWeylCap);

/// M^T B M == B for the commutator form B(e_r, e_c) = [e_r, e_c].
bool is_symplectic(std::size_t n, const DenseMatrix& m, const Field& field);

struct EquivarianceCheck {
  std::size_t matrix = 0;
  std::size_t checked = 0;
  std::vector<std::string> failures;
};

struct SpReport {
  std::vector<EquivarianceCheck> matrices;
  bool ok() const noexcept;
};

/// Throws NotSymplectic naming the first bad matrix; otherwise checks that the
/// differential and the augmentation commute with the diagonal action on all
/// basis elements of filtration degree <= bound.
SpReport check_sp_equivariance(std::size_t n, const std::vector<DenseMatrix>& matrices, std::size_t bound,
                               const Field& field);

/// Image of a chain under the diagonal action of a matrix on V.
ChainElement act_on_chain(const DenseMatrix& m, const ChainElement& c);
WeylElement act_on_weyl(const DenseMatrix& m, const WeylElement& u);

std::string matrix_to_string(const DenseMatrix& m);

}  // namespace skewgin
