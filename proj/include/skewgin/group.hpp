#pragma once

// Finite groups given by multiplication tables, their group algebras, and
// sets of primitive orthogonal idempotents.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgin/scalar.hpp"

namespace skewgin {

using GroupElement = std::size_t;

class FiniteGroup {
 public:
  /// table[g][h] is the index of gh. Throws NotLatinSquare, NoIdentity or
  /// NotAssociative; associativity is checked on every triple.
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<std::size_t>> table);

  static FiniteGroup trivial();
  /// Z/n with elements "e", "g", "g2", ...
  static FiniteGroup cyclic(std::size_t n);

  std::size_t order() const noexcept { return names_.size(); }
  GroupElement identity() const noexcept { return identity_; }
  GroupElement multiply(GroupElement g, GroupElement h) const { return table_[g][h]; }
  GroupElement inverse(GroupElement g) const { return inverse_[g]; }
  GroupElement conjugate(GroupElement h, GroupElement g) const { return multiply(multiply(h, g), inverse(h)); }
  const std::string& name(GroupElement g) const { return names_.at(g); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<GroupElement> find(const std::string& name) const;
  const std::vector<std::vector<std::size_t>>& table() const noexcept { return table_; }

  std::size_t element_order(GroupElement g) const;
  bool is_abelian() const;
  bool is_abelian(const std::vector<GroupElement>& subset) const;
  bool is_subgroup(const std::vector<GroupElement>& subset) const;
  /// lcm of the element orders of the subset.
  std::size_t exponent(const std::vector<GroupElement>& subset) const;
  std::vector<GroupElement> all() const;

  bool operator==(const FiniteGroup& other) const { return names_ == other.names_ && table_ == other.table_; }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> table_;
  GroupElement identity_ = 0;
  std::vector<GroupElement> inverse_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A group together with a field in which the group order is invertible.
class GroupAlgebra {
 public:
  /// Throws BadCharacteristic when char(field) divides |G|.
  GroupAlgebra(GroupPtr group, Field field);

  const GroupPtr& group() const noexcept { return group_; }
  const Field& field() const noexcept { return field_; }

 private:
  GroupPtr group_;
  Field field_;
};

class GroupAlgebraElement {
 public:
  GroupAlgebraElement(GroupPtr group, Field field) : group_(std::move(group)), field_(field) {}

  static GroupAlgebraElement of(GroupPtr group, Field field, GroupElement g);
  static GroupAlgebraElement one(GroupPtr group, Field field);

  const GroupPtr& group() const noexcept { return group_; }
  const Field& field() const noexcept { return field_; }
  const std::map<GroupElement, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(GroupElement g) const;
  void add_term(GroupElement g, const Scalar& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& rhs);
  GroupAlgebraElement& operator*=(const Scalar& s);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(GroupAlgebraElement a, const Scalar& s) { return a *= s; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& x, const GroupAlgebraElement& y);
  bool operator==(const GroupAlgebraElement& rhs) const { return field_ == rhs.field_ && terms_ == rhs.terms_; }

  /// h x h^{-1}
  GroupAlgebraElement conjugated_by(GroupElement h) const;
  /// True when every term lies in the subset.
  bool supported_in(const std::vector<GroupElement>& subset) const;

  std::string to_string() const;

 private:
  GroupPtr group_;
  Field field_;
  std::map<GroupElement, Scalar> terms_;
};

/// Primitive orthogonal idempotents of kH for a subgroup H of G, one per
/// irreducible representation, with the dimension of each irreducible.
struct IdempotentSet {
  GroupPtr group;
  std::vector<GroupElement> subgroup;  ///< sorted element ids of H
  std::vector<GroupAlgebraElement> idempotents;
  std::vector<std::size_t> dims;
};

/// Idempotents e_chi = (1/|H|) sum_h chi(h^{-1}) h, one per character of the
/// abelian subgroup H. Characters are enumerated in lexicographic order of
/// their exponents on a greedily chosen generating set.
/// Throws NotAbelian, NoRootOfUnity, BadCharacteristic.
IdempotentSet abelian_idempotents(const GroupPtr& group, const Field& field, std::vector<GroupElement> subgroup);
IdempotentSet abelian_idempotents(const GroupPtr& group, const Field& field);

struct IdempotentReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Idempotency, orthogonality, sum of dims^2 = |H|, primitivity
/// (dim e kH = declared dim), pairwise non-isomorphism (e_i kH e_j = 0) and,
/// when every irreducible is one-dimensional, sum e_i = 1.
IdempotentReport validate_idempotent_set(const IdempotentSet& s);

/// Transports an idempotent set of kG_i to kG_{h.i} by conjugation with h.
IdempotentSet conjugate_set(const IdempotentSet& s, GroupElement h);

}  // namespace skewgin
