#pragma once

// The skew group algebra kQ # G. A basis element is a pair (p, g) standing
// for p g; the product is (p g)(q h) = p (^g q) gh.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewgin/action.hpp"
#include "skewgin/linalg.hpp"

namespace skewgin {

using CrossedKey = std::pair<Path, GroupElement>;

/// Shared by every element of one crossed product. Caches images of paths
/// under the action, so it is not safe to share across threads.
class CrossedContext {
 public:
  explicit CrossedContext(QuiverAction action) : action_(std::move(action)) {}

  const QuiverAction& action() const noexcept { return action_; }
  const QuiverPtr& quiver() const noexcept { return action_.quiver(); }
  const GroupPtr& group() const noexcept { return action_.group(); }
  const Field& field() const noexcept { return action_.field(); }

  const AlgElement& image(GroupElement g, const Path& p) const;

  /// All (p, g) with len(p) = length, sorted: paths in basis order, then g.
  std::vector<CrossedKey> basis(std::size_t length) const;

 private:
  QuiverAction action_;
  mutable std::map<std::pair<GroupElement, Path>, AlgElement> images_;
};

using ContextPtr = std::shared_ptr<const CrossedContext>;

class CrossedElement {
 public:
  explicit CrossedElement(ContextPtr ctx) : ctx_(std::move(ctx)) {}

  static CrossedElement of(ContextPtr ctx, const Path& p, GroupElement g);
  static CrossedElement of(ContextPtr ctx, const CrossedKey& key) { return of(std::move(ctx), key.first, key.second); }
  /// x g for x in kQ.
  static CrossedElement from_path_algebra(ContextPtr ctx, const AlgElement& x, GroupElement g);
  /// The group element g itself, i.e. sum_i e_i g.
  static CrossedElement group_element(ContextPtr ctx, GroupElement g);
  /// sum_h c_h e_v h, the image of an element of k G_v placed at vertex v.
  static CrossedElement at_vertex(ContextPtr ctx, VertexId v, const GroupAlgebraElement& x);
  static CrossedElement unit(ContextPtr ctx);

  const ContextPtr& context() const noexcept { return ctx_; }
  const std::map<CrossedKey, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const CrossedKey& key) const;
  void add_term(const CrossedKey& key, const Scalar& c);

  CrossedElement& operator+=(const CrossedElement& rhs);
  CrossedElement& operator-=(const CrossedElement& rhs);
  CrossedElement& operator*=(const Scalar& s);
  CrossedElement operator-() const;
  friend CrossedElement operator+(CrossedElement a, const CrossedElement& b) { return a += b; }
  friend CrossedElement operator-(CrossedElement a, const CrossedElement& b) { return a -= b; }
  friend CrossedElement operator*(CrossedElement a, const Scalar& s) { return a *= s; }
  friend CrossedElement operator*(const CrossedElement& x, const CrossedElement& y);
  bool operator==(const CrossedElement& rhs) const { return terms_ == rhs.terms_; }

  std::optional<std::size_t> homogeneous_length() const;
  std::optional<int> homogeneous_degree() const;
  std::string to_string() const;

 private:
  ContextPtr ctx_;
  std::map<CrossedKey, Scalar> terms_;
};

/// Throws QuiverMismatch when the elements belong to different contexts.
CrossedElement crossed_multiply(const CrossedElement& x, const CrossedElement& y);

std::string key_to_string(const CrossedContext& ctx, const CrossedKey& key);

struct Commutator {
  CrossedKey left;
  CrossedKey right;
  CrossedElement value;  ///< left right - right left, never zero
};

/// Nonzero commutators of basis pairs whose lengths add up to `length`; each
/// unordered pair appears once. Spans [L, L] in that length.
std::vector<Commutator> commutator_basis(const ContextPtr& ctx, std::size_t length);

/// One length component of L / [L, L].
class HC0Component {
 public:
  HC0Component(ContextPtr ctx, std::size_t length);

  std::size_t length() const noexcept { return length_; }
  std::size_t component_dimension() const noexcept { return columns_.size(); }
  std::size_t commutator_rank() const noexcept { return commutators_.rank(); }
  std::size_t quotient_dimension() const noexcept { return columns_.size() - commutators_.rank(); }
  /// Throws InvalidArgument for elements of another length.
  bool in_commutator_span(const CrossedElement& x) const;
  bool equivalent(const CrossedElement& x, const CrossedElement& y) const { return in_commutator_span(x - y); }

 private:
  SparseVector vectorize(const CrossedElement& x) const;

  ContextPtr ctx_;
  std::size_t length_;
  TermIndex<CrossedKey> columns_;
  EchelonBasis commutators_;
};

struct CyclicClass {
  CrossedElement representative;
  std::shared_ptr<const HC0Component> component;

  bool operator==(const CyclicClass& other) const { return component->equivalent(representative, other.representative); }
};

struct CertificateTerm {
  CrossedKey left;
  CrossedKey right;
  Scalar coeff;
};

struct HC0Reduction {
  CrossedElement representative;            ///< lies in e L e
  std::vector<CertificateTerm> certificate;  ///< x - representative = sum coeff [left, right]
  std::size_t corner_dimension = 0;
  std::size_t commutator_count = 0;
};

/// Finds a representative of the class of x inside the corner e L e together
/// with an explicit commutator certificate, which is re-checked before
/// returning. Throws InvalidArgument if e is not idempotent,
/// NotLengthHomogeneous, NoSolution.
HC0Reduction hc0_reduce(const CrossedElement& x, const CrossedElement& e);

/// Expands the certificate and compares it with x - representative.
bool verify_certificate(const CrossedElement& x, const HC0Reduction& r);

}  // namespace skewgin
