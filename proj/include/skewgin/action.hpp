#pragma once

// Finite group actions on graded quivers: a vertex permutation per group
// element plus a linear map on the arrow space that respects endpoints.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skewgin/ginzburg.hpp"
#include "skewgin/group.hpp"
#include "skewgin/linalg.hpp"
#include "skewgin/potential.hpp"

namespace skewgin {

/// Sparse combination of arrows, sorted by arrow id.
using ArrowCombination = std::vector<std::pair<ArrowId, Scalar>>;

struct ElementAction {
  std::vector<VertexId> vertex_perm;          ///< i -> g.i
  std::vector<ArrowCombination> arrow_images;  ///< a -> ^g a
};

/// Matrix of (g, i, j) with rows indexed by arrows g.i -> g.j and columns by
/// arrows i -> j, both in arrow id order. Column c holds ^g of the c-th arrow.
struct BlockMatrix {
  VertexId src = 0;
  VertexId tgt = 0;
  DenseMatrix entries;
};

class QuiverAction {
 public:
  /// One entry per group element, no validation.
  QuiverAction(GroupPtr group, QuiverPtr quiver, Field field, std::vector<ElementAction> elements);

  /// Builds the full action from images of a generating set, closing under
  /// products. Throws InvalidAction when the given elements do not generate G.
  static QuiverAction from_generators(GroupPtr group, QuiverPtr quiver, Field field,
                                      const std::map<GroupElement, ElementAction>& generators);
  static QuiverAction trivial(GroupPtr group, QuiverPtr quiver, Field field);

  /// Assembles an element's data from a vertex permutation and block
  /// matrices; blocks that are not listed default to zero. Throws InvalidAction
  /// on wrong block shapes.
  static ElementAction from_blocks(const GradedQuiver& q, const Field& field, std::vector<VertexId> vertex_perm,
                                   const std::vector<BlockMatrix>& blocks);

  const GroupPtr& group() const noexcept { return group_; }
  const QuiverPtr& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  const ElementAction& element(GroupElement g) const { return elements_.at(g); }
  VertexId vertex_image(GroupElement g, VertexId i) const { return elements_.at(g).vertex_perm.at(i); }
  const ArrowCombination& arrow_image(GroupElement g, ArrowId a) const { return elements_.at(g).arrow_images.at(a); }

  /// Matrix of g on the arrows i -> j (rows: arrows g.i -> g.j).
  DenseMatrix block(GroupElement g, VertexId i, VertexId j) const;

 private:
  GroupPtr group_;
  QuiverPtr quiver_;
  Field field_;
  std::vector<ElementAction> elements_;
};

/// Composite data: (g after h) on vertices and arrows.
ElementAction compose_actions(const GradedQuiver& q, const Field& field, const ElementAction& g,
                              const ElementAction& h);

struct ActionReport {
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Permutation, block compatibility, degree preservation, invertible
/// blocks, trivial identity and the homomorphism law on every pair.
ActionReport validate_action(const QuiverAction& action);

/// ^g x, extended multiplicatively from the arrows.
AlgElement act(const QuiverAction& action, GroupElement g, const AlgElement& x);
AlgElement act_on_path(const QuiverAction& action, GroupElement g, const Path& p);

bool is_potential_invariant(const Potential& w, const QuiverAction& action);

struct EquivarianceFailure {
  std::string generator;
  std::string element;
  AlgElement difference;  ///< d(^g x) - ^g d(x)
};

struct EquivarianceReport {
  std::size_t checks = 0;
  std::vector<EquivarianceFailure> failures;
  std::vector<std::string> action_failures;  ///< validation of the extended action
  bool ok() const noexcept { return failures.empty() && action_failures.empty(); }
};

struct ExtendedAction {
  QuiverAction action;
  EquivarianceReport report;
};

/// Stars transform by the inverse transpose of each arrow block and
/// c_i -> c_{g.i}. Throws NotInvariantPotential, InvalidAction on singular
/// blocks.
ExtendedAction extend_to_ginzburg(const QuiverAction& action, const GinzburgPresentation& presentation);

}  // namespace skewgin
