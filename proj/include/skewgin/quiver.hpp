#pragma once

// Graded quivers, paths and the path algebra kQ.
//
// Composition convention: the path `pq` traverses p first, then q. A path
// a_1 a_2 ... a_n therefore needs tgt(a_k) == src(a_{k+1}), and e_i a e_j = a
// exactly when a: i -> j.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "skewgin/scalar.hpp"

namespace skewgin {

using VertexId = std::size_t;
using ArrowId = std::size_t;

struct Arrow {
  std::string name;
  VertexId src = 0;
  VertexId tgt = 0;
  int degree = 0;
};

/// Arrows are stored sorted by name, so arrow ids follow the name order used
/// by every basis. Vertices keep the order they were given in.
class GradedQuiver {
 public:
  struct ArrowSpec {
    std::string name;
    std::string src;
    std::string tgt;
    int degree = 0;
  };

  GradedQuiver(std::vector<std::string> vertices, const std::vector<ArrowSpec>& arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  const std::vector<std::string>& vertex_names() const noexcept { return vertices_; }
  const Arrow& arrow(ArrowId a) const { return arrows_.at(a); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<ArrowId> find_arrow(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  ///< throws UnknownVertex
  ArrowId arrow_id(const std::string& name) const;  ///< throws UnknownArrow

  /// Arrows i -> j in id (name) order.
  std::vector<ArrowId> arrows_between(VertexId i, VertexId j) const;
  bool trivially_graded() const;

  bool operator==(const GradedQuiver& other) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, ArrowId> arrow_index_;
};

using QuiverPtr = std::shared_ptr<const GradedQuiver>;

/// A composable arrow sequence, or the trivial path at `src` when `arrows` is empty.
struct Path {
  VertexId src = 0;
  VertexId tgt = 0;
  std::vector<ArrowId> arrows;

  static Path trivial(VertexId v) { return Path{v, v, {}}; }
  static Path of_arrow(const GradedQuiver& q, ArrowId a) { return Path{q.arrow(a).src, q.arrow(a).tgt, {a}}; }
  /// Throws InvalidArgument when the arrows do not compose.
  static Path from_arrows(const GradedQuiver& q, const std::vector<ArrowId>& arrows);

  std::size_t length() const noexcept { return arrows.size(); }
  bool is_trivial() const noexcept { return arrows.empty(); }
  bool is_cycle() const noexcept { return src == tgt; }

  /// Length first, then the arrow word, then the base vertex.
  std::strong_ordering operator<=>(const Path& other) const;
  bool operator==(const Path& other) const = default;
};

int degree(const GradedQuiver& q, const Path& p);
/// p then q, or nullopt when tgt(p) != src(q).
std::optional<Path> compose(const Path& p, const Path& q);
std::string to_string(const GradedQuiver& q, const Path& p);

std::vector<Path> paths_of_length(const GradedQuiver& q, std::size_t length);
/// All paths of length <= max_length in basis order.
std::vector<Path> basis_up_to(const GradedQuiver& q, std::size_t max_length);

/// A finite linear combination of paths; zero coefficients are never stored.
class AlgElement {
 public:
  AlgElement(QuiverPtr quiver, Field field) : quiver_(std::move(quiver)), field_(field) {}

  static AlgElement of_path(QuiverPtr quiver, Field field, const Path& p);
  static AlgElement of_path(QuiverPtr quiver, Field field, const Path& p, const Scalar& coeff);
  /// Sum of all vertex idempotents.
  static AlgElement unit(QuiverPtr quiver, Field field);

  const QuiverPtr& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  const std::map<Path, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Path& p) const;

  void add_term(const Path& p, const Scalar& coeff);

  AlgElement& operator+=(const AlgElement& rhs);
  AlgElement& operator-=(const AlgElement& rhs);
  AlgElement& operator*=(const Scalar& s);
  AlgElement operator-() const;
  friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
  friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
  friend AlgElement operator*(AlgElement a, const Scalar& s) { return a *= s; }
  friend AlgElement operator*(const Scalar& s, AlgElement a) { return a *= s; }
  /// Throws QuiverMismatch / FieldMismatch.
  friend AlgElement operator*(const AlgElement& x, const AlgElement& y);

  bool operator==(const AlgElement& rhs) const;

  /// Common degree of all terms, or nullopt when inhomogeneous (0 for zero).
  std::optional<int> homogeneous_degree() const;
  std::optional<std::size_t> homogeneous_length() const;

  std::string to_string() const;

 private:
  void check_compatible(const AlgElement& rhs) const;

  QuiverPtr quiver_;
  Field field_;
  std::map<Path, Scalar> terms_;
};

AlgElement multiply(const AlgElement& x, const AlgElement& y);

bool same_quiver(const QuiverPtr& a, const QuiverPtr& b);

}  // namespace skewgin
