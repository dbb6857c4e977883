#pragma once

// Potentials: linear combinations of cycles modulo graded rotation
//   u v  ~  (-1)^{deg(u) deg(v)} v u,
// stored as one canonical representative per rotation orbit.

#include <optional>
#include <utility>
#include <vector>

#include "skewgin/quiver.hpp"

namespace skewgin {

class Potential {
 public:
  using RawTerm = std::pair<Scalar, Path>;

  Potential(QuiverPtr quiver, Field field) : quiver_(std::move(quiver)), field_(field) {}

  /// Throws NotACycle when a path is not closed.
  static Potential canonicalize(QuiverPtr quiver, Field field, const std::vector<RawTerm>& raw);
  /// The class of an element of kQ whose terms are all cycles.
  static Potential from_element(const AlgElement& x);

  const QuiverPtr& quiver() const noexcept { return quiver_; }
  const Field& field() const noexcept { return field_; }
  /// Canonical representatives: least rotation of each orbit, signed coefficient.
  const std::map<Path, Scalar>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Sum of canonical representatives as an element of kQ.
  AlgElement representative() const;

  /// Common length of all cycles (0 for the zero potential), nullopt if mixed.
  std::optional<std::size_t> common_length() const;

  Potential& operator+=(const Potential& rhs);
  Potential operator-(const Potential& rhs) const;
  Potential& operator*=(const Scalar& s);

  bool operator==(const Potential& rhs) const {
    return field_ == rhs.field_ && same_quiver(quiver_, rhs.quiver_) && terms_ == rhs.terms_;
  }

  std::string to_string() const;

 private:
  void add_cycle(const Path& cycle, const Scalar& coeff);

  QuiverPtr quiver_;
  Field field_;
  std::map<Path, Scalar> terms_;
};

/// Sign picked up by moving the first k arrows of a cycle to the back.
int rotation_sign(const GradedQuiver& q, const Path& cycle, std::size_t k);
/// The cycle with its first k arrows moved to the back.
Path rotate(const GradedQuiver& q, const Path& cycle, std::size_t k);

/// Cyclic derivative: for each occurrence of a, rotate it to the front
/// (collecting the rotation sign) and strip it. With degree-0 arrows this is
/// the unsigned sum over decompositions p = p1 a p2 of p2 p1.
AlgElement cyclic_derivative(const Potential& w, ArrowId a);

/// Common degree of all cycles; nullopt means inhomogeneous. Zero potential: 0.
std::optional<int> degree_of(const Potential& w);

}  // namespace skewgin
