#pragma once

// The Ginzburg dg algebra A(Q, W) on the doubled quiver, its differential,
// the d^2 = 0 check, and bounded-length Jacobian algebra dimensions.

#include <string>
#include <vector>

#include "skewgin/potential.hpp"

namespace skewgin {

enum class GeneratorKind { original, star, loop };

/// Q-bar: the arrows of Q, a dual a*: y -> x of degree 2-d-n for every
/// a: x -> y of degree n, and a loop c_i of degree 1-d at every vertex.
struct DoubledQuiver {
  QuiverPtr base;
  QuiverPtr quiver;
  int cy_dimension = 3;
  std::vector<ArrowId> original;  ///< Q arrow id -> Q-bar arrow id
  std::vector<ArrowId> star;      ///< Q arrow id -> Q-bar id of a*
  std::vector<ArrowId> loop;      ///< vertex -> Q-bar id of c_i

  GeneratorKind kind(ArrowId bar_arrow) const;
  /// The Q arrow (for original/star) or vertex (for loops) behind a Q-bar arrow.
  std::size_t origin(ArrowId bar_arrow) const;

  /// kQ -> kQ-bar.
  AlgElement lift(const AlgElement& x) const;
};

/// Star names are "<a>*", loop names "c_<vertex>". Throws InvalidArgument for d < 3.
DoubledQuiver double_quiver(QuiverPtr base, int d);

class GinzburgPresentation {
 public:
  GinzburgPresentation(DoubledQuiver doubled, Potential potential, std::vector<AlgElement> differential);

  const DoubledQuiver& doubled() const noexcept { return doubled_; }
  const Potential& potential() const noexcept { return potential_; }
  int cy_dimension() const noexcept { return doubled_.cy_dimension; }
  const Field& field() const noexcept { return potential_.field(); }
  /// Differential of the Q-bar arrow with the given id.
  const AlgElement& differential(ArrowId bar_arrow) const { return differential_.at(bar_arrow); }
  const std::vector<AlgElement>& differentials() const noexcept { return differential_; }

  /// Replaces d on one generator; used to build deliberately broken inputs.
  void override_differential(ArrowId bar_arrow, AlgElement value);

  /// d extended as a degree +1 derivation: d(uv) = d(u) v + (-1)^{deg u} u d(v).
  AlgElement apply(const AlgElement& x) const;

 private:
  DoubledQuiver doubled_;
  Potential potential_;
  std::vector<AlgElement> differential_;
};

/// d(a) = 0, d(a*) = cyclic derivative of W along a,
/// d(c_i) = sum_{a: i->.} a a* - sum_{a: .->i} a* a.
/// Throws DegreeMismatch unless W is homogeneous of degree 3 - d.
GinzburgPresentation ginzburg(QuiverPtr base, const Potential& w, int d);

struct DSquaredViolation {
  std::string generator;
  std::string rule;
  AlgElement value;
};

struct DegreeViolation {
  std::string generator;
  int generator_degree = 0;
  std::string found;  ///< degree of d(g), or "inhomogeneous"
};

struct DSquaredReport {
  std::vector<DSquaredViolation> violations;
  std::vector<DegreeViolation> degree_violations;
  bool ok() const noexcept { return violations.empty() && degree_violations.empty(); }
};

/// Evaluates d^2 on every generator and checks deg d(g) = deg g + 1.
DSquaredReport check_d_squared(const GinzburgPresentation& p);

/// Human-readable statement of the differential rule for a generator kind.
std::string differential_rule(GeneratorKind kind);

/// The relations of the Jacobian algebra: all cyclic derivatives of W.
std::vector<AlgElement> jacobian_relations(const Potential& w);

/// dim J_l for l = 0..max_length, J = kQ / (cyclic derivatives of W).
/// Requires degree-0 arrows and a length-homogeneous W (NotLengthHomogeneous).
std::vector<std::size_t> jacobian_truncation(const Potential& w, std::size_t max_length);

/// Dimension of the length-l part of the two-sided ideal generated by the
/// given length-homogeneous relations.
std::size_t ideal_dimension(const std::vector<AlgElement>& relations, std::size_t length);
/// Spanning set of that part: all p r q with len p + len r + len q = length.
std::vector<AlgElement> ideal_spanning_set(const std::vector<AlgElement>& relations, std::size_t length);

}  // namespace skewgin
