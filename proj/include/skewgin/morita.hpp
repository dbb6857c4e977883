#pragma once

// Reduction of kQ # G to the path algebra of a smaller quiver Q': orbit
// data, the arrow bimodule M, the corner eMe, and transport of potentials.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skewgin/crossed.hpp"
#include "skewgin/group.hpp"
#include "skewgin/potential.hpp"

namespace skewgin {

struct OrbitData {
  std::vector<VertexId> representatives;               ///< least vertex id of each orbit, ascending
  std::vector<VertexId> representative_of;             ///< per vertex
  std::vector<GroupElement> kappa;                     ///< per vertex: least g with g.i a representative
  std::vector<std::vector<GroupElement>> stabilizers;  ///< per vertex, ascending
};

OrbitData orbit_data(const QuiverAction& action);

/// Part of M between representatives i and j coming from one diagonal orbit
/// of pairs, spanned by h kappa_{i'} a kappa_{j'}^{-1} h' for h in G_i, h' in
/// G_j and arrows a: i' -> j'.
struct BimoduleBlock {
  VertexId src_rep = 0;
  VertexId tgt_rep = 0;
  VertexId orbit_src = 0;  ///< i'
  VertexId orbit_tgt = 0;  ///< j'
  std::vector<CrossedElement> spanning;
};

struct Bimodule {
  std::vector<BimoduleBlock> blocks;
  std::size_t spanning_size() const;
};

Bimodule build_bimodule(const ContextPtr& ctx, const OrbitData& orbits);

struct BimoduleReport {
  std::vector<std::string> failures;
  std::map<std::pair<VertexId, VertexId>, std::size_t> dimensions;  ///< rank of M between representatives
  bool ok() const noexcept { return failures.empty(); }
};

/// Every spanning element lies in e_i L_1 e_j, and M spans that whole space.
BimoduleReport check_bimodule(const ContextPtr& ctx, const OrbitData& orbits, const Bimodule& m);

struct ReducedVertex {
  std::string name;
  VertexId representative = 0;
  std::size_t irreducible = 0;
  std::size_t irreducible_dim = 1;
  CrossedElement idempotent;
};

struct ReducedArrow {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
  int degree = 0;
  CrossedKey pivot;  ///< leading term of the reduced row that defines the arrow
  CrossedElement image;
};

struct MoritaData {
  ContextPtr ctx;
  OrbitData orbits;
  Bimodule bimodule;
  std::map<VertexId, IdempotentSet> idempotents;  ///< per representative
  CrossedElement e;
  std::vector<ReducedVertex> vertices;  ///< in the vertex order of `reduced`
  std::vector<ReducedArrow> arrows;      ///< indexed by arrow id of `reduced`
  QuiverPtr reduced;
};

/// Representatives missing from `supplied` get character idempotents when
/// their stabilizer is abelian. Throws IncompleteIdempotents when a
/// stabilizer has no usable set.
MoritaData reduced_quiver(const ContextPtr& ctx, const std::map<VertexId, IdempotentSet>& supplied = {});

CrossedElement embed(const MoritaData& md, const AlgElement& x);
CrossedElement embed_path(const MoritaData& md, const Path& p);

struct EmbeddingLevel {
  std::size_t length = 0;
  std::size_t paths = 0;
  std::size_t image_rank = 0;
  bool full = true;  ///< L_l is spanned by products u e v
};

struct EmbeddingReport {
  std::vector<EmbeddingLevel> levels;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

/// Idempotent relations, arrow placement, multiplicativity, injectivity and
/// fullness of e for all lengths up to max_length.
EmbeddingReport check_embedding(const MoritaData& md, std::size_t max_length);

struct Transport {
  Potential reduced;
  HC0Reduction reduction;
  bool class_verified = false;  ///< embed(W') and W differ by commutators
};

/// Trivially graded quivers only. Throws DegreeMismatch, NotInvariantPotential,
/// NotLengthHomogeneous, NoSolution, BasisExpressFailure.
Transport transport_potential(const Potential& w, const MoritaData& md);

/// Exact check that embed(w_reduced) is congruent to w modulo commutators.
bool same_class(const Potential& w, const Potential& w_reduced, const MoritaData& md);

struct DimensionRow {
  std::size_t length = 0;
  std::size_t corner = 0;    ///< dim e (J(Q,W) # G)_l e
  std::size_t reduced = 0;   ///< dim J(Q',W')_l
  bool pass() const noexcept { return corner == reduced; }
};

struct DimensionReport {
  std::vector<DimensionRow> rows;
  std::vector<std::string> failures;
  bool ok() const noexcept { return failures.empty(); }
};

DimensionReport morita_dimension_check(const Potential& w, const Potential& w_reduced, const MoritaData& md,
                                       std::size_t max_length);

}  // namespace skewgin
