#pragma once

// Shared small examples for the test binaries.

#include <memory>
#include <string>
#include <vector>

#include "skewgin/action.hpp"
#include "skewgin/crossed.hpp"
#include "skewgin/group.hpp"
#include "skewgin/morita.hpp"
#include "skewgin/potential.hpp"
#include "skewgin/quiver.hpp"

namespace fixtures {

using namespace skewgin;

inline QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<GradedQuiver::ArrowSpec> arrows) {
  return std::make_shared<const GradedQuiver>(std::move(vertices), arrows);
}

/// One vertex v with loops x, y, z.
inline QuiverPtr three_loops() { return make_quiver({"v"}, {{"x", "v", "v", 0}, {"y", "v", "v", 0}, {"z", "v", "v", 0}}); }

inline Path word(const GradedQuiver& q, const std::vector<std::string>& names) {
  std::vector<ArrowId> ids;
  for (const auto& n : names) ids.push_back(q.arrow_id(n));
  return Path::from_arrows(q, ids);
}

inline AlgElement element(const QuiverPtr& q, const Field& f, const std::vector<std::pair<long long, std::vector<std::string>>>& terms) {
  AlgElement out(q, f);
  for (const auto& [c, w] : terms) out.add_term(word(*q, w), f.from_int(c));
  return out;
}

inline Potential potential(const QuiverPtr& q, const Field& f, const std::vector<std::pair<long long, std::vector<std::string>>>& terms) {
  std::vector<Potential::RawTerm> raw;
  for (const auto& [c, w] : terms) raw.emplace_back(f.from_int(c), word(*q, w));
  return Potential::canonicalize(q, f, raw);
}

/// xyz - xzy on the three-loop quiver.
inline Potential cubic(const QuiverPtr& q, const Field& f) { return potential(q, f, {{1, {"x", "y", "z"}}, {-1, {"x", "z", "y"}}}); }

inline GroupPtr cyclic(std::size_t n) { return std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(n)); }
inline GroupPtr trivial_group() { return std::make_shared<const FiniteGroup>(FiniteGroup::trivial()); }

/// Z/3 generator scales every loop by omega.
inline QuiverAction scaling_action(const QuiverPtr& q, const Field& f, const Scalar& omega) {
  auto g = cyclic(3);
  ElementAction gen;
  gen.vertex_perm = {0};
  for (ArrowId a = 0; a < q->arrow_count(); ++a) gen.arrow_images.push_back({{a, omega}});
  return QuiverAction::from_generators(g, q, f, {{1, gen}});
}

/// Z/3 generator permutes x -> y -> z -> x.
inline QuiverAction permutation_action(const QuiverPtr& q, const Field& f) {
  auto g = cyclic(3);
  ElementAction gen;
  gen.vertex_perm = {0};
  gen.arrow_images = {{{q->arrow_id("y"), f.one()}}, {{q->arrow_id("z"), f.one()}}, {{q->arrow_id("x"), f.one()}}};
  return QuiverAction::from_generators(g, q, f, {{1, gen}});
}

/// Vertices 1, 2 with a: 1 -> 2 and b: 2 -> 1; Z/2 swaps both.
inline QuiverPtr two_cycle() { return make_quiver({"1", "2"}, {{"a", "1", "2", 0}, {"b", "2", "1", 0}}); }

inline QuiverAction swap_action(const QuiverPtr& q, const Field& f) {
  auto g = cyclic(2);
  ElementAction gen;
  gen.vertex_perm = {1, 0};
  gen.arrow_images = {{{q->arrow_id("b"), f.one()}}, {{q->arrow_id("a"), f.one()}}};
  return QuiverAction::from_generators(g, q, f, {{1, gen}});
}

/// S3 as permutations of {0,1,2}: 1, t12, t13, t23, c = (0 1 2), c2; product g h = g after h.
inline GroupPtr s3() {
  std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
  for (std::size_t g = 0; g < 6; ++g) {
    for (std::size_t h = 0; h < 6; ++h) {
      std::vector<std::size_t> gh = {perms[g][perms[h][0]], perms[g][perms[h][1]], perms[g][perms[h][2]]};
      for (std::size_t k = 0; k < 6; ++k) {
        if (perms[k] == gh) table[g][h] = k;
      }
    }
  }
  return std::make_shared<const FiniteGroup>(std::vector<std::string>{"1", "t12", "t13", "t23", "c", "c2"}, table);
}

inline int s3_sign(GroupElement g) { return g >= 1 && g <= 3 ? -1 : 1; }

/// S3 permuting the three loops, transpositions with an extra sign (a subgroup of SL3).
inline QuiverAction s3_signed_action(const QuiverPtr& q, const Field& f) {
  auto g = s3();
  std::vector<std::vector<std::size_t>> perms = {{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  std::vector<ElementAction> elements;
  for (GroupElement h = 0; h < 6; ++h) {
    ElementAction e;
    e.vertex_perm = {0};
    for (ArrowId a = 0; a < 3; ++a) e.arrow_images.push_back({{static_cast<ArrowId>(perms[h][a]), f.from_int(s3_sign(h))}});
    elements.push_back(e);
  }
  return QuiverAction(g, q, f, elements);
}

/// Trivial, sign and a Young symmetrizer idempotent (1 + t12)(1 - t13)/3 for the two-dimensional irreducible.
inline IdempotentSet s3_idempotents(const GroupPtr& g, const Field& f) {
  GroupAlgebraElement triv(g, f), sign(g, f);
  for (GroupElement h = 0; h < 6; ++h) {
    triv.add_term(h, f.from_int(1) / f.from_int(6));
    sign.add_term(h, f.from_int(s3_sign(h)) / f.from_int(6));
  }
  auto one = GroupAlgebraElement::one(g, f);
  auto std_idem = (one + GroupAlgebraElement::of(g, f, 1)) * (one - GroupAlgebraElement::of(g, f, 2));
  std_idem *= f.one() / f.from_int(3);
  return IdempotentSet{g, g->all(), {triv, sign, std_idem}, {1, 1, 2}};
}

inline ContextPtr context(QuiverAction action) { return std::make_shared<const CrossedContext>(std::move(action)); }

inline Field gf7() { return Field::prime(7); }

}  // namespace fixtures
