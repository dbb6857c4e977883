#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "skewgin/ginzburg.hpp"
#include "skewgin/morita.hpp"

using namespace skewgin;
using fixtures::word;

namespace {

std::vector<std::pair<Scalar, std::vector<ArrowId>>> terms_of(const Potential& w) {
  std::vector<std::pair<Scalar, std::vector<ArrowId>>> out;
  for (const auto& [p, c] : w.terms()) out.emplace_back(c, p.arrows);
  return out;
}

std::vector<std::size_t> corner_column(const DimensionReport& r) {
  std::vector<std::size_t> out;
  for (const auto& row : r.rows) out.push_back(row.corner);
  return out;
}

std::vector<std::size_t> reduced_column(const DimensionReport& r) {
  std::vector<std::size_t> out;
  for (const auto& row : r.rows) out.push_back(row.reduced);
  return out;
}

}  // namespace

TEST_SUITE("morita_reduction") {
  TEST_CASE("orbit data") {
    Field f = Field::rationals();
    auto loops = fixtures::three_loops();
    auto trivial = orbit_data(QuiverAction::trivial(fixtures::trivial_group(), fixtures::two_cycle(), f));
    CHECK(trivial.representatives == std::vector<VertexId>{0, 1});
    CHECK(trivial.kappa == std::vector<GroupElement>{0, 0});
    CHECK(trivial.stabilizers[0] == std::vector<GroupElement>{0});

    auto swap = orbit_data(fixtures::swap_action(fixtures::two_cycle(), f));
    CHECK(swap.representatives == std::vector<VertexId>{0});
    CHECK(swap.representative_of == std::vector<VertexId>{0, 0});
    CHECK(swap.kappa == std::vector<GroupElement>{0, 1});
    CHECK(swap.stabilizers[0] == std::vector<GroupElement>{0});

    Field f7 = fixtures::gf7();
    auto z3 = orbit_data(fixtures::scaling_action(loops, f7, f7.from_int(2)));
    CHECK(z3.representatives == std::vector<VertexId>{0});
    CHECK(z3.stabilizers[0] == std::vector<GroupElement>{0, 1, 2});
  }

  TEST_CASE("bimodule of arrows") {
    Field f = Field::rationals();
    auto loops = fixtures::three_loops();
    auto trivial = fixtures::context(QuiverAction::trivial(fixtures::trivial_group(), loops, f));
    auto od = orbit_data(trivial->action());
    auto m = build_bimodule(trivial, od);
    CHECK(m.spanning_size() == 3);
    auto report = check_bimodule(trivial, od, m);
    CHECK(report.ok());
    CHECK(report.dimensions.at({0, 0}) == 3);

    Field f7 = fixtures::gf7();
    auto mckay = fixtures::context(fixtures::scaling_action(loops, f7, f7.from_int(2)));
    auto od7 = orbit_data(mckay->action());
    auto m7 = build_bimodule(mckay, od7);
    CHECK(m7.spanning_size() == 27);
    auto r7 = check_bimodule(mckay, od7, m7);
    CHECK(r7.ok());
    CHECK(r7.dimensions.at({0, 0}) == 9);

    auto swap = fixtures::context(fixtures::swap_action(fixtures::two_cycle(), f));
    auto ods = orbit_data(swap->action());
    auto ms = build_bimodule(swap, ods);
    REQUIRE(ms.blocks.size() == 1);
    CHECK(check_bimodule(swap, ods, ms).dimensions.at({0, 0}) == 1);
  }

  TEST_CASE("trivial group gives back the quiver") {
    Field f = Field::rationals();
    auto loops = fixtures::three_loops();
    auto ctx = fixtures::context(QuiverAction::trivial(fixtures::trivial_group(), loops, f));
    auto md = reduced_quiver(ctx);
    CHECK(*md.reduced == *loops);
    for (ArrowId a = 0; a < 3; ++a) {
      CHECK(md.arrows[a].image == CrossedElement::of(ctx, Path::of_arrow(*loops, a), 0));
    }
    CHECK(check_embedding(md, 3).ok());
    auto w = fixtures::cubic(loops, f);
    auto t = transport_potential(w, md);
    CHECK(t.reduced.to_string() == w.to_string());
    CHECK(t.class_verified);
    auto dims = morita_dimension_check(w, t.reduced, md, 3);
    CHECK(dims.ok());
    CHECK(corner_column(dims) == std::vector<std::size_t>{1, 3, 6, 10});
    CHECK(transport_potential(Potential(loops, f), md).reduced.is_zero());
  }

  TEST_CASE("McKay quiver of Z/3 in SL3") {
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    auto ctx = fixtures::context(fixtures::scaling_action(loops, f7, f7.from_int(2)));
    auto md = reduced_quiver(ctx);
    const auto& rq = *md.reduced;
    REQUIRE(rq.vertex_count() == 3);
    REQUIRE(rq.arrow_count() == 9);
    // Each character has three arrows to one neighbour, and the neighbours form a 3-cycle.
    std::map<std::pair<VertexId, VertexId>, int> count;
    for (const auto& a : rq.arrows()) count[{a.src, a.tgt}]++;
    CHECK(count.size() == 3);
    std::set<VertexId> sources, targets;
    for (const auto& [pair, n] : count) {
      CHECK(n == 3);
      CHECK(pair.first != pair.second);
      sources.insert(pair.first);
      targets.insert(pair.second);
    }
    CHECK(sources.size() == 3);
    CHECK(targets.size() == 3);
    for (VertexId k = 0; k < 3; ++k) CHECK(count.count({k, (k + 2) % 3}) == 1);

    auto emb = check_embedding(md, 3);
    CHECK(emb.ok());
    for (const auto& level : emb.levels) {
      CHECK(level.image_rank == level.paths);
      CHECK(level.full);
    }
    for (VertexId v = 0; v < 3; ++v) {
      auto e = embed_path(md, Path::trivial(v));
      CHECK(e * e == e);
      CHECK(e == md.vertices[v].idempotent);
    }

    auto w = fixtures::cubic(loops, f7);
    auto t = transport_potential(w, md);
    CHECK(t.class_verified);
    CHECK(degree_of(t.reduced) == 0);
    CHECK(t.reduced.common_length() == 3u);
    CHECK(t.reduced.terms().size() == 6);
    auto dims = morita_dimension_check(w, t.reduced, md, 4);
    CHECK(dims.ok());
    CHECK(corner_column(dims) == std::vector<std::size_t>{3, 9, 18, 30, 45});
    CHECK(reduced_column(dims) == oracle::jacobian_dims(rq, f7, terms_of(t.reduced), 4));
  }

  TEST_CASE("perturbed reduced potential is caught") {
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    auto ctx = fixtures::context(fixtures::scaling_action(loops, f7, f7.from_int(2)));
    auto md = reduced_quiver(ctx);
    auto w = fixtures::cubic(loops, f7);
    auto t = transport_potential(w, md);
    std::vector<Potential::RawTerm> raw;
    bool first = true;
    for (const auto& [p, c] : t.reduced.terms()) {
      raw.emplace_back(first ? c * f7.from_int(2) : c, p);
      first = false;
    }
    auto perturbed = Potential::canonicalize(md.reduced, f7, raw);
    CHECK_FALSE(same_class(w, perturbed, md));
    // rescaling one coefficient is undone by rescaling arrows, so only the
    // class check sees it; dropping a term changes the Jacobian algebra
    raw.pop_back();
    auto truncated = Potential::canonicalize(md.reduced, f7, raw);
    CHECK_FALSE(same_class(w, truncated, md));
    CHECK_FALSE(morita_dimension_check(w, truncated, md, 4).ok());
  }

  TEST_CASE("free swap action") {
    Field f = Field::rationals();
    auto two = fixtures::two_cycle();
    auto ctx = fixtures::context(fixtures::swap_action(two, f));
    auto md = reduced_quiver(ctx);
    CHECK(md.reduced->vertex_count() == 1);
    CHECK(md.reduced->arrow_count() == 1);
    CHECK(check_embedding(md, 4).ok());
    auto w = fixtures::potential(two, f, {{1, {"a", "b", "a", "b"}}});
    auto t = transport_potential(w, md);
    CHECK(t.class_verified);
    CHECK(morita_dimension_check(w, t.reduced, md, 4).ok());
  }

  TEST_CASE("nonabelian stabilizer with supplied idempotents") {
    Field f = Field::rationals();
    auto loops = fixtures::three_loops();
    auto action = fixtures::s3_signed_action(loops, f);
    auto ctx = fixtures::context(action);
    CHECK_THROWS_AS(reduced_quiver(ctx), Error);
    auto md = reduced_quiver(ctx, {{0, fixtures::s3_idempotents(action.group(), f)}});
    CHECK(md.reduced->vertex_count() == 3);
    CHECK(md.reduced->arrow_count() == 8);
    CHECK(check_embedding(md, 2).ok());
    auto w = fixtures::cubic(loops, f);
    auto t = transport_potential(w, md);
    CHECK(t.class_verified);
    auto dims = morita_dimension_check(w, t.reduced, md, 4);
    CHECK(dims.ok());
    CHECK(reduced_column(dims) == oracle::jacobian_dims(*md.reduced, f, terms_of(t.reduced), 4));
  }

  TEST_CASE("dimension table does not depend on arrow order") {
    Field f7 = fixtures::gf7();
    auto forward = fixtures::three_loops();
    auto backward = fixtures::make_quiver({"v"}, {{"z", "v", "v", 0}, {"y", "v", "v", 0}, {"x", "v", "v", 0}});
    std::vector<std::vector<std::size_t>> columns;
    for (const auto& q : {forward, backward}) {
      auto ctx = fixtures::context(fixtures::scaling_action(q, f7, f7.from_int(2)));
      auto md = reduced_quiver(ctx);
      auto w = fixtures::cubic(q, f7);
      auto dims = morita_dimension_check(w, transport_potential(w, md).reduced, md, 4);
      CHECK(dims.ok());
      columns.push_back(reduced_column(dims));
    }
    CHECK(columns[0] == columns[1]);
  }

  TEST_CASE("transport rejects bad input") {
    Field f7 = fixtures::gf7();
    auto loop = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}});
    ElementAction negate{{0}, {{{0, f7.from_int(-1)}}}};
    auto ctx = fixtures::context(QuiverAction::from_generators(fixtures::cyclic(2), loop, f7, {{1, negate}}));
    auto md = reduced_quiver(ctx);
    try {
      transport_potential(fixtures::potential(loop, f7, {{1, {"x", "x", "x"}}}), md);
      FAIL("expected NotInvariantPotential");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotInvariantPotential);
    }
    auto mixed = fixtures::potential(loop, f7, {{1, {"x", "x"}}, {1, {"x", "x", "x", "x"}}});
    CHECK_THROWS_AS(transport_potential(mixed, md), Error);
  }
}
