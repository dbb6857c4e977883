#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "skewgin/action.hpp"
#include "skewgin/ginzburg.hpp"

using namespace skewgin;
using fixtures::word;

TEST_SUITE("quiver_action") {
  TEST_CASE("valid actions") {
    Field q = Field::rationals();
    auto two = fixtures::two_cycle();
    CHECK(validate_action(fixtures::swap_action(two, q)).failures.empty());
    auto loops = fixtures::three_loops();
    Field f7 = fixtures::gf7();
    CHECK(validate_action(fixtures::scaling_action(loops, f7, f7.from_int(2))).failures.empty());
    CHECK(validate_action(fixtures::permutation_action(loops, q)).failures.empty());
    CHECK(validate_action(fixtures::s3_signed_action(loops, q)).failures.empty());
  }

  TEST_CASE("block compatibility is enforced") {
    Field f = Field::rationals();
    auto q = fixtures::make_quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "1", "3", 0}});
    auto g = fixtures::cyclic(2);
    ElementAction id{{0, 1, 2}, {{{0, f.one()}}, {{1, f.one()}}}};
    ElementAction bad{{0, 1, 2}, {{{1, f.one()}}, {{0, f.one()}}}};
    QuiverAction action(g, q, f, {id, bad});
    CHECK_FALSE(validate_action(action).failures.empty());
  }

  TEST_CASE("omega scaling that is not a homomorphism") {
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    // omega = 3 has order 6, so g^3 != 1.
    bool rejected = false;
    try {
      rejected = !validate_action(fixtures::scaling_action(loops, f7, f7.from_int(3))).failures.empty();
    } catch (const Error&) {
      rejected = true;
    }
    CHECK(rejected);
  }

  TEST_CASE("acting on paths") {
    Field f = Field::rationals();
    auto q = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}, {"y", "v", "v", 0}});
    auto g = fixtures::cyclic(2);
    ElementAction swap{{0}, {{{1, f.one()}}, {{0, f.one()}}}};
    auto action = QuiverAction::from_generators(g, q, f, {{1, swap}});
    CHECK(act_on_path(action, 1, word(*q, {"x", "y"})) == AlgElement::of_path(q, f, word(*q, {"y", "x"})));
    auto x = fixtures::element(q, f, {{2, {"x", "x", "y"}}, {-1, {"y"}}});
    CHECK(act(action, 0, x) == x);

    auto loops = fixtures::three_loops();
    Field f7 = fixtures::gf7();
    auto scaling = fixtures::scaling_action(loops, f7, f7.from_int(2));
    auto xyz = AlgElement::of_path(loops, f7, word(*loops, {"x", "y", "z"}));
    CHECK(act(scaling, 1, xyz) == xyz);
    CHECK(act(scaling, 1, AlgElement::of_path(loops, f7, word(*loops, {"x"}))) == AlgElement::of_path(loops, f7, word(*loops, {"x"}), f7.from_int(2)));
  }

  TEST_CASE("potential invariance") {
    Field q = Field::rationals();
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    CHECK(is_potential_invariant(fixtures::cubic(loops, f7), fixtures::scaling_action(loops, f7, f7.from_int(2))));
    CHECK(is_potential_invariant(fixtures::cubic(loops, q), fixtures::permutation_action(loops, q)));
    CHECK(is_potential_invariant(fixtures::cubic(loops, q), fixtures::s3_signed_action(loops, q)));

    auto loop = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}});
    ElementAction negate{{0}, {{{0, q.from_int(-1)}}}};
    auto action = QuiverAction::from_generators(fixtures::cyclic(2), loop, q, {{1, negate}});
    CHECK_FALSE(is_potential_invariant(fixtures::potential(loop, q, {{1, {"x", "x", "x"}}}), action));
  }

  TEST_CASE("extension to the Ginzburg algebra") {
    Field q = Field::rationals();
    auto loops = fixtures::three_loops();
    auto w = fixtures::cubic(loops, q);
    auto p = ginzburg(loops, w, 3);
    auto ext = extend_to_ginzburg(fixtures::permutation_action(loops, q), p);
    CHECK(ext.report.checks == 21);
    CHECK(ext.report.ok());

    Field f7 = fixtures::gf7();
    auto p7 = ginzburg(loops, fixtures::cubic(loops, f7), 3);
    CHECK(extend_to_ginzburg(fixtures::scaling_action(loops, f7, f7.from_int(2)), p7).report.ok());
    CHECK(extend_to_ginzburg(fixtures::s3_signed_action(loops, q), p).report.ok());
    auto trivial = QuiverAction::trivial(fixtures::trivial_group(), loops, q);
    CHECK(extend_to_ginzburg(trivial, p).report.ok());

    auto loop = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}});
    ElementAction negate{{0}, {{{0, q.from_int(-1)}}}};
    auto action = QuiverAction::from_generators(fixtures::cyclic(2), loop, q, {{1, negate}});
    auto cube = fixtures::potential(loop, q, {{1, {"x", "x", "x"}}});
    CHECK_THROWS_AS(extend_to_ginzburg(action, ginzburg(loop, cube, 3)), Error);
  }

  TEST_CASE("stars transform by the inverse transpose") {
    // x -> 2x does not define a Z/2 action over Q, but the star rule and the
    // equivariance of d can still be checked on the element itself.
    Field q = Field::rationals();
    auto loop = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}});
    ElementAction doubling{{0}, {{{0, q.from_int(2)}}}};
    QuiverAction action(fixtures::cyclic(2), loop, q, {ElementAction{{0}, {{{0, q.one()}}}}, doubling});
    CHECK_FALSE(validate_action(action).failures.empty());
    auto p = ginzburg(loop, Potential(loop, q), 3);
    auto ext = extend_to_ginzburg(action, p);
    CHECK(ext.report.failures.empty());
    const auto& bar = *p.doubled().quiver;
    auto star = Path::of_arrow(bar, bar.arrow_id("x*"));
    CHECK(act_on_path(ext.action, 1, star) == AlgElement::of_path(p.doubled().quiver, q, star, q.one() / q.from_int(2)));
    auto c = p.differential(bar.arrow_id("c_v"));
    CHECK(act(ext.action, 1, c) == c);
  }

  TEST_CASE("act is multiplicative") {
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    std::mt19937_64 rng(5);
    auto paths = basis_up_to(*loops, 3);
    auto actions = {fixtures::scaling_action(loops, f7, f7.from_int(2)), fixtures::permutation_action(loops, f7),
                    fixtures::s3_signed_action(loops, f7)};
    for (const auto& action : actions) {
      for (int t = 0; t < 40; ++t) {
        AlgElement x(loops, f7), y(loops, f7);
        for (int k = 0; k < 3; ++k) {
          x.add_term(paths[rng() % paths.size()], f7.from_int(static_cast<long long>(rng() % 7)));
          y.add_term(paths[rng() % paths.size()], f7.from_int(static_cast<long long>(rng() % 7)));
        }
        GroupElement g = rng() % action.group()->order();
        CHECK(act(action, g, x * y) == act(action, g, x) * act(action, g, y));
      }
    }
  }

  TEST_CASE("derivatives transform like the arrows") {
    // For monomial actions ^g a = c b we expect ^g(d_a W) = c^{-1} d_b W.
    Field f7 = fixtures::gf7();
    auto loops = fixtures::three_loops();
    auto w = fixtures::cubic(loops, f7);
    for (const auto& action : {fixtures::scaling_action(loops, f7, f7.from_int(2)), fixtures::permutation_action(loops, f7),
                               fixtures::s3_signed_action(loops, f7)}) {
      for (GroupElement g = 0; g < action.group()->order(); ++g) {
        for (ArrowId a = 0; a < 3; ++a) {
          const auto& image = action.arrow_image(g, a);
          REQUIRE(image.size() == 1);
          auto lhs = act(action, g, cyclic_derivative(w, a));
          auto rhs = cyclic_derivative(w, image[0].first) * image[0].second.inverse();
          CHECK(lhs == rhs);
        }
      }
    }
  }
}
