#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "skewgin/potential.hpp"

using namespace skewgin;
using fixtures::word;

TEST_SUITE("potential_calculus") {
  TEST_CASE("rotations of one orbit collapse") {
    auto q = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}, {"y", "v", "v", 0}});
    Field f = Field::rationals();
    auto twice = fixtures::potential(q, f, {{1, {"x", "y"}}, {1, {"y", "x"}}});
    REQUIRE(twice.terms().size() == 1);
    CHECK(twice.terms().begin()->first == word(*q, {"x", "y"}));
    CHECK(twice.terms().begin()->second == f.from_int(2));
    CHECK(fixtures::potential(q, f, {{1, {"x", "y"}}, {-1, {"y", "x"}}}).is_zero());
  }

  TEST_CASE("graded rotation sign") {
    auto q = fixtures::make_quiver({"v"}, {{"a", "v", "v", 1}, {"b", "v", "v", 1}});
    Field f = Field::rationals();
    CHECK(rotation_sign(*q, word(*q, {"a", "b"}), 1) == -1);
    auto w1 = fixtures::potential(q, f, {{1, {"a", "b"}}});
    auto w2 = fixtures::potential(q, f, {{-1, {"b", "a"}}});
    CHECK(w1 == w2);
  }

  TEST_CASE("cyclic derivatives") {
    auto q = fixtures::three_loops();
    Field f = Field::rationals();
    auto w = fixtures::cubic(q, f);
    CHECK(cyclic_derivative(w, q->arrow_id("x")) == fixtures::element(q, f, {{1, {"y", "z"}}, {-1, {"z", "y"}}}));
    CHECK(cyclic_derivative(w, q->arrow_id("y")) == fixtures::element(q, f, {{1, {"z", "x"}}, {-1, {"x", "z"}}}));
    auto only_xy = fixtures::potential(q, f, {{1, {"x", "y", "x", "y"}}});
    CHECK(cyclic_derivative(only_xy, q->arrow_id("z")).is_zero());
    auto loop = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}});
    auto square = fixtures::potential(loop, f, {{1, {"x", "x"}}});
    CHECK(cyclic_derivative(square, 0) == fixtures::element(loop, f, {{2, {"x"}}}));
  }

  TEST_CASE("degree of a potential") {
    auto q = fixtures::make_quiver({"v"}, {{"x", "v", "v", 0}, {"y", "v", "v", -1}});
    Field f = Field::rationals();
    CHECK(degree_of(fixtures::potential(q, f, {{1, {"x", "x", "x"}}})) == 0);
    CHECK_FALSE(degree_of(fixtures::potential(q, f, {{1, {"x", "x"}}, {1, {"y"}}})));
    CHECK(degree_of(Potential(q, f)) == 0);
    auto cube = fixtures::three_loops();
    CHECK(degree_of(fixtures::cubic(cube, f)) == 0);
  }

  TEST_CASE("non-cycles are rejected") {
    auto q = fixtures::two_cycle();
    Field f = Field::rationals();
    CHECK_THROWS_AS(fixtures::potential(q, f, {{1, {"a"}}}), Error);
  }

  TEST_CASE("canonical form is invariant under rotation and linear") {
    auto q = fixtures::make_quiver({"1", "2"}, {{"a", "1", "2", 0}, {"b", "2", "1", 1}, {"c", "1", "1", -1}, {"d", "2", "2", 0}});
    Field f = Field::prime(13);
    std::mt19937_64 rng(99);
    std::vector<Path> cycles;
    for (std::size_t l = 1; l <= 4; ++l) {
      for (const auto& p : paths_of_length(*q, l)) {
        if (p.is_cycle()) cycles.push_back(p);
      }
    }
    for (int t = 0; t < 200; ++t) {
      const Path& c = cycles[rng() % cycles.size()];
      Scalar coeff = f.from_int(static_cast<long long>(1 + rng() % 12));
      std::size_t k = rng() % c.length();
      auto w = Potential::canonicalize(q, f, {{coeff, c}});
      auto rotated = Potential::canonicalize(q, f, {{coeff * f.from_int(rotation_sign(*q, c, k)), rotate(*q, c, k)}});
      CHECK(w == rotated);
      const Path& other = cycles[rng() % cycles.size()];
      auto v = Potential::canonicalize(q, f, {{f.one(), other}});
      for (ArrowId a = 0; a < q->arrow_count(); ++a) {
        auto sum = w;
        sum += v;
        CHECK(cyclic_derivative(sum, a) == cyclic_derivative(w, a) + cyclic_derivative(v, a));
      }
    }
  }
}
