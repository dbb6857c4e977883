#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "skewgin/quiver.hpp"

using namespace skewgin;
using fixtures::make_quiver;
using fixtures::word;

TEST_SUITE("quiver_core") {
  TEST_CASE("composition of paths") {
    auto q = make_quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "2", "3", 0}, {"c", "3", "1", 0}});
    auto ab = compose(word(*q, {"a"}), word(*q, {"b"}));
    REQUIRE(ab);
    CHECK(ab->src == q->vertex("1"));
    CHECK(ab->tgt == q->vertex("3"));
    CHECK(to_string(*q, *ab) == "a b");
    CHECK_FALSE(compose(word(*q, {"a"}), word(*q, {"c"})));
    CHECK(compose(Path::trivial(q->vertex("1")), word(*q, {"a"})) == word(*q, {"a"}));
    CHECK_THROWS_AS(word(*q, {"a", "c"}), Error);
  }

  TEST_CASE("bilinear product") {
    auto q = make_quiver({"1", "2", "3"}, {{"a", "1", "2", 0}, {"b", "2", "3", 0}});
    Field f = Field::rationals();
    auto a2 = AlgElement::of_path(q, f, word(*q, {"a"}), f.from_int(2));
    auto b3 = AlgElement::of_path(q, f, word(*q, {"b"}), f.from_int(3));
    CHECK(a2 * b3 == AlgElement::of_path(q, f, word(*q, {"a", "b"}), f.from_int(6)));
    CHECK((b3 * a2).is_zero());
  }

  TEST_CASE("products of loops") {
    auto q = make_quiver({"v"}, {{"a", "v", "v", 0}, {"b", "v", "v", 0}});
    Field f = Field::rationals();
    auto a = AlgElement::of_path(q, f, word(*q, {"a"}));
    auto b = AlgElement::of_path(q, f, word(*q, {"b"}));
    CHECK(a * a == AlgElement::of_path(q, f, word(*q, {"a", "a"})));
    auto expected = fixtures::element(q, f, {{1, {"a", "a"}}, {-1, {"a", "b"}}, {1, {"b", "a"}}, {-1, {"b", "b"}}});
    CHECK((a + b) * (a - b) == expected);
    CHECK(AlgElement::unit(q, f) * a == a);
  }

  TEST_CASE("path bases") {
    auto q = make_quiver({"v"}, {{"x", "v", "v", 0}, {"y", "v", "v", 0}});
    auto names = [&](std::size_t l) {
      std::vector<std::string> out;
      for (const auto& p : basis_up_to(*q, l)) out.push_back(p.is_trivial() ? "e" : to_string(*q, p));
      return out;
    };
    CHECK(names(1) == std::vector<std::string>{"e", "x", "y"});
    CHECK(names(2) == std::vector<std::string>{"e", "x", "y", "x x", "x y", "y x", "y y"});
    auto bare = make_quiver({"1", "2"}, {});
    CHECK(basis_up_to(*bare, 5).size() == 2);
  }

  TEST_CASE("quiver validation") {
    CHECK_THROWS_AS(make_quiver({"v", "v"}, {}), Error);
    CHECK_THROWS_AS(make_quiver({"v"}, {{"x", "v", "w", 0}}), Error);
    CHECK_THROWS_AS(make_quiver({"v"}, {{"x", "v", "v", 0}, {"x", "v", "v", 0}}), Error);
  }

  TEST_CASE("associativity and unit on random elements") {
    auto q = make_quiver({"1", "2"}, {{"a", "1", "2", 0}, {"b", "2", "1", 0}, {"c", "1", "1", 0}});
    Field f = Field::prime(11);
    std::mt19937_64 rng(7);
    auto paths = basis_up_to(*q, 2);
    auto draw = [&] {
      AlgElement x(q, f);
      for (int k = 0; k < 4; ++k) x.add_term(paths[rng() % paths.size()], f.from_int(static_cast<long long>(rng() % 11)));
      return x;
    };
    for (int t = 0; t < 100; ++t) {
      auto x = draw(), y = draw(), z = draw();
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(AlgElement::unit(q, f) * x == x);
      CHECK(x * AlgElement::unit(q, f) == x);
    }
  }

  TEST_CASE("degrees and homogeneity") {
    auto q = make_quiver({"v"}, {{"x", "v", "v", 1}, {"y", "v", "v", -1}});
    Field f = Field::rationals();
    CHECK(degree(*q, word(*q, {"x", "x", "y"})) == 1);
    auto mixed = fixtures::element(q, f, {{1, {"x"}}, {1, {"y"}}});
    CHECK_FALSE(mixed.homogeneous_degree());
    CHECK(mixed.homogeneous_length() == 1u);
    CHECK_FALSE(q->trivially_graded());
  }
}
