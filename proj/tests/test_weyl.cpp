#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "skewgin/weyl.hpp"

using namespace skewgin;

namespace {

const Field Q = Field::rationals();

WeylElement gen(std::size_t n, std::size_t k) { return WeylElement::generator(n, Q, k); }

WeylMonomial mono(std::vector<unsigned> x, std::vector<unsigned> d) { return {std::move(x), std::move(d)}; }

ChainKey key(Wedge w, WeylMonomial l, WeylMonomial r) { return {std::move(w), std::move(l), std::move(r)}; }

DenseMatrix diag(long long a, long long b, long long b_den = 1) {
  return {{Q.from_int(a), Q.zero()}, {Q.zero(), Q.from_int(b) / Q.from_int(b_den)}};
}

}  // namespace

TEST_SUITE("weyl_koszul") {
  TEST_CASE("commutation relation") {
    auto x = gen(1, 0), d = gen(1, 1);
    CHECK((d * x).to_string() == (x * d + WeylElement::one(1, Q)).to_string());
    CHECK(x * x == WeylElement::of(1, Q, mono({2}, {0}), Q.one()));
    auto expected = WeylElement::of(1, Q, mono({1}, {2}), Q.one()) + WeylElement::of(1, Q, mono({0}, {1}), Q.from_int(2));
    CHECK(d * d * x == expected);
    auto x2 = gen(2, 1), d1 = gen(2, 2);
    CHECK(d1 * x2 == x2 * d1);
  }

  TEST_CASE("normal ordering agrees with rewriting") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {1, 2}) {
      auto monos = weyl_monomials(n, 3);
      for (int t = 0; t < 150; ++t) {
        const auto& a = monos[rng() % monos.size()];
        const auto& b = monos[rng() % monos.size()];
        auto w = oracle::monomial_word(n, a);
        auto wb = oracle::monomial_word(n, b);
        w.insert(w.end(), wb.begin(), wb.end());
        auto product = WeylElement::of(n, Q, a, Q.one()) * WeylElement::of(n, Q, b, Q.one());
        CHECK(product == oracle::weyl_rewrite(n, Q, w));
      }
    }
  }

  TEST_CASE("associativity") {
    std::mt19937_64 rng(3);
    auto monos = weyl_monomials(2, 2);
    auto draw = [&] {
      WeylElement e(2, Q);
      for (int k = 0; k < 3; ++k) e.add_term(monos[rng() % monos.size()], Q.from_int(static_cast<long long>(rng() % 5) - 2));
      return e;
    };
    for (int t = 0; t < 50; ++t) {
      auto a = draw(), b = draw(), c = draw();
      CHECK((a * b) * c == a * (b * c));
    }
  }

  TEST_CASE("monomial counts") {
    CHECK(weyl_monomials(1, 2).size() == 6);
    CHECK(weyl_monomials(2, 1).size() == 5);
    CHECK(weyl_monomials(1, 0).size() == 1);
  }

  TEST_CASE("Koszul differential on small chains") {
    auto one = WeylMonomial::one(1);
    auto c = ChainElement::of(1, Q, key({0}, one, one));
    ChainElement expected(1, Q);
    expected.add_term(key({}, mono({1}, {0}), one), Q.one());
    expected.add_term(key({}, one, mono({1}, {0})), -Q.one());
    CHECK(koszul_differential(c) == expected);

    auto top = ChainElement::of(1, Q, key({0, 1}, one, one));
    ChainElement two(1, Q);
    auto x = gen(1, 0), d = gen(1, 1), unit = WeylElement::one(1, Q);
    two.add_product({1}, x, unit, -Q.one());
    two.add_product({1}, unit, x, Q.one());
    two.add_product({0}, d, unit, Q.one());
    two.add_product({0}, unit, d, -Q.one());
    CHECK(koszul_differential(top) == two);
    CHECK(koszul_differential(koszul_differential(top)).is_zero());
    CHECK(augmentation(koszul_differential(c)).is_zero());
  }

  TEST_CASE("bounded exactness") {
    auto r2 = bounded_exactness(1, 2, Q);
    CHECK(r2.ok());
    CHECK(r2.d_squared_zero);
    CHECK(r2.cokernel == 6);
    CHECK(r2.expected_cokernel == 6);
    for (const auto& p : r2.positions) {
      if (p.position > 0) CHECK(p.homology == 0);
    }
    CHECK(bounded_exactness(1, 0, Q).cokernel == 1);
    auto n2 = bounded_exactness(2, 1, Q);
    CHECK(n2.ok());
    for (const auto& p : n2.positions) {
      if (p.position > 0) CHECK(p.homology == 0);
    }
    CHECK(n2.cokernel == oracle::binomial(1 + 4, 4));
    auto dual = dual_bounded_exactness(1, 2, Q);
    CHECK(dual.ok());
    CHECK(dual.cokernel == 6);
    CHECK(bounded_exactness(1, 2, Field::prime(7)).ok());
  }

  TEST_CASE("size guard") {
    try {
      bounded_exactness(3, 1, Q);
      FAIL("expected SizeGuard");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SizeGuard);
    }
    CHECK_THROWS_AS(bounded_exactness(2, 4, Q, 100), Error);
  }

  TEST_CASE("symplectic equivariance") {
    DenseMatrix minus = diag(-1, -1);
    DenseMatrix squeeze = diag(2, 1, 2);
    CHECK(is_symplectic(1, minus, Q));
    CHECK(is_symplectic(1, squeeze, Q));
    CHECK_FALSE(is_symplectic(1, diag(2, 1), Q));
    auto report = check_sp_equivariance(1, {minus, squeeze}, 2, Q);
    CHECK(report.ok());
    for (const auto& m : report.matrices) CHECK(m.checked > 0);
    try {
      check_sp_equivariance(1, {diag(2, 1)}, 2, Q);
      FAIL("expected NotSymplectic");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotSymplectic);
    }
  }

  TEST_CASE("symplectic maps act by automorphisms") {
    DenseMatrix shear = {{Q.one(), Q.zero()}, {Q.from_int(3), Q.one()}};
    REQUIRE(is_symplectic(1, shear, Q));
    auto monos = weyl_monomials(1, 2);
    for (const auto& a : monos) {
      for (const auto& b : monos) {
        auto u = WeylElement::of(1, Q, a, Q.one()), v = WeylElement::of(1, Q, b, Q.one());
        CHECK(act_on_weyl(shear, u * v) == act_on_weyl(shear, u) * act_on_weyl(shear, v));
      }
    }
    CHECK(check_sp_equivariance(1, {shear}, 2, Q).ok());
  }
}
