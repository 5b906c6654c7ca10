#include <random>

#include "doctest.h"
#include "redlab/errors.hpp"
#include "redlab/monomial_ideal.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace redlab;

namespace {

MonomialIdeal mono(std::size_t nvars, std::initializer_list<ExponentVector> gens) {
  return MonomialIdeal::minimalize(gens, nvars);
}

oracle::Exps sorted(oracle::Exps v) { return oracle::minimal(std::move(v)); }

oracle::Exps gens_of(const MonomialIdeal& a) { return sorted(a.gens()); }

}  // namespace

TEST_SUITE("monomial_ideal") {
  TEST_CASE("minimalize") {
    CHECK(gens_of(mono(2, {{1, 1}, {3, 0}, {0, 3}, {2, 2}})) == sorted({{1, 1}, {3, 0}, {0, 3}}));
    CHECK(gens_of(mono(2, {{1, 0}})) == sorted({{1, 0}}));
    CHECK(gens_of(mono(2, {{2, 0}, {1, 0}})) == sorted({{1, 0}}));
    const auto a = mono(3, {{1, 2, 0}, {0, 1, 1}, {1, 3, 1}});
    CHECK(MonomialIdeal::minimalize(std::span<const ExponentVector>(a.gens()), 3) == a);
  }

  TEST_CASE("products and multi-powers") {
    const auto i = mono(2, {{1, 0}, {0, 2}}), j = mono(2, {{0, 1}, {2, 0}});
    CHECK(gens_of(product(i, j)) == sorted({{1, 1}, {3, 0}, {0, 3}}));
    CHECK(product(i, MonomialIdeal::unit(2)) == i);
    CHECK(gens_of(product(power(i, 2), power(j, 2))) == sorted({{2, 2}, {4, 1}, {1, 4}, {6, 0}, {0, 6}}));
    const std::vector<MonomialIdeal> ij{i, j};
    CHECK(multi_power(ij, MultiIndex{1, 1}) == product(i, j));
    CHECK(multi_power(ij, MultiIndex{0, 0}).is_unit());
    CHECK(mu(multi_power(ij, MultiIndex{2, 2})) == 5);
    CHECK_THROWS_AS(product(i, MonomialIdeal::maximal(3)), DimensionError);
    CHECK_THROWS_AS(multi_power(ij, MultiIndex{1}), DimensionError);
  }

  TEST_CASE("mu and order") {
    CHECK(mu(mono(2, {{1, 1}, {3, 0}, {0, 3}})) == 3);
    CHECK(mu(MonomialIdeal::unit(2)) == 1);
    CHECK(mu(mono(2, {{2, 2}, {4, 1}, {1, 4}, {6, 0}, {0, 6}})) == 5);
    CHECK(order(mono(2, {{1, 0}, {0, 2}})) == 1);
    CHECK(order(MonomialIdeal::maximal_power(2, 2)) == 2);
    CHECK(order(mono(3, {{2, 1, 0}, {2, 0, 1}, {0, 2, 0}, {0, 1, 1}, {0, 0, 2}})) == 2);
    CHECK_THROWS_AS(order(MonomialIdeal::zero(2)), HypothesisError);
  }

  TEST_CASE("membership, containment, sum, intersection") {
    const auto i = mono(2, {{1, 0}, {0, 2}});
    CHECK(contains_monomial(i, {3, 1}));
    CHECK_FALSE(contains_monomial(i, {0, 1}));
    CHECK(contains_monomial(mono(2, {{1, 1}, {3, 0}, {0, 3}}), {2, 2}));
    CHECK(contains_ideal(MonomialIdeal::maximal(2), MonomialIdeal::maximal_power(2, 2)));
    CHECK(gens_of(intersect(mono(2, {{1, 0}}), mono(2, {{0, 1}}))) == sorted({{1, 1}}));
    CHECK(gens_of(sum(mono(2, {{2, 0}}), mono(2, {{1, 1}, {3, 0}}))) == sorted({{2, 0}, {1, 1}}));

    // The three-way intersection of the closure example.
    const auto a = mono(3, {{1, 0, 0}, {0, 0, 2}, {0, 2, 1}, {0, 4, 0}});
    const auto b = mono(3, {{0, 1, 0}, {0, 0, 2}, {2, 0, 1}, {4, 0, 0}});
    const auto c = sum(mono(3, {{0, 0, 1}}), [] {
      oracle::Exps n4;
      for (std::uint32_t p = 0; p <= 4; ++p) n4.push_back({p, 4 - p, 0});
      return oracle::to_ideal(n4, 3);
    }());
    CHECK(gens_of(intersect(intersect(a, b), c)) ==
          sorted({{0, 0, 2}, {0, 2, 1}, {1, 1, 1}, {2, 0, 1}, {0, 4, 0}, {1, 3, 0}, {2, 2, 0}, {3, 1, 0}, {4, 0, 0}}));
  }

  TEST_CASE("m_power_inside agrees with brute force") {
    CHECK(m_power_inside(mono(2, {{1, 0}, {0, 2}})) == 2);
    CHECK(m_power_inside(MonomialIdeal::maximal(2)) == 1);
    // Every degree-3 monomial of k[x,y] is divisible by xy, x^3 or y^3.
    CHECK(m_power_inside(mono(2, {{1, 1}, {3, 0}, {0, 3}})) == oracle::m_power({{1, 1}, {3, 0}, {0, 3}}, 2));
    CHECK(oracle::m_power({{1, 1}, {3, 0}, {0, 3}}, 2) == 3);
    CHECK_THROWS_WITH_AS(m_power_inside(mono(2, {{1, 0}, {1, 1}})), doctest::Contains("variable"), HypothesisError);

    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
      const std::size_t nvars = 1 + t % 3;
      const auto g = oracle::random_gens(rng, nvars, 4, 4, true);
      CHECK(m_power_inside(oracle::to_ideal(g, nvars)) == oracle::m_power(g, nvars));
    }
  }

  TEST_CASE("Newton polyhedron membership examples") {
    const auto i = mono(2, {{2, 0}, {0, 2}});
    CHECK(np_membership(i, {1, 1}));
    CHECK(oracle::power_membership(i.gens(), {1, 1}, 8));
    const auto j = mono(2, {{1, 0}, {0, 2}});
    CHECK_FALSE(np_membership(j, {0, 1}));
    CHECK_FALSE(oracle::power_membership(j.gens(), {0, 1}, 8));
    for (const auto& g : j.gens()) CHECK(np_membership(j, g));
  }

  TEST_CASE("np_membership agrees with the power oracle (k <= 12) on 100 random ideals") {
    const auto o = props::np_membership_vs_power_oracle(2024);
    for (const auto& line : o.log) MESSAGE(line);
    CHECK(o.cases > 0);
    CHECK(o.failures == 0);
  }

  TEST_CASE("integral closure examples") {
    CHECK(gens_of(integral_closure(mono(3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}))) ==
          sorted({{2, 0, 0}, {1, 1, 0}, {0, 2, 0}, {0, 0, 1}}));
    const auto j = mono(2, {{1, 0}, {0, 2}});
    CHECK(integral_closure(j) == j);
    const auto iibar = mono(3, {{0, 0, 2}, {0, 2, 1}, {1, 1, 1}, {2, 0, 1}, {0, 4, 0}, {1, 3, 0}, {2, 2, 0}, {3, 1, 0}, {4, 0, 0}});
    CHECK(integral_closure(iibar) == iibar);
    CHECK(mu(iibar) == 9);
  }

  TEST_CASE("closure is extensive and idempotent on random ideals") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 60; ++t) {
      const std::size_t nvars = 2 + t % 2;
      const auto a = oracle::to_ideal(oracle::random_gens(rng, nvars, 4, 4, t % 3 == 0), nvars);
      const auto c = integral_closure(a);
      CHECK(contains_ideal(c, a));
      CHECK(integral_closure(c) == c);
      // Closure generators are Newton-polyhedron points found by the oracle too.
      for (const auto& g : c.gens()) CHECK(oracle::power_membership(a.gens(), g, 12));
    }
  }

  TEST_CASE("product laws on random ideals") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 80; ++t) {
      const std::size_t nvars = 1 + t % 3;
      const auto a = oracle::random_gens(rng, nvars, 3, 5, false);
      const auto b = oracle::random_gens(rng, nvars, 3, 5, false);
      const auto c = oracle::random_gens(rng, nvars, 3, 5, false);
      const auto ia = oracle::to_ideal(a, nvars), ib = oracle::to_ideal(b, nvars), ic = oracle::to_ideal(c, nvars);
      CHECK(gens_of(ia) == oracle::minimal(a));
      CHECK(product(ia, ib) == product(ib, ia));
      CHECK(product(product(ia, ib), ic) == product(ia, product(ib, ic)));
      CHECK(gens_of(product(ia, ib)) == oracle::product(a, b));
      CHECK(contains_ideal(ia, ib) == oracle::contains(a, b));
    }
  }

  TEST_CASE("multi_power is additive in the exponent") {
    const std::vector<MonomialIdeal> ideals{mono(2, {{1, 0}, {0, 2}}), mono(2, {{0, 1}, {2, 0}}), mono(2, {{1, 1}, {3, 0}, {0, 2}})};
    for (std::uint32_t a0 = 0; a0 <= 2; ++a0)
      for (std::uint32_t a1 = 0; a1 + a0 <= 3; ++a1)
        for (std::uint32_t b0 = 0; b0 <= 2; ++b0)
          for (std::uint32_t b2 = 0; b2 + b0 <= 3; ++b2) {
            const MultiIndex a{a0, a1, 0}, b{b0, 0, b2}, s{a0 + b0, a1, b2};
            CHECK(multi_power(ideals, s) == product(multi_power(ideals, a), multi_power(ideals, b)));
          }
  }

  TEST_CASE("lexsegment ideals") {
    const std::vector<unsigned> b1{1}, b12{1, 2};
    CHECK(gens_of(lexsegment_ideal(2, b1)) == sorted({{2, 0}, {1, 1}}));
    CHECK(lexsegment_ideal(2, b12) == MonomialIdeal::maximal_power(2, 2));
    const std::vector<unsigned> b{2, 5, 7};
    CHECK(mu(lexsegment_ideal(4, b)) == 4);
    const std::vector<unsigned> bad{2, 2};
    CHECK_THROWS_AS(lexsegment_ideal(3, bad), HypothesisError);
    const std::vector<unsigned> too_long{1, 2, 3};
    CHECK_THROWS_AS(lexsegment_ideal(2, too_long), HypothesisError);
  }

  TEST_CASE("lexsegment generator-count formula mu(I^n J^m) = pn + qm + 1") {
    struct Case { unsigned r; std::vector<unsigned> b; unsigned s; std::vector<unsigned> c; };
    const std::vector<Case> cases{{1, {2}, 2, {1, 3}}, {2, {1, 3}, 3, {2, 3, 5}}, {2, {2, 3}, 1, {1}}};
    for (const auto& cs : cases) {
      const auto i = lexsegment_ideal(cs.r, cs.b), j = lexsegment_ideal(cs.s, cs.c);
      const unsigned p = cs.b.size(), q = cs.c.size();
      for (unsigned n = 1; n <= 4; ++n)
        for (unsigned m = 1; m <= 4; ++m)
          CHECK(mu(multi_power(std::vector<MonomialIdeal>{i, j}, MultiIndex{n, m})) == p * n + q * m + 1);
    }
  }

  TEST_CASE("contractedness") {
    CHECK(is_contracted(mono(2, {{1, 0}, {0, 2}})));
    CHECK_FALSE(is_contracted(mono(2, {{2, 0}, {0, 2}})));
    for (unsigned k = 1; k <= 5; ++k) CHECK(is_contracted(MonomialIdeal::maximal_power(2, k)));
    CHECK_THROWS_AS(is_contracted(MonomialIdeal::maximal(3)), HypothesisError);
    CHECK_THROWS_AS(is_contracted(mono(2, {{1, 0}})), HypothesisError);
  }

  TEST_CASE("order is additive on products of m-primary ideals in two variables") {
    std::mt19937_64 rng(41);
    for (int t = 0; t < 100; ++t) {
      const auto a = oracle::to_ideal(oracle::random_gens(rng, 2, 5, 4, true), 2);
      const auto b = oracle::to_ideal(oracle::random_gens(rng, 2, 5, 4, true), 2);
      CHECK(order(product(a, b)) == order(a) + order(b));
    }
  }
}
