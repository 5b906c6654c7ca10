#include <random>

#include "doctest.h"
#include "redlab/errors.hpp"
#include "redlab/io.hpp"
#include "redlab/reduction_search.hpp"
#include "redlab/registry.hpp"
#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace redlab;

namespace {

Filtration single(std::initializer_list<ExponentVector> gens) {
  return Filtration::powers(Ring::polynomial(2), {MonomialIdeal::minimalize(gens, 2)});
}

// Every x * g with g in the companion ideal lies in I_n.
bool products_inside(const ReductionCertificate& c) {
  std::vector<PolyElement> products;
  for (const auto& s : c.summands)
    for (const auto& e : s.elements)
      for (const auto& g : s.ideal_gens) products.push_back(e.element * g);
  const auto alg = TruncatedAlgebra::build(c.nvars, std::max(c.truncation_order, c.d0 + 1), c.relation);
  return verify_containment_in_primary(alg, products, c.target_gens, c.d0).holds;
}

}  // namespace

TEST_SUITE("reduction_search") {
  TEST_CASE("sampler streams are reproducible") {
    GeneralElementSampler a(42), b(42), c(43);
    const auto da = a.draw(5, 101), db = b.draw(5, 101), dc = c.draw(5, 101);
    CHECK(da == db);
    CHECK(da != dc);
    for (const auto& v : da) CHECK(abs(v) <= 101);
    CHECK_THROWS_AS(GeneralElementSampler(1, 0), ConfigurationError);
    CHECK_THROWS_AS(GeneralElementSampler(1, 5, 0), ConfigurationError);
  }

  TEST_CASE("sampled elements") {
    const auto gens = MonomialIdeal::minimalize({{1, 0}, {0, 2}}, 2).as_polys();
    GeneralElementSampler s1(7), s2(7);
    const auto one = sample_elements(gens, 1, s1, 101);
    REQUIRE(one.size() == 1);
    CHECK_FALSE(one[0].element.is_zero());
    PolyElement rebuilt(2);
    for (std::size_t k = 0; k < gens.size(); ++k) rebuilt = rebuilt + gens[k].scaled(Rational(one[0].coefficients[k]));
    CHECK(rebuilt == one[0].element);
    CHECK(sample_elements(gens, 1, s2, 101) == one);
    CHECK(sample_elements(gens, 0, s1, 101).empty());
    CHECK_THROWS_AS(sample_elements({}, 1, s1, 101), HypothesisError);

    // Bound 1 on a single generator forces coefficients of +-1: never zero.
    GeneralElementSampler tiny(3);
    for (int t = 0; t < 50; ++t)
      CHECK_FALSE(sample_elements({PolyElement::monomial({1, 0})}, 1, tiny, 1)[0].element.is_zero());
  }

  TEST_CASE("gates of find_reduction") {
    GeneralElementSampler s(1);
    // mu(m^2) = 3 is not below C(3,2) = 3.
    CHECK_THROWS_AS(find_reduction(Filtration::powers(Ring::polynomial(2), {MonomialIdeal::maximal_power(2, 2)}), 1, 2, s),
                    GateRefusedError);
    const auto i = single({{1, 0}, {0, 2}});
    CHECK(i.mu(MultiIndex{2}) == 3);
    CHECK_THROWS_AS(find_reduction(i, 2, 1, s), GateRefusedError);
    CHECK(i.mu(MultiIndex{3}) == 4);
    CHECK_THROWS_AS(find_reduction(i, 3, 1, s), GateRefusedError);
    const auto cert = find_reduction(i, 2, 2, s);
    CHECK(cert.verified);
    CHECK(cert.summands.at(0).elements.size() == 2);
    CHECK(products_inside(cert));

    try {
      find_reduction(i, 2, 1, s);
    } catch (const GateRefusedError& e) {
      CHECK(e.gate() == "generator-count bound");
    }
  }

  TEST_CASE("joint reduction examples") {
    const auto [i, j] = counter_ideals();
    const auto f = Filtration::powers(Ring::polynomial(2), {i, j});
    GeneralElementSampler s(1);
    const auto cert = find_joint_reduction(f, MultiIndex{1, 1}, MultiIndex{1, 1}, s);
    CHECK(cert.verified);
    CHECK(cert.kind == EquationKind::joint_reduction);
    CHECK(cert.attempt >= 1);
    CHECK(cert.attempt <= 3);
    CHECK(products_inside(cert));

    CHECK_THROWS_AS(find_joint_reduction(f, MultiIndex{1, 1}, MultiIndex{0, 0}, s), GateRefusedError);
    SearchOptions force;
    force.force = true;
    CHECK_THROWS_AS(find_joint_reduction(f, MultiIndex{1, 1}, MultiIndex{0, 0}, s, force), GateRefusedError);

    const auto [li, lj] = lexsegment_ideals();
    const auto lex = Filtration::powers(Ring::polynomial(2), {li, lj});
    const auto lc = find_joint_reduction(lex, MultiIndex{2, 1}, MultiIndex{1, 1}, s);
    CHECK(lc.verified);
    CHECK(products_inside(lc));
  }

  TEST_CASE("forced runs are marked") {
    const auto file = quartic_y2_filtration(6);
    const auto f = file.build();
    GeneralElementSampler s(1);
    CHECK_THROWS_AS(find_reduction(f, 2, 1, s), GateRefusedError);
    SearchOptions force;
    force.force = true;
    const auto cert = find_reduction(f, 2, 1, s, force);
    CHECK(cert.forced);
    CHECK_FALSE(cert.verified);
    CHECK(cert.attempt == 3);
    bool noted = false;
    for (const auto& n : cert.gate_notes) noted = noted || n.find("bypassed by --force") != std::string::npos;
    CHECK(noted);
  }

  TEST_CASE("reduction numbers of the registry tables") {
    struct Case { FiltrationFile file; unsigned n_max; unsigned expected; };
    const std::vector<Case> cases{{tight_cubic_filtration(5), 5, 1}, {quartic_z2_filtration(5), 5, 2},
                                  {quartic_y2_filtration(6), 6, 2}};
    for (const auto& c : cases) {
      const auto f = c.file.build();
      const auto rep = reduction_number(f, c.file.reduction->generators(c.file.ring.nvars), c.n_max);
      CHECK(rep.value == c.expected);
      CHECK(rep.monotone);
      REQUIRE(rep.steps.size() == c.n_max);
      // Once the equation holds it keeps holding.
      bool seen = false;
      for (const auto& step : rep.steps) {
        if (seen) CHECK(step.verified);
        seen = seen || step.verified;
      }
      for (const auto& step : rep.steps) CHECK(replay(step).holds == step.verified);
      CHECK(rep.hypothesis_notes.size() == reduction_number_hypotheses().size());
    }
  }

  TEST_CASE("reduction number preconditions and window") {
    const auto file = quartic_y2_filtration(6);
    const auto f = file.build();
    const auto j = file.reduction->generators(2);
    CHECK_THROWS_AS(reduction_number(f, {PolyElement::monomial({0, 0})}, 3), HypothesisError);
    CHECK_THROWS_AS(reduction_number(f, j, 3, {"not-a-hypothesis"}), ConfigurationError);
    const auto short_window = reduction_number(f, j, 2);
    CHECK_FALSE(short_window.value.has_value());
    CHECK(short_window.failing == std::vector<unsigned>{1, 2});
    const auto asserted = reduction_number(f, j, 6, {"cm-fiber-cone"});
    CHECK(std::count(asserted.hypothesis_notes.begin(), asserted.hypothesis_notes.end(),
                     std::string("cm-fiber-cone: asserted by user (unchecked)")) == 1);
  }

  TEST_CASE("replay rejects tampered certificates") {
    const auto [i, j] = counter_ideals();
    const auto f = Filtration::powers(Ring::polynomial(2), {i, j});
    GeneralElementSampler s(5);
    auto cert = find_joint_reduction(f, MultiIndex{1, 1}, MultiIndex{1, 1}, s);
    CHECK(replay(cert).holds);
    cert.summands[0].elements[0].coefficients[0] += 1;
    CHECK_THROWS_AS(replay(cert), InvalidSummandError);
  }

  TEST_CASE("same seed gives the same certificate") {
    const auto f = Filtration::closure_powers(Ring::polynomial(3), closure_example_ideal());
    GeneralElementSampler a(9), b(9);
    CHECK(find_reduction(f, 2, 3, a) == find_reduction(f, 2, 3, b));
  }

  TEST_CASE("certificate replay determinism across the registry") {
    const auto o = props::certificate_replay_determinism();
    for (const auto& line : o.log) MESSAGE(line);
    CHECK(o.pass());
  }

  TEST_CASE("registry verdicts are stable at N + 2") {
    const auto o = props::registry_truncation_stability();
    for (const auto& line : o.log) MESSAGE(line);
    CHECK(o.pass());
  }

  TEST_CASE("ES success over 50 random gated instances") {
    const auto o = props::es_success(11, 50);
    for (const auto& line : o.log) MESSAGE(line);
    CHECK(o.cases == 50);
    CHECK(props::es_success_accepted(o));
  }
}
