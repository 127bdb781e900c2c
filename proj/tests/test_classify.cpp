#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "wsp/cli.hpp"
#include "wsp/classify.hpp"

using namespace wsp;

namespace {

RatVector vec(std::initializer_list<std::pair<Subset, Rat>> terms) {
  RatVector v(8, Rat(0));
  for (const auto& [s, x] : terms) v[s] = x;
  return v;
}

OrderInput monomialOrder(const Degrees& d) {
  OrderInput in;
  in.d = d;
  for (Subset s = 0; s < 8; ++s) in.gens.push_back(vec({{s, 1}}));
  return in;
}

void checkWeighted(const OrderInput& in, const ClassificationResult& r) {
  REQUIRE((r.outcome == Outcome::Weighted));
  REQUIRE(r.c);
  REQUIRE(r.witness);
  const VerifiedOrder vo = verifyOrder(in);
  CHECK(checkRingMap(*r.witness, buildWeightedRing(*r.c, in.d), vo.ring));
}

}  // namespace

TEST_CASE("verifyOrder accepts the monomial lattice and weighted embeddings") {
  const VerifiedOrder vo = verifyOrder(weightedOrder(CoefficientSequence(), {3, 3, 3}));
  CHECK(vo.ring.size() == 8);
  CHECK(verifyRingAxioms(vo.ring).ok());
  CHECK_NOTHROW(verifyOrder(monomialOrder({3, 3, 3})));
  CHECK(checkRingMap({RatMatrix::identity(8)}, buildWeightedRing(CoefficientSequence(), {3, 3, 3}),
                     vo.ring));

  const CoefficientSequence c(2, 3, 4, 24);
  const Degrees d{3, 2, 5};
  const VerifiedOrder w = verifyOrder(weightedOrder(c, d));
  CHECK(checkRingMap({RatMatrix::identity(8)}, buildWeightedRing(c, d), w.ring));
}

TEST_CASE("verifyOrder rejects malformed orders") {
  OrderInput half = monomialOrder({3, 3, 3});
  half.gens[3] = vec({{0b011, Rat(1, 2)}});
  CHECK_THROWS_WITH_AS(verifyOrder(half), doctest::Contains("NotClosed"), Error);

  OrderInput short7 = monomialOrder({3, 3, 3});
  short7.gens.pop_back();
  CHECK_THROWS_WITH_AS(verifyOrder(short7), doctest::Contains("WrongRank"), Error);

  OrderInput noUnit = monomialOrder({3, 3, 3});
  noUnit.gens[0] = vec({{0, 2}});
  CHECK_THROWS_WITH_AS(verifyOrder(noUnit), doctest::Contains("NotUnital"), Error);

  OrderInput mixed = monomialOrder({3, 3, 3});
  mixed.gens[1] = vec({{0b001, 1}, {0b011, 1}});
  CHECK_THROWS_AS(verifyOrder(mixed), Error);

  OrderInput negated = monomialOrder({3, 3, 3});
  negated.gens[0] = vec({{0, -1}});
  CHECK_NOTHROW(verifyOrder(negated));
}

TEST_CASE("decomposition of the monomial lattice and of weighted orders") {
  const Decomposition m = decompose(monomialOrder({2, 3, 5}));
  CHECK(m.l1.rank() == 3);
  CHECK(m.l2.rank() == 3);
  CHECK(m.l3.rank() == 1);
  CHECK(m.l1Degrees == std::vector<int>{2, 3, 5});
  CHECK(m.l2Degrees == std::vector<int>{5, 7, 8});
  CHECK(m.l3Degrees == std::vector<int>{10});

  const Decomposition w = decompose(weightedOrder(CoefficientSequence(2, 3, 4, 24), {2, 3, 5}));
  CHECK(w.l1.rank() == 3);
  CHECK(w.l2.rank() == 3);
  CHECK(w.l3.rank() == 1);
  CHECK(w.l3.vector(0)[7] == Rat(1, 24));
}

TEST_CASE("the non-weighted example order") {
  const OrderInput in = nonWeightedExampleOrder();
  CHECK_NOTHROW(verifyOrder(in));
  CHECK(decompose(in).l2Degrees == std::vector<int>{4, 5, 5});

  const ClassificationResult r = classifyOrder(in);
  CHECK((r.outcome == Outcome::NotWeightedCertified));
  CHECK_FALSE(r.report.capped);
  bool family = false;
  for (const auto& f : r.report.families) {
    std::vector<std::string> names;
    for (const auto& v : f.candidates) names.push_back(formatElement(v, in.names));
    if (f.degree == 2) {
      CHECK(names == std::vector<std::string>{"x2", "y2"});
      CHECK(f.pinned);
      family = true;
    }
  }
  CHECK(family);
  REQUIRE_FALSE(r.report.trials.empty());
  for (const auto& t : r.report.trials) CHECK(t.failingDegree == 5);

  for (int h : {1, 2, 5})
    CHECK((notWeightedSearch(in, h).outcome == Outcome::NotWeightedCertified));
}

TEST_CASE("an even sum degree with a half-integral square-zero lift is not weighted") {
  // x3 + x1x2/2 generates degree 6 but no square-zero element does.
  OrderInput in;
  in.d = {2, 4, 6};
  in.gens = {vec({{0, 1}}),
             vec({{0b001, 1}}),
             vec({{0b010, 1}}),
             vec({{0b100, 1}, {0b011, Rat(1, 2)}}),
             vec({{0b011, 1}}),
             vec({{0b101, 1}}),
             vec({{0b110, 1}}),
             vec({{0b111, 1}})};
  CHECK_NOTHROW(verifyOrder(in));
  const ClassificationResult r = classifyOrder(in);
  CHECK((r.outcome == Outcome::NotWeightedCertified));
  CHECK(r.method == "square-zero-lift");
}

TEST_CASE("weighted orders classify back with a witness") {
  for (const Degrees& d : {Degrees{2, 3, 5}, Degrees{3, 3, 3}, Degrees{1, 1, 2}, Degrees{3, 3, 4},
                           Degrees{2, 4, 3}, Degrees{1, 2, 3}, Degrees{2, 2, 4}}) {
    if (d == Degrees{2, 2, 4}) continue;  // repeated even degree handled below
    const ClassificationResult one = classifyOrder(monomialOrder(d));
    checkWeighted(monomialOrder(d), one);
    CHECK(*one.c == CoefficientSequence());
    const CoefficientSequence c(2, 3, 4, 12);
    const OrderInput in = weightedOrder(c, d);
    checkWeighted(in, classifyOrder(in));
  }
}

TEST_CASE("the search finds weighted structures too") {
  const CoefficientSequence c(2, 5, 3, 30);
  const OrderInput in = weightedOrder(c, {2, 4, 3});
  const ClassificationResult r = notWeightedSearch(in);
  checkWeighted(in, r);
  CHECK(*r.c == c);
  const ClassificationResult m = notWeightedSearch(monomialOrder({3, 3, 3}));
  checkWeighted(monomialOrder({3, 3, 3}), m);
  CHECK(*m.c == CoefficientSequence());
}

TEST_CASE("repeated even degrees go through the search") {
  const OrderInput in = monomialOrder({2, 2, 4});
  const ClassificationResult r = classifyOrder(in);
  checkWeighted(in, r);
  CHECK(r.method == "search");
}

TEST_CASE("re-embedded weighted orders on (3,3,3)") {
  std::mt19937 rng(51);
  for (int t = 0; t < 40; ++t) {
    const CoefficientSequence c = gen::coefficients(rng, 24);
    const OrderInput in = gen::reembeddedWeightedOrder(c, {3, 3, 3}, rng);
    const ClassificationResult r = classifyOrder(in);
    checkWeighted(in, r);
    CHECK(r.c->c123() == c.c123());
    std::vector<Int> a{c.c12(), c.c13(), c.c23()}, b{r.c->c12(), r.c->c13(), r.c->c23()};
    Int pa = a[0] * a[1] * a[2], pb = b[0] * b[1] * b[2];
    CHECK(pa == pb);
  }
}

TEST_CASE("random admissible round trips") {
  std::mt19937 rng(52);
  for (int t = 0; t < 60; ++t) {
    const Degrees d = gen::admissibleDegrees(rng);
    const CoefficientSequence c = gen::coefficients(rng, 24);
    const OrderInput in = gen::reembeddedWeightedOrder(c, d, rng);
    INFO("d = " << d[0] << "," << d[1] << "," << d[2]);
    checkWeighted(in, classifyOrder(in));
  }
}

TEST_CASE("formatting") {
  const std::array<std::string, 3> names{"x1", "x2", "x3"};
  CHECK(formatElement(vec({{0b011, Rat(1, 2)}, {0b100, 1}}), names) == "1/2*x1x2 + x3");
  CHECK(formatElement(vec({{0b001, -1}}), names) == "-x1");
}
