#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "cpt/counterpoint.hpp"
#include "cpt/extension.hpp"
#include "doctest.h"

using namespace cpt;

namespace {

Dichotomy x6() { return {Modulus(6), {0, 2, 3}}; }
Dichotomy x12() { return {Modulus(12), {0, 1, 4, 5, 6, 9}}; }
Dichotomy u0() { return {Modulus(16), {0, 1, 3, 4, 5, 6, 7, 10}}; }

using Triple = std::array<std::int64_t, 3>;

std::vector<Triple> triples(const SuccessorSet& s) {
  std::vector<Triple> out;
  for (const auto& g : s.symmetries())
    out.push_back({g.t.value(), g.u.value(), g.v.value()});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("six-tone dichotomy, interval 2: the unique symmetry and its successors") {
  auto result = counterpoint_symmetries(x6(), Residue(2, Modulus(6)));
  REQUIRE(result.symmetries().size() == 1);
  const auto& g = result.symmetries()[0];
  CHECK(g.t.value() == 3);
  CHECK(g.u.value() == 1);
  CHECK(g.v.value() == 3);
  CHECK(g.to_string() == "e^(e.3).(1+e.3)");
  CHECK(result.cardinality() == 15);

  std::vector<SuccessorPair> expected = {
      {0, 0}, {0, 3}, {1, 0}, {1, 2}, {1, 3}, {2, 0}, {2, 3}, {3, 0},
      {3, 2}, {3, 3}, {4, 0}, {4, 3}, {5, 0}, {5, 2}, {5, 3}};
  CHECK(result.successors_of(0) == expected);
}

TEST_CASE("six-tone dichotomy, intervals 0 and 3 share their maximizer pair") {
  for (std::int64_t k : {0, 3}) {
    auto result = counterpoint_symmetries(x6(), Residue(k, Modulus(6)));
    CHECK(triples(result) == std::vector<Triple>{{4, 5, 2}, {4, 5, 4}});
    CHECK(result.cardinality() == 10);
    CHECK(result.successors_of(0).size() == 10);
    CHECK(result.successors_of(1).size() == 10);
  }
}

TEST_CASE("sixteen-tone dichotomy: all eight interval rows") {
  struct Row {
    std::int64_t k;
    std::vector<Triple> syms;
    std::int64_t card;
  };
  const std::vector<Row> rows = {
      {0, {{5, 3, 0}, {6, 13, 0}, {11, 15, 0}}, 96},
      {1, {{10, 15, 0}}, 112},
      {3, {{2, 5, 0}, {9, 11, 0}, {11, 15, 0}}, 96},
      {4, {{0, 7, 0}}, 112},
      {5, {{1, 3, 0}, {6, 13, 0}, {7, 15, 0}}, 96},
      {6, {{3, 13, 0}}, 112},
      {7, {{1, 5, 0}}, 112},
      {10, {{2, 5, 0}, {5, 11, 0}, {7, 15, 0}}, 96},
  };
  Dichotomy d = u0();
  for (const auto& row : rows) {
    CAPTURE(row.k);
    auto result = counterpoint_symmetries(d, Residue(row.k, d.modulus()));
    CHECK(triples(result) == row.syms);
    CHECK(result.cardinality() == row.card);
    // every maximizer attains the recorded count
    for (const auto& g : result.symmetries())
      CHECK(intersection_cardinality(d, g) == row.card);
  }
}

TEST_CASE("interval and strongness preconditions") {
  CHECK_THROWS_AS(counterpoint_symmetries(u0(), Residue(2, Modulus(16))),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      counterpoint_symmetries(Dichotomy(Modulus(6), {0, 1, 2}), Residue(0, Modulus(6))),
      std::invalid_argument);
}

TEST_CASE("closed-form counting equals direct enumeration") {
  SUBCASE("exhaustively at small moduli") {
    for (const Dichotomy& d : {x6(), x12(), u0()}) {
      std::int64_t n = d.mod();
      for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (std::int64_t t = 0; t < n; ++t)
          for (std::int64_t v = 0; v < n; ++v) {
            auto g = CounterpointSymmetry::of(t, u, v, d.modulus());
            REQUIRE(intersection_cardinality(d, g) ==
                    intersection_cardinality_direct(d, g));
          }
      }
    }
  }
  SUBCASE("on random symmetries at 512 tones") {
    Tower tower = doubling_tower(u0(), 5);
    const Dichotomy& u5 = tower.level(5);
    std::mt19937 rng(20250819);
    std::uniform_int_distribution<std::int64_t> pick(0, 511);
    int done = 0;
    while (done < 1000) {
      std::int64_t u = pick(rng);
      if (std::gcd(u, std::int64_t(512)) != 1) continue;
      auto g = CounterpointSymmetry::of(pick(rng), u, pick(rng), u5.modulus());
      REQUIRE(intersection_cardinality(u5, g) ==
              intersection_cardinality_direct(u5, g));
      ++done;
    }
  }
}

TEST_CASE("identity map scores the full consonant block but is never admissible") {
  Dichotomy d = u0();
  auto id = CounterpointSymmetry::of(0, 1, 0, d.modulus());
  CHECK(intersection_cardinality(d, id) == 128);  // 16 cantus x 8 consonances
  for (const Dichotomy& k_set : {x6(), x12(), u0()})
    for (std::int64_t k : k_set.members()) {
      DualNumber xi = DualNumber::of(0, k, k_set.modulus());
      CHECK_FALSE(interval_condition(k_set, DualAffineMap::identity(k_set.modulus()), xi));
    }
}

TEST_CASE("commutation with the induced quasipolarity is the derived congruence") {
  // q0 = e^(e.r).w and g = e^(e.t).(u+e.uv) commute iff t(1-w) = r(1-u) mod n.
  SUBCASE("over the polarities of the reference dichotomies") {
    Tower tower = doubling_tower(u0(), 1);
    std::vector<Dichotomy> sets = {x6(), x12(), u0(), tower.level(1)};
    for (const Dichotomy& d : sets) {
      auto report = find_quasipolarities(d);
      REQUIRE(report.strong);
      std::int64_t n = d.mod();
      std::int64_t r = report.polarity->translation().value();
      std::int64_t w = report.polarity->linear().value();
      DualAffineMap q = induced_quasipolarity(*report.polarity, Residue(0, d.modulus()));
      for (std::int64_t u = 1; u < n; ++u) {
        if (std::gcd(u, n) != 1) continue;
        for (std::int64_t t = 0; t < n; ++t) {
          bool congruence = mod_reduce(t * (1 - w) - r * (1 - u), n) == 0;
          for (std::int64_t v = 0; v < n; ++v) {
            auto g = CounterpointSymmetry::of(t, u, v, d.modulus());
            REQUIRE(g.map().commutes_with(q) == congruence);
          }
        }
      }
    }
  }
  SUBCASE("over arbitrary translation-reflection pairs at eight tones") {
    Modulus m(8);
    for (std::int64_t r = 0; r < 8; ++r)
      for (std::int64_t w : {1, 3, 5, 7}) {
        DualAffineMap q = DualAffineMap::of(0, r, w, 0, m);
        for (std::int64_t t = 0; t < 8; ++t)
          for (std::int64_t u : {1, 3, 5, 7})
            for (std::int64_t v = 0; v < 8; ++v) {
              auto g = CounterpointSymmetry::of(t, u, v, m);
              bool congruence = mod_reduce(t * (1 - w) - r * (1 - u), 8) == 0;
              REQUIRE(g.map().commutes_with(q) == congruence);
            }
      }
  }
}

TEST_CASE("successors live in the consonant block from both ends") {
  for (const Dichotomy& d : {x6(), u0()}) {
    for (std::int64_t k : d.members()) {
      auto result = counterpoint_symmetries(d, Residue(k, d.modulus()));
      REQUIRE_FALSE(result.symmetries().empty());
      for (std::size_t i = 0; i < result.symmetries().size(); ++i) {
        DualAffineMap g = result.symmetries()[i].map();
        DualAffineMap ginv = g.invert();
        for (const auto& [c, dd] : result.successors_of(i)) {
          REQUIRE(d.contains(dd));
          DualNumber pre = ginv.apply(DualNumber::of(c, dd, d.modulus()));
          REQUIRE(d.contains(pre.b().value()));
        }
      }
    }
  }
}

TEST_CASE("distinct maximizers can admit distinct successor sets") {
  auto result = counterpoint_symmetries(u0(), Residue(0, Modulus(16)));
  REQUIRE(result.symmetries().size() == 3);
  for (const auto& s : result.successor_sets())
    CHECK(s.size() == static_cast<std::size_t>(result.cardinality()));
  CHECK(result.successor_sets()[0] != result.successor_sets()[1]);
  CHECK(result.successor_sets()[1] != result.successor_sets()[2]);
  CHECK(result.successor_union().size() == 112);
}

TEST_CASE("transposing successor sets shifts the cantus only") {
  auto result = counterpoint_symmetries(x6(), Residue(2, Modulus(6)));
  auto zero = result.successors_of(0);
  CHECK(transpose_successors(Residue(0, Modulus(6)), zero) == zero);
  for (std::int64_t x = 1; x < 6; ++x) {
    auto shifted = transpose_successors(Residue(x, Modulus(6)), zero);
    REQUIRE(shifted.size() == zero.size());
    std::set<SuccessorPair> expect;
    for (const auto& [c, d] : zero) expect.insert({mod_reduce(c + x, 6), d});
    CHECK(std::set<SuccessorPair>(shifted.begin(), shifted.end()) == expect);
  }
}

TEST_CASE("counting kernel handles the degenerate zero step") {
  // v = 0 collapses the count to n times one correlation entry
  Dichotomy d = u0();
  for (std::int64_t u : {1, 3, 5, 7, 9, 11, 13, 15})
    for (std::int64_t t = 0; t < 16; ++t) {
      auto g = CounterpointSymmetry::of(t, u, 0, d.modulus());
      std::int64_t direct = intersection_cardinality_direct(d, g);
      REQUIRE(intersection_cardinality(d, g) == direct);
      REQUIRE(direct % 16 == 0);  // every cantus contributes the same slice
    }
}
