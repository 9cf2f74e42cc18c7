#include <cmath>
#include <cstdlib>

#include "cpt/continuum.hpp"
#include "doctest.h"

using namespace cpt;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

// Overlap measure of g(K) with K in plain double arithmetic, derived from
// the half-circle geometry directly rather than from the arc machinery.
double overlap_rot(double t) { return std::fabs(t - 0.5); }
double overlap_refl(double t) { return t <= 0.5 ? t : 1.0 - t; }

}  // namespace

TEST_CASE("consonance half-circle and polarity") {
  CHECK(consonance_set().to_string() == "[0,1/2)");
  CHECK(consonance_set().measure() == r(1, 2));
  CHECK(circle_polarity().to_string() == "e^(1/2).1");
  CHECK(arc_apply(circle_polarity(), consonance_set()) ==
        consonance_set().complement());
  CHECK(intersection_measure(circle_polarity()) == r(0));
  CHECK(h1_rank(circle_polarity()) == 0);

  CHECK(is_consonance(r(0)));
  CHECK(is_consonance(r(1, 4)));
  CHECK(is_consonance(r(499, 1000)));
  CHECK_FALSE(is_consonance(r(1, 2)));
  CHECK_FALSE(is_consonance(r(7, 8)));
}

TEST_CASE("admissible regions at a consonance") {
  AdmissibleRegion reg = admissible_region(r(1, 4));
  CHECK(reg.rotation.to_string() == "(1/4,3/4]");
  CHECK(reg.reflection.to_string() == "[0,1/4) u [3/4,1)");

  // membership agrees with the region on both orientations
  for (int j = 0; j < 16; ++j) {
    Rational t(j, 16);
    CHECK(is_admissible(CircleSymmetry(t, 1), r(1, 4)) == reg.rotation.contains(t));
    CHECK(is_admissible(CircleSymmetry(t, -1), r(1, 4)) ==
          reg.reflection.contains(t));
  }

  CHECK_THROWS_AS(admissible_region(r(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(admissible_region(r(-1, 8)), std::invalid_argument);
  CHECK_THROWS_AS(continuum_maximizers(r(2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(continuous_successors(r(1, 2)), std::invalid_argument);
}

TEST_CASE("maximizer fixtures at landmark consonances") {
  SUBCASE("k = 0") {
    auto rep = continuum_maximizers(r(0));
    REQUIRE(rep.maximizers.size() == 1);
    CHECK(rep.maximizers[0].to_string() == "e^(1/2).(-1)");
    CHECK(rep.measure == r(1, 2));
    CHECK(continuous_successors(r(0)).to_string() == "(0,1/2)");
  }
  SUBCASE("k = 1/8") {
    auto rep = continuum_maximizers(r(1, 8));
    REQUIRE(rep.maximizers.size() == 1);
    CHECK(rep.maximizers[0].to_string() == "e^(5/8).(-1)");
    CHECK(rep.measure == r(3, 8));
    CHECK(continuous_successors(r(1, 8)).to_string() == "(1/8,1/2)");
  }
  SUBCASE("k = 1/4 admits both orientations at t = 3/4") {
    auto rep = continuum_maximizers(r(1, 4));
    REQUIRE(rep.maximizers.size() == 2);
    CHECK(rep.maximizers[0].to_string() == "e^(3/4).(-1)");  // reflections first
    CHECK(rep.maximizers[1].to_string() == "e^(3/4).1");
    CHECK(rep.measure == r(1, 4));
    CHECK(continuous_successors(r(1, 4)).to_string() == "[0,1/4) u (1/4,1/2)");
  }
  SUBCASE("k = 3/8") {
    auto rep = continuum_maximizers(r(3, 8));
    REQUIRE(rep.maximizers.size() == 1);
    CHECK(rep.maximizers[0].to_string() == "e^(7/8).1");
    CHECK(rep.measure == r(3, 8));
    CHECK(continuous_successors(r(3, 8)).to_string() == "[0,3/8)");
  }
}

TEST_CASE("closed forms across the consonance grid") {
  for (int j = 0; j < 100; ++j) {
    Rational k(j, 200);
    CAPTURE(j);
    auto rep = continuum_maximizers(k);
    ArcSet succ = continuous_successors(k);

    if (k < r(1, 4)) {
      REQUIRE(rep.maximizers.size() == 1);
      REQUIRE(rep.maximizers[0] == CircleSymmetry(mod1(k - r(1, 2)), -1));
      REQUIRE(rep.measure == r(1, 2) - k);
      REQUIRE(succ == ArcSet::segment(k, r(1, 2), false, false));
    } else if (k > r(1, 4)) {
      REQUIRE(rep.maximizers.size() == 1);
      REQUIRE(rep.maximizers[0] == CircleSymmetry(mod1(k + r(1, 2)), 1));
      REQUIRE(rep.measure == k);
      REQUIRE(succ == ArcSet::segment(r(0), k, true, false));
    } else {
      REQUIRE(rep.maximizers.size() == 2);
      REQUIRE(rep.measure == r(1, 4));
    }

    // every maximizer is admissible, attains the measure, and leaves a
    // nonempty successor set with one fiber circle upstairs
    REQUIRE_FALSE(succ.is_empty());
    REQUIRE_FALSE(succ.contains(k));
    for (const auto& g : rep.maximizers) {
      REQUIRE(is_admissible(g, k));
      REQUIRE(intersection_measure(g) == rep.measure);
      REQUIRE(h1_rank(g) == 1);
    }

    // steps lead strictly away from the tritone side already occupied
    if (k < r(1, 4)) {
      REQUIRE(succ.intersect(ArcSet::segment(r(0), k, true, true)).is_empty());
      REQUIRE(succ.contains(r(1, 4)));
    } else if (k > r(1, 4)) {
      REQUIRE(
          succ.intersect(ArcSet::segment(k, r(1, 2), true, false)).is_empty());
      REQUIRE(succ.contains(r(1, 4)));
    }
  }
}

TEST_CASE("fine float sweep never beats the exact maximum") {
  const double step = 1e-6;
  for (std::int64_t num : {0, 1, 2, 3, 5, 7, 9}) {
    Rational k(num, 20);
    if (!is_consonance(k)) continue;
    double kd = boost::rational_cast<double>(k);
    double best = 0.0;
    for (double t = 0.0; t < 1.0; t += step) {
      if (t > kd && t <= kd + 0.5) best = std::max(best, overlap_rot(t));
      if (t < kd || t >= kd + 0.5) best = std::max(best, overlap_refl(t));
    }
    double exact = boost::rational_cast<double>(continuum_maximizers(k).measure);
    CAPTURE(num);
    CHECK(best <= exact + 2 * step);
    CHECK(best >= exact - 2 * step);
  }
}

TEST_CASE("grid census of the fiber agrees with the exact measure") {
  // membership worked out with bare rational arithmetic, no arc sets
  const int n = 2000;
  for (std::int64_t num : {1, 13, 250, 377}) {
    Rational k(num, 1000);
    auto rep = continuum_maximizers(k);
    for (const auto& g : rep.maximizers) {
      int count = 0;
      for (int j = 0; j < n; ++j) {
        Rational d(j, n);
        if (!is_consonance(d)) continue;
        Rational pre = mod1(g.v == 1 ? d - g.t : g.t - d);
        if (is_consonance(pre)) ++count;
      }
      double frac = static_cast<double>(count) / n;
      double exact = boost::rational_cast<double>(rep.measure);
      CAPTURE(num);
      CHECK(std::fabs(frac - exact) <= 4.0 / n);
    }
  }
}

TEST_CASE("fiber circle count stays within the torus bound") {
  CHECK(h1_rank(CircleSymmetry(r(0), 1)) == 1);  // identity keeps all of K
  CHECK(h1_rank(CircleSymmetry(r(5, 8), -1)) == 1);
  CHECK(h1_rank(CircleSymmetry(r(1, 2), -1)) == 1);
  // rank 0 means an empty fiber, which measure alone cannot detect: the
  // reflection e^0.(-1) keeps only the single point {0}, rank 1, measure 0
  CHECK(h1_rank(CircleSymmetry(r(0), -1)) == 1);
  CHECK(intersection_measure(CircleSymmetry(r(0), -1)) == r(0));
  for (int j = 0; j < 40; ++j) {
    Rational t(j, 40);
    for (int v : {1, -1}) {
      CircleSymmetry g(t, v);
      int rank = h1_rank(g);
      REQUIRE(rank >= 0);
      REQUIRE(rank <= 1);
      REQUIRE((rank == 0) ==
              arc_apply(g, consonance_set()).intersect(consonance_set()).is_empty());
    }
  }
  // among all sampled symmetries only the polarity kills the fiber
  for (int j = 0; j < 40; ++j) {
    Rational t(j, 40);
    if (h1_rank(CircleSymmetry(t, 1)) == 0) CHECK(t == r(1, 2));
    CHECK(h1_rank(CircleSymmetry(t, -1)) == 1);
  }
}
