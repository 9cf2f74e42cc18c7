#include <cstdint>
#include <vector>

#include "cpt/arcs.hpp"
#include "doctest.h"

using namespace cpt;

namespace {

// deterministic generator over a small rational grid
struct ArcGen {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  Rational pos() {
    std::int64_t den = 1 + static_cast<std::int64_t>(next() % 16);
    std::int64_t num = static_cast<std::int64_t>(next() % (16 * 2));
    return mod1(Rational(num, den * 2));
  }
  ArcSet set() {
    ArcSet s;
    int pieces = 1 + static_cast<int>(next() % 3);
    for (int i = 0; i < pieces; ++i) {
      Rational a = pos(), b = pos();
      bool ac = next() & 1, bc = next() & 1;
      switch (next() % 3) {
        case 0:
          s = s.unite(ArcSet::circular(a, b, ac, bc));
          break;
        case 1:
          s = s.unite(a <= b ? ArcSet::segment(a, b, ac, bc)
                             : ArcSet::segment(b, a, bc, ac));
          break;
        default:
          s = s.unite(ArcSet::point(a));
          break;
      }
    }
    return s;
  }
};

}  // namespace

TEST_CASE("arc set constructors and canonical rendering") {
  CHECK(ArcSet::empty().to_string() == "{}");
  CHECK(ArcSet::full().to_string() == "[0,1)");
  CHECK(ArcSet::full().measure() == Rational(1));
  CHECK(ArcSet::point(Rational(1, 3)).to_string() == "{1/3}");
  CHECK(ArcSet::point(Rational(1)).to_string() == "{0}");
  CHECK(ArcSet::segment(Rational(1, 8), Rational(1, 2), false, false).to_string() ==
        "(1/8,1/2)");
  // a closed end on the seam becomes the point 0
  CHECK(ArcSet::segment(Rational(1, 2), Rational(1), true, true).to_string() ==
        "{0} u [1/2,1)");
  // wrap-around arcs are split at the seam
  CHECK(ArcSet::circular(Rational(5, 8), Rational(1, 8), true, false).to_string() ==
        "[0,1/8) u [5/8,1)");
  CHECK(ArcSet::circular(Rational(1, 2), Rational(0), true, false).to_string() ==
        "[1/2,1)");
  // a full-length arc covers the circle; open ends puncture it
  CHECK(ArcSet::circular(Rational(1, 3), Rational(1, 3), true, false) == ArcSet::full());
  CHECK(ArcSet::circular(Rational(1, 3), Rational(1, 3), false, false).to_string() ==
        "[0,1/3) u (1/3,1)");
  CHECK(ArcSet::segment(Rational(1, 4), Rational(1, 4), false, true) == ArcSet::empty());
  CHECK_THROWS_AS(ArcSet::segment(Rational(1, 2), Rational(1, 4), true, true),
                  std::invalid_argument);
  CHECK_THROWS_AS(ArcSet::segment(Rational(-1, 4), Rational(1, 4), true, true),
                  std::invalid_argument);
}

TEST_CASE("union merges touching pieces by endpoint flags") {
  ArcSet a = ArcSet::segment(Rational(0), Rational(1, 4), true, false);
  ArcSet b = ArcSet::segment(Rational(1, 4), Rational(1, 2), true, false);
  CHECK(a.unite(b).to_string() == "[0,1/2)");
  // both ends open at the same point leave a puncture
  ArcSet c = ArcSet::segment(Rational(1, 4), Rational(1, 2), false, false);
  CHECK(a.unite(c).to_string() == "[0,1/4) u (1/4,1/2)");
  CHECK(a.unite(c).unite(ArcSet::point(Rational(1, 4))).to_string() == "[0,1/2)");
  // idempotence and commutativity on the fixtures
  CHECK(a.unite(a) == a);
  CHECK(a.unite(b) == b.unite(a));
}

TEST_CASE("membership at endpoints honors the flags") {
  ArcSet half = ArcSet::segment(Rational(0), Rational(1, 2), true, false);
  CHECK(half.contains(Rational(0)));
  CHECK(half.contains(Rational(1, 4)));
  CHECK_FALSE(half.contains(Rational(1, 2)));
  CHECK(half.contains(Rational(1)));  // 1 = 0 on the circle
  ArcSet open = ArcSet::segment(Rational(1, 8), Rational(3, 8), false, true);
  CHECK_FALSE(open.contains(Rational(1, 8)));
  CHECK(open.contains(Rational(3, 8)));
}

TEST_CASE("set algebra properties on generated arc sets") {
  ArcGen gen;
  for (int round = 0; round < 250; ++round) {
    ArcSet a = gen.set(), b = gen.set();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());

    REQUIRE(a.complement().complement() == a);
    REQUIRE(a.measure() + a.complement().measure() == Rational(1));
    REQUIRE(a.intersect(b) == b.intersect(a));
    REQUIRE(a.unite(b) == b.unite(a));
    REQUIRE(a.intersect(b) ==
            a.complement().unite(b.complement()).complement());  // De Morgan
    REQUIRE(a.unite(a.complement()) == ArcSet::full());
    REQUIRE(a.intersect(a.complement()) == ArcSet::empty());
    REQUIRE(a.unite(a.intersect(b)) == a);  // absorption
    REQUIRE(a.intersect(a.unite(b)) == a);

    // canonical form survives a rebuild from its own arcs
    ArcSet rebuilt;
    for (const auto& arc : a.arcs()) rebuilt = rebuilt.unite(ArcSet::from_arc(arc));
    REQUIRE(rebuilt == a);

    // membership is consistent with complement and intersection on a grid
    for (int i = 0; i < 48; ++i) {
      Rational x(i, 48);
      REQUIRE(a.contains(x) == !a.complement().contains(x));
      REQUIRE(a.intersect(b).contains(x) == (a.contains(x) && b.contains(x)));
      REQUIRE(a.unite(b).contains(x) == (a.contains(x) || b.contains(x)));
    }
  }
}

TEST_CASE("canonical arcs satisfy the linearized bounds") {
  ArcGen gen;
  for (int round = 0; round < 200; ++round) {
    ArcSet a = gen.set();
    Rational prev(-1);
    for (const auto& arc : a.arcs()) {
      REQUIRE(arc.start >= Rational(0));
      REQUIRE(arc.start < Rational(1));
      REQUIRE(arc.end <= Rational(1));
      if (arc.start == arc.end) {
        REQUIRE(arc.start_closed);
        REQUIRE(arc.end_closed);
      } else {
        REQUIRE(arc.start < arc.end);
        if (arc.end == Rational(1)) REQUIRE_FALSE(arc.end_closed);
      }
      REQUIRE(arc.start > prev);
      prev = arc.start;
    }
  }
}

TEST_CASE("connected components count circle-connectivity") {
  CHECK(ArcSet::empty().components() == 0);
  CHECK(ArcSet::full().components() == 1);
  CHECK(ArcSet::segment(Rational(0), Rational(1, 2), true, false).components() == 1);
  ArcSet two = ArcSet::segment(Rational(0), Rational(1, 8), true, true)
                   .unite(ArcSet::segment(Rational(1, 2), Rational(5, 8), true, true));
  CHECK(two.components() == 2);
  // pieces touching across the seam are one component
  ArcSet wrapped = ArcSet::circular(Rational(3, 4), Rational(1, 4), true, false);
  CHECK(wrapped.arcs().size() == 2);
  CHECK(wrapped.components() == 1);
  // ... but only when the seam point itself is present
  ArcSet punctured = ArcSet::segment(Rational(0), Rational(1, 4), false, false)
                         .unite(ArcSet::segment(Rational(3, 4), Rational(1), true, false));
  CHECK(punctured.components() == 2);
}

TEST_CASE("circle symmetries act on arc sets") {
  ArcSet k = ArcSet::segment(Rational(0), Rational(1, 2), true, false);

  SUBCASE("rotation and reflection fixtures") {
    CHECK(arc_apply(CircleSymmetry(Rational(1, 2), 1), k).to_string() == "[1/2,1)");
    CHECK(arc_apply(CircleSymmetry(Rational(0), -1), k).to_string() ==
          "{0} u (1/2,1)");
    CHECK(arc_apply(CircleSymmetry(Rational(0), -1), k).components() == 1);
    CHECK(arc_apply(CircleSymmetry(Rational(1, 2), -1), k).to_string() == "(0,1/2]");
  }

  SUBCASE("rendering of the symmetries themselves") {
    CHECK(CircleSymmetry(Rational(5, 8), -1).to_string() == "e^(5/8).(-1)");
    CHECK(CircleSymmetry(Rational(1, 2), 1).to_string() == "e^(1/2).1");
    CHECK_THROWS_AS(CircleSymmetry(Rational(0), 2), std::invalid_argument);
  }

  SUBCASE("group behavior on generated sets") {
    ArcGen gen;
    for (int round = 0; round < 120; ++round) {
      ArcSet a = gen.set();
      Rational t = gen.pos(), s = gen.pos();
      CAPTURE(a.to_string());

      CircleSymmetry rot_t(t, 1), rot_s(s, 1), refl(t, -1);
      REQUIRE(arc_apply(rot_s, arc_apply(rot_t, a)) ==
              arc_apply(CircleSymmetry(t + s, 1), a));
      REQUIRE(arc_apply(refl, arc_apply(refl, a)) == a);  // involution
      REQUIRE(arc_apply(rot_t, a).measure() == a.measure());
      REQUIRE(arc_apply(refl, a).measure() == a.measure());

      for (int i = 0; i < 24; ++i) {
        Rational x(i, 24);
        REQUIRE(arc_apply(rot_t, a).contains(rot_t.apply(x)) == a.contains(x));
        REQUIRE(arc_apply(refl, a).contains(refl.apply(x)) == a.contains(x));
      }
    }
  }
}
