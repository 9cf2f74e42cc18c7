#pragma once

/**
 * @file arcs.hpp
 * Exact subsets of the unit circle built from finitely many arcs with
 * rational endpoints and open/closed boundary flags, plus the rotation
 * and reflection symmetries acting on them.
 *
 * Storage is linear over the fundamental domain [0, 1): arcs crossing the
 * seam are split, and component counting re-glues across it.
 */

#include <string>
#include <vector>

#include "cpt/rational.hpp"

namespace cpt {

/**
 * One circular arc, counterclockwise from start to end. Canonical arcs are
 * linear: start in [0, 1), end in (0, 1], start < end (or a single point).
 * As from_arc input, end <= start is also accepted and wraps the seam.
 */
struct Arc {
  Rational start, end;
  bool start_closed = true, end_closed = true;
  // start == end closed-closed is the single point {start}; with any open
  // flag it wraps the whole circle minus the open endpoint(s).
  std::string to_string() const;  // "[0,1/4)", "(1/8,1/2)", "{0}"
};

/** A finite union of arcs, kept in a canonical linearized form. */
class ArcSet {
 public:
  ArcSet() = default;  // empty set

  static ArcSet empty() { return {}; }
  static ArcSet full();
  static ArcSet point(const Rational& p);
  // Linear piece inside the fundamental domain: 0 <= lo <= hi <= 1.
  static ArcSet segment(const Rational& lo, const Rational& hi, bool lo_closed,
                        bool hi_closed);
  // Circular arc from start to end (mod 1), wrapping when end <= start.
  static ArcSet circular(const Rational& start, const Rational& end, bool start_closed,
                         bool end_closed);
  static ArcSet from_arc(const Arc& a) {
    return a.start == a.end && a.start_closed && a.end_closed
               ? point(a.start)
               : circular(a.start, a.end, a.start_closed, a.end_closed);
  }

  bool is_empty() const { return parts_.empty(); }
  bool is_full() const;
  bool contains(const Rational& pos) const;

  ArcSet unite(const ArcSet& other) const;
  ArcSet intersect(const ArcSet& other) const;
  ArcSet complement() const;

  Rational measure() const;
  // Connected components on the circle (arcs touching across the seam count
  // as one); each component contributes one independent cycle to the fiber.
  int components() const;

  // The canonical linear arcs, seam-split, sorted by start.
  std::vector<Arc> arcs() const;
  std::string to_string() const;  // arcs joined with " u ", "{}" when empty

  friend bool operator==(const ArcSet& a, const ArcSet& b) { return a.parts_ == b.parts_; }
  friend bool operator!=(const ArcSet& a, const ArcSet& b) { return !(a == b); }

 private:
  struct Piece {
    Rational lo, hi;  // 0 <= lo <= hi <= 1, lo < 1; hi == 1 only half-open
    bool lo_closed, hi_closed;
    friend bool operator==(const Piece& a, const Piece& b) = default;
  };
  static void normalize_into(std::vector<Piece>& out, Rational lo, Rational len,
                             bool lo_closed, bool hi_closed);
  static ArcSet canonicalize(std::vector<Piece> pieces);

  std::vector<Piece> parts_;

  friend ArcSet arc_apply_impl(const ArcSet&, const Rational&, int);
};

/** e^t.v on the circle: v=+1 rotates by t, v=-1 reflects d to t - d. */
struct CircleSymmetry {
  Rational t;  // in [0, 1)
  int v = 1;   // +1 or -1

  CircleSymmetry(Rational t_, int v_) : t(mod1(t_)), v(v_) {
    if (v_ != 1 && v_ != -1)
      throw std::invalid_argument("CircleSymmetry: v must be +1 or -1");
  }

  Rational apply(const Rational& d) const { return mod1(v == 1 ? d + t : t - d); }
  std::string to_string() const;  // "e^(5/8).(-1)", "e^(1/2).1"

  friend bool operator==(const CircleSymmetry& a, const CircleSymmetry& b) {
    return a.t == b.t && a.v == b.v;
  }
};

// Pointwise image of the set under the symmetry.
ArcSet arc_apply(const CircleSymmetry& g, const ArcSet& s);

}  // namespace cpt
