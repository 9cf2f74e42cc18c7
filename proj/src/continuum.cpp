#include "cpt/continuum.hpp"

#include <algorithm>
#include <stdexcept>

namespace cpt {

namespace {

const Rational kHalf(1, 2);

// One admissibility interval on the lifted t-line: [start, start+1/2] with
// the stated endpoint closures, reduced mod 1 only when evaluated.
struct Branch {
  int v;
  Rational start;
  bool start_closed, end_closed;
};

struct Candidate {
  Rational t;  // lifted; may lie outside [0,1)
  int v;
  Rational value;
  bool attained;
};

Rational measure_at(const Rational& lifted_t, int v) {
  CircleSymmetry g{mod1(lifted_t), v};
  ArcSet k = consonance_set();
  return arc_apply(g, k).intersect(k).measure();
}

}  // namespace

ArcSet consonance_set() { return ArcSet::segment(Rational(0), kHalf, true, false); }

CircleSymmetry circle_polarity() { return CircleSymmetry{kHalf, +1}; }

bool is_consonance(const Rational& k) { return k >= Rational(0) && k < kHalf; }

AdmissibleRegion admissible_region(const Rational& k) {
  if (!is_consonance(k))
    throw std::invalid_argument("admissible_region: interval is not a consonance");
  AdmissibleRegion r;
  r.rotation = ArcSet::circular(k, mod1(k + kHalf), false, true);
  r.reflection = ArcSet::circular(mod1(k - kHalf), k, true, false);
  return r;
}

bool is_admissible(const CircleSymmetry& g, const Rational& k) {
  AdmissibleRegion r = admissible_region(k);
  return (g.v == 1 ? r.rotation : r.reflection).contains(g.t);
}

Rational intersection_measure(const CircleSymmetry& g) {
  ArcSet k = consonance_set();
  return arc_apply(g, k).intersect(k).measure();
}

MaximizerReport continuum_maximizers(const Rational& k) {
  if (!is_consonance(k))
    throw std::invalid_argument("continuum_maximizers: interval is not a consonance");

  // Branch intervals have length exactly 1/2, so a breakpoint lands in the
  // interior iff its offset from the start is strictly within (0, 1/2).
  const Branch branches[] = {
      {-1, k - kHalf, true, false},  // reflections: t in [k-1/2, k)
      {+1, k, false, true},          // rotations:   t in (k, k+1/2]
  };
  const Rational breakpoints[] = {Rational(0), kHalf, k, mod1(k + kHalf)};

  std::vector<Candidate> candidates;
  for (const Branch& b : branches) {
    std::vector<Rational> ts = {b.start, b.start + kHalf};
    for (const Rational& p : breakpoints) {
      Rational offset = mod1(p - b.start);
      if (offset > Rational(0) && offset < kHalf) ts.push_back(b.start + offset);
    }
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    std::size_t first = candidates.size();
    for (const Rational& t : ts) {
      bool attained = (t == b.start)         ? b.start_closed
                      : (t == b.start + kHalf) ? b.end_closed
                                               : true;
      candidates.push_back({t, b.v, measure_at(t, b.v), attained});
    }
    // The objective must be linear between consecutive candidates; a failed
    // midpoint check means the breakpoint list above is incomplete.
    for (std::size_t i = first + 1; i < candidates.size(); ++i) {
      Rational mid = (candidates[i - 1].t + candidates[i].t) / 2;
      if (measure_at(mid, b.v) * 2 != candidates[i - 1].value + candidates[i].value)
        throw std::logic_error("continuum_maximizers: objective not linear between breakpoints");
    }
  }

  Rational best(-1);
  bool any_attained = false;
  for (const Candidate& c : candidates)
    if (c.attained) {
      any_attained = true;
      best = std::max(best, c.value);
    }
  if (!any_attained)
    throw std::logic_error("continuum_maximizers: no attainable candidate");
  for (const Candidate& c : candidates)
    if (!c.attained && c.value > best)
      throw std::logic_error("continuum_maximizers: supremum not attained");

  // A whole cell at the maximum would mean infinitely many maximizers.
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    const Candidate &a = candidates[i - 1], &b = candidates[i];
    if (a.v == b.v && a.t < b.t && a.value == best && b.value == best)
      throw std::logic_error("continuum_maximizers: maximizer set is not finite");
  }

  MaximizerReport report;
  report.measure = best;
  for (const Candidate& c : candidates)
    if (c.attained && c.value == best)
      report.maximizers.push_back(CircleSymmetry{mod1(c.t), c.v});
  return report;
}

ArcSet continuous_successors(const Rational& k) {
  MaximizerReport report = continuum_maximizers(k);
  ArcSet consonances = consonance_set();
  ArcSet out = ArcSet::empty();
  for (const CircleSymmetry& g : report.maximizers)
    out = out.unite(arc_apply(g, consonances).intersect(consonances));
  return out;
}

int h1_rank(const CircleSymmetry& g) {
  ArcSet k = consonance_set();
  return arc_apply(g, k).intersect(k).components();
}

}  // namespace cpt
