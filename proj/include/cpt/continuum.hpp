#pragma once

#include <vector>

#include "cpt/arcs.hpp"

// Counterpoint on the continuous pitch circle R/Z. The consonant interval
// set is the half-circle K = [0, 1/2); a symmetry e^t.v is admissible for a
// consonance k when it moves the fiber over k out of K, and the preferred
// symmetries are the admissible ones whose image of K overlaps K in maximal
// measure. Everything here is exact: rational endpoints, rational measures.

namespace cpt {

/** The consonances: the half-open lower half-circle [0, 1/2). */
ArcSet consonance_set();

/** The polarity exchanging consonances and dissonances: rotation by 1/2. */
CircleSymmetry circle_polarity();

bool is_consonance(const Rational& k);

/**
 * Admissible translation parameters for each orientation at consonance k:
 * rotations with t in (k, k+1/2], reflections with t in [k-1/2, k), both
 * taken mod 1.
 */
struct AdmissibleRegion {
  ArcSet rotation;
  ArcSet reflection;
};

/** Requires k in [0, 1/2); throws std::invalid_argument otherwise. */
AdmissibleRegion admissible_region(const Rational& k);

bool is_admissible(const CircleSymmetry& g, const Rational& k);

/** Measure of g(K) ∩ K, the arc mass a progression style keeps consonant. */
Rational intersection_measure(const CircleSymmetry& g);

/**
 * All admissible symmetries of maximal intersection measure at k.
 * Reflections are listed before rotations, each side ordered by t.
 */
struct MaximizerReport {
  std::vector<CircleSymmetry> maximizers;
  Rational measure;
};

/**
 * Exact maximization of intersection_measure over the admissible region.
 * The objective is piecewise linear in t, so it is evaluated at region
 * endpoints and interior breakpoints; candidate values at open endpoints
 * count only as bounds. Throws std::logic_error if the supremum were not
 * attained or a whole cell were optimal (neither occurs for K a
 * half-circle; the guards keep the optimizer honest).
 */
MaximizerReport continuum_maximizers(const Rational& k);

/** Union of g(K) ∩ K over all maximizers g at k. */
ArcSet continuous_successors(const Rational& k);

/**
 * Rank of the first homology of the torus intersection above g: the fiber
 * set g(K) ∩ K contributes one circle per connected component. Zero only
 * when the intersection is empty.
 */
int h1_rank(const CircleSymmetry& g);

}  // namespace cpt
