#pragma once

/**
 * @file oracle.hpp
 * Brute-force reference search over the full affine group of Z_n[e],
 * with no parametric shortcut: every invertible map is tested against
 * the three defining conditions verbatim. Kept to small n by design.
 */

#include <cstdint>
#include <vector>

#include "cpt/counterpoint.hpp"
#include "cpt/dichotomy.hpp"
#include "cpt/zmod.hpp"

namespace cpt {

/** Full-group search result for one interval at one cantus. */
struct OracleResult {
  DualNumber xi;                         // cantus + e.interval
  std::int64_t cardinality = 0;          // maximal fiber intersection size
  std::vector<DualAffineMap> maximizers; // canonical (ta, tb, va, vb) order
  // Maximizers whose cantus translation x is nonzero, falling outside the
  // e^(e.t).(u+e.u*v) family. Each one shifts the successor set of its
  // zero-translation projection by x; the projection always reaches the
  // same cardinality but may fail the interval condition, so these are not
  // in general translates of family members.
  std::vector<DualAffineMap> outside_family;
  std::vector<std::vector<SuccessorPair>> successors;  // aligned with maximizers

  std::vector<SuccessorPair> successor_union() const;
};

// Exhaustive search at cantus 0; n <= 16 enforced (n^3 * phi(n) maps).
OracleResult oracle_symmetries(const Dichotomy& k_set, const Residue& k);

// Exhaustive search for xi = x + e.k against the quasipolarity induced at x.
OracleResult oracle_symmetries_at(const Dichotomy& k_set, const Residue& x,
                                  const Residue& k);

// Checks a single map against conditions (1) and (2) at xi: membership of
// xi in g(D[e]) and literal commutation with the quasipolarity induced at
// the cantus of xi.
bool oracle_conditions(const Dichotomy& k_set, const DualAffineMap& g,
                       const DualNumber& xi);

}  // namespace cpt
