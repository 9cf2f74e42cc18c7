#pragma once

/**
 * @file counterpoint.hpp
 * Counterpoint symmetries of a strong dichotomy K over Z_n and the
 * admitted-successor sets they induce.
 *
 * A candidate symmetry is g = e^(e.t).(u + e.u*v) with t in Z_n, u a unit,
 * v in Z_n (non-units included). For the interval e.k it must
 *   (1) hit e.k from the complement fiber: exists d in D with g(e.d) = e.k,
 *   (2) commute with the induced quasipolarity at cantus 0,
 *   (3) maximize |g(K[e]) & K[e]| among candidates passing (1) and (2).
 */

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cpt/dichotomy.hpp"
#include "cpt/zmod.hpp"

namespace cpt {

/** The triple (t, u, v) behind the map e^(e.t).(u + e.u*v). */
struct CounterpointSymmetry {
  Residue t, u, v;

  CounterpointSymmetry(Residue t_, Residue u_, Residue v_) : t(t_), u(u_), v(v_) {
    if (!(t.modulus() == u.modulus()) || !(t.modulus() == v.modulus()))
      throw std::invalid_argument("CounterpointSymmetry: modulus mismatch");
    if (!u.is_unit())
      throw std::domain_error("CounterpointSymmetry: u must be a unit");
  }
  static CounterpointSymmetry of(std::int64_t t, std::int64_t u, std::int64_t v,
                                 Modulus m) {
    return {Residue(t, m), Residue(u, m), Residue(v, m)};
  }

  Modulus modulus() const { return t.modulus(); }
  DualAffineMap map() const {
    return DualAffineMap{DualNumber(Residue(0, modulus()), t), DualNumber(u, u * v)};
  }
  std::string to_string() const { return map().to_string(); }

  friend bool operator==(const CounterpointSymmetry& a, const CounterpointSymmetry& b) {
    return a.t == b.t && a.u == b.u && a.v == b.v;
  }
  // Canonical (t, u, v) order.
  friend bool operator<(const CounterpointSymmetry& a, const CounterpointSymmetry& b) {
    if (a.t.value() != b.t.value()) return a.t.value() < b.t.value();
    if (a.u.value() != b.u.value()) return a.u.value() < b.u.value();
    return a.v.value() < b.v.value();
  }
};

/** (cantus, interval) pair inside K[e], compact form of a successor. */
using SuccessorPair = std::pair<std::int64_t, std::int64_t>;

/**
 * All maximizers for one interval, with their successor sets.
 *
 * Every maximizer has the same intersection cardinality, but distinct
 * maximizers can admit different successor sets; they are kept per symmetry
 * and unioned on demand.
 */
class SuccessorSet {
 public:
  SuccessorSet(Residue interval, std::vector<CounterpointSymmetry> symmetries,
               std::int64_t cardinality, std::vector<std::vector<SuccessorPair>> successors);

  Modulus modulus() const { return interval_.modulus(); }
  Residue interval() const { return interval_; }
  const std::vector<CounterpointSymmetry>& symmetries() const { return symmetries_; }
  std::int64_t cardinality() const { return cardinality_; }

  const std::vector<SuccessorPair>& successors_of(std::size_t i) const {
    return successors_.at(i);
  }
  const std::vector<std::vector<SuccessorPair>>& successor_sets() const {
    return successors_;
  }
  std::vector<SuccessorPair> successor_union() const;

 private:
  Residue interval_;
  std::vector<CounterpointSymmetry> symmetries_;
  std::int64_t cardinality_;
  std::vector<std::vector<SuccessorPair>> successors_;  // aligned with symmetries_
};

/**
 * Correlation table of one unit u against K: C(s) = |{d in K : u*d + s in K}|,
 * with per-divisor coset sums so that the full intersection count
 *   sum_c C((t + step*c) mod n) = gcd(step, n) * sum_{s = t mod gcd} C(s)
 * is a table lookup for any symmetry sharing this u.
 */
class IntersectionKernel {
 public:
  IntersectionKernel(const Dichotomy& k_set, std::int64_t u);

  // |g(K[e]) & K[e]| for g = e^(e.t).(u + e.step) with this kernel's u,
  // step being the dual part u*v of the linear coefficient.
  std::int64_t count(std::int64_t t, std::int64_t step) const;

 private:
  std::int64_t n_;
  std::vector<std::int64_t> table_;
  std::vector<std::int64_t> divisors_;
  std::vector<std::vector<std::int64_t>> coset_sums_;
};

// |g(K[e]) & K[e]| through IntersectionKernel.
std::int64_t intersection_cardinality(const Dichotomy& k_set,
                                      const CounterpointSymmetry& g);

// Same quantity by direct enumeration of all (cantus, interval) pairs.
std::int64_t intersection_cardinality_direct(const Dichotomy& k_set,
                                             const CounterpointSymmetry& g);

// Conditions (1)-(3) for the interval e.k; K must be strong and k in K.
// Parallelizes over u; cap worker threads with the CPT_THREADS env var.
SuccessorSet counterpoint_symmetries(const Dichotomy& k_set, const Residue& k);

// Successor pairs for cantus x, obtained from the cantus-0 pairs by
// translating the cantus coordinate.
std::vector<SuccessorPair> transpose_successors(const Residue& x,
                                                const std::vector<SuccessorPair>& zero);

// --- shared evaluators on arbitrary dual affine maps -----------------------

// xi in g(D[e]) for D = complement of K: the unique preimage cantus is
// checked to carry a complement-fiber witness.
bool interval_condition(const Dichotomy& k_set, const DualAffineMap& g,
                        const DualNumber& xi);

// |g(K[e]) & K[e]| for an arbitrary invertible dual affine map.
std::int64_t map_intersection_cardinality(const Dichotomy& k_set,
                                          const DualAffineMap& g);

// g(K[e]) & K[e] as sorted (cantus, interval) pairs.
std::vector<SuccessorPair> map_successors(const Dichotomy& k_set,
                                          const DualAffineMap& g);

}  // namespace cpt
