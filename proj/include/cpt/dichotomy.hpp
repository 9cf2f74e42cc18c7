#pragma once

/**
 * @file dichotomy.hpp
 * Half/half splits of Z_2k, their quasipolarities, and the embedding
 * checks used when a dichotomy is transported into a larger ring.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cpt/zmod.hpp"

namespace cpt {

/** A k-element subset of Z_2k, stored sorted with O(1) membership. */
class Dichotomy {
 public:
  Dichotomy(Modulus m, std::vector<std::int64_t> members);

  Modulus modulus() const { return m_; }
  std::int64_t mod() const { return m_.value(); }
  std::int64_t half() const { return m_.value() / 2; }
  const std::vector<std::int64_t>& members() const { return members_; }

  bool contains(std::int64_t x) const { return mask_[mod_reduce(x, mod())] != 0; }
  Dichotomy complement() const;

  friend bool operator==(const Dichotomy& a, const Dichotomy& b) {
    return a.m_ == b.m_ && a.members_ == b.members_;
  }

  std::string to_string() const;  // "0,1,3,4,5,6,7,10"

 private:
  Modulus m_;
  std::vector<std::int64_t> members_;
  std::vector<std::uint8_t> mask_;
};

/** Result of the exhaustive quasipolarity scan over all n*phi(n) affine maps. */
struct PolarityReport {
  std::vector<AffineMap> quasipolarities;  // canonical (u, v) order
  bool strong = false;                     // exactly one quasipolarity
  std::optional<AffineMap> polarity;       // set iff strong
};

// All affine symmetries p with p(S) = complement of S.
PolarityReport find_quasipolarities(const Dichotomy& s);

// For a polarity p = e^r.w, the dual map e^((1-w)x + e.r).w: it fixes the
// cantus x and applies p on the fiber, so it swaps {x}+e.K and {x}+e.D.
DualAffineMap induced_quasipolarity(const AffineMap& p, const Residue& x);

/** Validity report for x -> a*x carrying one strong dichotomy into another. */
struct EmbeddingReport {
  bool scales_into_target = false;   // a*S_n is a subset of S_an
  bool polarity_commutes = false;    // p_an(a*x) = a*p_n(x) for every x in Z_n
  bool translation_scales = false;   // a*r_n = r_an
  bool valid() const { return scales_into_target && polarity_commutes; }
};

// Both dichotomies must be strong; throws std::invalid_argument otherwise.
EmbeddingReport check_embedding(std::int64_t a, const Dichotomy& source,
                                const Dichotomy& target);

}  // namespace cpt
