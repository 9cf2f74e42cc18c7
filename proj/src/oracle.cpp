#include "cpt/oracle.hpp"

#include <algorithm>
#include <numeric>

namespace cpt {

std::vector<SuccessorPair> OracleResult::successor_union() const {
  std::vector<SuccessorPair> all;
  for (const auto& s : successors) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

bool oracle_conditions(const Dichotomy& k_set, const DualAffineMap& g,
                       const DualNumber& xi) {
  PolarityReport polarity = find_quasipolarities(k_set);
  if (!polarity.strong)
    throw std::invalid_argument("oracle_conditions: dichotomy is not strong");
  DualAffineMap q = induced_quasipolarity(*polarity.polarity, xi.a());
  return interval_condition(k_set, g, xi) && g.commutes_with(q);
}

OracleResult oracle_symmetries_at(const Dichotomy& k_set, const Residue& x,
                                  const Residue& k) {
  if (!(k_set.modulus() == k.modulus()) || !(k_set.modulus() == x.modulus()))
    throw std::invalid_argument("oracle_symmetries: modulus mismatch");
  std::int64_t n = k_set.mod();
  if (n > 16)
    throw std::invalid_argument("oracle_symmetries: full-group search capped at n <= 16");
  if (!k_set.contains(k.value()))
    throw std::invalid_argument("oracle_symmetries: interval is not in the dichotomy");
  PolarityReport polarity = find_quasipolarities(k_set);
  if (!polarity.strong)
    throw std::invalid_argument("oracle_symmetries: dichotomy is not strong");

  Modulus m = k_set.modulus();
  DualNumber xi{x, k};
  DualAffineMap q = induced_quasipolarity(*polarity.polarity, x);

  OracleResult result{xi};
  result.cardinality = -1;
  for (std::int64_t va = 1; va < n; ++va) {
    if (std::gcd(va, n) != 1) continue;
    for (std::int64_t vb = 0; vb < n; ++vb) {
      for (std::int64_t ta = 0; ta < n; ++ta) {
        for (std::int64_t tb = 0; tb < n; ++tb) {
          DualAffineMap g = DualAffineMap::of(ta, tb, va, vb, m);
          if (!interval_condition(k_set, g, xi)) continue;
          if (!g.commutes_with(q)) continue;
          std::int64_t count = map_intersection_cardinality(k_set, g);
          if (count > result.cardinality) {
            result.cardinality = count;
            result.maximizers.clear();
          }
          if (count == result.cardinality) result.maximizers.push_back(g);
        }
      }
    }
  }
  if (result.cardinality < 0) result.cardinality = 0;
  std::sort(result.maximizers.begin(), result.maximizers.end());
  for (const auto& g : result.maximizers) {
    if (g.translation().a().value() != 0) result.outside_family.push_back(g);
    result.successors.push_back(map_successors(k_set, g));
  }
  return result;
}

OracleResult oracle_symmetries(const Dichotomy& k_set, const Residue& k) {
  return oracle_symmetries_at(k_set, Residue(0, k_set.modulus()), k);
}

}  // namespace cpt
