#include "cpt/dichotomy.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cpt {

Dichotomy::Dichotomy(Modulus m, std::vector<std::int64_t> members) : m_(m) {
  std::int64_t n = m.value();
  if (n % 2 != 0)
    throw std::invalid_argument("Dichotomy: modulus must be even, got " +
                                std::to_string(n));
  mask_.assign(static_cast<std::size_t>(n), 0);
  for (std::int64_t x : members) {
    std::int64_t r = mod_reduce(x, n);
    if (mask_[static_cast<std::size_t>(r)])
      throw std::invalid_argument("Dichotomy: duplicate member " + std::to_string(r));
    mask_[static_cast<std::size_t>(r)] = 1;
    members_.push_back(r);
  }
  if (static_cast<std::int64_t>(members_.size()) != n / 2)
    throw std::invalid_argument(
        "Dichotomy: need exactly n/2 = " + std::to_string(n / 2) + " members, got " +
        std::to_string(members_.size()));
  std::sort(members_.begin(), members_.end());
}

Dichotomy Dichotomy::complement() const {
  std::vector<std::int64_t> rest;
  for (std::int64_t x = 0; x < mod(); ++x)
    if (!mask_[static_cast<std::size_t>(x)]) rest.push_back(x);
  return {m_, rest};
}

std::string Dichotomy::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ",";
    out << members_[i];
  }
  return out.str();
}

PolarityReport find_quasipolarities(const Dichotomy& s) {
  std::int64_t n = s.mod();
  PolarityReport report;
  for (std::int64_t u = 0; u < n; ++u) {
    for (std::int64_t v = 1; v < n; ++v) {
      if (std::gcd(v, n) != 1) continue;
      // p injective and |S| = |complement|, so p(S) inside the complement
      // already forces p(S) = complement.
      bool ok = true;
      for (std::int64_t x : s.members()) {
        if (s.contains(v * x + u)) {
          ok = false;
          break;
        }
      }
      if (ok) report.quasipolarities.push_back(AffineMap::of(u, v, s.modulus()));
    }
  }
  std::sort(report.quasipolarities.begin(), report.quasipolarities.end());
  report.strong = report.quasipolarities.size() == 1;
  if (report.strong) report.polarity = report.quasipolarities.front();
  return report;
}

DualAffineMap induced_quasipolarity(const AffineMap& p, const Residue& x) {
  if (!(p.modulus() == x.modulus()))
    throw std::invalid_argument("induced_quasipolarity: modulus mismatch");
  Modulus m = p.modulus();
  Residue one(1, m);
  Residue ta = (one - p.linear()) * x;
  return {DualNumber(ta, p.translation()), DualNumber(p.linear(), Residue(0, m))};
}

EmbeddingReport check_embedding(std::int64_t a, const Dichotomy& source,
                                const Dichotomy& target) {
  if (a < 1) throw std::invalid_argument("check_embedding: a must be >= 1");
  if (source.mod() * a != target.mod())
    throw std::invalid_argument("check_embedding: target modulus must be a * source modulus");
  PolarityReport ps = find_quasipolarities(source);
  PolarityReport pt = find_quasipolarities(target);
  if (!ps.strong)
    throw std::invalid_argument("check_embedding: source dichotomy is not strong");
  if (!pt.strong)
    throw std::invalid_argument("check_embedding: target dichotomy is not strong");

  EmbeddingReport report;
  report.scales_into_target = true;
  for (std::int64_t x : source.members())
    if (!target.contains(a * x)) report.scales_into_target = false;

  std::int64_t n = source.mod(), an = target.mod();
  std::int64_t w1 = ps.polarity->linear().value(), r1 = ps.polarity->translation().value();
  std::int64_t w2 = pt.polarity->linear().value(), r2 = pt.polarity->translation().value();
  report.polarity_commutes = true;
  for (std::int64_t x = 0; x < n; ++x) {
    std::int64_t lhs = mod_reduce(w2 * (a * x) + r2, an);
    std::int64_t rhs = mod_reduce(a * mod_reduce(w1 * x + r1, n), an);
    if (lhs != rhs) {
      report.polarity_commutes = false;
      break;
    }
  }
  report.translation_scales = mod_reduce(a * r1, an) == r2;
  return report;
}

}  // namespace cpt
