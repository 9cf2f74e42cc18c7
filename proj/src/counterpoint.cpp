#include "cpt/counterpoint.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace cpt {

namespace {

// Plain-int mirror of DualAffineMap for the hot search loops.
struct RawMap {
  std::int64_t ta, tb, va, vb;
};

inline RawMap raw_compose(const RawMap& f, const RawMap& g, std::int64_t n) {
  return {mod_reduce(f.va * g.ta + f.ta, n),
          mod_reduce(f.tb + f.vb * g.ta + f.va * g.tb, n),
          mod_reduce(f.va * g.va, n),
          mod_reduce(f.va * g.vb + f.vb * g.va, n)};
}

inline bool raw_commute(const RawMap& f, const RawMap& g, std::int64_t n) {
  RawMap fg = raw_compose(f, g, n), gf = raw_compose(g, f, n);
  return fg.ta == gf.ta && fg.tb == gf.tb && fg.va == gf.va && fg.vb == gf.vb;
}

unsigned worker_count() {
  if (const char* env = std::getenv("CPT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

}  // namespace

IntersectionKernel::IntersectionKernel(const Dichotomy& k_set, std::int64_t u)
    : n_(k_set.mod()) {
  table_.assign(static_cast<std::size_t>(n_), 0);
  for (std::int64_t s = 0; s < n_; ++s) {
    std::int64_t c = 0;
    for (std::int64_t d : k_set.members())
      if (k_set.contains(u * d + s)) ++c;
    table_[static_cast<std::size_t>(s)] = c;
  }
  for (std::int64_t d = 1; d <= n_; ++d) {
    if (n_ % d != 0) continue;
    divisors_.push_back(d);
    std::vector<std::int64_t> sums(static_cast<std::size_t>(d), 0);
    for (std::int64_t s = 0; s < n_; ++s)
      sums[static_cast<std::size_t>(s % d)] += table_[static_cast<std::size_t>(s)];
    coset_sums_.push_back(std::move(sums));
  }
}

std::int64_t IntersectionKernel::count(std::int64_t t, std::int64_t step) const {
  std::int64_t g = step == 0 ? n_ : std::gcd(step, n_);
  std::size_t gi = static_cast<std::size_t>(
      std::lower_bound(divisors_.begin(), divisors_.end(), g) - divisors_.begin());
  return g * coset_sums_[gi][static_cast<std::size_t>(mod_reduce(t, n_) % g)];
}

SuccessorSet::SuccessorSet(Residue interval,
                           std::vector<CounterpointSymmetry> symmetries,
                           std::int64_t cardinality,
                           std::vector<std::vector<SuccessorPair>> successors)
    : interval_(interval),
      symmetries_(std::move(symmetries)),
      cardinality_(cardinality),
      successors_(std::move(successors)) {
  if (symmetries_.size() != successors_.size())
    throw std::logic_error("SuccessorSet: symmetry/successor misalignment");
  for (const auto& s : successors_)
    if (static_cast<std::int64_t>(s.size()) != cardinality_)
      throw std::logic_error("SuccessorSet: successor set size != cardinality");
}

std::vector<SuccessorPair> SuccessorSet::successor_union() const {
  std::vector<SuccessorPair> all;
  for (const auto& s : successors_) all.insert(all.end(), s.begin(), s.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::int64_t intersection_cardinality(const Dichotomy& k_set,
                                      const CounterpointSymmetry& g) {
  if (!(k_set.modulus() == g.modulus()))
    throw std::invalid_argument("intersection_cardinality: modulus mismatch");
  IntersectionKernel kernel(k_set, g.u.value());
  return kernel.count(g.t.value(), (g.u * g.v).value());
}

std::int64_t intersection_cardinality_direct(const Dichotomy& k_set,
                                             const CounterpointSymmetry& g) {
  if (!(k_set.modulus() == g.modulus()))
    throw std::invalid_argument("intersection_cardinality_direct: modulus mismatch");
  return map_intersection_cardinality(k_set, g.map());
}

bool interval_condition(const Dichotomy& k_set, const DualAffineMap& g,
                        const DualNumber& xi) {
  if (!(k_set.modulus() == g.modulus()) || !(k_set.modulus() == xi.modulus()))
    throw std::invalid_argument("interval_condition: modulus mismatch");
  if (!g.is_symmetry())
    throw std::domain_error("interval_condition: map is not invertible");
  std::int64_t n = k_set.mod();
  std::int64_t va_inv = mod_inverse(g.linear().a().value(), n);
  // The cantus preimage of xi.a is unique; the fiber witness must lie in D.
  std::int64_t c = mod_reduce(va_inv * (xi.a().value() - g.translation().a().value()), n);
  std::int64_t d = mod_reduce(
      va_inv * (xi.b().value() - g.translation().b().value() - g.linear().b().value() * c),
      n);
  return !k_set.contains(d);
}

std::int64_t map_intersection_cardinality(const Dichotomy& k_set,
                                          const DualAffineMap& g) {
  if (!(k_set.modulus() == g.modulus()))
    throw std::invalid_argument("map_intersection_cardinality: modulus mismatch");
  std::int64_t n = k_set.mod();
  std::int64_t tb = g.translation().b().value();
  std::int64_t va = g.linear().a().value(), vb = g.linear().b().value();
  std::int64_t total = 0;
  for (std::int64_t c = 0; c < n; ++c) {
    std::int64_t base = tb + vb * c;
    for (std::int64_t d : k_set.members())
      if (k_set.contains(base + va * d)) ++total;
  }
  return total;
}

std::vector<SuccessorPair> map_successors(const Dichotomy& k_set,
                                          const DualAffineMap& g) {
  if (!(k_set.modulus() == g.modulus()))
    throw std::invalid_argument("map_successors: modulus mismatch");
  std::int64_t n = k_set.mod();
  std::int64_t ta = g.translation().a().value(), tb = g.translation().b().value();
  std::int64_t va = g.linear().a().value(), vb = g.linear().b().value();
  std::vector<SuccessorPair> out;
  for (std::int64_t c = 0; c < n; ++c) {
    std::int64_t cantus = mod_reduce(ta + va * c, n);
    std::int64_t base = tb + vb * c;
    for (std::int64_t d : k_set.members()) {
      std::int64_t e = mod_reduce(base + va * d, n);
      if (k_set.contains(e)) out.emplace_back(cantus, e);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SuccessorPair> transpose_successors(const Residue& x,
                                                const std::vector<SuccessorPair>& zero) {
  std::int64_t n = x.mod();
  std::vector<SuccessorPair> out;
  out.reserve(zero.size());
  for (const auto& [c, d] : zero) out.emplace_back(mod_reduce(c + x.value(), n), d);
  std::sort(out.begin(), out.end());
  return out;
}

SuccessorSet counterpoint_symmetries(const Dichotomy& k_set, const Residue& k) {
  if (!(k_set.modulus() == k.modulus()))
    throw std::invalid_argument("counterpoint_symmetries: modulus mismatch");
  if (!k_set.contains(k.value()))
    throw std::invalid_argument("counterpoint_symmetries: interval " +
                                std::to_string(k.value()) + " is not in the dichotomy");
  PolarityReport polarity = find_quasipolarities(k_set);
  if (!polarity.strong)
    throw std::invalid_argument(
        "counterpoint_symmetries: dichotomy is not strong (" +
        std::to_string(polarity.quasipolarities.size()) + " quasipolarities)");

  std::int64_t n = k_set.mod();
  std::int64_t r = polarity.polarity->translation().value();
  std::int64_t w = polarity.polarity->linear().value();
  RawMap q0{0, r, w, 0};

  std::vector<std::int64_t> units;
  for (std::int64_t u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1) units.push_back(u);

  struct UnitResult {
    std::int64_t best = -1;
    std::vector<std::array<std::int64_t, 3>> argmax;
  };
  std::vector<UnitResult> results(units.size());

  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t ui = lo; ui < hi; ++ui) {
      std::int64_t u = units[ui];
      std::int64_t u_inv = mod_inverse(u, n);
      IntersectionKernel kernel(k_set, u);
      UnitResult& local = results[ui];
      for (std::int64_t t = 0; t < n; ++t) {
        // Condition (1): the complement-fiber witness for e.k.
        std::int64_t d = mod_reduce(u_inv * (k.value() - t), n);
        if (k_set.contains(d)) continue;
        for (std::int64_t v = 0; v < n; ++v) {
          // Condition (2): literal commutation with the induced quasipolarity.
          RawMap g{0, t, u, mod_reduce(u * v, n)};
          if (!raw_commute(g, q0, n)) continue;
          std::int64_t count = kernel.count(t, g.vb);
          if (count > local.best) {
            local.best = count;
            local.argmax.clear();
          }
          if (count == local.best) local.argmax.push_back({t, u, v});
        }
      }
    }
  };

  unsigned workers = std::min<std::size_t>(worker_count(), units.size());
  if (workers <= 1) {
    run_range(0, units.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (units.size() + workers - 1) / workers;
    for (unsigned w_i = 0; w_i < workers; ++w_i) {
      std::size_t lo = w_i * chunk;
      std::size_t hi = std::min(units.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run_range, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  std::int64_t best = -1;
  for (const auto& res : results) best = std::max(best, res.best);
  std::vector<CounterpointSymmetry> argmax;
  for (const auto& res : results) {
    if (res.best != best) continue;
    for (const auto& [t, u, v] : res.argmax)
      argmax.push_back(CounterpointSymmetry::of(t, u, v, k_set.modulus()));
  }
  std::sort(argmax.begin(), argmax.end());

  std::vector<std::vector<SuccessorPair>> successors;
  successors.reserve(argmax.size());
  for (const auto& g : argmax) successors.push_back(map_successors(k_set, g.map()));
  if (best < 0) best = 0;  // no candidate passed the filters
  return {k, std::move(argmax), best, std::move(successors)};
}

}  // namespace cpt
