#include "cpt/extension.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace cpt {

Embedding::Embedding(std::int64_t a, Dichotomy source, Dichotomy target)
    : a_(a),
      source_(std::move(source)),
      target_(std::move(target)),
      source_polarity_(AffineMap::identity(source_.modulus())),
      target_polarity_(AffineMap::identity(target_.modulus())) {
  report_ = check_embedding(a, source_, target_);
  if (!report_.valid()) {
    std::ostringstream msg;
    msg << "Embedding: x -> " << a << "*x does not carry {" << source_.to_string()
        << "} mod " << source_.mod() << " into {" << target_.to_string() << "} mod "
        << target_.mod();
    if (!report_.scales_into_target) msg << " (image not contained)";
    if (!report_.polarity_commutes) msg << " (polarities do not commute)";
    throw std::invalid_argument(msg.str());
  }
  source_polarity_ = *find_quasipolarities(source_).polarity;
  target_polarity_ = *find_quasipolarities(target_).polarity;
}

std::vector<CounterpointSymmetry> candidate_extensions(const CounterpointSymmetry& g1,
                                                       const Embedding& e,
                                                       LinkageMode mode) {
  if (!(g1.modulus() == e.source().modulus()))
    throw std::invalid_argument("candidate_extensions: parent modulus mismatch");
  std::int64_t n = e.source().mod();
  std::int64_t an = e.target().mod();
  Modulus m_target = e.target().modulus();

  std::vector<CounterpointSymmetry> out;
  std::int64_t t2 = e.a() * g1.t.value();  // exact scaling, already < an
  std::int64_t uv1 = mod_reduce(g1.u.value() * g1.v.value(), n);
  for (std::int64_t j = 0; j < e.a(); ++j) {
    std::int64_t u2 = g1.u.value() + j * n;
    if (std::gcd(u2, an) != 1) continue;
    if (mode == LinkageMode::Transport) {
      // u2*v2 = a*(u1*v1) in Z_an pins v2 once the unit lift is chosen
      std::int64_t v2 = mod_reduce(mod_inverse(u2, an) * e.a() * uv1, an);
      out.push_back(CounterpointSymmetry::of(t2, u2, v2, m_target));
      continue;
    }
    for (std::int64_t v2 = 0; v2 < an; ++v2) {
      if (mode == LinkageMode::Strict && mod_reduce(u2 * v2 - uv1, n) != 0) continue;
      out.push_back(CounterpointSymmetry::of(t2, u2, v2, m_target));
    }
  }
  return out;
}

ExtensionStep extended_symmetries(const SuccessorSet& parents, const Embedding& e,
                                  LinkageMode mode) {
  if (parents.symmetries().empty())
    throw std::invalid_argument("extended_symmetries: empty parent set");
  if (!(parents.modulus() == e.source().modulus()))
    throw std::invalid_argument("extended_symmetries: parent modulus mismatch");
  const Dichotomy& target = e.target();
  Modulus m_target = target.modulus();
  Residue target_interval(e.a() * parents.interval().value(), m_target);
  if (!target.contains(target_interval.value()))
    throw std::logic_error("extended_symmetries: scaled interval left the dichotomy");

  std::set<std::array<std::int64_t, 3>> pooled;
  for (const auto& g1 : parents.symmetries())
    for (const auto& g2 : candidate_extensions(g1, e, mode))
      pooled.insert({g2.t.value(), g2.u.value(), g2.v.value()});

  DualAffineMap q0 = induced_quasipolarity(e.target_polarity(), Residue(0, m_target));

  std::vector<CounterpointSymmetry> filtered_out;
  std::vector<CounterpointSymmetry> survivors;
  for (const auto& [t2, u2, v2] : pooled) {
    CounterpointSymmetry g2 = CounterpointSymmetry::of(t2, u2, v2, m_target);
    DualAffineMap map = g2.map();
    if (interval_condition(target, map, DualNumber(Residue(0, m_target), target_interval)) &&
        map.commutes_with(q0)) {
      survivors.push_back(g2);
    } else {
      filtered_out.push_back(g2);
    }
  }
  if (survivors.empty())
    throw std::runtime_error(
        "extended_symmetries: no candidate survived the target-ring conditions");

  // One correlation kernel per distinct u2 serves every (t2, v2) candidate.
  std::map<std::int64_t, IntersectionKernel> kernels;
  std::int64_t best = -1;
  std::vector<CounterpointSymmetry> argmax;
  for (const auto& g2 : survivors) {
    auto it = kernels.find(g2.u.value());
    if (it == kernels.end())
      it = kernels.emplace(g2.u.value(), IntersectionKernel(target, g2.u.value())).first;
    std::int64_t count = it->second.count(g2.t.value(), (g2.u * g2.v).value());
    if (count > best) {
      best = count;
      argmax.clear();
    }
    if (count == best) argmax.push_back(g2);
  }
  std::sort(argmax.begin(), argmax.end());

  std::vector<std::vector<SuccessorPair>> successors;
  successors.reserve(argmax.size());
  for (const auto& g2 : argmax) successors.push_back(map_successors(target, g2.map()));

  return {e, parents,
          SuccessorSet(target_interval, std::move(argmax), best, std::move(successors)),
          std::move(filtered_out)};
}

PreservationResult preservation_check(const ExtensionStep& step) {
  PreservationResult result;
  std::int64_t a = step.embedding.a();
  std::int64_t n = step.embedding.source().mod();
  std::int64_t an = step.embedding.target().mod();
  const auto& parent_sets = step.parents.successor_sets();
  const auto& extended_sets = step.extended.successor_sets();

  std::vector<std::uint8_t> parent_union(static_cast<std::size_t>(n * n), 0);
  for (const auto& set : parent_sets)
    for (const auto& [c, d] : set) parent_union[static_cast<std::size_t>(c * n + d)] = 1;

  for (std::size_t j = 0; j < extended_sets.size(); ++j) {
    std::vector<std::uint8_t> mask(static_cast<std::size_t>(an * an), 0);
    for (const auto& [c, d] : extended_sets[j])
      mask[static_cast<std::size_t>(c * an + d)] = 1;
    for (std::size_t i = 0; i < parent_sets.size(); ++i) {
      for (const auto& p : parent_sets[i]) {
        SuccessorPair q = step.embedding.embed(p);
        if (!mask[static_cast<std::size_t>(q.first * an + q.second)]) {
          result.ok = false;
          if (result.violations.size() < 16) result.violations.emplace_back(i, j, q);
          if (p.first == 0) result.zero_fiber_ok = false;
        }
      }
    }
    // Pairs of the extended set inside the embedded copy must come from
    // some parent successor.
    for (const auto& [c, d] : extended_sets[j]) {
      if (c % a != 0 || d % a != 0) continue;
      std::int64_t c1 = c / a, d1 = d / a;
      if (!step.embedding.source().contains(d1)) continue;
      if (!parent_union[static_cast<std::size_t>(c1 * n + d1)]) result.reverse_ok = false;
    }
  }
  return result;
}

Tower::Tower(std::vector<Dichotomy> levels, std::vector<PolarityReport> reports)
    : levels_(std::move(levels)), reports_(std::move(reports)) {
  if (levels_.empty() || levels_.size() != reports_.size())
    throw std::invalid_argument("Tower: level/report misalignment");
}

Tower doubling_tower(const Dichotomy& base, std::size_t depth) {
  std::vector<Dichotomy> levels{base};
  std::vector<PolarityReport> reports;
  for (std::size_t i = 0; i <= depth; ++i) {
    const Dichotomy& level = levels[i];
    std::int64_t n = level.mod();
    PolarityReport report = find_quasipolarities(level);
    if (!report.strong)
      throw std::runtime_error("doubling_tower: level " + std::to_string(i) +
                               " (mod " + std::to_string(n) + ") is not strong: " +
                               std::to_string(report.quasipolarities.size()) +
                               " quasipolarities");
    AffineMap half_shift = AffineMap::of(n / 2, 1, level.modulus());
    if (*report.polarity != half_shift)
      throw std::runtime_error("doubling_tower: level " + std::to_string(i) +
                               " polarity " + report.polarity->to_string() +
                               " is not translation by half the modulus");
    reports.push_back(std::move(report));
    if (i == depth) break;

    // U_{i+1} = 2*U_i joined with 2*{0,...,|U_i|-1} + 1.
    std::vector<std::int64_t> next;
    for (std::int64_t x : level.members()) next.push_back(2 * x);
    for (std::int64_t j = 0; j < static_cast<std::int64_t>(level.members().size()); ++j)
      next.push_back(2 * j + 1);
    levels.emplace_back(Modulus(2 * n), std::move(next));

    EmbeddingReport embed = check_embedding(2, levels[i], levels[i + 1]);
    if (!embed.valid())
      throw std::runtime_error("doubling_tower: levels " + std::to_string(i) + " -> " +
                               std::to_string(i + 1) + " do not form a valid embedding");
  }
  return {std::move(levels), std::move(reports)};
}

std::vector<ExtensionStep> chain_extend(const Tower& tower, const Residue& k,
                                        LinkageMode mode) {
  if (!(k.modulus() == tower.level(0).modulus()))
    throw std::invalid_argument("chain_extend: interval modulus mismatch");
  std::vector<ExtensionStep> steps;
  SuccessorSet current = counterpoint_symmetries(tower.level(0), k);
  for (std::size_t i = 0; i + 1 < tower.size(); ++i) {
    Embedding e(2, tower.level(i), tower.level(i + 1));
    ExtensionStep step = extended_symmetries(current, e, mode);
    current = step.extended;
    steps.push_back(std::move(step));
  }
  return steps;
}

}  // namespace cpt
