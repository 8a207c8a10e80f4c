#include "ssk/desing.hpp"

#include <numeric>

#include "ssk/iso.hpp"

namespace ssk {

DeltaOperator enforcer(const FiniteSimplicialSet& X, GeneratorId g) {
  if (!X.contains(g)) throw std::invalid_argument("enforcer: unknown generator");
  int n = g.degree;
  std::vector<Simplex> vs = vertices(X, nondeg(g));
  // glue the gap t|t+1 exactly when a repeated-vertex pair spans it; the
  // resulting blocks are the maximal glued runs, which are intervals
  std::vector<bool> glue(static_cast<size_t>(std::max(n, 0)), false);
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (vs[static_cast<size_t>(i)] == vs[static_cast<size_t>(j)])
        for (int t = i; t < j; ++t) glue[static_cast<size_t>(t)] = true;
  IntervalPartition p{n, std::vector<int>(static_cast<size_t>(n) + 1, 0)};
  for (int t = 0; t < n; ++t)
    p.block_of[static_cast<size_t>(t) + 1] =
        p.block_of[static_cast<size_t>(t)] + (glue[static_cast<size_t>(t)] ? 0 : 1);
  return partition_to_degeneracy(p);
}

QuotientResult cen(SsetPtr X, const std::vector<GeneratorId>& J) {
  std::vector<std::pair<Simplex, Simplex>> seeds;
  for (GeneratorId j : J) {
    DeltaOperator rho = enforcer(*X, j);
    if (rho.is_identity()) continue;  // embedded generators contribute nothing
    DeltaOperator retract = compose(rho, minimal_section(rho));
    seeds.emplace_back(nondeg(j), act(*X, nondeg(j), retract));
  }
  return quotient(X, seeds);
}

QuotientResult cen(SsetPtr X) {
  std::vector<GeneratorId> J;
  for (int d = 0; d <= X->dimension(); ++d)
    for (int i = 0; i < X->count(d); ++i)
      if (!is_embedded(*X, GeneratorId{d, i})) J.push_back(GeneratorId{d, i});
  return cen(std::move(X), J);
}

DesingTrace desingularize(SsetPtr X) {
  if (!X) throw std::invalid_argument("desingularize: null simplicial set");
  DesingTrace trace{X, {}, SimplicialMap::identity(X)};
  SsetPtr cur = X;
  while (!is_nonsingular(*cur)) {
    QuotientResult step = cen(cur);
    if (step.quotient->total_generators() >= cur->total_generators())
      throw std::logic_error("desingularize: collapse step failed to shrink the presentation");
    trace.eta = compose_maps(trace.eta, step.map);
    trace.stages.push_back(step);
    cur = step.quotient;
  }
  return trace;
}

SimplicialMap factor_through_eta(const DesingTrace& tx, const SimplicialMap& k) {
  if (!is_nonsingular(*k.target()))
    throw std::invalid_argument("factor_through_eta: target is singular");
  FactorResult fr = factor_through_quotient(tx.eta, k);
  if (!fr.map)
    throw std::logic_error("factor_through_eta: projection failed to factor (presentation invalid?)");
  return *fr.map;
}

SimplicialMap d_map(const SimplicialMap& f, const DesingTrace& tx, const DesingTrace& ty) {
  return factor_through_eta(tx, compose_maps(f, ty.eta));
}

SimplicialMap d_map(const SimplicialMap& f) {
  return d_map(f, desingularize(f.source()), desingularize(f.target()));
}

EnforcerPushoutCheck pushout_along_enforcers_check(SsetPtr X, const std::vector<GeneratorId>& J) {
  QuotientResult step = cen(X, J);
  DesingTrace trace = desingularize(X);
  FactorResult fr = factor_through_quotient(step.map, trace.eta);
  bool factors = fr.map.has_value();
  bool is_dx = is_nonsingular(*step.quotient) &&
               are_isomorphic(step.quotient, trace.result()).has_value();
  return EnforcerPushoutCheck{factors, is_dx};
}

SsetPtr ns_pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!is_nonsingular(*f.source()) || !is_nonsingular(*f.target()) || !is_nonsingular(*g.target()))
    throw std::invalid_argument("ns_pushout: inputs must be non-singular");
  return desingularize(pushout(f, g).sset).result();
}

}  // namespace ssk
