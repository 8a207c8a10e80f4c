#pragma once

// Independent reference implementations used to pin engine behavior:
// enumeration-based operator factorization, vertex-arithmetic action on
// subset complexes, brute-force congruence closure, kernel-pair seed
// enumeration, a hand-coded chain-counting poset, generator permutation,
// exhaustive isomorphism search, and a deterministic map sampler.

#include <cstdint>
#include <utility>
#include <vector>

#include "ssk/desing.hpp"

namespace ssk::testing {

// All (mono, epi) pairs composing to op, found by enumeration; the engine's
// claim is that there is exactly one.
std::vector<EzFactorization> ez_all_factorizations(const DeltaOperator& op);

// Action in delta(n), computed on vertex sequences: a simplex (S, rho) of the
// subset complex is the monotone map i -> S[rho(i)]; the action is plain
// composition followed by image/position splitting.  Valid for any complex
// whose generator names are digit strings of vertex subsets (delta, boundary).
Simplex subset_act_oracle(const FiniteSimplicialSet& X, const Simplex& x, const DeltaOperator& alpha);

// Smallest equivalence on all simplices of degree <= bound containing the
// seeds and closed under every operator of ranks <= bound, by fixpoint
// iteration (no worklist shortcuts).
class BruteCongruence {
public:
  BruteCongruence(SsetPtr X, const std::vector<std::pair<Simplex, Simplex>>& seeds, int bound);
  bool same(const Simplex& a, const Simplex& b) const;
  const std::vector<Simplex>& elements(int degree) const {
    return elems_[static_cast<size_t>(degree)];
  }
  int bound() const { return static_cast<int>(elems_.size()) - 1; }

private:
  int index_of(const Simplex& s) const;
  int find(int degree, int i) const;
  SsetPtr X_;
  std::vector<std::vector<Simplex>> elems_;
  mutable std::vector<std::vector<int>> parent_;
};

// Every pair (j.alpha, j.beta) with rho_j alpha = rho_j beta at source ranks
// <= dim X: the kernel-pair congruence seeds of the enforcer collapse.
std::vector<std::pair<Simplex, Simplex>> kernel_pair_seeds(const SsetPtr& X,
                                                           const std::vector<GeneratorId>& J);

// Chains counted by length in a hand-coded poset: two cone points under six
// edges under six triangles, matching the subdivided collapsed-boundary
// triangle.  Returns counts of chains with 1, 2, 3 elements.
std::vector<int> suspension_chain_counts();

// Same presentation with generator order shuffled per degree (deterministic
// in the seed); names are kept.
SsetPtr permute_generators(const SsetPtr& X, std::uint64_t seed);

// Exhaustive isomorphism decision trying every degree-respecting generator
// bijection; usable only for small instances.
bool brute_isomorphic(const SsetPtr& X, const SsetPtr& Y);

// Deterministic sample of maps with non-singular targets, paired with the
// desingularization trace of their shared source.
struct FactorSample {
  DesingTrace trace;
  std::vector<SimplicialMap> maps;  // each has source trace.input
};
std::vector<FactorSample> factor_samples();

// Small deterministic PRNG for subsampling in property tests.
struct Rng {
  std::uint64_t state;
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

}  // namespace ssk::testing
