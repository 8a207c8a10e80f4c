#pragma once

// Quotients by generated congruences, pushouts, and factorization of maps
// through quotient maps.  A congruence is a per-degree union-find over
// simplices in normal form, closed under elementary faces (downward) and
// elementary degeneracies (upward, capped at a degree bound).

#include <optional>
#include <utility>
#include <vector>

#include "ssk/smap.hpp"

namespace ssk {

class Congruence {
public:
  // degree_bound caps the degrees at which upward (degeneracy) closure is
  // generated; an operator between ranks <= degree_bound factors through
  // such ranks, so the relation restricted there is the full congruence.
  Congruence(SsetPtr X, int degree_bound);

  // Identify a ~ b (same degree) and close under the elementary operators.
  void merge(const Simplex& a, const Simplex& b);

  bool same(const Simplex& a, const Simplex& b);
  // Least member of the class of s (s itself when untouched).
  Simplex min_member(const Simplex& s);
  // Least degenerate member of the class of s, when one exists.
  std::optional<Simplex> min_degenerate(const Simplex& s);
  bool registered(const Simplex& s) const;

  int degree_bound() const { return degree_bound_; }
  const SsetPtr& carrier() const { return X_; }

private:
  struct Layer {
    std::vector<Simplex> elems;
    std::unordered_map<Simplex, int, SimplexHash> index;
    std::vector<int> parent;
    std::vector<int> size;
    std::vector<int> min_elem;   // index of least member in the root's class
    std::vector<int> min_degen;  // index of least degenerate member, -1 if none
  };

  int intern(const Simplex& s);
  int find(int degree, int i);

  SsetPtr X_;
  int degree_bound_;
  std::vector<Layer> layers_;
  std::vector<std::pair<Simplex, Simplex>> worklist_;
};

struct QuotientResult {
  SsetPtr quotient;
  SimplicialMap map;  // the projection, degreewise surjective
  Simplex class_of(const Simplex& x) const { return apply(map, x); }
};

// Quotient of X by the congruence generated by the seed pairs.  degree_bound
// defaults to the dimension of X and must not be smaller.
QuotientResult quotient(SsetPtr X, const std::vector<std::pair<Simplex, Simplex>>& seeds,
                        std::optional<int> degree_bound = std::nullopt);

struct PushoutResult {
  SsetPtr sset;
  SimplicialMap into_left;   // X -> P
  SimplicialMap into_right;  // Y -> P
};

// Pushout of X <-f- A -g-> Y, computed as a seeded quotient of X + Y.
PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g);

struct FactorResult {
  std::optional<SimplicialMap> map;  // h with h . q = k, when it exists
  // a pair q identifies but k separates, when factorization fails
  std::optional<std::pair<Simplex, Simplex>> witness;
};

// Factor k through the degreewise-surjective q (unique when it exists).
FactorResult factor_through_quotient(const SimplicialMap& q, const SimplicialMap& k);

}  // namespace ssk
