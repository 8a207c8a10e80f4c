#pragma once

// Subdivision and the Barratt nerve.  The subdivision of X is realized by a
// flag model: its generators in degree k are pairs (g, V_0 c ... c V_k) of a
// non-degenerate generator of X and a strictly increasing chain of nonempty
// vertex subsets ending in the full vertex set of g.  The Barratt nerve is
// the nerve of the face poset of non-degenerate simplices; b and t are the
// comparison maps out of the subdivision and its desingularization.

#include <cstdint>
#include <map>

#include "ssk/desing.hpp"

namespace ssk {

struct Flag {
  GeneratorId gen;
  std::vector<std::uint32_t> chain;  // strictly increasing bitmasks over {0..gen.degree}
  friend bool operator==(const Flag&, const Flag&) = default;
  friend std::strong_ordering operator<=>(const Flag&, const Flag&) = default;
};

// The injection enumerating the set bits of mask into [n].
DeltaOperator mask_to_mono(std::uint32_t mask, int n);

struct SdResult {
  SsetPtr sset;
  std::vector<std::vector<Flag>> flags;  // [degree][index], aligned with generators
  std::map<Flag, GeneratorId> index;

  const Flag& flag_of(GeneratorId g) const {
    return flags[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)];
  }
  GeneratorId gen_of(const Flag& f) const { return index.at(f); }
};

// Face i of a flag drops V_i.  Dropping the top set pushes the generator
// onto the new top via its enumerating injection, re-normalizes, and
// transports the rest of the chain forward; repeats become the degenerate
// part.
SdResult sd(SsetPtr X);

// Image flag of (g, V) under f: rewrite the chain through the degenerate
// part of f(g); functorial.
SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sdX, const SdResult& sdY);

// Finite poset on elements 0..size-1.  Construction closes the given strict
// pairs transitively and rejects cycles (antisymmetry failure).
class Poset {
public:
  Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less_pairs);
  int size() const { return static_cast<int>(labels_.size()); }
  bool less(int a, int b) const;  // strict
  const std::string& label(int a) const { return labels_[static_cast<size_t>(a)]; }

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<char>> lt_;
};

// Elements: non-degenerate simplices of X by flat index; y < x exactly when
// y = x . mu for some injection mu (degenerate faces contribute nothing).
Poset face_poset(const FiniteSimplicialSet& X);

struct NerveResult {
  SsetPtr sset;
  std::vector<std::vector<std::vector<int>>> chains;  // [degree][index] -> element chain
  std::map<std::vector<int>, GeneratorId> index;

  const std::vector<int>& chain_of(GeneratorId g) const {
    return chains[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)];
  }
  GeneratorId gen_of(const std::vector<int>& c) const { return index.at(c); }
};

// Generators in degree k: strictly increasing chains of k+1 elements; face i
// drops entry i.  The output is always non-singular.
NerveResult nerve(const Poset& P);

struct BarrattResult {
  Poset poset;
  NerveResult nerve;
  const SsetPtr& sset() const { return nerve.sset; }
};

BarrattResult barratt(SsetPtr X);

// flag (g, V_0 c ... c V_k) -> the chain of non-degenerate parts of the
// g . (injection onto V_i), repeats absorbed into the degenerate part.
// Degreewise surjective; an isomorphism exactly when X is non-singular.
SimplicialMap b_map(SsetPtr X, const SdResult& sdX, const BarrattResult& bX);

struct TMapResult {
  SdResult sd;         // subdivision of X
  DesingTrace trace;   // desingularization of the subdivision
  BarrattResult bn;    // Barratt nerve of X
  SimplicialMap b;     // comparison Sd X -> BX
  SimplicialMap t;     // induced D(Sd X) -> BX
};

// Factor b through the projection onto the desingularization of Sd X.
TMapResult t_map(SsetPtr X);

}  // namespace ssk
