#pragma once

// Isomorphism of finite simplicial sets.  An isomorphism is exactly a
// degree-preserving bijection of generators that matches stored faces slot
// by slot, so the search assigns generators top degree first with forced
// propagation along faces, after an invariant-based prefilter.

#include <optional>

#include "ssk/smap.hpp"

namespace ssk {

struct Fingerprint {
  std::vector<int> counts;
  // per degree, the sorted multiset of per-generator face signatures
  std::vector<std::vector<std::vector<int>>> signatures;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteSimplicialSet& X);

// A witness isomorphism when one exists.
std::optional<SimplicialMap> are_isomorphic(SsetPtr X, SsetPtr Y);

}  // namespace ssk
