#pragma once

// Desingularization: every finite simplicial set has a universal map onto a
// non-singular one.  The engine computes it by repeatedly collapsing along
// enforcers -- for each non-embedded generator, the smallest degeneracy its
// repeated vertices force -- until every generator is embedded.

#include "ssk/colimit.hpp"

namespace ssk {

// The degeneracy operator out of [g.degree] gluing i and i+1 exactly when
// some repeated-vertex pair spans them; identity iff g is embedded.
DeltaOperator enforcer(const FiniteSimplicialSet& X, GeneratorId g);

// One collapse step: quotient of X identifying, for every generator j in J,
// the simplex j with j acted by (section of enforcer) . enforcer.  Closing
// that single pair under the operator action generates the whole kernel-pair
// congruence of the enforcer collapse.
QuotientResult cen(SsetPtr X, const std::vector<GeneratorId>& J);
// Default J: every non-embedded generator.
QuotientResult cen(SsetPtr X);

struct DesingTrace {
  SsetPtr input;
  std::vector<QuotientResult> stages;  // successive collapse steps
  SimplicialMap eta;                   // composite projection input -> result
  SsetPtr result() const { return eta.target(); }
  int iterations() const { return static_cast<int>(stages.size()); }
};

// Iterate cen until non-singular.  The total generator count drops strictly
// at every step, so this terminates.
DesingTrace desingularize(SsetPtr X);

// Functoriality: the induced map between the desingularizations of the
// endpoints of f.
SimplicialMap d_map(const SimplicialMap& f, const DesingTrace& tx, const DesingTrace& ty);
SimplicialMap d_map(const SimplicialMap& f);

// The unique h with h . eta = k, for k into a non-singular target (rejects
// singular targets).
SimplicialMap factor_through_eta(const DesingTrace& tx, const SimplicialMap& k);

struct EnforcerPushoutCheck {
  bool factors;  // the projection to the desingularization factors through the collapse
  bool is_dx;    // the collapse is already the desingularization
};

// Diagnostic for a chosen generator family J: collapse along the enforcers
// of J and compare with the full desingularization.
EnforcerPushoutCheck pushout_along_enforcers_check(SsetPtr X, const std::vector<GeneratorId>& J);

// Desingularized pushout of non-singular inputs (rejects singular ones).
SsetPtr ns_pushout(const SimplicialMap& f, const SimplicialMap& g);

}  // namespace ssk
