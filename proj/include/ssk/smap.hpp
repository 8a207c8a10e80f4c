#pragma once

// Simplicial maps between finite simplicial sets, determined by a choice of
// image simplex for every generator.  Construction checks degree and face
// compatibility, so a held SimplicialMap is always an actual map.

#include <memory>
#include <vector>

#include "ssk/sset.hpp"

namespace ssk {

class SimplicialMap {
public:
  // assign[d][i] is the image of generator (d, i); same degree as the
  // generator.  Face compatibility is verified unless `checked` is false.
  SimplicialMap(SsetPtr source, SsetPtr target, std::vector<std::vector<Simplex>> assign,
                bool checked = true);

  static SimplicialMap identity(SsetPtr X);

  const SsetPtr& source() const { return source_; }
  const SsetPtr& target() const { return target_; }
  const Simplex& assign(GeneratorId g) const;

  friend bool operator==(const SimplicialMap& f, const SimplicialMap& g) {
    return f.assign_ == g.assign_ && same_presentation(*f.source_, *g.source_) &&
           same_presentation(*f.target_, *g.target_);
  }

private:
  SsetPtr source_;
  SsetPtr target_;
  std::vector<std::vector<Simplex>> assign_;
};

// Maps act on normal forms: f(g . rho) = f(g) . rho, re-normalized in the target.
Simplex apply(const SimplicialMap& f, const Simplex& x);

// Diagram order: apply f, then g; requires f.target and g.source to be the
// same presentation.
SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g);

// True when every target generator is the image of a same-degree source
// simplex (which forces surjectivity in every degree).
bool is_degreewise_surjective(const SimplicialMap& f);

// True when f sends generators bijectively onto generators in every degree.
bool is_isomorphism(const SimplicialMap& f);

// Inverse of an isomorphism (throws otherwise).
SimplicialMap inverse(const SimplicialMap& f);

}  // namespace ssk
