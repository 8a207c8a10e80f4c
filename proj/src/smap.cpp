#include "ssk/smap.hpp"

namespace ssk {

namespace {

void require_compatible(const SsetPtr& a, const SsetPtr& b, const char* what) {
  if (a == b) return;
  if (!a || !b || !same_presentation(*a, *b))
    throw std::invalid_argument(std::string(what) + ": simplicial sets do not match");
}

}  // namespace

SimplicialMap::SimplicialMap(SsetPtr source, SsetPtr target,
                             std::vector<std::vector<Simplex>> assign, bool checked)
    : source_(std::move(source)), target_(std::move(target)), assign_(std::move(assign)) {
  if (!source_ || !target_) throw std::invalid_argument("SimplicialMap: null endpoint");
  if (static_cast<int>(assign_.size()) != source_->dimension() + 1)
    throw std::invalid_argument("SimplicialMap: assignment must cover every degree of the source");
  for (int d = 0; d <= source_->dimension(); ++d) {
    if (static_cast<int>(assign_[static_cast<size_t>(d)].size()) != source_->count(d))
      throw std::invalid_argument("SimplicialMap: assignment must cover every generator of degree " +
                                  std::to_string(d));
    for (int i = 0; i < source_->count(d); ++i) {
      const Simplex& img = assign_[static_cast<size_t>(d)][static_cast<size_t>(i)];
      if (img.degree() != d)
        throw std::invalid_argument("SimplicialMap: image of a degree-" + std::to_string(d) +
                                    " generator must have degree " + std::to_string(d));
      if (!target_->contains(img.gen))
        throw std::invalid_argument("SimplicialMap: image references a generator outside the target");
    }
  }
  if (!checked) return;
  for (int d = 1; d <= source_->dimension(); ++d) {
    for (int i = 0; i < source_->count(d); ++i) {
      GeneratorId g{d, i};
      for (int k = 0; k <= d; ++k) {
        Simplex lhs = apply(*this, source_->face(g, k));
        Simplex rhs = act(*target_, this->assign(g), DeltaOperator::elementary_face(d, k));
        if (!(lhs == rhs))
          throw std::invalid_argument("SimplicialMap: face " + std::to_string(k) +
                                      " of generator '" + source_->name(g) +
                                      "' is not preserved");
      }
    }
  }
}

SimplicialMap SimplicialMap::identity(SsetPtr X) {
  if (!X) throw std::invalid_argument("identity: null simplicial set");
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(X->dimension() + 1));
  for (int d = 0; d <= X->dimension(); ++d)
    for (int i = 0; i < X->count(d); ++i)
      assign[static_cast<size_t>(d)].push_back(nondeg(GeneratorId{d, i}));
  return SimplicialMap(X, X, std::move(assign), false);
}

const Simplex& SimplicialMap::assign(GeneratorId g) const {
  if (!source_->contains(g)) throw std::invalid_argument("assign: unknown generator");
  return assign_[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)];
}

Simplex apply(const SimplicialMap& f, const Simplex& x) {
  if (!f.source()->contains(x.gen))
    throw std::invalid_argument("apply: simplex does not belong to the source");
  const Simplex& img = f.assign(x.gen);
  if (x.deg_part.is_identity()) return img;
  return act(*f.target(), img, x.deg_part);
}

SimplicialMap compose_maps(const SimplicialMap& f, const SimplicialMap& g) {
  require_compatible(f.target(), g.source(), "compose_maps");
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(f.source()->dimension() + 1));
  for (int d = 0; d <= f.source()->dimension(); ++d)
    for (int i = 0; i < f.source()->count(d); ++i)
      assign[static_cast<size_t>(d)].push_back(apply(g, f.assign(GeneratorId{d, i})));
  return SimplicialMap(f.source(), g.target(), std::move(assign), false);
}

bool is_degreewise_surjective(const SimplicialMap& f) {
  const FiniteSimplicialSet& Y = *f.target();
  for (int d = 0; d <= Y.dimension(); ++d) {
    for (int ti = 0; ti < Y.count(d); ++ti) {
      Simplex want = nondeg(GeneratorId{d, ti});
      bool hit = false;
      for (const Simplex& s : simplices_of_degree(*f.source(), d)) {
        if (apply(f, s) == want) {
          hit = true;
          break;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

bool is_isomorphism(const SimplicialMap& f) {
  const FiniteSimplicialSet& X = *f.source();
  const FiniteSimplicialSet& Y = *f.target();
  if (X.counts() != Y.counts()) return false;
  for (int d = 0; d <= X.dimension(); ++d) {
    std::vector<bool> used(static_cast<size_t>(Y.count(d)), false);
    for (int i = 0; i < X.count(d); ++i) {
      const Simplex& img = f.assign(GeneratorId{d, i});
      if (!img.nondegenerate()) return false;
      if (used[static_cast<size_t>(img.gen.index)]) return false;
      used[static_cast<size_t>(img.gen.index)] = true;
    }
  }
  return true;
}

SimplicialMap inverse(const SimplicialMap& f) {
  if (!is_isomorphism(f)) throw std::invalid_argument("inverse: map is not an isomorphism");
  const FiniteSimplicialSet& X = *f.source();
  const FiniteSimplicialSet& Y = *f.target();
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(Y.dimension() + 1));
  for (int d = 0; d <= Y.dimension(); ++d)
    assign[static_cast<size_t>(d)].resize(static_cast<size_t>(Y.count(d)), nondeg(GeneratorId{0, 0}));
  for (int d = 0; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      GeneratorId g{d, i};
      assign[static_cast<size_t>(d)][static_cast<size_t>(f.assign(g).gen.index)] = nondeg(g);
    }
  return SimplicialMap(f.target(), f.source(), std::move(assign), false);
}

}  // namespace ssk
