#include "ssk/colimit.hpp"

#include <algorithm>
#include <map>

namespace ssk {

Congruence::Congruence(SsetPtr X, int degree_bound) : X_(std::move(X)), degree_bound_(degree_bound) {
  if (!X_) throw std::invalid_argument("Congruence: null simplicial set");
  if (degree_bound_ < 0) throw std::invalid_argument("Congruence: negative degree bound");
}

int Congruence::intern(const Simplex& s) {
  int d = s.degree();
  if (static_cast<int>(layers_.size()) <= d) layers_.resize(static_cast<size_t>(d) + 1);
  Layer& L = layers_[static_cast<size_t>(d)];
  auto it = L.index.find(s);
  if (it != L.index.end()) return it->second;
  int i = static_cast<int>(L.elems.size());
  L.elems.push_back(s);
  L.index.emplace(s, i);
  L.parent.push_back(i);
  L.size.push_back(1);
  L.min_elem.push_back(i);
  L.min_degen.push_back(s.nondegenerate() ? -1 : i);
  return i;
}

int Congruence::find(int degree, int i) {
  Layer& L = layers_[static_cast<size_t>(degree)];
  while (L.parent[static_cast<size_t>(i)] != i) {
    L.parent[static_cast<size_t>(i)] = L.parent[static_cast<size_t>(L.parent[static_cast<size_t>(i)])];
    i = L.parent[static_cast<size_t>(i)];
  }
  return i;
}

bool Congruence::registered(const Simplex& s) const {
  int d = s.degree();
  if (d >= static_cast<int>(layers_.size())) return false;
  return layers_[static_cast<size_t>(d)].index.count(s) > 0;
}

void Congruence::merge(const Simplex& a, const Simplex& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Congruence::merge: degrees differ");
  worklist_.emplace_back(a, b);
  while (!worklist_.empty()) {
    auto [x, y] = worklist_.back();
    worklist_.pop_back();
    int d = x.degree();
    int rx = find(d, intern(x));
    int ry = find(d, intern(y));
    if (rx == ry) continue;
    Layer& L = layers_[static_cast<size_t>(d)];
    if (L.size[static_cast<size_t>(rx)] < L.size[static_cast<size_t>(ry)]) std::swap(rx, ry);
    L.parent[static_cast<size_t>(ry)] = rx;
    L.size[static_cast<size_t>(rx)] += L.size[static_cast<size_t>(ry)];
    if (L.elems[static_cast<size_t>(L.min_elem[static_cast<size_t>(ry)])] <
        L.elems[static_cast<size_t>(L.min_elem[static_cast<size_t>(rx)])])
      L.min_elem[static_cast<size_t>(rx)] = L.min_elem[static_cast<size_t>(ry)];
    int dgx = L.min_degen[static_cast<size_t>(rx)];
    int dgy = L.min_degen[static_cast<size_t>(ry)];
    if (dgx == -1 ||
        (dgy != -1 && L.elems[static_cast<size_t>(dgy)] < L.elems[static_cast<size_t>(dgx)]))
      L.min_degen[static_cast<size_t>(rx)] = dgy;
    // close under the elementary operators on both sides of the merged pair
    if (d >= 1)
      for (int i = 0; i <= d; ++i) {
        DeltaOperator di = DeltaOperator::elementary_face(d, i);
        worklist_.emplace_back(act(*X_, x, di), act(*X_, y, di));
      }
    if (d < degree_bound_)
      for (int i = 0; i <= d; ++i) {
        DeltaOperator si = DeltaOperator::elementary_degeneracy(d, i);
        worklist_.emplace_back(act(*X_, x, si), act(*X_, y, si));
      }
  }
}

bool Congruence::same(const Simplex& a, const Simplex& b) {
  if (a.degree() != b.degree()) return false;
  if (a == b) return true;
  if (!registered(a) || !registered(b)) return false;
  return find(a.degree(), intern(a)) == find(a.degree(), intern(b));
}

Simplex Congruence::min_member(const Simplex& s) {
  if (!registered(s)) return s;
  int d = s.degree();
  int r = find(d, intern(s));
  const Layer& L = layers_[static_cast<size_t>(d)];
  return L.elems[static_cast<size_t>(L.min_elem[static_cast<size_t>(r)])];
}

std::optional<Simplex> Congruence::min_degenerate(const Simplex& s) {
  if (!registered(s)) {
    if (s.nondegenerate()) return std::nullopt;
    return s;
  }
  int d = s.degree();
  int r = find(d, intern(s));
  const Layer& L = layers_[static_cast<size_t>(d)];
  int md = L.min_degen[static_cast<size_t>(r)];
  if (md == -1) return std::nullopt;
  return L.elems[static_cast<size_t>(md)];
}

namespace {

// Normal form of the class of a simplex in the quotient presentation:
// non-degenerate classes become generators, a degenerate class peels one
// elementary degeneracy off its least degenerate member and recurses.
struct NormalFormer {
  const FiniteSimplicialSet& X;
  Congruence& cong;
  const std::map<GeneratorId, GeneratorId>& alive;  // source generator -> quotient generator
  std::map<Simplex, Simplex> memo;

  Simplex normal_of(const Simplex& s) {
    Simplex key = cong.min_member(s);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Simplex result = compute(key);
    memo.emplace(key, result);
    return result;
  }

  Simplex compute(const Simplex& key) {
    std::optional<Simplex> degen = cong.min_degenerate(key);
    if (!degen) {
      // class of non-degenerate simplices; its least member is (g, id)
      auto it = alive.find(key.gen);
      if (it == alive.end())
        throw std::logic_error("quotient: non-degenerate class without a surviving generator");
      return Simplex(it->second, DeltaOperator::identity(key.degree()));
    }
    const Simplex& m = *degen;
    const std::vector<int>& vals = m.deg_part.values();
    int i = 0;
    while (vals[static_cast<size_t>(i)] != vals[static_cast<size_t>(i) + 1]) ++i;
    std::vector<int> peeled = vals;
    peeled.erase(peeled.begin() + i + 1);
    Simplex w(m.gen, DeltaOperator(m.deg_part.target_rank(), std::move(peeled)));
    Simplex base = normal_of(w);
    return Simplex(base.gen,
                   compose(DeltaOperator::elementary_degeneracy(m.degree() - 1, i), base.deg_part));
  }
};

}  // namespace

QuotientResult quotient(SsetPtr X, const std::vector<std::pair<Simplex, Simplex>>& seeds,
                        std::optional<int> degree_bound) {
  if (!X) throw std::invalid_argument("quotient: null simplicial set");
  int dim = X->dimension();
  int bound = degree_bound.value_or(std::max(dim, 0));
  if (bound < dim)
    throw std::invalid_argument("quotient: degree bound below the dimension of the carrier");
  Congruence cong(X, bound);
  for (const auto& [a, b] : seeds) {
    if (!X->contains(a.gen) || !X->contains(b.gen))
      throw std::invalid_argument("quotient: seed references a generator outside the carrier");
    if (a.degree() != b.degree()) throw std::invalid_argument("quotient: seed degrees differ");
    cong.merge(a, b);
  }

  // surviving generators, in source order within every degree
  SsetBuilder qb;
  std::map<GeneratorId, GeneratorId> alive;
  for (int d = 0; d <= dim; ++d) {
    for (int i = 0; i < X->count(d); ++i) {
      GeneratorId g{d, i};
      Simplex s = nondeg(g);
      if (cong.min_degenerate(s)) continue;
      if (!(cong.min_member(s) == s)) continue;
      alive.emplace(g, qb.add_generator(d, X->name(g)));
    }
  }

  NormalFormer nf{*X, cong, alive, {}};
  for (const auto& [g, qg] : alive) {
    for (int i = 0; i <= g.degree && g.degree >= 1; ++i)
      qb.set_face(qg, i, nf.normal_of(X->face(g, i)));
  }
  SsetPtr Q = qb.build();

  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(dim + 1));
  for (int d = 0; d <= dim; ++d)
    for (int i = 0; i < X->count(d); ++i)
      assign[static_cast<size_t>(d)].push_back(nf.normal_of(nondeg(GeneratorId{d, i})));
  return QuotientResult{Q, SimplicialMap(X, Q, std::move(assign))};
}

PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.source() == g.source()) && !same_presentation(*f.source(), *g.source()))
    throw std::invalid_argument("pushout: the two maps must share their source");
  const FiniteSimplicialSet& A = *f.source();
  DisjointUnion du = disjoint_union(*f.target(), *g.target());

  auto inclusion = [&du](const SsetPtr& side, bool right) {
    std::vector<std::vector<Simplex>> assign(static_cast<size_t>(side->dimension() + 1));
    for (int d = 0; d <= side->dimension(); ++d)
      for (int i = 0; i < side->count(d); ++i) {
        GeneratorId g0{d, i};
        assign[static_cast<size_t>(d)].push_back(
            nondeg(right ? du.right(g0) : du.left(g0)));
      }
    return SimplicialMap(side, du.sset, std::move(assign), false);
  };
  SimplicialMap inl = inclusion(f.target(), false);
  SimplicialMap inr = inclusion(g.target(), true);

  std::vector<std::pair<Simplex, Simplex>> seeds;
  for (int d = 0; d <= A.dimension(); ++d)
    for (int i = 0; i < A.count(d); ++i) {
      GeneratorId a{d, i};
      seeds.emplace_back(apply(inl, f.assign(a)), apply(inr, g.assign(a)));
    }
  int bound = std::max({du.sset->dimension(), A.dimension(), 0});
  QuotientResult qr = quotient(du.sset, seeds, bound);
  return PushoutResult{qr.quotient, compose_maps(inl, qr.map), compose_maps(inr, qr.map)};
}

FactorResult factor_through_quotient(const SimplicialMap& q, const SimplicialMap& k) {
  if (!(q.source() == k.source()) && !same_presentation(*q.source(), *k.source()))
    throw std::invalid_argument("factor_through_quotient: q and k must share their source");
  if (!is_degreewise_surjective(q))
    throw std::invalid_argument("factor_through_quotient: q is not degreewise surjective");
  const FiniteSimplicialSet& X = *q.source();
  const FiniteSimplicialSet& Q = *q.target();

  // a non-degenerate simplex of a quotient lifts to a same-degree generator
  std::vector<std::vector<GeneratorId>> lift(static_cast<size_t>(Q.dimension() + 1));
  for (int d = 0; d <= Q.dimension(); ++d)
    lift[static_cast<size_t>(d)].resize(static_cast<size_t>(Q.count(d)), GeneratorId{-1, -1});
  for (int d = 0; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      GeneratorId g{d, i};
      const Simplex& img = q.assign(g);
      if (img.nondegenerate() && lift[static_cast<size_t>(d)][static_cast<size_t>(img.gen.index)].degree < 0)
        lift[static_cast<size_t>(d)][static_cast<size_t>(img.gen.index)] = g;
    }
  for (int d = 0; d <= Q.dimension(); ++d)
    for (int i = 0; i < Q.count(d); ++i)
      if (lift[static_cast<size_t>(d)][static_cast<size_t>(i)].degree < 0)
        throw std::logic_error("factor_through_quotient: quotient generator without a lift");

  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(Q.dimension() + 1));
  for (int d = 0; d <= Q.dimension(); ++d)
    for (int i = 0; i < Q.count(d); ++i)
      assign[static_cast<size_t>(d)].push_back(
          k.assign(lift[static_cast<size_t>(d)][static_cast<size_t>(i)]));
  SimplicialMap h(q.target(), k.target(), std::move(assign), false);

  // well-definedness: h . q = k on every generator; a mismatch yields a
  // witness pair with equal q-images and different k-images
  for (int d = 0; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i) {
      GeneratorId g{d, i};
      if (!(apply(h, q.assign(g)) == k.assign(g))) {
        const Simplex& img = q.assign(g);
        GeneratorId l = lift[static_cast<size_t>(img.gen.degree)][static_cast<size_t>(img.gen.index)];
        Simplex other = act(X, nondeg(l), img.deg_part);
        return FactorResult{std::nullopt, std::make_pair(nondeg(g), other)};
      }
    }
  // re-run the constructor checks now that the assignment is known to be good
  return FactorResult{SimplicialMap(q.target(), k.target(),
                                    [&] {
                                      std::vector<std::vector<Simplex>> a(
                                          static_cast<size_t>(Q.dimension() + 1));
                                      for (int d = 0; d <= Q.dimension(); ++d)
                                        for (int i = 0; i < Q.count(d); ++i)
                                          a[static_cast<size_t>(d)].push_back(
                                              h.assign(GeneratorId{d, i}));
                                      return a;
                                    }(),
                                    true),
                      std::nullopt};
}

}  // namespace ssk
