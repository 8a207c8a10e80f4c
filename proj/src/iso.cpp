#include "ssk/iso.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ssk {

namespace {

// Flattened face description of one generator: for each slot i, the slot
// number, the face generator's degree, the degeneracy values, and the first
// slot holding an identical face (which records coincidences, so a loop is
// distinguished from an edge with two distinct endpoints), separated by -1
// markers.
std::vector<int> face_shape(const FiniteSimplicialSet& X, GeneratorId g) {
  std::vector<int> sig;
  for (int i = 0; i <= g.degree && g.degree >= 1; ++i) {
    const Simplex& f = X.face(g, i);
    sig.push_back(i);
    sig.push_back(f.gen.degree);
    for (int v : f.deg_part.values()) sig.push_back(v);
    int first_equal = i;
    for (int j = 0; j < i; ++j)
      if (X.face(g, j) == f) {
        first_equal = j;
        break;
      }
    sig.push_back(first_equal);
    sig.push_back(-1);
  }
  return sig;
}

}  // namespace

Fingerprint fingerprint(const FiniteSimplicialSet& X) {
  Fingerprint fp;
  fp.counts = X.counts();
  fp.signatures.resize(fp.counts.size());
  for (int d = 0; d <= X.dimension(); ++d) {
    auto& bucket = fp.signatures[static_cast<size_t>(d)];
    for (int i = 0; i < X.count(d); ++i) bucket.push_back(face_shape(X, GeneratorId{d, i}));
    std::sort(bucket.begin(), bucket.end());
  }
  return fp;
}

namespace {

// Joint color refinement: generators of X and Y are recolored by their degree,
// face shapes with face colors, and the multiset of positions they occupy as
// faces of other generators, until the palette stabilizes.  Matching colors
// are necessary for generators to correspond under an isomorphism.
struct Colors {
  std::vector<int> x;  // by flat index in X
  std::vector<int> y;
};

Colors refine_colors(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) {
  Colors c;
  c.x.resize(static_cast<size_t>(X.total_generators()));
  c.y.resize(static_cast<size_t>(Y.total_generators()));
  auto init = [](const FiniteSimplicialSet& S, std::vector<int>& col) {
    for (size_t f = 0; f < col.size(); ++f) col[f] = S.gen_at(static_cast<int>(f)).degree;
  };
  init(X, c.x);
  init(Y, c.y);

  using Key = std::vector<int>;
  size_t palette = 0;
  for (int round = 0; round <= X.total_generators() + Y.total_generators(); ++round) {
    auto keys_of = [](const FiniteSimplicialSet& S, const std::vector<int>& col) {
      std::vector<Key> keys(col.size());
      std::vector<std::vector<int>> incoming(col.size());
      for (size_t f = 0; f < col.size(); ++f) {
        GeneratorId g = S.gen_at(static_cast<int>(f));
        for (int i = 0; i <= g.degree && g.degree >= 1; ++i) {
          const Simplex& face = S.face(g, i);
          auto& in = incoming[static_cast<size_t>(S.flat_index(face.gen))];
          in.push_back(col[f]);
          in.push_back(i);
          for (int v : face.deg_part.values()) in.push_back(v);
          in.push_back(-1);
        }
      }
      for (size_t f = 0; f < col.size(); ++f) {
        GeneratorId g = S.gen_at(static_cast<int>(f));
        Key k;
        k.push_back(col[f]);
        k.push_back(-2);
        for (int i = 0; i <= g.degree && g.degree >= 1; ++i) {
          const Simplex& face = S.face(g, i);
          k.push_back(col[static_cast<size_t>(S.flat_index(face.gen))]);
          for (int v : face.deg_part.values()) k.push_back(v);
          k.push_back(-1);
        }
        k.push_back(-3);
        // Incoming slots form a multiset: sort chunk-wise.  Chunks are
        // variable-length, so sort a vector of chunks.
        std::vector<std::vector<int>> chunks;
        std::vector<int> cur;
        for (int v : incoming[f]) {
          cur.push_back(v);
          if (v == -1) {
            chunks.push_back(cur);
            cur.clear();
          }
        }
        std::sort(chunks.begin(), chunks.end());
        for (const auto& ch : chunks)
          for (int v : ch) k.push_back(v);
        keys[f] = std::move(k);
      }
      return keys;
    };
    std::vector<Key> kx = keys_of(X, c.x);
    std::vector<Key> ky = keys_of(Y, c.y);
    std::map<Key, int> dict;
    for (const Key& k : kx) dict.emplace(k, 0);
    for (const Key& k : ky) dict.emplace(k, 0);
    int next = 0;
    for (auto& [k, id] : dict) id = next++;
    for (size_t f = 0; f < c.x.size(); ++f) c.x[f] = dict.at(kx[f]);
    for (size_t f = 0; f < c.y.size(); ++f) c.y[f] = dict.at(ky[f]);
    if (dict.size() == palette) break;
    palette = dict.size();
  }
  return c;
}

struct Search {
  const FiniteSimplicialSet& X;
  const FiniteSimplicialSet& Y;
  const Colors& colors;
  std::vector<int> to;     // X flat index -> Y flat index, -1 while unassigned
  std::vector<int> from;   // Y flat index -> X flat index
  std::vector<int> trail;  // X flat indices, in assignment order
  std::vector<GeneratorId> order;

  Search(const FiniteSimplicialSet& x, const FiniteSimplicialSet& y, const Colors& c)
      : X(x), Y(y), colors(c) {
    to.assign(static_cast<size_t>(X.total_generators()), -1);
    from.assign(static_cast<size_t>(Y.total_generators()), -1);
    // Assign top degrees first: faces of an assigned generator force
    // assignments all the way down.
    for (int d = X.dimension(); d >= 0; --d)
      for (int i = 0; i < X.count(d); ++i) order.push_back(GeneratorId{d, i});
  }

  // Assign x -> y and propagate along faces; on contradiction returns false
  // with the trail recording everything to undo.
  bool force(GeneratorId x, GeneratorId y) {
    int fx = X.flat_index(x);
    int fy = Y.flat_index(y);
    if (to[static_cast<size_t>(fx)] != -1) return to[static_cast<size_t>(fx)] == fy;
    if (from[static_cast<size_t>(fy)] != -1) return false;
    if (colors.x[static_cast<size_t>(fx)] != colors.y[static_cast<size_t>(fy)]) return false;
    to[static_cast<size_t>(fx)] = fy;
    from[static_cast<size_t>(fy)] = fx;
    trail.push_back(fx);
    for (int i = 0; i <= x.degree && x.degree >= 1; ++i) {
      const Simplex& sx = X.face(x, i);
      const Simplex& sy = Y.face(y, i);
      if (sx.deg_part != sy.deg_part) return false;
      if (!force(sx.gen, sy.gen)) return false;
    }
    return true;
  }

  void unwind(size_t mark) {
    while (trail.size() > mark) {
      int fx = trail.back();
      trail.pop_back();
      from[static_cast<size_t>(to[static_cast<size_t>(fx)])] = -1;
      to[static_cast<size_t>(fx)] = -1;
    }
  }

  bool solve(size_t pos) {
    while (pos < order.size() &&
           to[static_cast<size_t>(X.flat_index(order[pos]))] != -1)
      ++pos;
    if (pos == order.size()) return true;
    GeneratorId x = order[pos];
    int cx = colors.x[static_cast<size_t>(X.flat_index(x))];
    for (int j = 0; j < Y.count(x.degree); ++j) {
      GeneratorId y{x.degree, j};
      int fy = Y.flat_index(y);
      if (from[static_cast<size_t>(fy)] != -1) continue;
      if (colors.y[static_cast<size_t>(fy)] != cx) continue;
      size_t mark = trail.size();
      if (force(x, y) && solve(pos + 1)) return true;
      unwind(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<SimplicialMap> are_isomorphic(SsetPtr X, SsetPtr Y) {
  if (X->counts() != Y->counts()) return std::nullopt;
  if (fingerprint(*X) != fingerprint(*Y)) return std::nullopt;
  Colors colors = refine_colors(*X, *Y);
  {
    // The color multiset must agree degree by degree.
    auto histogram = [](const FiniteSimplicialSet& S, const std::vector<int>& col) {
      std::map<std::pair<int, int>, int> h;
      for (size_t f = 0; f < col.size(); ++f)
        ++h[{S.gen_at(static_cast<int>(f)).degree, col[f]}];
      return h;
    };
    if (histogram(*X, colors.x) != histogram(*Y, colors.y)) return std::nullopt;
  }
  Search search(*X, *Y, colors);
  if (!search.solve(0)) return std::nullopt;
  std::vector<std::vector<Simplex>> assign;
  for (int d = 0; d <= X->dimension(); ++d) {
    std::vector<Simplex> row;
    for (int i = 0; i < X->count(d); ++i) {
      int fy = search.to[static_cast<size_t>(X->flat_index(GeneratorId{d, i}))];
      row.push_back(nondeg(Y->gen_at(fy)));
    }
    assign.push_back(std::move(row));
  }
  return SimplicialMap(std::move(X), std::move(Y), std::move(assign));
}

}  // namespace ssk
