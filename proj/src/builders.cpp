#include "ssk/builders.hpp"

#include <algorithm>
#include <map>

namespace ssk {

namespace {

std::vector<int> parse_subset_name(const std::string& name) {
  std::vector<int> out;
  if (name.find('_') != std::string::npos) {
    size_t pos = 0;
    while (pos < name.size()) {
      size_t next = name.find('_', pos);
      if (next == std::string::npos) next = name.size();
      out.push_back(std::stoi(name.substr(pos, next - pos)));
      pos = next + 1;
    }
  } else {
    for (char c : name) out.push_back(c - '0');
  }
  return out;
}

std::string subset_name(const std::vector<int>& elems) {
  std::string s;
  bool wide = !elems.empty() && elems.back() > 9;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (wide && i) s += '_';
    s += std::to_string(elems[i]);
  }
  return s;
}

// nonempty subsets of {0..n}, by size then lexicographically
std::vector<std::vector<int>> subsets_by_size(int n, bool include_full) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= n; ++k) {
    if (k == n && !include_full) break;
    std::vector<int> cur;
    // combinations of size k+1
    std::vector<int> idx(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
      out.push_back(idx);
      int p = k;
      while (p >= 0 && idx[static_cast<size_t>(p)] == n - (k - p)) --p;
      if (p < 0) break;
      ++idx[static_cast<size_t>(p)];
      for (int q = p + 1; q <= k; ++q)
        idx[static_cast<size_t>(q)] = idx[static_cast<size_t>(q) - 1] + 1;
    }
  }
  return out;
}

SsetPtr build_subset_complex(int n, bool include_full) {
  SsetBuilder b;
  std::map<std::vector<int>, GeneratorId> id_of;
  for (const auto& s : subsets_by_size(n, include_full))
    id_of.emplace(s, b.add_generator(static_cast<int>(s.size()) - 1, subset_name(s)));
  for (const auto& [s, g] : id_of) {
    if (g.degree == 0) continue;
    for (int i = 0; i <= g.degree; ++i) {
      std::vector<int> f = s;
      f.erase(f.begin() + i);
      b.set_face(g, i, nondeg(id_of.at(f)));
    }
  }
  return b.build();
}

}  // namespace

SsetPtr delta(int n) {
  if (n < 0) throw std::invalid_argument("delta: negative rank");
  return build_subset_complex(n, true);
}

SsetPtr boundary(int n) {
  if (n < 0) throw std::invalid_argument("boundary: negative rank");
  return build_subset_complex(n, false);
}

SimplicialMap boundary_inclusion(int n) {
  SsetPtr B = boundary(n);
  SsetPtr D = delta(n);
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(B->dimension() + 1));
  for (int d = 0; d <= B->dimension(); ++d)
    for (int i = 0; i < B->count(d); ++i) {
      GeneratorId g{d, i};
      assign[static_cast<size_t>(d)].push_back(nondeg(*D->find(B->name(g))));
    }
  return SimplicialMap(B, D, std::move(assign), false);
}

SimplicialMap constant_to_point(SsetPtr X) {
  SsetPtr pt = delta(0);
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(X->dimension() + 1));
  for (int d = 0; d <= X->dimension(); ++d) {
    std::vector<int> zeros(static_cast<size_t>(d) + 1, 0);
    Simplex img(GeneratorId{0, 0}, DeltaOperator(0, zeros));
    assign[static_cast<size_t>(d)].assign(static_cast<size_t>(X->count(d)), img);
  }
  return SimplicialMap(std::move(X), pt, std::move(assign), false);
}

SimplicialMap delta_operator_map(const DeltaOperator& alpha) {
  int k = alpha.source_rank();
  int n = alpha.target_rank();
  SsetPtr Dk = delta(k);
  SsetPtr Dn = delta(n);
  GeneratorId top{n, 0};  // the full subset is the unique top generator
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(Dk->dimension() + 1));
  for (int d = 0; d <= Dk->dimension(); ++d)
    for (int i = 0; i < Dk->count(d); ++i) {
      GeneratorId g{d, i};
      // vertices of the subset generator, pushed through alpha
      std::vector<int> verts;
      for (int v : parse_subset_name(Dk->name(g))) verts.push_back(alpha(v));
      assign[static_cast<size_t>(d)].push_back(act(*Dn, nondeg(top), DeltaOperator(n, verts)));
    }
  return SimplicialMap(Dk, Dn, std::move(assign));
}

SimplicialMap representing_map(SsetPtr X, const Simplex& x) {
  int n = x.degree();
  SsetPtr Dn = delta(n);
  std::vector<std::vector<Simplex>> assign(static_cast<size_t>(n) + 1);
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < Dn->count(d); ++i) {
      GeneratorId g{d, i};
      std::vector<int> verts = parse_subset_name(Dn->name(g));
      assign[static_cast<size_t>(d)].push_back(act(*X, x, DeltaOperator(n, verts)));
    }
  return SimplicialMap(Dn, std::move(X), std::move(assign));
}

SphereModel sphere_with_map(int n) {
  if (n < 0) throw std::invalid_argument("sphere: negative rank");
  PushoutResult p = pushout(boundary_inclusion(n), constant_to_point(boundary(n)));
  return SphereModel{p.sset, p.into_left};
}

SsetPtr sphere(int n) { return sphere_with_map(n).sset; }

SsetPtr collapse_face(int n, int k) {
  if (n < 0 || k < 0 || k > n) throw std::invalid_argument("collapse_face: need 0 <= k <= n");
  // the injection [k] -> [n] onto the front face {0..k}
  std::vector<int> front;
  for (int i = 0; i <= k; ++i) front.push_back(i);
  PushoutResult p = pushout(delta_operator_map(DeltaOperator(n, front)),
                            constant_to_point(delta(k)));
  return p.sset;
}

ManyUnion disjoint_union_many(const std::vector<SsetPtr>& parts) {
  if (parts.empty()) {
    SsetBuilder b;
    return ManyUnion{b.build(), {}};
  }
  ManyUnion out;
  out.sset = parts[0];
  out.inclusions.push_back(SimplicialMap::identity(parts[0]));
  for (size_t p = 1; p < parts.size(); ++p) {
    DisjointUnion du = disjoint_union(*out.sset, *parts[p]);
    auto lift = [&du](const SimplicialMap& old) {
      std::vector<std::vector<Simplex>> assign(static_cast<size_t>(old.source()->dimension() + 1));
      for (int d = 0; d <= old.source()->dimension(); ++d)
        for (int i = 0; i < old.source()->count(d); ++i) {
          const Simplex& s = old.assign(GeneratorId{d, i});
          assign[static_cast<size_t>(d)].push_back(Simplex(du.left(s.gen), s.deg_part));
        }
      return SimplicialMap(old.source(), du.sset, std::move(assign), false);
    };
    for (SimplicialMap& inc : out.inclusions) inc = lift(inc);
    std::vector<std::vector<Simplex>> assign(static_cast<size_t>(parts[p]->dimension() + 1));
    for (int d = 0; d <= parts[p]->dimension(); ++d)
      for (int i = 0; i < parts[p]->count(d); ++i)
        assign[static_cast<size_t>(d)].push_back(nondeg(du.right(GeneratorId{d, i})));
    out.inclusions.emplace_back(parts[p], du.sset, std::move(assign), false);
    out.sset = du.sset;
  }
  return out;
}

SsetPtr strip(int m) {
  if (m < 1) throw std::invalid_argument("strip: need at least one triangle");
  // edges A_0..A_{2m-2}; triangles B_1..B_m; circle C_0 plus gluing edges
  std::vector<SsetPtr> a_parts(static_cast<size_t>(2 * m - 1), delta(1));
  std::vector<SsetPtr> b_parts(static_cast<size_t>(m), delta(2));
  SphereModel circle = sphere_with_map(1);
  std::vector<SsetPtr> c_parts;
  c_parts.push_back(circle.sset);
  for (int j = 1; j < m; ++j) c_parts.push_back(delta(1));

  ManyUnion A = disjoint_union_many(a_parts);
  ManyUnion B = disjoint_union_many(b_parts);
  ManyUnion C = disjoint_union_many(c_parts);

  auto route = [](const SimplicialMap& leg, const SimplicialMap& inc) {
    return compose_maps(leg, inc);
  };

  std::vector<SimplicialMap> legs_b;
  std::vector<SimplicialMap> legs_c;
  for (int n = 0; n <= 2 * m - 2; ++n) {
    // every edge A_n lands in the triangle B over index n/2 (0-based)
    int tri = n / 2;
    int face_index;
    if (n % 2 == 0)
      face_index = 1;
    else
      face_index = (n % 4 == 1) ? 2 : 0;
    legs_b.push_back(route(delta_operator_map(DeltaOperator::elementary_face(2, face_index)),
                           B.inclusions[static_cast<size_t>(tri)]));
    if (n == 0)
      legs_c.push_back(route(circle.from_delta, C.inclusions[0]));
    else
      legs_c.push_back(route(SimplicialMap::identity(delta(1)),
                             C.inclusions[static_cast<size_t>((n + 1) / 2)]));
  }

  auto bundle = [&A](const std::vector<SimplicialMap>& legs, const SsetPtr& target) {
    std::vector<std::vector<Simplex>> assign(static_cast<size_t>(A.sset->dimension() + 1));
    for (size_t comp = 0; comp < legs.size(); ++comp) {
      const SimplicialMap& inc = A.inclusions[comp];
      const SsetPtr& part = inc.source();
      for (int d = 0; d <= part->dimension(); ++d)
        for (int i = 0; i < part->count(d); ++i) {
          GeneratorId g{d, i};
          GeneratorId in_a = inc.assign(g).gen;  // inclusions are generator-to-generator
          auto& layer = assign[static_cast<size_t>(d)];
          if (layer.size() <= static_cast<size_t>(in_a.index))
            layer.resize(static_cast<size_t>(in_a.index) + 1, nondeg(GeneratorId{0, 0}));
          layer[static_cast<size_t>(in_a.index)] = legs[comp].assign(g);
        }
    }
    return SimplicialMap(A.sset, target, std::move(assign));
  };

  SimplicialMap f = bundle(legs_b, B.sset);
  SimplicialMap g = bundle(legs_c, C.sset);
  return pushout(f, g).sset;
}

}  // namespace ssk
