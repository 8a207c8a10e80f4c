#pragma once

// Stock simplicial sets and the structure maps between them: standard
// simplices and their boundaries, spheres as quotients, a simplex with a
// front face collapsed, and a strip of triangles glued edge-to-edge whose
// collapse propagates from one triangle to the next.

#include "ssk/colimit.hpp"

namespace ssk {

// Nonempty subsets of {0..n} with their deletion faces; names like "013".
SsetPtr delta(int n);
// Same with the top cell removed; boundary(0) is empty.
SsetPtr boundary(int n);

SimplicialMap boundary_inclusion(int n);            // boundary(n) -> delta(n)
SimplicialMap constant_to_point(SsetPtr X);         // X -> delta(0)
// The map delta(k) -> delta(n) induced by an operator [k] -> [n].
SimplicialMap delta_operator_map(const DeltaOperator& alpha);
// The map delta(n) -> X classifying a simplex x of degree n.
SimplicialMap representing_map(SsetPtr X, const Simplex& x);

struct SphereModel {
  SsetPtr sset;
  SimplicialMap from_delta;  // the projection delta(n) -> sphere
};

// delta(n) with its whole boundary collapsed to a point (two points when
// n = 0, since the boundary is empty).
SphereModel sphere_with_map(int n);
SsetPtr sphere(int n);

// delta(n) with the front face spanned by {0..k} collapsed to a point,
// 0 <= k <= n.
SsetPtr collapse_face(int n, int k);

// m triangles in a row; the first one has the two endpoints of its long edge
// identified, and each triangle shares an edge with the next one.  Collapsing
// the first triangle makes the second one collapsible, and so on.
SsetPtr strip(int m);

struct ManyUnion {
  SsetPtr sset;
  std::vector<SimplicialMap> inclusions;
};

ManyUnion disjoint_union_many(const std::vector<SsetPtr>& parts);

}  // namespace ssk
