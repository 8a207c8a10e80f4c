#pragma once

// Finite simplicial sets, presented by their non-degenerate simplices
// (generators) and the stored faces of each generator.  Every simplex is kept
// in normal form as (generator, degeneracy operator); the right action of an
// arbitrary simplex-category operator re-normalizes through the stored faces.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ssk/delta.hpp"

namespace ssk {

struct GeneratorId {
  int degree = 0;
  int index = 0;
  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend std::strong_ordering operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

// Normal form of a simplex: gen is non-degenerate, deg_part a degeneracy
// operator from [degree of the simplex] onto [gen.degree].
struct Simplex {
  Simplex(GeneratorId g, DeltaOperator d) : gen(g), deg_part(std::move(d)) {
    if (!deg_part.is_surjective() || deg_part.target_rank() != gen.degree)
      throw std::invalid_argument("Simplex: degenerate part must be a degeneracy onto the generator rank");
  }
  GeneratorId gen;
  DeltaOperator deg_part;

  int degree() const { return deg_part.source_rank(); }
  bool nondegenerate() const { return deg_part.is_identity(); }
  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend std::strong_ordering operator<=>(const Simplex&, const Simplex&) = default;
};

Simplex nondeg(GeneratorId g);  // (g, identity)

struct SimplexHash {
  size_t operator()(const Simplex& s) const;
};

class FiniteSimplicialSet;
using SsetPtr = std::shared_ptr<const FiniteSimplicialSet>;

class FiniteSimplicialSet {
public:
  int dimension() const { return static_cast<int>(names_.size()) - 1; }  // -1 when empty
  int count(int degree) const;
  int total_generators() const { return total_; }
  std::vector<int> counts() const;

  bool contains(GeneratorId g) const;
  const std::string& name(GeneratorId g) const;
  std::optional<GeneratorId> find(std::string_view name) const;

  // Stored i-th face of a generator of degree >= 1; a Simplex of one degree lower.
  const Simplex& face(GeneratorId g, int i) const;

  // Flat index respecting (degree, index) order; inverse lookup.
  int flat_index(GeneratorId g) const;
  GeneratorId gen_at(int flat) const;

private:
  friend class SsetBuilder;
  FiniteSimplicialSet() = default;
  std::vector<std::vector<std::string>> names_;          // per degree
  std::vector<std::vector<std::vector<Simplex>>> faces_; // per degree, per index, per face slot
  std::unordered_map<std::string, GeneratorId> by_name_;
  std::vector<int> degree_offset_;
  int total_ = 0;
};

class SsetBuilder {
public:
  // Empty name: a fresh "g<degree>.<index>" is invented.  Duplicate names are
  // made unique with a "~k" suffix.
  GeneratorId add_generator(int degree, std::string name = "");
  void set_face(GeneratorId g, int i, Simplex s);
  // Checks that every face slot is filled and references an existing
  // generator of the right rank; does not check the simplicial identities
  // (see validate()).
  SsetPtr build();

private:
  std::vector<std::vector<std::string>> names_;
  std::vector<std::vector<std::vector<std::optional<Simplex>>>> faces_;
  std::unordered_map<std::string, GeneratorId> by_name_;
};

// Right action x . alpha in normal form; requires
// alpha.target_rank() == x.degree().  Cost is linear in the face-peeling
// depth; the generator of the result has degree <= x.gen.degree.
Simplex act(const FiniteSimplicialSet& X, const Simplex& x, const DeltaOperator& alpha);

// The degree()+1 vertices x.eps_0, ..., x.eps_n.
std::vector<Simplex> vertices(const FiniteSimplicialSet& X, const Simplex& x);

// A generator is embedded when its vertices are pairwise distinct.
bool is_embedded(const FiniteSimplicialSet& X, GeneratorId g);
bool is_nonsingular(const FiniteSimplicialSet& X);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Structural checks plus the simplicial identities on all stored faces.
ValidationReport validate(const FiniteSimplicialSet& X);

std::vector<int> counts(const FiniteSimplicialSet& X);
int dimension(const FiniteSimplicialSet& X);

// All simplices of a fixed degree, ordered by (generator, operator).
std::vector<Simplex> simplices_of_degree(const FiniteSimplicialSet& X, int d);

struct DisjointUnion {
  SsetPtr sset;
  std::vector<int> left_counts;  // per degree of the left summand
  GeneratorId left(GeneratorId g) const { return g; }
  GeneratorId right(GeneratorId g) const {
    int off = g.degree < static_cast<int>(left_counts.size()) ? left_counts[static_cast<size_t>(g.degree)] : 0;
    return GeneratorId{g.degree, g.index + off};
  }
};

DisjointUnion disjoint_union(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y);

// Presentations agree degree-for-degree (names ignored).
bool same_presentation(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y);

}  // namespace ssk
