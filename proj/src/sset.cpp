#include "ssk/sset.hpp"

#include <algorithm>

namespace ssk {

Simplex nondeg(GeneratorId g) { return Simplex(g, DeltaOperator::identity(g.degree)); }

size_t SimplexHash::operator()(const Simplex& s) const {
  // FNV-1a over the defining integers
  uint64_t h = 1469598103934665603ull;
  auto mix = [&h](uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  };
  mix(static_cast<uint64_t>(s.gen.degree));
  mix(static_cast<uint64_t>(s.gen.index));
  for (int v : s.deg_part.values()) mix(static_cast<uint64_t>(v));
  return static_cast<size_t>(h);
}

int FiniteSimplicialSet::count(int degree) const {
  if (degree < 0 || degree > dimension()) return 0;
  return static_cast<int>(names_[static_cast<size_t>(degree)].size());
}

std::vector<int> FiniteSimplicialSet::counts() const {
  std::vector<int> c;
  c.reserve(names_.size());
  for (const auto& layer : names_) c.push_back(static_cast<int>(layer.size()));
  return c;
}

bool FiniteSimplicialSet::contains(GeneratorId g) const {
  return g.degree >= 0 && g.degree <= dimension() && g.index >= 0 && g.index < count(g.degree);
}

const std::string& FiniteSimplicialSet::name(GeneratorId g) const {
  if (!contains(g)) throw std::invalid_argument("name: unknown generator");
  return names_[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)];
}

std::optional<GeneratorId> FiniteSimplicialSet::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const Simplex& FiniteSimplicialSet::face(GeneratorId g, int i) const {
  if (!contains(g)) throw std::invalid_argument("face: unknown generator");
  if (g.degree < 1) throw std::invalid_argument("face: generator of degree 0 has no faces");
  if (i < 0 || i > g.degree) throw std::invalid_argument("face: index out of range");
  return faces_[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)][static_cast<size_t>(i)];
}

int FiniteSimplicialSet::flat_index(GeneratorId g) const {
  if (!contains(g)) throw std::invalid_argument("flat_index: unknown generator");
  return degree_offset_[static_cast<size_t>(g.degree)] + g.index;
}

GeneratorId FiniteSimplicialSet::gen_at(int flat) const {
  if (flat < 0 || flat >= total_) throw std::invalid_argument("gen_at: out of range");
  int d = 0;
  while (d + 1 <= dimension() && degree_offset_[static_cast<size_t>(d) + 1] <= flat) ++d;
  return GeneratorId{d, flat - degree_offset_[static_cast<size_t>(d)]};
}

GeneratorId SsetBuilder::add_generator(int degree, std::string name) {
  if (degree < 0) throw std::invalid_argument("add_generator: negative degree");
  if (static_cast<int>(names_.size()) <= degree) {
    names_.resize(static_cast<size_t>(degree) + 1);
    faces_.resize(static_cast<size_t>(degree) + 1);
  }
  GeneratorId g{degree, static_cast<int>(names_[static_cast<size_t>(degree)].size())};
  if (name.empty()) name = "g" + std::to_string(degree) + "." + std::to_string(g.index);
  if (by_name_.count(name)) {
    int k = 2;
    while (by_name_.count(name + "~" + std::to_string(k))) ++k;
    name += "~" + std::to_string(k);
  }
  by_name_.emplace(name, g);
  names_[static_cast<size_t>(degree)].push_back(std::move(name));
  faces_[static_cast<size_t>(degree)].emplace_back(static_cast<size_t>(degree) + 1, std::nullopt);
  if (degree == 0) faces_[0].back().clear();
  return g;
}

void SsetBuilder::set_face(GeneratorId g, int i, Simplex s) {
  if (g.degree < 1) throw std::invalid_argument("set_face: degree-0 generator has no faces");
  if (g.degree >= static_cast<int>(faces_.size()) ||
      g.index >= static_cast<int>(faces_[static_cast<size_t>(g.degree)].size()))
    throw std::invalid_argument("set_face: unknown generator");
  if (i < 0 || i > g.degree) throw std::invalid_argument("set_face: face index out of range");
  if (s.degree() != g.degree - 1)
    throw std::invalid_argument("set_face: face must have degree " + std::to_string(g.degree - 1));
  faces_[static_cast<size_t>(g.degree)][static_cast<size_t>(g.index)][static_cast<size_t>(i)] = std::move(s);
}

SsetPtr SsetBuilder::build() {
  // trim empty top degrees
  size_t dims = names_.size();
  while (dims > 0 && names_[dims - 1].empty()) --dims;

  auto X = std::shared_ptr<FiniteSimplicialSet>(new FiniteSimplicialSet());
  X->names_.assign(names_.begin(), names_.begin() + static_cast<long>(dims));
  X->faces_.resize(dims);
  for (size_t d = 0; d < dims; ++d) {
    X->faces_[d].resize(names_[d].size());
    for (size_t i = 0; i < names_[d].size(); ++i) {
      auto& slots = faces_[d][i];
      for (size_t k = 0; k < slots.size(); ++k) {
        if (!slots[k])
          throw std::invalid_argument("build: face " + std::to_string(k) + " of generator '" +
                                      names_[d][i] + "' is missing");
        const Simplex& s = *slots[k];
        int fd = s.gen.degree;
        if (fd >= static_cast<int>(d) ||
            fd >= static_cast<int>(dims) ||
            s.gen.index < 0 ||
            s.gen.index >= static_cast<int>(names_[static_cast<size_t>(fd)].size()))
          throw std::invalid_argument("build: face of '" + names_[d][i] +
                                      "' references a generator that does not exist");
        X->faces_[d][i].push_back(s);
      }
    }
  }
  X->by_name_.clear();
  X->degree_offset_.assign(dims + 1, 0);
  int running = 0;
  for (size_t d = 0; d < dims; ++d) {
    X->degree_offset_[d] = running;
    for (size_t i = 0; i < X->names_[d].size(); ++i)
      X->by_name_.emplace(X->names_[d][i], GeneratorId{static_cast<int>(d), static_cast<int>(i)});
    running += static_cast<int>(X->names_[d].size());
  }
  if (dims > 0) X->degree_offset_[dims] = running;
  X->total_ = running;
  return X;
}

Simplex act(const FiniteSimplicialSet& X, const Simplex& x, const DeltaOperator& alpha) {
  if (!X.contains(x.gen)) throw std::invalid_argument("act: simplex does not belong to this set");
  if (alpha.target_rank() != x.degree())
    throw std::invalid_argument("act: operator target rank " + std::to_string(alpha.target_rank()) +
                                " does not match simplex degree " + std::to_string(x.degree()));
  EzFactorization ez = ez_factorize(compose(alpha, x.deg_part));
  DeltaOperator mu = std::move(ez.mono);
  DeltaOperator rho = std::move(ez.epi);
  GeneratorId g = x.gen;
  // peel elementary faces off mu, largest missing value first, replacing the
  // generator by its stored face and re-normalizing the accumulated operator
  while (mu.source_rank() < mu.target_rank()) {
    int n = mu.target_rank();
    int j = n;
    {
      // largest element of [n] missing from the image of mu
      const std::vector<int>& vals = mu.values();
      size_t k = vals.size();
      while (j >= 0 && k > 0 && vals[k - 1] == j) {
        --k;
        --j;
      }
    }
    std::vector<int> dropped = mu.values();
    for (int& v : dropped)
      if (v > j) --v;
    DeltaOperator mu_prime(n - 1, std::move(dropped));
    const Simplex& f = X.face(g, j);
    EzFactorization next = ez_factorize(compose(mu_prime, f.deg_part));
    rho = compose(rho, next.epi);
    mu = std::move(next.mono);
    g = f.gen;
  }
  return Simplex(g, std::move(rho));
}

std::vector<Simplex> vertices(const FiniteSimplicialSet& X, const Simplex& x) {
  std::vector<Simplex> out;
  out.reserve(static_cast<size_t>(x.degree()) + 1);
  for (int i = 0; i <= x.degree(); ++i)
    out.push_back(act(X, x, DeltaOperator::vertex(x.degree(), i)));
  return out;
}

bool is_embedded(const FiniteSimplicialSet& X, GeneratorId g) {
  std::vector<Simplex> vs = vertices(X, nondeg(g));
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (vs[i] == vs[j]) return false;
  return true;
}

bool is_nonsingular(const FiniteSimplicialSet& X) {
  for (int d = 0; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i)
      if (!is_embedded(X, GeneratorId{d, i})) return false;
  return true;
}

ValidationReport validate(const FiniteSimplicialSet& X) {
  ValidationReport report;
  for (int d = 2; d <= X.dimension(); ++d) {
    for (int idx = 0; idx < X.count(d); ++idx) {
      GeneratorId g{d, idx};
      for (int j = 1; j <= d; ++j) {
        for (int i = 0; i < j; ++i) {
          try {
            Simplex lhs = act(X, X.face(g, j), DeltaOperator::elementary_face(d - 1, i));
            Simplex rhs = act(X, X.face(g, i), DeltaOperator::elementary_face(d - 1, j - 1));
            if (!(lhs == rhs))
              report.violations.push_back("simplicial identity fails at generator '" + X.name(g) +
                                          "' with (i, j) = (" + std::to_string(i) + ", " +
                                          std::to_string(j) + ")");
          } catch (const std::exception& e) {
            report.violations.push_back("face computation fails at generator '" + X.name(g) +
                                        "': " + e.what());
          }
        }
      }
    }
  }
  return report;
}

std::vector<int> counts(const FiniteSimplicialSet& X) { return X.counts(); }

int dimension(const FiniteSimplicialSet& X) { return X.dimension(); }

std::vector<Simplex> simplices_of_degree(const FiniteSimplicialSet& X, int d) {
  if (d < 0) throw std::invalid_argument("simplices_of_degree: negative degree");
  std::vector<Simplex> out;
  for (int k = 0; k <= std::min(d, X.dimension()); ++k) {
    std::vector<DeltaOperator> epis = all_epis(d, k);
    for (int i = 0; i < X.count(k); ++i)
      for (const DeltaOperator& rho : epis) out.push_back(Simplex(GeneratorId{k, i}, rho));
  }
  return out;
}

DisjointUnion disjoint_union(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) {
  SsetBuilder b;
  DisjointUnion result;
  result.left_counts = X.counts();
  int dim = std::max(X.dimension(), Y.dimension());
  // left generators first within every degree, so left ids survive unchanged
  for (int d = 0; d <= dim; ++d) {
    for (int i = 0; i < X.count(d); ++i) b.add_generator(d, X.name(GeneratorId{d, i}));
    for (int i = 0; i < Y.count(d); ++i) b.add_generator(d, Y.name(GeneratorId{d, i}));
  }
  auto translate = [&result](const Simplex& s, bool right) {
    GeneratorId g = right ? result.right(s.gen) : s.gen;
    return Simplex(g, s.deg_part);
  };
  for (int d = 1; d <= dim; ++d) {
    for (int i = 0; i < X.count(d); ++i)
      for (int k = 0; k <= d; ++k)
        b.set_face(GeneratorId{d, i}, k, translate(X.face(GeneratorId{d, i}, k), false));
    int off = X.count(d);
    for (int i = 0; i < Y.count(d); ++i)
      for (int k = 0; k <= d; ++k)
        b.set_face(GeneratorId{d, i + off}, k, translate(Y.face(GeneratorId{d, i}, k), true));
  }
  result.sset = b.build();
  return result;
}

bool same_presentation(const FiniteSimplicialSet& X, const FiniteSimplicialSet& Y) {
  if (X.counts() != Y.counts()) return false;
  for (int d = 1; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i)
      for (int k = 0; k <= d; ++k)
        if (!(X.face(GeneratorId{d, i}, k) == Y.face(GeneratorId{d, i}, k))) return false;
  return true;
}

}  // namespace ssk
