#include "ssk/subdiv.hpp"

#include <algorithm>
#include <stdexcept>

namespace ssk {

namespace {

int popcount(std::uint32_t m) { return __builtin_popcount(m); }

std::string mask_str(std::uint32_t mask, int degree) {
  std::string out;
  const char* sep = degree > 9 ? "_" : "";
  bool first = true;
  for (int v = 0; v <= degree; ++v)
    if (mask >> v & 1u) {
      if (!first) out += sep;
      out += std::to_string(v);
      first = false;
    }
  return out;
}

std::string flag_name(const FiniteSimplicialSet& X, const Flag& f) {
  std::string out = X.name(f.gen) + "|";
  for (size_t i = 0; i < f.chain.size(); ++i) {
    if (i) out += "<";
    out += mask_str(f.chain[i], f.gen.degree);
  }
  return out;
}

// All strictly increasing chains of nonempty subsets of {0..n} ending in the
// full set, grouped by chain length - 1, each group in lexicographic order.
std::vector<std::vector<std::vector<std::uint32_t>>> full_topped_chains(int n) {
  std::uint32_t full = (1u << (n + 1)) - 1u;
  std::vector<std::vector<std::vector<std::uint32_t>>> out(static_cast<size_t>(n) + 1);
  std::vector<std::uint32_t> path;
  auto extend = [&](auto&& self, std::uint32_t last) -> void {
    if (last == full) {
      out[path.size() - 1].push_back(path);
      return;
    }
    for (std::uint32_t s = last + 1; s <= full; ++s)
      if ((s & last) == last) {
        path.push_back(s);
        self(self, s);
        path.pop_back();
      }
  };
  for (std::uint32_t m = 1; m <= full; ++m) {
    path.assign(1, m);
    extend(extend, m);
  }
  return out;
}

// Positions of the elements of sub within the sorted elements of sup
// (requires sub a subset of sup).
std::uint32_t relabel_into(std::uint32_t sub, std::uint32_t sup) {
  std::uint32_t out = 0;
  int pos = 0;
  for (int v = 0; v < 32; ++v)
    if (sup >> v & 1u) {
      if (sub >> v & 1u) out |= 1u << pos;
      ++pos;
    }
  return out;
}

std::uint32_t push_mask(std::uint32_t mask, const DeltaOperator& op) {
  std::uint32_t out = 0;
  for (int i = 0; i <= op.source_rank(); ++i)
    if (mask >> i & 1u) out |= 1u << op(i);
  return out;
}

struct Strictified {
  std::vector<std::uint32_t> chain;
  DeltaOperator epi;
};

// Collapse consecutive repeats of a weakly increasing chain.
Strictified strictify(const std::vector<std::uint32_t>& weak) {
  std::vector<std::uint32_t> chain;
  std::vector<int> block;
  for (std::uint32_t m : weak) {
    if (chain.empty() || m != chain.back()) chain.push_back(m);
    block.push_back(static_cast<int>(chain.size()) - 1);
  }
  IntervalPartition p{static_cast<int>(weak.size()) - 1, std::move(block)};
  return Strictified{std::move(chain), partition_to_degeneracy(p)};
}

}  // namespace

DeltaOperator mask_to_mono(std::uint32_t mask, int n) {
  std::vector<int> values;
  for (int v = 0; v <= n; ++v)
    if (mask >> v & 1u) values.push_back(v);
  if (values.empty()) throw std::invalid_argument("mask_to_mono: empty mask");
  return DeltaOperator(n, std::move(values));
}

SdResult sd(SsetPtr X) {
  SdResult result;
  // Chain tables are shared between generators of equal degree.
  std::vector<std::vector<std::vector<std::vector<std::uint32_t>>>> tables;
  for (int n = 0; n <= X->dimension(); ++n) tables.push_back(full_topped_chains(n));

  SsetBuilder builder;
  result.flags.resize(static_cast<size_t>(X->dimension()) + 1);
  for (int d = 0; d <= X->dimension(); ++d)
    for (int flat = 0; flat < X->total_generators(); ++flat) {
      GeneratorId g = X->gen_at(flat);
      if (g.degree < d) continue;
      for (const auto& chain : tables[static_cast<size_t>(g.degree)][static_cast<size_t>(d)]) {
        Flag f{g, chain};
        GeneratorId id = builder.add_generator(d, flag_name(*X, f));
        result.index.emplace(f, id);
        result.flags[static_cast<size_t>(d)].push_back(std::move(f));
      }
    }

  for (int d = 1; d <= X->dimension(); ++d)
    for (size_t i = 0; i < result.flags[static_cast<size_t>(d)].size(); ++i) {
      const Flag& f = result.flags[static_cast<size_t>(d)][i];
      GeneratorId id{d, static_cast<int>(i)};
      int k = d;
      for (int j = 0; j < k; ++j) {
        Flag sub{f.gen, f.chain};
        sub.chain.erase(sub.chain.begin() + j);
        builder.set_face(id, j, nondeg(result.gen_of(sub)));
      }
      // Top face: push onto the new top set, act, transport the chain.
      std::uint32_t top = f.chain[static_cast<size_t>(k) - 1];
      Simplex y = act(*X, nondeg(f.gen), mask_to_mono(top, f.gen.degree));
      std::vector<std::uint32_t> weak;
      for (int j = 0; j < k; ++j)
        weak.push_back(push_mask(relabel_into(f.chain[static_cast<size_t>(j)], top), y.deg_part));
      Strictified s = strictify(weak);
      builder.set_face(id, k, Simplex(result.gen_of(Flag{y.gen, s.chain}), s.epi));
    }

  result.sset = builder.build();
  return result;
}

SimplicialMap sd_map(const SimplicialMap& f, const SdResult& sdX, const SdResult& sdY) {
  std::vector<std::vector<Simplex>> assign;
  for (int d = 0; d <= sdX.sset->dimension(); ++d) {
    std::vector<Simplex> row;
    for (const Flag& fl : sdX.flags[static_cast<size_t>(d)]) {
      const Simplex& img = f.assign(fl.gen);
      std::vector<std::uint32_t> weak;
      for (std::uint32_t m : fl.chain) weak.push_back(push_mask(m, img.deg_part));
      Strictified s = strictify(weak);
      row.push_back(Simplex(sdY.gen_of(Flag{img.gen, s.chain}), s.epi));
    }
    assign.push_back(std::move(row));
  }
  return SimplicialMap(sdX.sset, sdY.sset, std::move(assign));
}

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& less_pairs)
    : labels_(std::move(labels)) {
  int n = size();
  lt_.assign(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (auto [a, b] : less_pairs) {
    if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("Poset: element out of range");
    lt_[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int a = 0; a < n; ++a) {
      if (!lt_[static_cast<size_t>(a)][static_cast<size_t>(k)]) continue;
      for (int b = 0; b < n; ++b)
        if (lt_[static_cast<size_t>(k)][static_cast<size_t>(b)])
          lt_[static_cast<size_t>(a)][static_cast<size_t>(b)] = 1;
    }
  for (int a = 0; a < n; ++a) {
    if (lt_[static_cast<size_t>(a)][static_cast<size_t>(a)])
      throw std::invalid_argument("Poset: relation has a cycle through '" + label(a) + "'");
    for (int b = 0; b < a; ++b)
      if (lt_[static_cast<size_t>(a)][static_cast<size_t>(b)] &&
          lt_[static_cast<size_t>(b)][static_cast<size_t>(a)])
        throw std::invalid_argument("Poset: antisymmetry fails between '" + label(a) + "' and '" +
                                    label(b) + "'");
  }
}

bool Poset::less(int a, int b) const {
  return lt_[static_cast<size_t>(a)][static_cast<size_t>(b)] != 0;
}

Poset face_poset(const FiniteSimplicialSet& X) {
  std::vector<std::string> labels;
  for (int flat = 0; flat < X.total_generators(); ++flat) labels.push_back(X.name(X.gen_at(flat)));
  std::vector<std::pair<int, int>> pairs;
  for (int flat = 0; flat < X.total_generators(); ++flat) {
    GeneratorId x = X.gen_at(flat);
    for (int m = 0; m < x.degree; ++m)
      for (const DeltaOperator& mu : all_monos(m, x.degree)) {
        Simplex y = act(X, nondeg(x), mu);
        if (y.nondegenerate()) pairs.emplace_back(X.flat_index(y.gen), flat);
      }
  }
  return Poset(std::move(labels), pairs);
}

NerveResult nerve(const Poset& P) {
  NerveResult result;
  std::vector<int> path;
  auto record = [&](const std::vector<int>& chain) {
    size_t d = chain.size() - 1;
    if (result.chains.size() <= d) result.chains.resize(d + 1);
    result.chains[d].push_back(chain);
  };
  auto extend = [&](auto&& self) -> void {
    record(path);
    for (int b = 0; b < P.size(); ++b)
      if (P.less(path.back(), b)) {
        path.push_back(b);
        self(self);
        path.pop_back();
      }
  };
  for (int a = 0; a < P.size(); ++a) {
    path.assign(1, a);
    extend(extend);
  }

  SsetBuilder builder;
  for (size_t d = 0; d < result.chains.size(); ++d)
    for (const auto& chain : result.chains[d]) {
      std::string name;
      for (size_t i = 0; i < chain.size(); ++i) {
        if (i) name += "<";
        name += P.label(chain[i]);
      }
      GeneratorId id = builder.add_generator(static_cast<int>(d), std::move(name));
      result.index.emplace(chain, id);
    }
  for (size_t d = 1; d < result.chains.size(); ++d)
    for (size_t i = 0; i < result.chains[d].size(); ++i) {
      const auto& chain = result.chains[d][i];
      for (size_t j = 0; j < chain.size(); ++j) {
        std::vector<int> sub = chain;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(j));
        builder.set_face(GeneratorId{static_cast<int>(d), static_cast<int>(i)},
                         static_cast<int>(j), nondeg(result.gen_of(sub)));
      }
    }
  result.sset = builder.build();
  return result;
}

BarrattResult barratt(SsetPtr X) {
  Poset p = face_poset(*X);
  NerveResult n = nerve(p);
  return BarrattResult{std::move(p), std::move(n)};
}

SimplicialMap b_map(SsetPtr X, const SdResult& sdX, const BarrattResult& bX) {
  std::vector<std::vector<Simplex>> assign;
  for (int d = 0; d <= sdX.sset->dimension(); ++d) {
    std::vector<Simplex> row;
    for (const Flag& fl : sdX.flags[static_cast<size_t>(d)]) {
      std::vector<int> weak;
      for (std::uint32_t m : fl.chain) {
        Simplex u = act(*X, nondeg(fl.gen), mask_to_mono(m, fl.gen.degree));
        weak.push_back(X->flat_index(u.gen));
      }
      std::vector<int> chain;
      std::vector<int> block;
      for (int e : weak) {
        if (chain.empty() || e != chain.back()) chain.push_back(e);
        block.push_back(static_cast<int>(chain.size()) - 1);
      }
      auto it = bX.nerve.index.find(chain);
      if (it == bX.nerve.index.end())
        throw std::logic_error("b_map: flag chain is not a chain of the face poset");
      IntervalPartition p{d, std::move(block)};
      row.push_back(Simplex(it->second, partition_to_degeneracy(p)));
    }
    assign.push_back(std::move(row));
  }
  return SimplicialMap(sdX.sset, bX.sset(), std::move(assign));
}

TMapResult t_map(SsetPtr X) {
  SdResult s = sd(X);
  DesingTrace trace = desingularize(s.sset);
  BarrattResult bn = barratt(X);
  SimplicialMap b = b_map(X, s, bn);
  SimplicialMap t = factor_through_eta(trace, b);
  return TMapResult{std::move(s), std::move(trace), std::move(bn), std::move(b), std::move(t)};
}

}  // namespace ssk
