// Acceptance gate: one line per criterion, exit 0 exactly when all pass.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>

#include "corpus.hpp"
#include "oracles.hpp"
#include "ssk/builders.hpp"
#include "ssk/iso.hpp"
#include "ssk/report.hpp"
#include "ssk/subdiv.hpp"

using namespace ssk;
using namespace ssk::testing;

namespace {

int failures = 0;

void run(int number, const std::string& label, double limit_seconds,
         const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("exception: ") + e.what();
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0 && elapsed >= limit_seconds) {
    ok = false;
    if (!detail.empty()) detail += "; ";
    detail += "exceeded the time budget of " + std::to_string(limit_seconds) + "s";
  }
  if (!ok) ++failures;
  std::printf("%s  criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", number, label.c_str(),
              elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool check(bool condition, const std::string& what, std::string& detail) {
  if (!condition && detail.empty()) detail = what;
  return condition;
}

std::vector<GeneratorId> non_embedded(const FiniteSimplicialSet& X) {
  std::vector<GeneratorId> out;
  for (int d = 0; d <= X.dimension(); ++d)
    for (int i = 0; i < X.count(d); ++i)
      if (!is_embedded(X, GeneratorId{d, i})) out.push_back(GeneratorId{d, i});
  return out;
}

bool desingularized_subdivision_matrix(std::string& detail) {
  Table1 t = table1();
  bool ok = t.pass;
  for (const Table1Cell& cell : t.cells)
    if (!cell.iso)
      ok = check(false,
                 "cell n=" + std::to_string(cell.n) + " k=" + std::to_string(cell.k) +
                     " does not match its expectation",
                 detail);
  return ok && t.cells.size() == 9;
}

bool nerve_comparison_on_subdivided_spheres(std::string& detail) {
  bool ok = true;
  for (int n = 0; n <= 2; ++n) {
    TMapResult r = t_map(sd(sphere(n)).sset);
    ok &= check(is_isomorphism(r.t),
                "comparison map not an isomorphism for the subdivided " + std::to_string(n) +
                    "-sphere",
                detail);
  }
  std::vector<int> expected = suspension_chain_counts();
  ok &= check(expected == std::vector<int>{14, 36, 24}, "hand-counted chains changed", detail);
  ok &= check(barratt(sd(sphere(2)).sset).sset()->counts() == expected,
              "nerve of the subdivided 2-sphere has unexpected counts", detail);
  return ok;
}

bool partial_collapses_desingularize_to_simplices(std::string& detail) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k < n; ++k)
      ok &= check(
          are_isomorphic(desingularize(collapse_face(n, k)).result(), delta(n - k)).has_value(),
          "collapse_face(" + std::to_string(n) + "," + std::to_string(k) + ")", detail);
  return ok;
}

bool subdivided_sphere_enforcers(std::string& detail) {
  SsetPtr s = sd(sphere(2)).sset;
  bool ok = check(s->counts() == std::vector<int>{2, 6, 6}, "unexpected subdivision counts", detail);
  ok &= check(s->count(2) == 6, "wrong number of triangles", detail);
  for (int i = 0; ok && i < s->count(2); ++i)
    ok &= check(enforcer(*s, GeneratorId{2, i}) == DeltaOperator::elementary_degeneracy(1, 0),
                "triangle " + std::to_string(i) + " has the wrong enforcer", detail);
  return ok;
}

bool property_suites(std::string& detail) {
  bool ok = true;

  // unique epi-mono factorization, exhaustively to rank 6
  for (int m = 0; ok && m <= 6; ++m)
    for (int n = 0; ok && n <= 6; ++n)
      for (const DeltaOperator& op : all_operators(m, n)) {
        std::vector<EzFactorization> all = ez_all_factorizations(op);
        EzFactorization f = ez_factorize(op);
        ok &= check(all.size() == 1 && f.mono == all[0].mono && f.epi == all[0].epi,
                    "factorization not unique at " + op.str(), detail);
        if (!ok) break;
      }

  // the action is unital and compatible with composition
  Rng rng{0xacce97edULL};
  for (const CorpusMember& m : corpus()) {
    if (m.sset->total_generators() == 0) continue;
    for (int d = 0; d <= m.sset->dimension(); ++d)
      for (const Simplex& x : simplices_of_degree(*m.sset, d)) {
        ok &= check(act(*m.sset, x, DeltaOperator::identity(d)) == x, "unit law at " + m.name,
                    detail);
        for (int tries = 0; tries < 4; ++tries) {
          int p = rng.below(d + 2);
          int q = rng.below(p + 2);
          std::vector<DeltaOperator> first = all_operators(p, d);
          std::vector<DeltaOperator> second = all_operators(q, p);
          const DeltaOperator& alpha =
              first[static_cast<size_t>(rng.below(static_cast<int>(first.size())))];
          const DeltaOperator& beta =
              second[static_cast<size_t>(rng.below(static_cast<int>(second.size())))];
          ok &= check(act(*m.sset, act(*m.sset, x, alpha), beta) ==
                          act(*m.sset, x, compose(beta, alpha)),
                      "composition law at " + m.name, detail);
        }
      }
  }

  // generated congruences match brute-force closure on small instances
  {
    SsetPtr d2 = delta(2);
    SsetPtr s1 = sphere(1);
    std::vector<std::pair<SsetPtr, std::vector<std::pair<Simplex, Simplex>>>> instances = {
        {d2, {{nondeg(*d2->find("0")), nondeg(*d2->find("1"))}}},
        {s1, {{nondeg(GeneratorId{1, 0}), Simplex(GeneratorId{0, 0}, DeltaOperator(0, {0, 0}))}}},
        {boundary(2), {{nondeg(GeneratorId{1, 0}), nondeg(GeneratorId{1, 2})}}},
        {strip(2), {{nondeg(GeneratorId{2, 0}), nondeg(GeneratorId{2, 1})}}},
    };
    for (const auto& [X, seeds] : instances) {
      int bound = X->dimension();
      BruteCongruence brute(X, seeds, bound);
      QuotientResult q = quotient(X, seeds);
      for (int d = 0; ok && d <= bound; ++d) {
        const std::vector<Simplex>& layer = brute.elements(d);
        for (size_t i = 0; i < layer.size(); ++i)
          for (size_t j = i; j < layer.size(); ++j)
            ok &= check((q.class_of(layer[i]) == q.class_of(layer[j])) ==
                            brute.same(layer[i], layer[j]),
                        "congruence mismatch", detail);
      }
    }
  }

  // one collapse step is the kernel-pair quotient of the enforcers
  for (SsetPtr X : {sphere(1), sphere(2), collapse_face(2, 1), strip(2), sd(sphere(2)).sset}) {
    std::vector<GeneratorId> J = non_embedded(*X);
    ok &= check(same_presentation(*cen(X, J).quotient,
                                  *quotient(X, kernel_pair_seeds(X, J)).quotient),
                "collapse step is not the kernel-pair quotient", detail);
  }

  // enforcers, projection images, progress and idempotence
  for (const CorpusMember& m : corpus()) {
    DesingTrace t = desingularize(m.sset);
    ok &= check(is_nonsingular(*t.result()), "result still singular at " + m.name, detail);
    int previous = m.sset->total_generators();
    for (const QuotientResult& stage : t.stages) {
      ok &= check(stage.quotient->total_generators() < previous, "no strict progress", detail);
      previous = stage.quotient->total_generators();
    }
    ok &= check(t.iterations() <= 1 + m.sset->total_generators(), "too many iterations", detail);
    ok &= check(desingularize(t.result()).iterations() == 0, "not idempotent", detail);
    for (GeneratorId x : non_embedded(*m.sset)) {
      DeltaOperator rho = enforcer(*m.sset, x);
      Simplex image = apply(t.eta, nondeg(x));
      bool factors = false;
      for (const DeltaOperator& tau : all_epis(rho.target_rank(), image.gen.degree))
        if (compose(rho, tau) == image.deg_part) factors = true;
      ok &= check(factors, "projection image does not factor through the enforcer", detail);
    }
  }

  // maps into non-singular sets factor uniquely through the projection
  {
    int sampled = 0;
    for (const FactorSample& sample : factor_samples())
      for (const SimplicialMap& k : sample.maps) {
        ++sampled;
        SimplicialMap h = factor_through_eta(sample.trace, k);
        ok &= check(compose_maps(sample.trace.eta, h) == k, "factorization composite is off",
                    detail);
      }
    ok &= check(sampled >= 50, "not enough sampled maps", detail);
  }

  // subdividing commutes with collapsing
  {
    auto collapsed_model = [](const SimplicialMap& inclusion) {
      SdResult sd_sub = sd(inclusion.source());
      SdResult sd_whole = sd(inclusion.target());
      SimplicialMap leg = sd_map(inclusion, sd_sub, sd_whole);
      return pushout(leg, constant_to_point(sd_sub.sset)).sset;
    };
    for (int n = 1; n <= 3; ++n)
      ok &= check(are_isomorphic(sd(sphere(n)).sset, collapsed_model(boundary_inclusion(n)))
                      .has_value(),
                  "subdividing the " + std::to_string(n) + "-sphere does not commute", detail);
    for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}, {4, 2}}) {
      std::vector<int> front(static_cast<size_t>(k) + 1);
      for (int i = 0; i <= k; ++i) front[static_cast<size_t>(i)] = i;
      SimplicialMap inclusion = delta_operator_map(DeltaOperator(n, front));
      ok &= check(are_isomorphic(sd(collapse_face(n, k)).sset, collapsed_model(inclusion))
                      .has_value(),
                  "subdividing a partial collapse does not commute", detail);
    }
  }

  return ok;
}

bool strip_needs_iteration(std::string& detail) {
  QuotientResult one = cen(strip(2));
  bool ok = check(!is_nonsingular(*one.quotient),
                  "one collapse step already non-singular on the strip", detail);
  int iterations = desingularize(strip(2)).iterations();
  ok &= check(iterations >= 2,
              "expected at least two iterations, got " + std::to_string(iterations), detail);
  return ok;
}

}  // namespace

int main() {
  run(1, "desingularized iterated subdivisions of collapsed spheres match expectations", 10.0,
      desingularized_subdivision_matrix);
  run(2, "nerve comparison is an isomorphism on subdivided collapsed spheres", 30.0,
      nerve_comparison_on_subdivided_spheres);
  run(3, "partially collapsed simplices desingularize to lower simplices", 5.0,
      partial_collapses_desingularize_to_simplices);
  run(4, "subdivided collapsed 2-sphere: counts and triangle enforcers", 0.0,
      subdivided_sphere_enforcers);
  run(5, "property suites: factorization, action, congruences, projections, subdivision", 120.0,
      property_suites);
  run(6, "a strip whose collapse stays singular and needs several iterations", 0.0,
      strip_needs_iteration);
  return failures == 0 ? 0 : 1;
}
