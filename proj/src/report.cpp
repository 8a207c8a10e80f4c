#include "ssk/report.hpp"

#include "ssk/builders.hpp"
#include "ssk/iso.hpp"
#include "ssk/subdiv.hpp"

namespace ssk {

Json counts_report(const FiniteSimplicialSet& X) {
  Json out;
  out["dimension"] = X.dimension();
  out["nondegenerate_counts"] = X.counts();
  out["nonsingular"] = is_nonsingular(X);
  return out;
}

Json trace_report(const DesingTrace& trace) {
  const FiniteSimplicialSet& result = *trace.result();
  Json out;
  out["dimension"] = result.dimension();
  out["nondegenerate_counts"] = result.counts();
  out["nonsingular"] = is_nonsingular(result);
  out["iterations"] = trace.iterations();
  out["input_counts"] = trace.input->counts();
  Json stages = Json::array();
  for (const QuotientResult& stage : trace.stages) stages.push_back(stage.quotient->counts());
  out["stage_counts"] = std::move(stages);
  return out;
}

Json map_report(const SimplicialMap& f) {
  const FiniteSimplicialSet& X = *f.source();
  const FiniteSimplicialSet& Y = *f.target();
  Json sends;
  for (int flat = 0; flat < X.total_generators(); ++flat) {
    GeneratorId g = X.gen_at(flat);
    const Simplex& img = f.assign(g);
    Json entry;
    entry["gen"] = Y.name(img.gen);
    if (!img.nondegenerate()) entry["deg_part"] = img.deg_part.values();
    sends[X.name(g)] = std::move(entry);
  }
  return sends;
}

namespace {

struct Expectation {
  std::string description;
  SsetPtr sset;
};

Expectation expected_cell(int n, int k) {
  if (n == 0) return {"disjoint(delta(0),delta(0))", disjoint_union(*delta(0), *delta(0)).sset};
  if (n == 1 && k == 0) return {"delta(0)", delta(0)};
  if (n == 1 && k == 1)
    return {"pushout of two delta(1) along boundary(1)",
            pushout(boundary_inclusion(1), boundary_inclusion(1)).sset};
  if (n == 1 && k == 2) {
    SdResult sd_boundary = sd(boundary(1));
    SdResult sd_interval = sd(delta(1));
    SimplicialMap inclusion = sd_map(boundary_inclusion(1), sd_boundary, sd_interval);
    return {"pushout of two sd(delta(1)) along sd(boundary(1))",
            pushout(inclusion, inclusion).sset};
  }
  if (n == 2 && k == 0) return {"delta(0)", delta(0)};
  if (n == 2 && k == 1) return {"delta(1)", delta(1)};
  return {"barratt(sd(sphere(2)))", barratt(sd(sphere(2)).sset).nerve.sset};
}

}  // namespace

Table1 table1() {
  Table1 table;
  table.pass = true;
  for (int n = 0; n <= 2; ++n)
    for (int k = 0; k <= 2; ++k) {
      SsetPtr X = sphere(n);
      for (int j = 0; j < k; ++j) X = sd(X).sset;
      DesingTrace trace = desingularize(X);
      Expectation expected = expected_cell(n, k);
      Table1Cell cell;
      cell.n = n;
      cell.k = k;
      cell.counts = trace.result()->counts();
      cell.iterations = trace.iterations();
      cell.expected = expected.description;
      cell.iso = are_isomorphic(trace.result(), expected.sset).has_value();
      table.pass = table.pass && cell.iso;
      table.cells.push_back(std::move(cell));
    }
  return table;
}

Json table1_report(const Table1& t) {
  Json cells = Json::array();
  for (const Table1Cell& cell : t.cells) {
    Json c;
    c["n"] = cell.n;
    c["k"] = cell.k;
    c["nondegenerate_counts"] = cell.counts;
    c["iterations"] = cell.iterations;
    c["expected"] = cell.expected;
    c["iso"] = cell.iso;
    cells.push_back(std::move(c));
  }
  Json out;
  out["cells"] = std::move(cells);
  out["pass"] = t.pass;
  return out;
}

}  // namespace ssk
