#pragma once

// Machine-readable JSON reports: object summaries, desingularization traces,
// and the 3x3 matrix comparing desingularized iterated subdivisions of the
// collapsed-boundary spheres against independently constructed expectations.

#include "json.hpp"
#include "ssk/desing.hpp"

namespace ssk {

using Json = nlohmann::ordered_json;

Json counts_report(const FiniteSimplicialSet& X);
Json trace_report(const DesingTrace& trace);
Json map_report(const SimplicialMap& f);

struct Table1Cell {
  int n = 0;
  int k = 0;
  std::vector<int> counts;
  int iterations = 0;
  std::string expected;
  bool iso = false;
};

struct Table1 {
  std::vector<Table1Cell> cells;
  bool pass = false;
};

// D(Sd^k(sphere(n))) for n, k in {0,1,2}, each checked by witness search
// against an expectation built through an unrelated construction path.
Table1 table1();
Json table1_report(const Table1& t);

}  // namespace ssk
