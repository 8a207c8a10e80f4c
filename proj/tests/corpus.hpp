#pragma once

// A shared, named corpus of small simplicial sets exercising every builder:
// simplices, boundaries, spheres, partial collapses, subdivisions, nerves,
// strips, unions and quotients.

#include <string>
#include <vector>

#include "ssk/sset.hpp"

namespace ssk::testing {

struct CorpusMember {
  std::string name;
  SsetPtr sset;
};

const std::vector<CorpusMember>& corpus();
std::vector<CorpusMember> singular_corpus();
std::vector<CorpusMember> nonsingular_corpus();

}  // namespace ssk::testing
