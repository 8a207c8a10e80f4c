#pragma once

// Operators of the simplex category: monotone maps between finite ordinals
// [m] = {0 < 1 < ... < m}, stored as explicit value sequences.  A map is kept
// as its target rank plus the list (f(0), ..., f(m)); composition, the
// epi-mono (degeneracy/face) factorization and sections are all exact
// integer computations.

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace ssk {

class DeltaOperator {
public:
  // values[i] = f(i); requires 0 <= values[0] <= ... <= values[m] <= target_rank.
  DeltaOperator(int target_rank, std::vector<int> values);

  static DeltaOperator identity(int rank);
  // delta_j : [n-1] -> [n], the injection missing j (requires n >= 1, 0 <= j <= n).
  static DeltaOperator elementary_face(int n, int j);
  // sigma_j : [n+1] -> [n], the surjection hitting j twice (requires 0 <= j <= n).
  static DeltaOperator elementary_degeneracy(int n, int j);
  // eps_j : [0] -> [n], the vertex at j.
  static DeltaOperator vertex(int n, int j);

  int source_rank() const { return static_cast<int>(values_.size()) - 1; }
  int target_rank() const { return target_rank_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<size_t>(i)]; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_identity() const;

  std::string str() const;  // "0 0 1" style, whitespace separated values

  friend bool operator==(const DeltaOperator&, const DeltaOperator&) = default;
  friend std::strong_ordering operator<=>(const DeltaOperator&, const DeltaOperator&) = default;

private:
  int target_rank_;
  std::vector<int> values_;
};

enum class OperatorKind { Identity, Face, Degeneracy, Mixed };

// Face = injective (strictly increasing), Degeneracy = surjective; Identity
// when both, Mixed when neither.
OperatorKind classify(const DeltaOperator& op);

// Diagram order: apply `first`, then `second`; requires
// first.target_rank() == second.source_rank().
DeltaOperator compose(const DeltaOperator& first, const DeltaOperator& second);

struct EzFactorization {
  DeltaOperator mono;  // face part
  DeltaOperator epi;   // degeneracy part; compose(epi, mono) == op
};

// The unique factorization op = mono . epi.  mono enumerates the image of op,
// epi sends i to the position of op(i) in that image.
EzFactorization ez_factorize(const DeltaOperator& op);

// For a degeneracy rho, the section picking the least preimage of every
// target element: compose(minimal_section(rho), rho) == identity.
DeltaOperator minimal_section(const DeltaOperator& rho);

// Partition of {0..rank} into consecutive intervals; block_of[i] is the index
// of the block containing i (weakly monotone, onto 0..num_blocks-1).
struct IntervalPartition {
  int rank;
  std::vector<int> block_of;
  int num_blocks() const { return block_of.empty() ? 0 : block_of.back() + 1; }
  friend bool operator==(const IntervalPartition&, const IntervalPartition&) = default;
};

// Interval partitions of {0..m} correspond exactly to degeneracies out of [m].
DeltaOperator partition_to_degeneracy(const IntervalPartition& p);
IntervalPartition degeneracy_to_partition(const DeltaOperator& rho);

// Exhaustive enumerations, in lexicographic order of value sequences.
std::vector<DeltaOperator> all_operators(int m, int n);  // every monotone [m] -> [n]
std::vector<DeltaOperator> all_monos(int m, int n);
std::vector<DeltaOperator> all_epis(int m, int n);

}  // namespace ssk
