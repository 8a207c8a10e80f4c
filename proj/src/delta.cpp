#include "ssk/delta.hpp"

#include <algorithm>
#include <sstream>

namespace ssk {

DeltaOperator::DeltaOperator(int target_rank, std::vector<int> values)
    : target_rank_(target_rank), values_(std::move(values)) {
  if (target_rank_ < 0)
    throw std::invalid_argument("DeltaOperator: negative target rank");
  if (values_.empty())
    throw std::invalid_argument("DeltaOperator: empty value list (source must be a nonempty ordinal)");
  int prev = 0;
  for (size_t i = 0; i < values_.size(); ++i) {
    int v = values_[i];
    if (v < 0 || v > target_rank_)
      throw std::invalid_argument("DeltaOperator: value " + std::to_string(v) +
                                  " out of range for target rank " + std::to_string(target_rank_));
    if (i > 0 && v < prev)
      throw std::invalid_argument("DeltaOperator: values must be weakly monotone");
    prev = v;
  }
}

DeltaOperator DeltaOperator::identity(int rank) {
  if (rank < 0) throw std::invalid_argument("identity: negative rank");
  std::vector<int> v(static_cast<size_t>(rank) + 1);
  for (int i = 0; i <= rank; ++i) v[static_cast<size_t>(i)] = i;
  return DeltaOperator(rank, std::move(v));
}

DeltaOperator DeltaOperator::elementary_face(int n, int j) {
  if (n < 1 || j < 0 || j > n)
    throw std::invalid_argument("elementary_face: need n >= 1 and 0 <= j <= n");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n));
  for (int i = 0; i <= n; ++i)
    if (i != j) v.push_back(i);
  return DeltaOperator(n, std::move(v));
}

DeltaOperator DeltaOperator::elementary_degeneracy(int n, int j) {
  if (n < 0 || j < 0 || j > n)
    throw std::invalid_argument("elementary_degeneracy: need 0 <= j <= n");
  std::vector<int> v;
  v.reserve(static_cast<size_t>(n) + 2);
  for (int i = 0; i <= n + 1; ++i) v.push_back(i <= j ? std::min(i, j) : i - 1);
  return DeltaOperator(n, std::move(v));
}

DeltaOperator DeltaOperator::vertex(int n, int j) {
  if (n < 0 || j < 0 || j > n)
    throw std::invalid_argument("vertex: need 0 <= j <= n");
  return DeltaOperator(n, {j});
}

bool DeltaOperator::is_injective() const {
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i] <= values_[i - 1]) return false;
  return true;
}

bool DeltaOperator::is_surjective() const {
  // monotone, so surjective iff it starts at 0, ends at target_rank_ and
  // never skips
  if (values_.front() != 0 || values_.back() != target_rank_) return false;
  for (size_t i = 1; i < values_.size(); ++i)
    if (values_[i] - values_[i - 1] > 1) return false;
  return true;
}

bool DeltaOperator::is_identity() const {
  if (source_rank() != target_rank_) return false;
  for (size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string DeltaOperator::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ' ';
    os << values_[i];
  }
  return os.str();
}

OperatorKind classify(const DeltaOperator& op) {
  bool inj = op.is_injective();
  bool sur = op.is_surjective();
  if (inj && sur) return OperatorKind::Identity;
  if (inj) return OperatorKind::Face;
  if (sur) return OperatorKind::Degeneracy;
  return OperatorKind::Mixed;
}

DeltaOperator compose(const DeltaOperator& first, const DeltaOperator& second) {
  if (first.target_rank() != second.source_rank())
    throw std::invalid_argument("compose: rank mismatch ([" + std::to_string(first.source_rank()) +
                                "]->[" + std::to_string(first.target_rank()) + "] then [" +
                                std::to_string(second.source_rank()) + "]->[" +
                                std::to_string(second.target_rank()) + "])");
  std::vector<int> v;
  v.reserve(first.values().size());
  for (int x : first.values()) v.push_back(second(x));
  return DeltaOperator(second.target_rank(), std::move(v));
}

EzFactorization ez_factorize(const DeltaOperator& op) {
  std::vector<int> image;
  std::vector<int> pos;
  pos.reserve(op.values().size());
  for (int x : op.values()) {
    if (image.empty() || image.back() != x) image.push_back(x);
    pos.push_back(static_cast<int>(image.size()) - 1);
  }
  DeltaOperator mono(op.target_rank(), std::move(image));
  DeltaOperator epi(mono.source_rank(), std::move(pos));
  return {mono, epi};
}

DeltaOperator minimal_section(const DeltaOperator& rho) {
  if (!rho.is_surjective())
    throw std::invalid_argument("minimal_section: operator is not a degeneracy");
  std::vector<int> v(static_cast<size_t>(rho.target_rank()) + 1, -1);
  for (int i = rho.source_rank(); i >= 0; --i) v[static_cast<size_t>(rho(i))] = i;
  return DeltaOperator(rho.source_rank(), std::move(v));
}

DeltaOperator partition_to_degeneracy(const IntervalPartition& p) {
  if (p.rank < 0 || p.block_of.size() != static_cast<size_t>(p.rank) + 1)
    throw std::invalid_argument("partition_to_degeneracy: block list does not match rank");
  if (p.block_of.front() != 0)
    throw std::invalid_argument("partition_to_degeneracy: first block must be 0");
  for (size_t i = 1; i < p.block_of.size(); ++i) {
    int step = p.block_of[i] - p.block_of[i - 1];
    if (step != 0 && step != 1)
      throw std::invalid_argument("partition_to_degeneracy: blocks must be consecutive intervals");
  }
  return DeltaOperator(p.block_of.back(), p.block_of);
}

IntervalPartition degeneracy_to_partition(const DeltaOperator& rho) {
  if (!rho.is_surjective())
    throw std::invalid_argument("degeneracy_to_partition: operator is not a degeneracy");
  return IntervalPartition{rho.source_rank(), rho.values()};
}

namespace {

void enum_monotone(int m, int n, int min_value, bool strict, std::vector<int>& cur,
                   std::vector<DeltaOperator>& out) {
  if (static_cast<int>(cur.size()) == m + 1) {
    out.emplace_back(n, cur);
    return;
  }
  for (int v = min_value; v <= n; ++v) {
    cur.push_back(v);
    enum_monotone(m, n, strict ? v + 1 : v, strict, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<DeltaOperator> all_operators(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("all_operators: negative rank");
  std::vector<DeltaOperator> out;
  std::vector<int> cur;
  enum_monotone(m, n, 0, false, cur, out);
  return out;
}

std::vector<DeltaOperator> all_monos(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("all_monos: negative rank");
  std::vector<DeltaOperator> out;
  if (m > n) return out;
  std::vector<int> cur;
  enum_monotone(m, n, 0, true, cur, out);
  // strict enumeration can overshoot: drop sequences that ran out of room
  // (enum_monotone already never emits them since values stay <= n)
  return out;
}

std::vector<DeltaOperator> all_epis(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("all_epis: negative rank");
  std::vector<DeltaOperator> out;
  if (n > m) return out;
  for (DeltaOperator& op : all_operators(m, n))
    if (op.is_surjective()) out.push_back(std::move(op));
  return out;
}

}  // namespace ssk
