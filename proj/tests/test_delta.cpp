#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "ssk/delta.hpp"

using namespace ssk;
using namespace ssk::testing;

namespace {

long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

// Every interval partition of {0..rank}, one per subset of the `rank`
// possible cut points.
std::vector<IntervalPartition> all_partitions(int rank) {
  std::vector<IntervalPartition> out;
  for (unsigned cuts = 0; cuts < (1u << rank); ++cuts) {
    IntervalPartition p{rank, {}};
    int block = 0;
    for (int i = 0; i <= rank; ++i) {
      p.block_of.push_back(block);
      if (i < rank && (cuts >> i) & 1u) ++block;
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("operator construction and accessors") {
  DeltaOperator op(2, {0, 0, 2});
  CHECK(op.source_rank() == 2);
  CHECK(op.target_rank() == 2);
  CHECK(op(0) == 0);
  CHECK(op(1) == 0);
  CHECK(op(2) == 2);
  CHECK(op.values() == std::vector<int>{0, 0, 2});
  CHECK(op.str() == "0 0 2");

  CHECK_THROWS_AS(DeltaOperator(2, {1, 0}), std::invalid_argument);   // not monotone
  CHECK_THROWS_AS(DeltaOperator(1, {0, 2}), std::invalid_argument);   // out of range
  CHECK_THROWS_AS(DeltaOperator(1, {-1, 0}), std::invalid_argument);  // negative
  CHECK_THROWS_AS(DeltaOperator(1, {}), std::invalid_argument);       // empty source
}

TEST_CASE("elementary operators") {
  CHECK(DeltaOperator::identity(2) == DeltaOperator(2, {0, 1, 2}));
  CHECK(DeltaOperator::identity(0) == DeltaOperator(0, {0}));

  // delta_j skips j
  CHECK(DeltaOperator::elementary_face(2, 0) == DeltaOperator(2, {1, 2}));
  CHECK(DeltaOperator::elementary_face(2, 1) == DeltaOperator(2, {0, 2}));
  CHECK(DeltaOperator::elementary_face(2, 2) == DeltaOperator(2, {0, 1}));
  CHECK(DeltaOperator::elementary_face(1, 0) == DeltaOperator(1, {1}));

  // sigma_j hits j twice
  CHECK(DeltaOperator::elementary_degeneracy(1, 0) == DeltaOperator(1, {0, 0, 1}));
  CHECK(DeltaOperator::elementary_degeneracy(1, 1) == DeltaOperator(1, {0, 1, 1}));
  CHECK(DeltaOperator::elementary_degeneracy(0, 0) == DeltaOperator(0, {0, 0}));

  CHECK(DeltaOperator::vertex(3, 2) == DeltaOperator(3, {2}));
}

TEST_CASE("classification") {
  CHECK(classify(DeltaOperator::identity(3)) == OperatorKind::Identity);
  CHECK(classify(DeltaOperator::elementary_face(2, 1)) == OperatorKind::Face);
  CHECK(classify(DeltaOperator::elementary_degeneracy(2, 0)) == OperatorKind::Degeneracy);
  CHECK(classify(DeltaOperator(1, {0, 0})) == OperatorKind::Mixed);
  CHECK(classify(DeltaOperator(3, {0, 0, 2})) == OperatorKind::Mixed);
  CHECK(classify(DeltaOperator::vertex(2, 1)) == OperatorKind::Face);
  CHECK(classify(DeltaOperator::vertex(0, 0)) == OperatorKind::Identity);

  CHECK(DeltaOperator::identity(2).is_injective());
  CHECK(DeltaOperator::identity(2).is_surjective());
  CHECK_FALSE(DeltaOperator(2, {0, 0, 1}).is_injective());
  CHECK_FALSE(DeltaOperator(2, {0, 1}).is_surjective());
}

TEST_CASE("composition in diagram order") {
  // first delta_0 : [0] -> [1], then sigma_0 : [1] -> [0] gives the identity
  CHECK(compose(DeltaOperator::elementary_face(1, 0), DeltaOperator::elementary_degeneracy(0, 0)) ==
        DeltaOperator::identity(0));
  // first delta_2 : [1] -> [2], then sigma_0 : [2] -> [1] gives the mixed (0 0)
  CHECK(compose(DeltaOperator::elementary_face(2, 2), DeltaOperator::elementary_degeneracy(1, 0)) ==
        DeltaOperator(1, {0, 0}));
  // rank mismatch is rejected
  CHECK_THROWS_AS(compose(DeltaOperator::identity(1), DeltaOperator::identity(2)),
                  std::invalid_argument);
}

TEST_CASE("simplicial operator identities") {
  for (int n = 1; n <= 5; ++n) {
    // faces: delta_i then delta_j equals delta_{j-1} then delta_i for i < j
    if (n >= 2)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          CHECK(compose(DeltaOperator::elementary_face(n - 1, i),
                        DeltaOperator::elementary_face(n, j)) ==
                compose(DeltaOperator::elementary_face(n - 1, j - 1),
                        DeltaOperator::elementary_face(n, i)));
    // degeneracies: sigma_j then sigma_i equals sigma_{i+1} then sigma_j for
    // j <= i, and sigma_{j-1} then sigma_i for j > i
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n - 1; ++i) {
        DeltaOperator lhs = compose(DeltaOperator::elementary_degeneracy(n, j),
                                    DeltaOperator::elementary_degeneracy(n - 1, i));
        if (j <= i)
          CHECK(lhs == compose(DeltaOperator::elementary_degeneracy(n, i + 1),
                               DeltaOperator::elementary_degeneracy(n - 1, j)));
        else
          CHECK(lhs == compose(DeltaOperator::elementary_degeneracy(n, i),
                               DeltaOperator::elementary_degeneracy(n - 1, j - 1)));
      }
  }
}

TEST_CASE("composition is associative and unital") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (int d = 0; d <= 2; ++d)
          for (const DeltaOperator& f : all_operators(a, b))
            for (const DeltaOperator& g : all_operators(b, c)) {
              CHECK(compose(DeltaOperator::identity(a), f) == f);
              CHECK(compose(f, DeltaOperator::identity(b)) == f);
              for (const DeltaOperator& h : all_operators(c, d))
                CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
            }
}

TEST_CASE("epi-mono factorization on examples") {
  EzFactorization f = ez_factorize(DeltaOperator(2, {0, 0, 2}));
  CHECK(f.mono == DeltaOperator(2, {0, 2}));
  CHECK(f.epi == DeltaOperator(1, {0, 0, 1}));
  CHECK(compose(f.epi, f.mono) == DeltaOperator(2, {0, 0, 2}));

  EzFactorization id = ez_factorize(DeltaOperator::identity(3));
  CHECK(id.mono == DeltaOperator::identity(3));
  CHECK(id.epi == DeltaOperator::identity(3));

  EzFactorization face = ez_factorize(DeltaOperator::elementary_face(3, 1));
  CHECK(face.mono == DeltaOperator::elementary_face(3, 1));
  CHECK(face.epi == DeltaOperator::identity(2));

  EzFactorization degen = ez_factorize(DeltaOperator::elementary_degeneracy(2, 1));
  CHECK(degen.mono == DeltaOperator::identity(2));
  CHECK(degen.epi == DeltaOperator::elementary_degeneracy(2, 1));
}

TEST_CASE("epi-mono factorization is the unique one, exhaustively") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const DeltaOperator& op : all_operators(m, n)) {
        std::vector<EzFactorization> all = ez_all_factorizations(op);
        REQUIRE(all.size() == 1);
        EzFactorization f = ez_factorize(op);
        CHECK(f.mono == all[0].mono);
        CHECK(f.epi == all[0].epi);
        CHECK(f.mono.is_injective());
        CHECK(f.epi.is_surjective());
        CHECK(compose(f.epi, f.mono) == op);
      }
}

TEST_CASE("minimal section of a degeneracy") {
  CHECK(minimal_section(DeltaOperator::elementary_degeneracy(0, 0)) == DeltaOperator(1, {0}));
  CHECK(minimal_section(DeltaOperator(1, {0, 0, 1, 1})) == DeltaOperator(3, {0, 2}));
  CHECK(minimal_section(DeltaOperator::identity(2)) == DeltaOperator::identity(2));
  CHECK_THROWS_AS(minimal_section(DeltaOperator(2, {0, 1})), std::invalid_argument);  // not an epi

  for (int m = 0; m <= 6; ++m)
    for (int r = 0; r <= m; ++r)
      for (const DeltaOperator& rho : all_epis(m, r)) {
        DeltaOperator s = minimal_section(rho);
        CHECK(s.is_injective());
        CHECK(compose(s, rho) == DeltaOperator::identity(r));
        // pointwise least among all sections
        for (const DeltaOperator& mu : all_monos(r, m))
          if (compose(mu, rho) == DeltaOperator::identity(r))
            for (int j = 0; j <= r; ++j) CHECK(s(j) <= mu(j));
      }
}

TEST_CASE("interval partitions correspond to degeneracies") {
  IntervalPartition two_blocks{2, {0, 0, 1}};
  CHECK(two_blocks.num_blocks() == 2);
  CHECK(partition_to_degeneracy(two_blocks) == DeltaOperator(1, {0, 0, 1}));
  CHECK(degeneracy_to_partition(DeltaOperator(1, {0, 0, 1})) == two_blocks);

  for (int m = 0; m <= 6; ++m) {
    for (int r = 0; r <= m; ++r)
      for (const DeltaOperator& rho : all_epis(m, r))
        CHECK(partition_to_degeneracy(degeneracy_to_partition(rho)) == rho);
    for (const IntervalPartition& p : all_partitions(m))
      CHECK(degeneracy_to_partition(partition_to_degeneracy(p)) == p);
  }
}

TEST_CASE("exhaustive enumerations are complete, sorted and duplicate-free") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      std::vector<DeltaOperator> ops = all_operators(m, n);
      CHECK(static_cast<long long>(ops.size()) == binomial(m + n + 1, m + 1));
      CHECK(std::is_sorted(ops.begin(), ops.end()));
      CHECK(std::adjacent_find(ops.begin(), ops.end()) == ops.end());

      std::vector<DeltaOperator> monos = all_monos(m, n);
      CHECK(static_cast<long long>(monos.size()) == binomial(n + 1, m + 1));
      for (const DeltaOperator& mu : monos) CHECK(mu.is_injective());

      std::vector<DeltaOperator> epis = all_epis(m, n);
      CHECK(static_cast<long long>(epis.size()) == binomial(m, n));
      for (const DeltaOperator& rho : epis) CHECK(rho.is_surjective());

      // monos and epis are exactly the injective / surjective operators
      long long inj = 0, surj = 0;
      for (const DeltaOperator& op : ops) {
        if (op.is_injective()) ++inj;
        if (op.is_surjective()) ++surj;
      }
      CHECK(inj == static_cast<long long>(monos.size()));
      CHECK(surj == static_cast<long long>(epis.size()));
    }
}
