#include <doctest.h>

#include <vector>

#include "numdiag/census.hpp"
#include "numdiag/sums.hpp"

using namespace numdiag;

namespace {

std::vector<NumericalSet> all_sets(Int cmax) {
  std::vector<NumericalSet> out;
  for (Int c = 2; c <= cmax; ++c) {
    enumerate_sets(c, [&](const NumericalSet& r) { out.push_back(r); });
  }
  return out;
}

const Partition kY = make_partition({4, 2, 1});
const Partition kX = make_partition({4, 3, 1});

}  // namespace

TEST_CASE("kind names round trip") {
  for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
    CHECK(parse_sum_kind(sum_kind_name(k)) == k);
  }
  CHECK_THROWS_AS(parse_sum_kind("direct"), DomainError);
  CHECK(dual_kind(SumKind::Bonded) == SumKind::Conjoint);
  CHECK(dual_kind(SumKind::Conjoint) == SumKind::Bonded);
  CHECK(dual_kind(SumKind::EndToEnd) == SumKind::EndToEnd);
}

TEST_CASE("worked partition sums") {
  CHECK(sum_partitions(kY, kX, SumKind::Bonded) == make_partition({8, 7, 5, 2, 1}));
  CHECK(sum_partitions(kY, kX, SumKind::EndToEnd) == make_partition({8, 7, 5, 4, 2, 1}));
  CHECK(sum_partitions(kY, kX, SumKind::Conjoint) == make_partition({7, 6, 4, 4, 2, 1}));
  CHECK_THROWS_AS(sum_partitions(Partition{}, kX, SumKind::Bonded), DomainError);
}

TEST_CASE("sum closure fails on semigroups") {
  const NumericalSet a = parse_set("0,2,4");
  const NumericalSet b = NumericalSet::ordinary(2);
  const NumericalSet c = NumericalSet::ordinary(3);
  CHECK(sum_sets(a, b, SumKind::Bonded) == parse_set("0,2,3,5"));
  CHECK(sum_sets(b, c, SumKind::EndToEnd) == parse_set("0,2,5"));
  CHECK(sum_sets(a, b, SumKind::Conjoint) == parse_set("0,2,5"));
  CHECK_FALSE(is_semigroup(parse_set("0,2,3,5")));
  CHECK_FALSE(is_semigroup(parse_set("0,2,5")));
}

TEST_CASE("diagram and set sums commute") {
  const auto sets = all_sets(10);
  for (const auto& r : sets) {
    for (const auto& s : sets) {
      for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
        CHECK(partition_of(sum_sets(r, s, k)) ==
              sum_partitions(partition_of(r), partition_of(s), k));
      }
    }
  }
}

TEST_CASE("gap formulas match direct computation") {
  const auto sets = all_sets(10);
  const NumericalSet n0 = NumericalSet::naturals();
  for (const auto& r : sets) {
    for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
      for (const auto& s : sets) {
        CHECK(sum_gaps(r, s, k) == gaps(sum_sets(r, s, k)));
      }
      CHECK(sum_gaps(r, n0, k) == gaps(sum_sets(r, n0, k)));
    }
  }
}

TEST_CASE("full-set operand policy") {
  const NumericalSet r = parse_set("0,2,5");
  const NumericalSet n0 = NumericalSet::naturals();
  CHECK(sum_sets(r, n0, SumKind::Bonded) == parse_set("0,2,4"));
  CHECK(sum_sets(r, n0, SumKind::Conjoint) == parse_set("0,2,4"));
  CHECK(sum_sets(r, n0, SumKind::EndToEnd) == r);
  CHECK(sum_sets(n0, r, SumKind::EndToEnd) == r);
  CHECK(sum_sets(n0, n0, SumKind::EndToEnd) == n0);
  CHECK_THROWS_AS(sum_sets(n0, r, SumKind::Bonded), DomainError);
  CHECK_THROWS_AS(sum_sets(n0, r, SumKind::Conjoint), DomainError);
  // rejected even when r_1 = 1 would make the result a numerical set
  CHECK_THROWS_AS(sum_sets(n0, parse_set("0,1,3"), SumKind::Conjoint), DomainError);
}

TEST_CASE("end-to-end sum is a monoid with identity") {
  for (const auto& r : all_sets(8)) {
    CHECK(sum_sets(r, NumericalSet::naturals(), SumKind::EndToEnd) == r);
    CHECK(sum_sets(NumericalSet::naturals(), r, SumKind::EndToEnd) == r);
  }
}

TEST_CASE("sums are associative") {
  const auto sets = all_sets(5);
  for (const auto& a : sets) {
    for (const auto& b : sets) {
      for (const auto& c : sets) {
        for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
          CHECK(sum_sets(sum_sets(a, b, k), c, k) == sum_sets(a, sum_sets(b, c, k), k));
        }
      }
    }
  }
}

TEST_CASE("fold goes left to right") {
  const std::vector<NumericalSet> ops{parse_set("0,2,5"), NumericalSet::ordinary(2),
                                      parse_set("0,1,3,5")};
  CHECK(sum_fold(ops, SumKind::Bonded) ==
        sum_sets(sum_sets(ops[0], ops[1], SumKind::Bonded), ops[2], SumKind::Bonded));
  CHECK_THROWS_AS(sum_fold(std::span<const NumericalSet>(ops.data(), 1), SumKind::Bonded),
                  DomainError);
}

TEST_CASE("duality laws") {
  const auto sets = all_sets(10);
  for (const auto& r : sets) {
    for (const auto& s : sets) {
      for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
        const auto [lhs, rhs] = dual_law(r, s, k);
        CHECK(lhs == rhs);
      }
    }
  }
  CHECK_THROWS_AS(dual_law(NumericalSet::naturals(), sets.front(), SumKind::Bonded),
                  DomainError);
}

TEST_CASE("end-to-end sum factors through a conjoint-bonded pair") {
  const auto sets = all_sets(6);
  for (const auto& r : sets) {
    for (const auto& s : sets) {
      CHECK(e_sum_factorization_check(r, s));
    }
  }
}

TEST_CASE("conductor and Frobenius of sums") {
  const auto sets = all_sets(7);
  for (const auto& r : sets) {
    for (const auto& s : sets) {
      CHECK(conductor(sum_sets(r, s, SumKind::Conjoint)) ==
            conductor(r) + conductor(s) - 1);
      CHECK(frobenius(sum_sets(r, s, SumKind::Bonded)) == frobenius(r) + frobenius(s));
      CHECK(frobenius(sum_sets(r, s, SumKind::EndToEnd)) ==
            frobenius(r) + frobenius(s) + 1);
    }
  }
}
