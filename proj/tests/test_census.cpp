#include <doctest.h>

#include <algorithm>
#include <map>
#include <vector>

#include "numdiag/census.hpp"

using namespace numdiag;

TEST_CASE("set enumeration counts and order") {
  std::vector<NumericalSet> c2;
  enumerate_sets(2, [&](const NumericalSet& r) { c2.push_back(r); });
  CHECK(c2 == std::vector<NumericalSet>{NumericalSet::ordinary(2)});

  std::vector<NumericalSet> c3;
  enumerate_sets(3, [&](const NumericalSet& r) { c3.push_back(r); });
  CHECK(c3 == std::vector<NumericalSet>{parse_set("0,3"), parse_set("0,1,3")});

  Int count = 0;
  bool found = false;
  enumerate_sets(12, [&](const NumericalSet& r) {
    ++count;
    found = found || r == parse_set("0,4,6,7,9,10,12");
  });
  CHECK(count == 1024);
  CHECK(found);
}

TEST_CASE("set enumeration is duplicate-free with exact conductor") {
  for (Int c = 2; c <= 10; ++c) {
    std::vector<std::string> seen;
    enumerate_sets(c, [&](const NumericalSet& r) {
      CHECK(r.conductor() == c);
      seen.push_back(r.to_literal());
    });
    std::sort(seen.begin(), seen.end());
    CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
  }
}

TEST_CASE("enumeration respects the safety caps") {
  CHECK_THROWS_AS(enumerate_sets(25, [](const NumericalSet&) {}), DomainError);
  CHECK_THROWS_AS(enumerate_sets(1, [](const NumericalSet&) {}), DomainError);
  CHECK_THROWS_AS(enumerate_semigroups(15, [](const NumericalSet&) {}), DomainError);
  CHECK_NOTHROW(enumerate_semigroups(15, [](const NumericalSet&) {}, true));
}

TEST_CASE("semigroup counts by genus match the known ladder") {
  const std::vector<Int> expected{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204};
  for (Int g = 0; g < static_cast<Int>(expected.size()); ++g) {
    Int count = 0;
    enumerate_semigroups(g, [&](const NumericalSet& r) {
      ++count;
      CHECK(is_semigroup(r));
      CHECK(r.genus() == g);
    });
    CHECK(count == expected[static_cast<std::size_t>(g)]);
  }
}

TEST_CASE("genus tree agrees with brute-force filtering") {
  for (Int g = 1; g <= 8; ++g) {
    std::vector<std::string> tree;
    enumerate_semigroups(g, [&](const NumericalSet& r) { tree.push_back(r.to_literal()); });
    std::vector<std::string> brute;
    for (Int c = 2; c <= 2 * g; ++c) {
      enumerate_sets(c, [&](const NumericalSet& r) {
        if (r.genus() == g && is_semigroup(r)) brute.push_back(r.to_literal());
      });
    }
    std::sort(tree.begin(), tree.end());
    std::sort(brute.begin(), brute.end());
    CHECK(tree == brute);
  }
}

TEST_CASE("duality permutes each conductor stratum") {
  for (Int c = 2; c <= 10; ++c) {
    std::vector<std::string> all, duals;
    enumerate_sets(c, [&](const NumericalSet& r) {
      all.push_back(r.to_literal());
      duals.push_back(dual(r).to_literal());
    });
    std::sort(all.begin(), all.end());
    std::sort(duals.begin(), duals.end());
    CHECK(all == duals);
  }
}

TEST_CASE("filtered enumeration") {
  Int symmetric = 0;
  enumerate({EnumKind::Symmetric, BoundType::Conductor, 8}, [&](const NumericalSet& r) {
    ++symmetric;
    CHECK(is_symmetric(r));
  });
  CHECK(symmetric == 1 + 2 + 4 + 8);  // conductors 2, 4, 6, 8 hold 2^(c/2 - 1) each

  enumerate({EnumKind::AlmostSymmetric, BoundType::Genus, 4}, [](const NumericalSet& r) {
    CHECK(is_semigroup(r));
    CHECK(is_almost_symmetric(r));
  });
  CHECK_THROWS_AS(enumerate({EnumKind::Sets, BoundType::Genus, 3}, [](const NumericalSet&) {}),
                  DomainError);
}

TEST_CASE("oracles stay self-consistent") {
  const NumericalSet r = parse_set("0,4,8,12,14,15,16,18,19,20,22");
  CHECK(oracle::gaps(r) == gaps(r));
  CHECK(oracle::is_semigroup(r));
  CHECK(oracle::pseudo_frobenius(r) == std::vector<Int>{10, 11, 21});
  CHECK(oracle::is_almost_symmetric_elementwise(r));
  CHECK(oracle::is_almost_symmetric_pairing(r));
  CHECK_FALSE(oracle::is_symmetric(r));
  CHECK(oracle::is_symmetric(parse_set("0,2,5,6,8,10")));
}

TEST_CASE("theorem ids parse and verify") {
  for (const char* name : {"prop3_2", "lemma4_3", "prop4_5", "prop4_6", "thm5_1",
                           "lemma5_2", "cor5_3", "lemma5_4", "thm5_6", "cor5_9_10",
                           "thm5_11"}) {
    CHECK(theorem_name(parse_theorem(name)) == std::string(name));
  }
  CHECK_THROWS_AS(parse_theorem("thm9_9"), DomainError);

  EnumSpec spec = default_verify_spec(TheoremId::Thm5_1);
  spec.bound = 10;
  const VerifyReport report = verify(TheoremId::Thm5_1, spec);
  CHECK(report.passed());
  CHECK(report.instances > 0);
  CHECK(report.to_json().find("\"theorem\":\"thm5_1\"") != std::string::npos);

  EnumSpec small = default_verify_spec(TheoremId::Lemma4_3);
  small.bound = 5;
  CHECK(verify(TheoremId::Lemma4_3, small).passed());
}
