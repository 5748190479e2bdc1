// Acceptance gate: one pass/fail line per criterion, nonzero exit on any
// failure. Criterion 8 shells out to the CLI binary for byte-exact goldens.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "numdiag/census.hpp"
#include "numdiag/decompose.hpp"
#include "numdiag/diagrams.hpp"
#include "numdiag/sums.hpp"

using namespace numdiag;

namespace {

int failures_total = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << label;
  if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
  std::cout << '\n';
  if (!ok) ++failures_total;
}

bool criterion_worked_examples(std::string& detail) {
  const NumericalSet ex = parse_set("0,4,6,7,9,10,12");
  if (gaps(ex) != std::vector<Int>{1, 2, 3, 5, 8, 11} || frobenius(ex) != 11 ||
      conductor(ex) != 12 || genus(ex) != 6) {
    detail = "base invariants";
    return false;
  }
  const Partition p = make_partition({6, 4, 2, 1, 1, 1});
  if (partition_of(ex) != p || numerical_set_of(p) != ex) {
    detail = "set/partition bijection";
    return false;
  }
  const HookGrid expected{{{11, 7, 5, 4, 2, 1}, {8, 4, 2, 1}, {5, 1}, {3}, {2}, {1}}};
  if (hook_grid(ex) != expected) {
    detail = "hook grid";
    return false;
  }
  const Partition y = make_partition({4, 2, 1});
  const Partition x = make_partition({4, 3, 1});
  if (sum_partitions(y, x, SumKind::Bonded) != make_partition({8, 7, 5, 2, 1}) ||
      sum_partitions(y, x, SumKind::EndToEnd) != make_partition({8, 7, 5, 4, 2, 1})) {
    detail = "partition sums";
    return false;
  }
  if (sum_sets(parse_set("0,2,4"), NumericalSet::ordinary(2), SumKind::Bonded) !=
          parse_set("0,2,3,5") ||
      sum_sets(NumericalSet::ordinary(2), NumericalSet::ordinary(3), SumKind::EndToEnd) !=
          parse_set("0,2,5") ||
      sum_sets(parse_set("0,2,4"), NumericalSet::ordinary(2), SumKind::Conjoint) !=
          parse_set("0,2,5") ||
      is_semigroup(parse_set("0,2,3,5")) || is_semigroup(parse_set("0,2,5"))) {
    detail = "non-closure counterexamples";
    return false;
  }
  const Decomposition d53 = decompose_symmetric(parse_set("0,2,5,6,8,10"));
  if (d53.s != parse_set("0,2,5") ||
      d53.kinds != std::vector<SumKind>{SumKind::Conjoint, SumKind::Bonded}) {
    detail = "symmetric decomposition, half hit";
    return false;
  }
  const Decomposition d54 = decompose_symmetric(parse_set("0,2,5,7,8,10,12"));
  if (d54.s != parse_set("0,2,6") ||
      d54.kinds != std::vector<SumKind>{SumKind::Bonded, SumKind::Conjoint}) {
    detail = "symmetric decomposition, half miss";
    return false;
  }
  const NumericalSet r57 = parse_set("0,4,8,12,14,15,16,18,19,20,22");
  const Decomposition d57 = decompose_almost_symmetric(r57);
  if (pseudo_frobenius(r57) != std::vector<Int>{10, 11, 21} ||
      d57.s != parse_set("0,4,8,10") || d57.middle != NumericalSet::ordinary(4)) {
    detail = "almost symmetric, type 3";
    return false;
  }
  const NumericalSet r58 = parse_set("0,7,9,14,16,17,18,19,20,21,23");
  const Decomposition d58 = decompose_almost_symmetric(r58);
  if (pseudo_frobenius(r58) != std::vector<Int>{10, 11, 12, 22} ||
      d58.s != parse_set("0,7,10") || d58.middle != NumericalSet::ordinary(5)) {
    detail = "almost symmetric, type 4";
    return false;
  }
  return true;
}

bool criterion_bijection(std::string& detail) {
  Int total = 0;
  bool ok = true;
  for (Int c = 2; c <= 14 && ok; ++c) {
    enumerate_sets(c, [&](const NumericalSet& r) {
      ++total;
      if (numerical_set_of(partition_of(r)) != r) {
        ok = false;
        detail = r.to_literal();
      }
    });
  }
  if (ok && total != 8191) {
    ok = false;
    detail = "count " + std::to_string(total);
  }
  return ok;
}

bool verify_clean(TheoremId id, Int bound, std::string& detail) {
  EnumSpec spec = default_verify_spec(id);
  spec.bound = bound;
  const VerifyReport rep = verify(id, spec);
  if (!rep.passed()) {
    detail = std::string(theorem_name(id)) + ": " + rep.failures.front() + " (+" +
             std::to_string(rep.failures.size() - 1) + " more)";
  }
  return rep.passed();
}

bool criterion_hook_equivalence(std::string& detail) {
  return verify_clean(TheoremId::Prop3_2, 14, detail);
}

bool criterion_gap_and_duality(std::string& detail) {
  return verify_clean(TheoremId::Lemma4_3, 8, detail) &&
         verify_clean(TheoremId::Prop4_6, 8, detail);
}

bool criterion_symmetric(std::string& detail) {
  return verify_clean(TheoremId::Thm5_1, 16, detail) &&
         verify_clean(TheoremId::Lemma5_2, 8, detail) &&
         verify_clean(TheoremId::Cor5_3, 16, detail);
}

bool criterion_almost_symmetric(std::string& detail) {
  // two independent enumerations of semigroups by genus must agree
  std::map<Int, Int> by_filter;
  for (Int c = 2; c <= 24; ++c) {
    enumerate_sets(c, [&](const NumericalSet& r) {
      if (r.genus() <= 12 && is_semigroup(r)) ++by_filter[r.genus()];
    });
  }
  for (Int g = 1; g <= 12; ++g) {
    Int tree = 0;
    enumerate_semigroups(g, [&](const NumericalSet&) { ++tree; });
    if (tree != by_filter[g]) {
      detail = "genus " + std::to_string(g) + " counts " + std::to_string(tree) +
               " vs " + std::to_string(by_filter[g]);
      return false;
    }
  }
  return verify_clean(TheoremId::Lemma5_4, 12, detail) &&
         verify_clean(TheoremId::Thm5_6, 12, detail) &&
         verify_clean(TheoremId::Cor5_9_10, 12, detail);
}

bool criterion_closure_conditions(std::string& detail) {
  return verify_clean(TheoremId::Thm5_11, 12, detail);
}

std::string run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_BINARY_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, got);
  pclose(pipe);
  return out;
}

bool criterion_cli_goldens(std::string& detail) {
  const std::vector<std::pair<std::string, std::string>> goldens = {
      {"analyze 0,4,6,7,9,10,12",
       "set: {0,4,6,7,9,10,12,->}\n"
       "gaps: 1,2,3,5,8,11\n"
       "genus: 6\n"
       "frobenius: 11\n"
       "conductor: 12\n"
       "semigroup: no\n"
       "symmetric: no\n"
       "pseudo_symmetric: no\n"
       "almost_symmetric: no\n"},
      {"decompose 0,4,8,12,14,15,16,18,19,20,22",
       "R = S \u229e_C {0,4,\u2192} \u229e_B S*\n"
       "S = 0,4,8,10\n"
       "middle = 0,4\n"
       "kinds = conjoint,bonded\n"
       "verified = yes\n"},
      {"convert [6,4,2,1,1,1]", "0,4,6,7,9,10,12\n"},
      {"convert 0,4,6,7,9,10,12", "[6,4,2,1,1,1]\n"},
      {"render 0,4,6,7,9,10,12 --format hooks",
       "\\ytableaushort{{11}75421,8421,51,3,2,1}*{6,4,2,1,1,1}\n"},
      {"dual 0,4,6,7,9,10,12", "0,3,6,8,9,10,12\n"},
  };
  for (const auto& [args, expected] : goldens) {
    const std::string got = run_cli(args);
    if (got != expected) {
      detail = args + " -> " + got;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"worked-example suite", criterion_worked_examples},
      {"set/partition bijection, conductor <= 14", criterion_bijection},
      {"hook criterion equals closure, conductor <= 14", criterion_hook_equivalence},
      {"gap formulas and duality laws, conductors <= 8", criterion_gap_and_duality},
      {"symmetric decomposition and composition", criterion_symmetric},
      {"almost symmetric suite, genus <= 12", criterion_almost_symmetric},
      {"closure conditions equivalence, conductor <= 12", criterion_closure_conditions},
      {"CLI goldens", criterion_cli_goldens},
  };
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].second(detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    report(static_cast<int>(i) + 1, criteria[i].first, ok, detail);
  }
  return failures_total == 0 ? 0 : 1;
}
