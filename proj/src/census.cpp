#include "numdiag/census.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include <json.hpp>

#include "numdiag/decompose.hpp"
#include "numdiag/diagrams.hpp"
#include "numdiag/sums.hpp"

namespace numdiag {

namespace oracle {

namespace {

/// Membership predicate over all integers, backed by an explicit vector on
/// [0, limit) and the co-finality rule above it.
struct Membership {
  std::vector<bool> mem;
  Int limit;

  explicit Membership(const NumericalSet& r) {
    limit = 3 * r.conductor() + 3;
    mem.assign(static_cast<std::size_t>(limit), false);
    for (Int x : r.small_elements()) mem[static_cast<std::size_t>(x)] = true;
    for (Int x = r.conductor(); x < limit; ++x) mem[static_cast<std::size_t>(x)] = true;
  }

  bool operator()(Int x) const {
    if (x < 0) return false;
    if (x >= limit) return true;
    return mem[static_cast<std::size_t>(x)];
  }
};

}  // namespace

std::vector<Int> gaps(const NumericalSet& r) {
  const Membership in(r);
  std::vector<Int> out;
  for (Int x = 0; x < r.conductor(); ++x) {
    if (!in(x)) out.push_back(x);
  }
  return out;
}

bool is_semigroup(const NumericalSet& r) {
  const Membership in(r);
  const Int co = r.conductor();
  for (Int a = 1; a <= 2 * co; ++a) {
    if (!in(a)) continue;
    for (Int b = a; b <= 2 * co; ++b) {
      if (in(b) && !in(a + b)) return false;
    }
  }
  return true;
}

bool is_symmetric(const NumericalSet& r) {
  const Membership in(r);
  const Int f = r.frobenius();
  for (Int a = 0; a <= f; ++a) {
    if (in(a) == in(f - a)) return false;
  }
  return true;
}

NumericalSet dual(const NumericalSet& r) {
  const Membership in(r);
  const Int f = r.frobenius();
  std::vector<Int> small;
  for (Int x = 0; x <= f; ++x) {
    if (!in(f - x)) small.push_back(x);
  }
  small.push_back(r.conductor());
  return NumericalSet::from_small_elements(small);
}

std::vector<Int> pseudo_frobenius(const NumericalSet& r) {
  const Membership in(r);
  const Int co = r.conductor();
  std::vector<Int> out;
  for (Int z = -2 * co; z < co; ++z) {
    if (in(z)) continue;
    bool ok = true;
    for (Int e = 1; e <= 2 * co && ok; ++e) {
      if (in(e)) ok = in(z + e);
    }
    if (ok) out.push_back(z);
  }
  return out;
}

bool is_almost_symmetric_elementwise(const NumericalSet& r) {
  const Membership in(r);
  const Int f = r.frobenius();
  const std::vector<Int> pf = oracle::pseudo_frobenius(r);
  for (Int z = 0; z < r.conductor(); ++z) {
    if (in(z)) continue;
    const bool in_pf = std::find(pf.begin(), pf.end(), z) != pf.end();
    if (!in_pf && !in(f - z)) return false;
  }
  return true;
}

bool is_almost_symmetric_pairing(const NumericalSet& r) {
  const std::vector<Int> pf = oracle::pseudo_frobenius(r);
  const Int t = static_cast<Int>(pf.size());
  for (Int i = 1; i <= t - 1; ++i) {
    if (pf[static_cast<std::size_t>(i - 1)] + pf[static_cast<std::size_t>(t - i - 1)] !=
        pf[static_cast<std::size_t>(t - 1)]) {
      return false;
    }
  }
  return true;
}

}  // namespace oracle

void enumerate_sets(Int conductor, const SetVisitor& visit, bool override_cap) {
  if (conductor < 2) {
    throw DomainError(ErrorCode::PreconditionFailed, "conductor bound must be >= 2");
  }
  if (conductor > kConductorCap && !override_cap) {
    throw DomainError(ErrorCode::BoundTooLarge, "conductor cap is 24");
  }
  const Int free_slots = conductor - 2;  // elements 1..c-2; c-1 is the Frobenius
  const std::uint64_t total = std::uint64_t{1} << free_slots;
  std::vector<Int> small;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    small.clear();
    small.push_back(0);
    for (Int b = 0; b < free_slots; ++b) {
      if (mask & (std::uint64_t{1} << b)) small.push_back(b + 1);
    }
    small.push_back(conductor);
    visit(NumericalSet::from_small_elements(small, /*strict=*/true));
  }
}

namespace {

void semigroup_children(const NumericalSet& s, const SetVisitor& visit) {
  if (!s.is_proper()) {
    visit(NumericalSet::ordinary(2));  // N_0 minus its sole generator 1
    return;
  }
  const Int f = s.frobenius();
  const Int co = s.conductor();
  for (Int x : minimal_generators(s)) {
    if (x <= f) continue;
    std::vector<Int> small;
    for (Int e : s.small_elements()) {
      if (e < co || e < x) small.push_back(e);
    }
    for (Int e = co; e < x; ++e) {
      if (e > small.back()) small.push_back(e);
    }
    small.push_back(x + 1);
    visit(NumericalSet::from_small_elements(small));
  }
}

void genus_walk(const NumericalSet& s, Int depth, Int target, const SetVisitor& visit) {
  if (depth == target) {
    visit(s);
    return;
  }
  semigroup_children(s, [&](const NumericalSet& child) {
    genus_walk(child, depth + 1, target, visit);
  });
}

}  // namespace

void enumerate_semigroups(Int genus, const SetVisitor& visit, bool override_cap) {
  if (genus < 0) {
    throw DomainError(ErrorCode::PreconditionFailed, "genus bound must be >= 0");
  }
  if (genus > kGenusCap && !override_cap) {
    throw DomainError(ErrorCode::BoundTooLarge, "genus cap is 14");
  }
  genus_walk(NumericalSet::naturals(), 0, genus, visit);
}

void enumerate(const EnumSpec& spec, const SetVisitor& visit) {
  const bool genus_bound = spec.bound_type == BoundType::Genus;
  if (genus_bound && (spec.kind == EnumKind::Sets || spec.kind == EnumKind::Symmetric)) {
    throw DomainError(ErrorCode::PreconditionFailed,
                      "sets are enumerated by conductor, not genus");
  }
  auto filtered = [&](const NumericalSet& r) {
    switch (spec.kind) {
      case EnumKind::Sets:
        visit(r);
        break;
      case EnumKind::Symmetric:
        if (is_symmetric(r)) visit(r);
        break;
      case EnumKind::Semigroups:
        if (is_semigroup(r)) visit(r);
        break;
      case EnumKind::AlmostSymmetric:
        if (r.is_proper() && is_semigroup(r) && is_almost_symmetric(r)) visit(r);
        break;
    }
  };
  if (genus_bound) {
    for (Int g = 0; g <= spec.bound; ++g) {
      enumerate_semigroups(g, filtered, spec.override_cap);
    }
  } else {
    for (Int c = 2; c <= spec.bound; ++c) {
      enumerate_sets(c, filtered, spec.override_cap);
    }
  }
}

TheoremId parse_theorem(const std::string& name) {
  if (name == "prop3_2") return TheoremId::Prop3_2;
  if (name == "lemma4_3") return TheoremId::Lemma4_3;
  if (name == "prop4_5") return TheoremId::Prop4_5;
  if (name == "prop4_6") return TheoremId::Prop4_6;
  if (name == "thm5_1") return TheoremId::Thm5_1;
  if (name == "lemma5_2") return TheoremId::Lemma5_2;
  if (name == "cor5_3") return TheoremId::Cor5_3;
  if (name == "lemma5_4") return TheoremId::Lemma5_4;
  if (name == "thm5_6") return TheoremId::Thm5_6;
  if (name == "cor5_9_10") return TheoremId::Cor5_9_10;
  if (name == "thm5_11") return TheoremId::Thm5_11;
  throw DomainError(ErrorCode::UnknownTheorem, name);
}

const char* theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Prop3_2: return "prop3_2";
    case TheoremId::Lemma4_3: return "lemma4_3";
    case TheoremId::Prop4_5: return "prop4_5";
    case TheoremId::Prop4_6: return "prop4_6";
    case TheoremId::Thm5_1: return "thm5_1";
    case TheoremId::Lemma5_2: return "lemma5_2";
    case TheoremId::Cor5_3: return "cor5_3";
    case TheoremId::Lemma5_4: return "lemma5_4";
    case TheoremId::Thm5_6: return "thm5_6";
    case TheoremId::Cor5_9_10: return "cor5_9_10";
    case TheoremId::Thm5_11: return "thm5_11";
  }
  return "?";
}

EnumSpec default_verify_spec(TheoremId id) {
  switch (id) {
    case TheoremId::Prop3_2: return {EnumKind::Sets, BoundType::Conductor, 14};
    case TheoremId::Lemma4_3: return {EnumKind::Sets, BoundType::Conductor, 8};
    case TheoremId::Prop4_5: return {EnumKind::Sets, BoundType::Conductor, 7};
    case TheoremId::Prop4_6: return {EnumKind::Sets, BoundType::Conductor, 8};
    case TheoremId::Thm5_1: return {EnumKind::Symmetric, BoundType::Conductor, 16};
    case TheoremId::Lemma5_2: return {EnumKind::Sets, BoundType::Conductor, 8};
    case TheoremId::Cor5_3: return {EnumKind::Symmetric, BoundType::Conductor, 16};
    case TheoremId::Lemma5_4: return {EnumKind::AlmostSymmetric, BoundType::Genus, 12};
    case TheoremId::Thm5_6: return {EnumKind::AlmostSymmetric, BoundType::Genus, 12};
    case TheoremId::Cor5_9_10: return {EnumKind::AlmostSymmetric, BoundType::Genus, 12};
    case TheoremId::Thm5_11: return {EnumKind::Semigroups, BoundType::Conductor, 12};
  }
  return {};
}

std::string VerifyReport::to_json() const {
  nlohmann::ordered_json obj;
  obj["theorem"] = theorem_name(theorem);
  obj["instances"] = instances;
  obj["failures"] = failures;
  obj["elapsed_ms"] = elapsed_ms;
  return obj.dump();
}

namespace {

using Check = std::function<void(const NumericalSet&)>;

void for_pairs(Int cmax, bool override_cap,
               const std::function<void(const NumericalSet&, const NumericalSet&)>& fn) {
  std::vector<NumericalSet> all;
  for (Int c = 2; c <= cmax; ++c) {
    enumerate_sets(c, [&](const NumericalSet& r) { all.push_back(r); }, override_cap);
  }
  for (const auto& r : all) {
    for (const auto& s : all) fn(r, s);
  }
}

std::string pair_label(const NumericalSet& r, const NumericalSet& s, const char* tag) {
  return r.to_literal() + " | " + s.to_literal() + " | " + tag;
}

bool in_theorem_5_6_population(const NumericalSet& r, PFBlockInfo& block_out) {
  if (!r.is_proper() || type(r) < 2) return false;
  try {
    block_out = pf_block(r);
  } catch (const DomainError&) {
    return false;  // block split: outside the hypothesis
  }
  if (!block_out.consecutive) return false;
  return r != NumericalSet::ordinary(block_out.type + 1);
}

}  // namespace

VerifyReport verify(TheoremId id, const EnumSpec& spec) {
  VerifyReport report;
  report.theorem = id;
  const auto start = std::chrono::steady_clock::now();

  auto fail = [&](const std::string& label) { report.failures.push_back(label); };
  auto count = [&]() { ++report.instances; };

  switch (id) {
    case TheoremId::Prop3_2: {
      EnumSpec sets = spec;
      sets.kind = EnumKind::Sets;
      enumerate(sets, [&](const NumericalSet& r) {
        count();
        const bool hooks = is_semigroup_via_hooks(r);
        const bool closure = is_semigroup(r);
        const bool naive = oracle::is_semigroup(r);
        // Union form: semigroup iff the column hook sets cover exactly G(R).
        std::vector<Int> un;
        for (Int i = 0; i < r.element_count(); ++i) {
          for (Int h : column_hook_set(r, i)) un.push_back(h);
        }
        std::sort(un.begin(), un.end());
        un.erase(std::unique(un.begin(), un.end()), un.end());
        const bool union_form = un == gaps(r);
        if (hooks != closure || hooks != naive || hooks != union_form) {
          fail(r.to_literal());
        }
      });
      break;
    }

    case TheoremId::Lemma4_3: {
      auto check = [&](const NumericalSet& r, const NumericalSet& s) {
        for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
          count();
          if (sum_gaps(r, s, k) != oracle::gaps(sum_sets(r, s, k))) {
            fail(pair_label(r, s, sum_kind_name(k)));
          }
        }
      };
      for_pairs(spec.bound, spec.override_cap, check);
      for (Int c = 2; c <= spec.bound; ++c) {
        enumerate_sets(c, [&](const NumericalSet& r) {
          check(r, NumericalSet::naturals());
        }, spec.override_cap);
      }
      break;
    }

    case TheoremId::Prop4_5: {
      const NumericalSet n0 = NumericalSet::naturals();
      for (Int c = 2; c <= spec.bound; ++c) {
        enumerate_sets(c, [&](const NumericalSet& r) {
          count();
          if (sum_sets(r, n0, SumKind::EndToEnd) != r ||
              sum_sets(n0, r, SumKind::EndToEnd) != r) {
            fail(r.to_literal() + " | e2e identity");
          }
        }, spec.override_cap);
      }
      std::vector<NumericalSet> all;
      const Int tmax = std::min<Int>(spec.bound, 7);
      for (Int c = 2; c <= tmax; ++c) {
        enumerate_sets(c, [&](const NumericalSet& r) { all.push_back(r); }, spec.override_cap);
      }
      for (const auto& a : all) {
        for (const auto& b : all) {
          for (const auto& c : all) {
            for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
              count();
              if (sum_sets(sum_sets(a, b, k), c, k) != sum_sets(a, sum_sets(b, c, k), k)) {
                fail(a.to_literal() + " | " + b.to_literal() + " | " + c.to_literal() +
                     " | " + sum_kind_name(k));
              }
            }
          }
        }
      }
      break;
    }

    case TheoremId::Prop4_6: {
      for_pairs(spec.bound, spec.override_cap, [&](const NumericalSet& r, const NumericalSet& s) {
        for (SumKind k : {SumKind::Bonded, SumKind::EndToEnd, SumKind::Conjoint}) {
          count();
          const auto [lhs, rhs] = dual_law(r, s, k);
          if (lhs != rhs) fail(pair_label(r, s, sum_kind_name(k)));
        }
      });
      break;
    }

    case TheoremId::Thm5_1: {
      EnumSpec sym = spec;
      sym.kind = EnumKind::Symmetric;
      enumerate(sym, [&](const NumericalSet& r) {
        if (r == NumericalSet::ordinary(2)) return;
        count();
        try {
          const Decomposition d = decompose_symmetric(r);
          const bool case1 = r.contains(r.conductor() / 2);
          const bool chose_cb = d.kinds.front() == SumKind::Conjoint;
          if (d.reconstructed != r || case1 != chose_cb) fail(r.to_literal());
        } catch (const DomainError& e) {
          fail(r.to_literal() + " | " + e.name());
        }
      });
      break;
    }

    case TheoremId::Lemma5_2: {
      EnumSpec sets = spec;
      sets.kind = EnumKind::Sets;
      enumerate(sets, [&](const NumericalSet& s) {
        for (ComposeVariant v : {ComposeVariant::CB, ComposeVariant::BC,
                                 ComposeVariant::CB_dual_first, ComposeVariant::BC_dual_first}) {
          count();
          if (!oracle::is_symmetric(compose_symmetric(s, v))) {
            fail(s.to_literal() + " | variant " + std::to_string(static_cast<int>(v)));
          }
        }
      });
      break;
    }

    case TheoremId::Cor5_3: {
      EnumSpec sym = spec;
      sym.kind = EnumKind::Symmetric;
      enumerate(sym, [&](const NumericalSet& r) {
        if (!is_semigroup(r) || r == NumericalSet::ordinary(2)) return;
        count();
        try {
          const Decomposition d = decompose_symmetric_semigroup(r);
          if (d.reconstructed != r || !oracle::is_semigroup(d.s)) fail(r.to_literal());
        } catch (const DomainError& e) {
          fail(r.to_literal() + " | " + e.name());
        }
      });
      break;
    }

    case TheoremId::Lemma5_4: {
      EnumSpec as = spec;
      as.kind = EnumKind::AlmostSymmetric;
      enumerate(as, [&](const NumericalSet& r) {
        count();
        // The three characterizations of almost symmetry must agree.
        if (!oracle::is_almost_symmetric_elementwise(r) ||
            !oracle::is_almost_symmetric_pairing(r)) {
          fail(r.to_literal() + " | characterization mismatch");
          return;
        }
        PFBlockInfo block;
        if (!in_theorem_5_6_population(r, block)) return;
        const NumericalSet collapsed = collapse(r, block.type);
        if (!oracle::is_symmetric(collapsed) ||
            collapsed.conductor() != r.conductor() - block.type + 1) {
          fail(r.to_literal());
        }
      });
      break;
    }

    case TheoremId::Thm5_6: {
      EnumSpec as = spec;
      as.kind = EnumKind::AlmostSymmetric;
      enumerate(as, [&](const NumericalSet& r) {
        PFBlockInfo block;
        if (!in_theorem_5_6_population(r, block)) return;
        count();
        try {
          const Decomposition d = decompose_almost_symmetric(r);
          if (d.reconstructed != r) fail(r.to_literal());
        } catch (const DomainError& e) {
          fail(r.to_literal() + " | " + e.name());
        }
      });
      break;
    }

    case TheoremId::Cor5_9_10: {
      EnumSpec as = spec;
      as.kind = EnumKind::AlmostSymmetric;
      enumerate(as, [&](const NumericalSet& r) {
        PFBlockInfo block;
        if (!in_theorem_5_6_population(r, block)) return;
        count();
        try {
          const Decomposition d = decompose_almost_symmetric_semigroup(r);
          if (d.reconstructed != r || !oracle::is_semigroup(d.s)) fail(r.to_literal());
        } catch (const DomainError& e) {
          fail(r.to_literal() + " | " + e.name());
        }
      });
      break;
    }

    case TheoremId::Thm5_11: {
      EnumSpec sg = spec;
      sg.kind = EnumKind::Semigroups;
      enumerate(sg, [&](const NumericalSet& r) {
        if (!r.is_proper()) return;
        for (Int t : {3, 4, 5}) {
          for (SumShape shape : {SumShape::CB, SumShape::BC, SumShape::CC}) {
            count();
            const bool predicted = closure_conditions(r, t, shape);
            const bool direct = oracle::is_semigroup(shape_sum(r, t, shape));
            if (predicted != direct) {
              const char* tag = shape == SumShape::CB ? "cb" : shape == SumShape::BC ? "bc" : "cc";
              fail(r.to_literal() + " | t=" + std::to_string(t) + " | " + tag);
            }
          }
        }
      });
      break;
    }
  }

  const auto stop = std::chrono::steady_clock::now();
  report.elapsed_ms = static_cast<Int>(
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
  return report;
}

}  // namespace numdiag
