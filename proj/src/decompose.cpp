#include "numdiag/decompose.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace numdiag {

namespace {

const char* dual_form_name(DualForm form) {
  return form == DualForm::Dual ? "dual" : "dual_minus_one";
}

const char* kind_symbol(SumKind kind) {
  switch (kind) {
    case SumKind::Bonded: return "⊞_B";
    case SumKind::EndToEnd: return "⊞_E";
    case SumKind::Conjoint: return "⊞_C";
  }
  return "?";
}

NumericalSet apply_dual_form(const NumericalSet& s, DualForm form) {
  return form == DualForm::Dual ? dual(s) : shift_down_dual(s);
}

/// Small elements of r up to and including `limit`, as a new set with
/// conductor `limit`.
NumericalSet prefix_set(const NumericalSet& r, Int limit) {
  std::vector<Int> small;
  for (Int x : r.small_elements()) {
    if (x > limit) break;
    small.push_back(x);
  }
  if (small.back() != limit) small.push_back(limit);
  return NumericalSet::from_small_elements(small);
}

void check_reconstruction(const Decomposition& d, const NumericalSet& r) {
  if (d.reconstructed != r) {
    throw DomainError(ErrorCode::PreconditionFailed,
                      "decomposition did not reproduce the input");
  }
}

}  // namespace

NumericalSet Decomposition::evaluate() const {
  NumericalSet acc = s;
  std::size_t next = 0;
  if (middle) acc = sum_sets(acc, *middle, kinds[next++]);
  return sum_sets(acc, apply_dual_form(s, s_form), kinds[next]);
}

std::string Decomposition::to_json(const NumericalSet& input) const {
  nlohmann::ordered_json obj;
  obj["input"] = input.small_elements();
  obj["S"] = s.small_elements();
  obj["S_form"] = dual_form_name(s_form);
  if (middle) {
    obj["middle"] = middle->small_elements();
  } else {
    obj["middle"] = nullptr;
  }
  std::vector<std::string> names;
  for (SumKind k : kinds) names.emplace_back(sum_kind_name(k));
  obj["kinds"] = names;
  obj["verified"] = (evaluate() == reconstructed);
  return obj.dump();
}

std::string Decomposition::to_human() const {
  std::ostringstream out;
  out << "R = S";
  std::size_t next = 0;
  if (middle) {
    out << ' ' << kind_symbol(kinds[next++]) << ' ' << "{"
        << middle->to_literal() << ",→}";
  }
  out << ' ' << kind_symbol(kinds[next]) << ' '
      << (s_form == DualForm::Dual ? "S*" : "(S*−1)");
  return out.str();
}

Decomposition decompose_symmetric(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_symmetric(r)) throw DomainError(ErrorCode::NotSymmetric);
  if (r == NumericalSet::ordinary(2)) throw DomainError(ErrorCode::ExcludedBaseCase);
  const Int co = r.conductor();
  // Symmetry forces an odd Frobenius, so the conductor halves exactly.
  const Int half = co / 2;
  Decomposition d{r, DualForm::Dual, NumericalSet::ordinary(2), {}, r};
  if (r.contains(half)) {
    d.s = prefix_set(r, half);
    d.kinds = {SumKind::Conjoint, SumKind::Bonded};
  } else {
    if (!r.contains(half - 1)) {
      throw DomainError(ErrorCode::PreconditionFailed, "half-conductor gap pair missing");
    }
    std::vector<Int> small;
    for (Int x : r.small_elements()) {
      if (x >= half - 1) break;
      small.push_back(x);
    }
    small.push_back(half);
    d.s = NumericalSet::from_small_elements(small);
    d.kinds = {SumKind::Bonded, SumKind::Conjoint};
  }
  d.reconstructed = d.evaluate();
  check_reconstruction(d, r);
  return d;
}

NumericalSet compose_symmetric(const NumericalSet& s, ComposeVariant variant) {
  if (!s.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const NumericalSet two = NumericalSet::ordinary(2);
  const NumericalSet d = dual(s);
  switch (variant) {
    case ComposeVariant::CB:
      return sum_sets(sum_sets(s, two, SumKind::Conjoint), d, SumKind::Bonded);
    case ComposeVariant::BC:
      return sum_sets(sum_sets(s, two, SumKind::Bonded), d, SumKind::Conjoint);
    case ComposeVariant::CB_dual_first:
      return sum_sets(sum_sets(d, two, SumKind::Conjoint), s, SumKind::Bonded);
    case ComposeVariant::BC_dual_first:
      return sum_sets(sum_sets(d, two, SumKind::Bonded), s, SumKind::Conjoint);
  }
  throw DomainError(ErrorCode::PreconditionFailed, "bad variant");
}

Decomposition decompose_symmetric_semigroup(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  if (!is_symmetric(r)) throw DomainError(ErrorCode::NotSymmetric);
  if (r == NumericalSet::ordinary(2)) throw DomainError(ErrorCode::ExcludedBaseCase);
  const Int half = r.conductor() / 2;
  Decomposition d{r, DualForm::Dual, std::nullopt, {}, r};
  if (r.contains(half)) {
    d.s = prefix_set(r, half);
    d.kinds = {SumKind::EndToEnd};
  } else {
    // r_k = half - 1 is an element; append r_k + 2 to keep S closed.
    std::vector<Int> small;
    for (Int x : r.small_elements()) {
      if (x > half - 1) break;
      small.push_back(x);
    }
    small.push_back(half + 1);
    d.s = NumericalSet::from_small_elements(small);
    d.s_form = DualForm::DualMinusOne;
    d.kinds = {SumKind::Conjoint};
  }
  if (!is_semigroup(d.s)) {
    throw DomainError(ErrorCode::NotASemigroup, "constructed S is not closed");
  }
  d.reconstructed = d.evaluate();
  check_reconstruction(d, r);
  return d;
}

PFBlockInfo pf_block(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  PFBlockInfo info;
  info.pf = pseudo_frobenius(r);
  info.type = static_cast<Int>(info.pf.size());
  if (info.type < 2) throw DomainError(ErrorCode::TypeTooSmall);
  const Int a_first = info.pf.front();
  const Int a_last = info.pf[static_cast<std::size_t>(info.type) - 2];
  for (Int x = a_first + 1; x < a_last; ++x) {
    if (r.contains(x)) {
      throw DomainError(ErrorCode::BlockSplit,
                        "small element inside the pseudo-Frobenius block");
    }
  }
  const auto& small = r.small_elements();
  for (std::size_t i = 1; i < small.size(); ++i) {
    if (small[i] > a_last) {
      info.lower = small[i - 1];
      info.upper = small[i];
      info.k = static_cast<Int>(i);
      break;
    }
  }
  info.consecutive = true;
  for (Int i = 1; i < info.type - 1; ++i) {
    if (info.pf[static_cast<std::size_t>(i)] != info.pf[static_cast<std::size_t>(i - 1)] + 1) {
      info.consecutive = false;
      break;
    }
  }
  return info;
}

NumericalSet collapse(const NumericalSet& r, Int t) {
  if (t == 1) return r;
  const PFBlockInfo block = pf_block(r);
  if (block.type != t) {
    throw DomainError(ErrorCode::PreconditionFailed, "t does not match type(R)");
  }
  if (!is_almost_symmetric(r)) {
    throw DomainError(ErrorCode::PreconditionFailed, "input is not almost symmetric");
  }
  if (!block.consecutive) {
    throw DomainError(ErrorCode::PreconditionFailed, "pseudo-Frobenius block is not consecutive");
  }
  std::vector<Int> small;
  for (Int x : r.small_elements()) {
    small.push_back(x >= block.upper ? x - t + 1 : x);
  }
  return NumericalSet::from_small_elements(small);
}

namespace {

struct AlmostSymmetricContext {
  PFBlockInfo block;
  NumericalSet collapsed;
  Int half = 0;  // co(R')/2
};

AlmostSymmetricContext almost_symmetric_context(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  if (type(r) < 2) throw DomainError(ErrorCode::TypeTooSmall);
  if (!is_almost_symmetric(r)) throw DomainError(ErrorCode::NotAlmostSymmetric);
  PFBlockInfo block = pf_block(r);
  if (!block.consecutive) throw DomainError(ErrorCode::NonConsecutivePF);
  if (r == NumericalSet::ordinary(block.type + 1)) {
    throw DomainError(ErrorCode::ExcludedBaseCase);
  }
  NumericalSet collapsed = collapse(r, block.type);
  const Int half = collapsed.conductor() / 2;
  return {std::move(block), std::move(collapsed), half};
}

}  // namespace

Decomposition decompose_almost_symmetric(const NumericalSet& r) {
  const AlmostSymmetricContext ctx = almost_symmetric_context(r);
  const Int t = ctx.block.type;
  Decomposition d{r, DualForm::Dual, NumericalSet::ordinary(t + 1), {}, r};
  if (ctx.collapsed.contains(ctx.half)) {
    d.s = prefix_set(ctx.collapsed, ctx.half);
    d.kinds = {SumKind::Conjoint, SumKind::Bonded};
  } else {
    if (ctx.block.lower != ctx.half - 1) {
      throw DomainError(ErrorCode::PreconditionFailed, "block misaligned with half conductor");
    }
    std::vector<Int> small;
    for (Int x : r.small_elements()) {
      if (x >= ctx.block.lower) break;
      small.push_back(x);
    }
    small.push_back(ctx.block.lower + 1);
    d.s = NumericalSet::from_small_elements(small);
    d.kinds = {SumKind::Bonded, SumKind::Conjoint};
  }
  d.reconstructed = d.evaluate();
  check_reconstruction(d, r);
  return d;
}

Decomposition decompose_almost_symmetric_semigroup(const NumericalSet& r) {
  const AlmostSymmetricContext ctx = almost_symmetric_context(r);
  const Int t = ctx.block.type;
  Decomposition d{r, DualForm::Dual, std::nullopt, {}, r};
  if (ctx.collapsed.contains(ctx.half)) {
    d.s = prefix_set(ctx.collapsed, ctx.half);
    d.middle = NumericalSet::ordinary(t + 1);
    d.kinds = {SumKind::Conjoint, SumKind::Bonded};
  } else {
    if (ctx.block.lower != ctx.half - 1) {
      throw DomainError(ErrorCode::PreconditionFailed, "block misaligned with half conductor");
    }
    std::vector<Int> small;
    for (Int x : r.small_elements()) {
      if (x > ctx.block.lower) break;
      small.push_back(x);
    }
    small.push_back(ctx.block.lower + 2);
    d.s = NumericalSet::from_small_elements(small);
    if (t == 2) {
      d.kinds = {SumKind::Conjoint};
    } else {
      d.middle = NumericalSet::ordinary(t - 1);
      d.kinds = {SumKind::Conjoint, SumKind::Conjoint};
    }
  }
  if (!is_semigroup(d.s)) {
    throw DomainError(ErrorCode::NotASemigroup, "constructed S is not closed");
  }
  d.reconstructed = d.evaluate();
  check_reconstruction(d, r);
  return d;
}

SumShape parse_sum_shape(const std::string& name) {
  if (name == "cb" || name == "CB") return SumShape::CB;
  if (name == "bc" || name == "BC") return SumShape::BC;
  if (name == "cc" || name == "CC") return SumShape::CC;
  throw DomainError(ErrorCode::PreconditionFailed, "unknown shape: " + name);
}

NumericalSet shape_sum(const NumericalSet& r, Int t, SumShape shape) {
  const NumericalSet d = dual(r);
  switch (shape) {
    case SumShape::CB:
      return sum_sets(sum_sets(r, NumericalSet::ordinary(t + 1), SumKind::Conjoint),
                      d, SumKind::Bonded);
    case SumShape::BC:
      return sum_sets(sum_sets(r, NumericalSet::ordinary(t + 1), SumKind::Bonded),
                      d, SumKind::Conjoint);
    case SumShape::CC:
      return sum_sets(sum_sets(r, NumericalSet::ordinary(t - 1), SumKind::Conjoint),
                      d, SumKind::Conjoint);
  }
  throw DomainError(ErrorCode::PreconditionFailed, "bad shape");
}

// The sum has small elements {0, r_1..r_{n-1}, [extras], 2r_n+m-3-a for the
// non-maximal gaps a of R, co}, so membership below the conductor is decided
// by R alone. Closure reduces to conditions on pairs of left elements: sums
// must miss the forced gap band just above r_n and, in the reflected band,
// must not land on a reflection of a left element. The BC shape also keeps
// r_n - 1 as an element, which adds the multiplicity and u-value conditions.
bool closure_conditions(const NumericalSet& r, Int t, SumShape shape) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (!is_semigroup(r)) throw DomainError(ErrorCode::NotASemigroup);
  if (t <= 2) throw DomainError(ErrorCode::TypeTooSmall);
  const auto& small = r.small_elements();
  const Int n = r.element_count();
  const Int rn = r.conductor();

  // Left elements of R only; r_n itself is a gap of every shape's sum.
  auto left_contains = [&](Int x) { return x < rn && x >= 0 && r.contains(x); };

  Int band_top = 0;    // sums of left pairs must miss [r_n, band_top]
  Int mu_offset = 0;   // and must not make 2r_n - r_i - r_j + mu_offset an element
  switch (shape) {
    case SumShape::CB:
      band_top = rn + t - 2;
      mu_offset = t - 2;
      break;
    case SumShape::BC:
      band_top = rn + t - 1;
      mu_offset = t - 2;
      break;
    case SumShape::CC:
      band_top = rn + t - 3;
      mu_offset = t - 4;
      break;
  }

  for (Int i = 1; i < n; ++i) {
    for (Int j = i; j < n; ++j) {
      const Int s = small[static_cast<std::size_t>(i)] + small[static_cast<std::size_t>(j)];
      if (s >= rn && s <= band_top) return false;
      if (left_contains(2 * rn + mu_offset - s)) return false;
    }
  }

  if (shape == SumShape::BC) {
    // r_n - 1 is a small element of the sum: its self-sum and its sums with
    // left elements give the remaining conditions.
    if (rn < t + 2) return false;
    for (Int i = 1; i < n; ++i) {
      const Int ri = small[static_cast<std::size_t>(i)];
      if (ri <= t) return false;
      if (left_contains(rn - ri + t - 1)) return false;
    }
    if (left_contains(t)) return false;
  }
  return true;
}

}  // namespace numdiag
