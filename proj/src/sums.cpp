#include "numdiag/sums.hpp"

#include <algorithm>

namespace numdiag {

const char* sum_kind_name(SumKind kind) {
  switch (kind) {
    case SumKind::Bonded: return "bonded";
    case SumKind::EndToEnd: return "e2e";
    case SumKind::Conjoint: return "conjoint";
  }
  return "?";
}

SumKind parse_sum_kind(const std::string& name) {
  if (name == "bonded") return SumKind::Bonded;
  if (name == "e2e") return SumKind::EndToEnd;
  if (name == "conjoint") return SumKind::Conjoint;
  throw DomainError(ErrorCode::PreconditionFailed, "unknown sum kind: " + name);
}

SumKind dual_kind(SumKind kind) {
  switch (kind) {
    case SumKind::Bonded: return SumKind::Conjoint;
    case SumKind::EndToEnd: return SumKind::EndToEnd;
    case SumKind::Conjoint: return SumKind::Bonded;
  }
  return kind;
}

Partition sum_partitions(const Partition& y, const Partition& x, SumKind kind) {
  if (y.parts.empty() || x.parts.empty()) {
    throw DomainError(ErrorCode::EmptyPartition);
  }
  const Int top = y.parts.front();
  std::vector<Int> parts;
  for (Int mu : x.parts) {
    parts.push_back(kind == SumKind::Conjoint ? top + mu - 1 : top + mu);
  }
  switch (kind) {
    case SumKind::Bonded:
      parts.insert(parts.end(), y.parts.begin() + 1, y.parts.end());
      break;
    case SumKind::EndToEnd:
    case SumKind::Conjoint:
      parts.insert(parts.end(), y.parts.begin(), y.parts.end());
      break;
  }
  return make_partition(std::move(parts));
}

NumericalSet sum_sets(const NumericalSet& r, const NumericalSet& s, SumKind kind) {
  if (!r.is_proper()) {
    if (kind != SumKind::EndToEnd) {
      throw DomainError(ErrorCode::LeftIdentityUndefined,
                        "left operand may be the full set only for the e2e sum");
    }
    return s;  // identity of the end-to-end monoid
  }
  const auto& rs = r.small_elements();
  const Int rn = r.conductor();
  std::vector<Int> out;
  switch (kind) {
    case SumKind::Bonded:
      out.assign(rs.begin(), rs.end() - 1);
      out.push_back(rn - 1);
      for (std::size_t j = 1; j < s.small_elements().size(); ++j) {
        out.push_back(s.small_elements()[j] + rn - 1);
      }
      break;
    case SumKind::EndToEnd:
      out = rs;
      for (std::size_t j = 1; j < s.small_elements().size(); ++j) {
        out.push_back(s.small_elements()[j] + rn);
      }
      break;
    case SumKind::Conjoint:
      out.assign(rs.begin(), rs.end() - 1);
      if (s.is_proper()) {
        for (std::size_t j = 1; j < s.small_elements().size(); ++j) {
          out.push_back(s.small_elements()[j] + rn - 1);
        }
      } else {
        out.push_back(rn - 1);  // R (+)_C N_0 = {0,r_1,...,r_{n-1},r_n - 1,->}
      }
      break;
  }
  return NumericalSet::from_small_elements(out);
}

std::vector<Int> sum_gaps(const NumericalSet& r, const NumericalSet& s, SumKind kind) {
  if (!r.is_proper()) {
    if (kind != SumKind::EndToEnd) {
      throw DomainError(ErrorCode::LeftIdentityUndefined);
    }
    return gaps(s);
  }
  const Int f = r.frobenius();
  std::vector<Int> out = gaps(r);
  switch (kind) {
    case SumKind::Bonded:
      out.pop_back();  // F(R) becomes an element
      for (Int b : gaps(s)) out.push_back(f + b);
      break;
    case SumKind::EndToEnd:
      for (Int b : gaps(s)) out.push_back(f + 1 + b);
      break;
    case SumKind::Conjoint:
      if (!s.is_proper()) {
        out.pop_back();  // F(R) becomes the new top element r_n - 1
      } else {
        for (Int b : gaps(s)) out.push_back(f + b);
      }
      break;
  }
  return out;
}

NumericalSet sum_fold(std::span<const NumericalSet> operands, SumKind kind) {
  if (operands.size() < 2) {
    throw DomainError(ErrorCode::PreconditionFailed, "need at least two operands");
  }
  NumericalSet acc = operands[0];
  for (std::size_t i = 1; i < operands.size(); ++i) {
    acc = sum_sets(acc, operands[i], kind);
  }
  return acc;
}

std::pair<NumericalSet, NumericalSet> dual_law(const NumericalSet& r,
                                               const NumericalSet& s,
                                               SumKind kind) {
  if (!r.is_proper() || !s.is_proper()) {
    throw DomainError(ErrorCode::NonProperInput);
  }
  NumericalSet left = dual(sum_sets(r, s, kind));
  NumericalSet right = sum_sets(dual(s), dual(r), dual_kind(kind));
  return {std::move(left), std::move(right)};
}

bool e_sum_factorization_check(const NumericalSet& r, const NumericalSet& s) {
  if (!r.is_proper() || !s.is_proper()) {
    throw DomainError(ErrorCode::NonProperInput);
  }
  const NumericalSet lhs = sum_sets(r, s, SumKind::EndToEnd);
  const NumericalSet rhs = sum_sets(
      sum_sets(r, NumericalSet::ordinary(2), SumKind::Conjoint), s, SumKind::Bonded);
  return lhs == rhs;
}

}  // namespace numdiag
