#ifndef NUMDIAG_SUMS_HPP
#define NUMDIAG_SUMS_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "numdiag/diagrams.hpp"
#include "numdiag/numerical_set.hpp"

namespace numdiag {

enum class SumKind { Bonded, EndToEnd, Conjoint };

const char* sum_kind_name(SumKind kind);       // "bonded" | "e2e" | "conjoint"
SumKind parse_sum_kind(const std::string& name);

/// The duality pairing: Bonded <-> Conjoint, EndToEnd fixed.
SumKind dual_kind(SumKind kind);

/// Diagram-level sum on partitions. Both operands must be nonempty.
Partition sum_partitions(const Partition& y, const Partition& x, SumKind kind);

/// Set-level sum. The right operand may be the full set of nonnegative
/// integers (identity-like cases); the left operand may be so only for the
/// end-to-end sum.
NumericalSet sum_sets(const NumericalSet& r, const NumericalSet& s, SumKind kind);

/// Closed-form gap set of sum_sets(r, s, kind).
std::vector<Int> sum_gaps(const NumericalSet& r, const NumericalSet& s, SumKind kind);

/// Left-to-right fold of two or more operands.
NumericalSet sum_fold(std::span<const NumericalSet> operands, SumKind kind);

/// Both sides of the duality law: dual(r (+) s) and dual(s) (+)' dual(r)
/// with the paired kind. The two components are equal for all proper pairs.
std::pair<NumericalSet, NumericalSet> dual_law(const NumericalSet& r,
                                               const NumericalSet& s,
                                               SumKind kind);

/// True iff r (+)_E s == r (+)_C {0,2,->} (+)_B s.
bool e_sum_factorization_check(const NumericalSet& r, const NumericalSet& s);

}  // namespace numdiag

#endif
