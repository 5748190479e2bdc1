#ifndef NUMDIAG_DECOMPOSE_HPP
#define NUMDIAG_DECOMPOSE_HPP

#include <optional>
#include <string>
#include <vector>

#include "numdiag/numerical_set.hpp"
#include "numdiag/sums.hpp"

namespace numdiag {

enum class DualForm { Dual, DualMinusOne };

/// A proof object for R = (three-term or two-term) sum built from one set S.
/// The chain is S, then `middle` when present, then S with `s_form`
/// applied, folded left to right with `kinds` (one kind per join).
struct Decomposition {
  NumericalSet s;
  DualForm s_form = DualForm::Dual;
  std::optional<NumericalSet> middle;
  std::vector<SumKind> kinds;
  NumericalSet reconstructed;

  /// Re-evaluates the recorded chain; equals `reconstructed` by invariant.
  NumericalSet evaluate() const;

  /// {"input": ..., "S": ..., "S_form": ..., "middle": ..., "kinds": ...,
  ///  "verified": ...}
  std::string to_json(const NumericalSet& input) const;

  /// Human form, e.g. "R = S ⊞_C {0,4,→} ⊞_B S*".
  std::string to_human() const;
};

/// Symmetric numerical set R != {0,2,->} as S (+) {0,2,->} (+) S*, with
/// kinds (C,B) when co(R)/2 is in R and (B,C) otherwise.
Decomposition decompose_symmetric(const NumericalSet& r);

enum class ComposeVariant { CB, BC, CB_dual_first, BC_dual_first };

/// One of the four always-symmetric compositions of S with its dual.
NumericalSet compose_symmetric(const NumericalSet& s, ComposeVariant variant);

/// Symmetric-semigroup refinement: either R = S (+)_E S* with S a
/// semigroup, or R = S (+)_C (S* - 1).
Decomposition decompose_symmetric_semigroup(const NumericalSet& r);

/// Location of the pseudo-Frobenius block a_1 < ... < a_{t-1} strictly
/// between two consecutive small elements of R.
struct PFBlockInfo {
  std::vector<Int> pf;   // ends with F(R)
  Int type = 0;
  Int lower = 0;         // largest small element below a_1
  Int upper = 0;         // smallest small element above a_{t-1}
  Int k = 0;             // index of `upper` in the small-element list
  bool consecutive = false;  // a_i - a_{i-1} = 1 inside the block
};

PFBlockInfo pf_block(const NumericalSet& r);

/// The symmetric set obtained by lowering every small element above the
/// pseudo-Frobenius block by t - 1.
NumericalSet collapse(const NumericalSet& r, Int t);

/// Almost-symmetric semigroup with type t >= 2 and a consecutive confined
/// pseudo-Frobenius block as S (+) {0,t+1,->} (+) S*.
Decomposition decompose_almost_symmetric(const NumericalSet& r);

/// Semigroup refinement: the set S of the decomposition is itself a
/// numerical semigroup; the middle/kind shape changes in the half-conductor
/// miss case (S (+)_C S* for type 2, S (+)_C {0,t-1,->} (+)_C S* for
/// larger type).
Decomposition decompose_almost_symmetric_semigroup(const NumericalSet& r);

enum class SumShape { CB, BC, CC };

SumShape parse_sum_shape(const std::string& name);

/// Closed-form test for whether the three-term sum of R, an ordinary middle
/// set of the shape, and R* is a numerical semigroup: a minimal-generator
/// run, a bound on t, and forbidden hook values, without building the sum.
/// Equivalent to testing closure on the sum directly. Requires t > 2.
bool closure_conditions(const NumericalSet& r, Int t, SumShape shape);

/// The three-term sum a shape stands for: R (+) {0,m,->} (+) R*.
NumericalSet shape_sum(const NumericalSet& r, Int t, SumShape shape);

}  // namespace numdiag

#endif
