#ifndef NUMDIAG_NUMERICAL_SET_HPP
#define NUMDIAG_NUMERICAL_SET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "numdiag/error.hpp"

namespace numdiag {

using Int = std::int64_t;

/// A numerical set: a subset of the nonnegative integers containing 0 with
/// finite complement. Canonically stored as its small elements
/// {0 = r_0 < r_1 < ... < r_n = conductor}; every integer above the
/// conductor is a member. The whole of the nonnegative integers is the
/// distinguished non-proper value, stored as the one-element sequence [0]
/// (conductor 0, Frobenius -1).
///
/// Values are immutable after construction; all operations on them are
/// pure functions.
class NumericalSet {
 public:
  /// Builds a canonical numerical set from a raw increasing sequence of
  /// small elements. Redundant co-final entries are normalized away so the
  /// final entry is the true conductor; [0,1,2,3] collapses to the full set.
  ///
  /// With `strict` set, inputs that are not already canonical are rejected
  /// (PreconditionFailed) instead of normalized.
  static NumericalSet from_small_elements(const std::vector<Int>& seq,
                                          bool strict = false);

  /// The full set of nonnegative integers.
  static NumericalSet naturals();

  /// Ordinary set {0, m, ->}.
  static NumericalSet ordinary(Int m);

  const std::vector<Int>& small_elements() const { return small_; }

  bool is_proper() const { return small_.size() > 1; }
  bool contains(Int x) const;

  Int conductor() const { return small_.back(); }
  Int frobenius() const { return conductor() - 1; }
  Int genus() const;

  /// Number of nonzero small elements.
  Int element_count() const { return static_cast<Int>(small_.size()) - 1; }

  /// Smallest nonzero element (the multiplicity). Requires a proper set.
  Int multiplicity() const;

  bool operator==(const NumericalSet& other) const = default;

  /// Canonical literal, e.g. "0,4,6,7,9,10,12".
  std::string to_literal() const;
  /// Display form, e.g. "{0,4,6,7,9,10,12,->}".
  std::string to_display() const;

 private:
  explicit NumericalSet(std::vector<Int> small) : small_(std::move(small)) {}
  std::vector<Int> small_;
};

/// Parses a set literal: comma-separated small elements, with or without
/// surrounding braces and a trailing "->".
NumericalSet parse_set(const std::string& text);

std::vector<Int> gaps(const NumericalSet& r);
Int frobenius(const NumericalSet& r);
Int genus(const NumericalSet& r);
Int conductor(const NumericalSet& r);

/// Closure under addition, checked on pairs of small elements (sums past the
/// conductor are members automatically).
bool is_semigroup(const NumericalSet& r);

/// R* = {0} u {F(R)-a : a a gap, a != F(R)} u {co(R), ->}.
NumericalSet dual(const NumericalSet& r);

/// True iff for every a in [0, F(R)] exactly one of a, F(R)-a lies in R.
bool is_symmetric(const NumericalSet& r);

/// All z not in R with z + r in R for every nonzero r in R. Only gaps need
/// to be scanned: a negative z fails with r = co(R) - z (an element), and
/// any z >= co(R) is itself in R.
std::vector<Int> pseudo_frobenius(const NumericalSet& r);

Int type(const NumericalSet& r);

bool is_pseudo_symmetric(const NumericalSet& r);
bool is_almost_symmetric(const NumericalSet& r);

/// Nonzero elements of R not expressible as a sum of two nonzero elements.
/// Every x >= co(R) + multiplicity splits as x = m + (x - m), so the scan
/// is finite.
std::vector<Int> minimal_generators(const NumericalSet& r);
bool is_minimal_generator(const NumericalSet& r, Int x);

/// {x - r : x in R, x >= r} for a small element r of R.
NumericalSet shift(const NumericalSet& r, Int element);

/// S* - 1 = {0} u {s - 1 : s in S*, s >= 1}, renormalized.
NumericalSet shift_down_dual(const NumericalSet& s);

struct InvariantReport {
  std::vector<Int> gaps;
  Int genus = 0;
  Int frobenius = -1;
  Int conductor = 0;
  bool is_semigroup = false;
  bool is_symmetric = false;
  bool is_pseudo_symmetric = false;
  bool is_almost_symmetric = false;
  std::vector<Int> pseudo_frobenius;  // only when is_semigroup
  Int type = 0;                       // only when is_semigroup
};

InvariantReport analyze(const NumericalSet& r);

}  // namespace numdiag

#endif
