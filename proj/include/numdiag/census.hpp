#ifndef NUMDIAG_CENSUS_HPP
#define NUMDIAG_CENSUS_HPP

#include <functional>
#include <string>
#include <vector>

#include "numdiag/numerical_set.hpp"

namespace numdiag {

// Brute-force definitional oracles, implemented on membership vectors and
// kept independent of the main modules so a bug there cannot confirm
// itself.
namespace oracle {

std::vector<Int> gaps(const NumericalSet& r);
bool is_semigroup(const NumericalSet& r);
bool is_symmetric(const NumericalSet& r);
NumericalSet dual(const NumericalSet& r);
std::vector<Int> pseudo_frobenius(const NumericalSet& r);

/// Element-wise almost-symmetry: every z outside R has z in PF(R) or
/// F(R) - z in R.
bool is_almost_symmetric_elementwise(const NumericalSet& r);

/// The pairing form: a_i + a_{t-i} = a_t over the pseudo-Frobenius numbers.
bool is_almost_symmetric_pairing(const NumericalSet& r);

}  // namespace oracle

enum class EnumKind { Sets, Semigroups, Symmetric, AlmostSymmetric };
enum class BoundType { Conductor, Genus };

struct EnumSpec {
  EnumKind kind = EnumKind::Sets;
  BoundType bound_type = BoundType::Conductor;
  Int bound = 0;
  bool override_cap = false;
};

constexpr Int kConductorCap = 24;
constexpr Int kGenusCap = 14;

using SetVisitor = std::function<void(const NumericalSet&)>;

/// All proper numerical sets with conductor exactly c (2^(c-2) of them), in
/// lexicographic order of the characteristic vector of {1,...,c-2}.
void enumerate_sets(Int conductor, const SetVisitor& visit, bool override_cap = false);

/// All numerical semigroups of genus exactly g, via the genus-tree walk
/// (each child removes a minimal generator above the Frobenius number).
void enumerate_semigroups(Int genus, const SetVisitor& visit, bool override_cap = false);

/// Streams every instance selected by the spec.
void enumerate(const EnumSpec& spec, const SetVisitor& visit);

enum class TheoremId {
  Prop3_2,
  Lemma4_3,
  Prop4_5,
  Prop4_6,
  Thm5_1,
  Lemma5_2,
  Cor5_3,
  Lemma5_4,
  Thm5_6,
  Cor5_9_10,
  Thm5_11,
};

TheoremId parse_theorem(const std::string& name);
const char* theorem_name(TheoremId id);

/// Default verification bound for a theorem (conductor- or genus-typed to
/// match its natural instance population).
EnumSpec default_verify_spec(TheoremId id);

struct VerifyReport {
  TheoremId theorem;
  Int instances = 0;
  std::vector<std::string> failures;
  Int elapsed_ms = 0;

  bool passed() const { return failures.empty(); }
  std::string to_json() const;
};

/// Runs the theorem's property over every instance within the bound.
VerifyReport verify(TheoremId id, const EnumSpec& spec);

}  // namespace numdiag

#endif
