#ifndef NUMDIAG_DIAGRAMS_HPP
#define NUMDIAG_DIAGRAMS_HPP

#include <string>
#include <vector>

#include "numdiag/numerical_set.hpp"

namespace numdiag {

/// A partition: non-increasing positive parts, listed as the row lengths of
/// its Young diagram from top to bottom. The empty partition is allowed as
/// a value but is excluded from the proper-set bijection.
struct Partition {
  std::vector<Int> parts;

  Int weight() const;
  bool operator==(const Partition& other) const = default;
  std::string to_literal() const;  // "[6,4,2,1,1,1]"
};

/// Validates and builds a partition. Errors: NotAPartition.
Partition make_partition(std::vector<Int> parts);

/// Parses "[6,4,2,1,1,1]".
Partition parse_partition(const std::string& text);

/// Per-row hook lengths of a Young diagram, rows top to bottom; each row is
/// strictly decreasing.
struct HookGrid {
  std::vector<std::vector<Int>> rows;
  bool operator==(const HookGrid& other) const = default;
};

/// Row lengths of Y_R, top to bottom. The diagram has genus(R) rows and
/// element_count(R) columns.
Partition partition_of(const NumericalSet& r);

/// Inverse of partition_of.
NumericalSet numerical_set_of(const Partition& p);

/// Hook lengths of Y_R, rows top to bottom. The top row is the positive
/// part of F(R) - r_j over the small elements r_j.
HookGrid hook_grid(const NumericalSet& r);

/// G_i(R): the hook lengths of column i (0-based, left to right) of Y_R,
/// equal to gaps(shift(R, r_i)).
std::vector<Int> column_hook_set(const NumericalSet& r, Int column);

/// Semigroup test through the diagram: every column hook set contained in
/// G_0(R) = G(R).
bool is_semigroup_via_hooks(const NumericalSet& r);

/// Conjugate partition (diagram transposition).
Partition transpose(const Partition& p);

enum class RenderFormat { Ascii, LatexYdiagram, LatexHooks, Json };

RenderFormat parse_render_format(const std::string& name);

/// Renders the diagram of a proper set. Ascii boxes carry hook lengths;
/// LatexHooks emits the ytableaushort form with multi-digit entries braced;
/// Json is the canonical machine-interchange object.
std::string render(const NumericalSet& r, RenderFormat format);

/// Renders a bare partition (no hook data; Json and LatexHooks go through
/// the associated numerical set).
std::string render(const Partition& p, RenderFormat format);

}  // namespace numdiag

#endif
