#include "numdiag/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace numdiag {

Int Partition::weight() const {
  return std::accumulate(parts.begin(), parts.end(), Int{0});
}

std::string Partition::to_literal() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ',';
    out << parts[i];
  }
  out << ']';
  return out.str();
}

Partition make_partition(std::vector<Int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw DomainError(ErrorCode::NotAPartition, "nonpositive part");
    if (i > 0 && parts[i] > parts[i - 1]) {
      throw DomainError(ErrorCode::NotAPartition, "parts not non-increasing");
    }
  }
  return Partition{std::move(parts)};
}

Partition parse_partition(const std::string& text) {
  std::string body = text;
  while (!body.empty() && body.front() == ' ') body.erase(body.begin());
  while (!body.empty() && body.back() == ' ') body.pop_back();
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw DomainError(ErrorCode::NotAPartition, "expected [p1,p2,...]");
  }
  body = body.substr(1, body.size() - 2);
  std::vector<Int> parts;
  if (!body.empty()) {
    std::istringstream in(body);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      try {
        parts.push_back(std::stoll(tok));
      } catch (const std::exception&) {
        throw DomainError(ErrorCode::NotAPartition, "bad part: " + tok);
      }
    }
  }
  return make_partition(std::move(parts));
}

Partition partition_of(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const auto& small = r.small_elements();
  std::vector<Int> parts;
  // r_i - r_{i-1} - 1 rows of length i, from the conductor downwards.
  for (std::size_t i = small.size() - 1; i >= 1; --i) {
    const Int run = small[i] - small[i - 1] - 1;
    for (Int k = 0; k < run; ++k) parts.push_back(static_cast<Int>(i));
  }
  return Partition{std::move(parts)};
}

NumericalSet numerical_set_of(const Partition& p) {
  if (p.parts.empty()) return NumericalSet::naturals();
  const Int g = static_cast<Int>(p.parts.size());
  // The i-th row (1-based, top down) has hook p_i + g - i in column one,
  // which is a gap; these are exactly the gaps of the set.
  std::vector<bool> is_gap(static_cast<std::size_t>(p.parts[0] + g), false);
  for (Int i = 1; i <= g; ++i) {
    is_gap[static_cast<std::size_t>(p.parts[static_cast<std::size_t>(i - 1)] + g - i)] = true;
  }
  std::vector<Int> small;
  for (Int x = 0; x < static_cast<Int>(is_gap.size()); ++x) {
    if (!is_gap[static_cast<std::size_t>(x)]) small.push_back(x);
  }
  small.push_back(static_cast<Int>(is_gap.size()));
  return NumericalSet::from_small_elements(small);
}

HookGrid hook_grid(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const Partition p = partition_of(r);
  const Int f = r.frobenius();
  HookGrid grid;
  std::vector<Int> row;
  for (Int x : r.small_elements()) {
    if (f - x > 0) row.push_back(f - x);
  }
  grid.rows.push_back(row);
  for (std::size_t i = 1; i < p.parts.size(); ++i) {
    const Int drop = p.parts[i - 1] - p.parts[i] + 1;
    std::vector<Int> next;
    for (Int h : grid.rows.back()) {
      if (h - drop > 0) next.push_back(h - drop);
    }
    grid.rows.push_back(std::move(next));
  }
  return grid;
}

std::vector<Int> column_hook_set(const NumericalSet& r, Int column) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  if (column < 0 || column >= r.element_count()) {
    throw DomainError(ErrorCode::IndexOutOfRange);
  }
  return gaps(shift(r, r.small_elements()[static_cast<std::size_t>(column)]));
}

bool is_semigroup_via_hooks(const NumericalSet& r) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  const std::vector<Int> g0 = gaps(r);
  for (Int i = 1; i < r.element_count(); ++i) {
    for (Int h : column_hook_set(r, i)) {
      if (!std::binary_search(g0.begin(), g0.end(), h)) return false;
    }
  }
  return true;
}

Partition transpose(const Partition& p) {
  std::vector<Int> conj;
  if (!p.parts.empty()) {
    conj.resize(static_cast<std::size_t>(p.parts[0]));
    for (Int part : p.parts) {
      for (Int j = 0; j < part; ++j) ++conj[static_cast<std::size_t>(j)];
    }
  }
  return Partition{std::move(conj)};
}

RenderFormat parse_render_format(const std::string& name) {
  if (name == "ascii") return RenderFormat::Ascii;
  if (name == "ydiagram") return RenderFormat::LatexYdiagram;
  if (name == "hooks") return RenderFormat::LatexHooks;
  if (name == "json") return RenderFormat::Json;
  throw DomainError(ErrorCode::PreconditionFailed, "unknown format: " + name);
}

namespace {

std::string ascii_rows(const Partition& p, const HookGrid* hooks) {
  std::ostringstream out;
  for (std::size_t i = 0; i < p.parts.size(); ++i) {
    for (Int j = 0; j < p.parts[i]; ++j) {
      if (hooks) {
        const Int h = hooks->rows[i][static_cast<std::size_t>(j)];
        out << '[';
        if (h < 10) out << ' ';
        out << h << ']';
      } else {
        out << "[  ]";
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string latex_ydiagram(const Partition& p) {
  std::string body = p.to_literal();
  return "\\ydiagram{" + body.substr(1, body.size() - 2) + "}";
}

std::string latex_hooks(const NumericalSet& r) {
  const HookGrid grid = hook_grid(r);
  const Partition p = partition_of(r);
  std::ostringstream out;
  out << "\\ytableaushort{";
  for (std::size_t i = 0; i < grid.rows.size(); ++i) {
    if (i) out << ',';
    for (Int h : grid.rows[i]) {
      if (h > 9) {
        out << '{' << h << '}';
      } else {
        out << h;
      }
    }
  }
  const std::string parts = p.to_literal();
  out << "}*{" << parts.substr(1, parts.size() - 2) << "}";
  return out.str();
}

std::string json_object(const NumericalSet& r) {
  nlohmann::ordered_json obj;
  obj["small_elements"] = r.small_elements();
  obj["gaps"] = gaps(r);
  obj["frobenius"] = r.frobenius();
  obj["conductor"] = r.conductor();
  obj["genus"] = r.genus();
  obj["partition"] = partition_of(r).parts;
  obj["hooks"] = hook_grid(r).rows;
  return obj.dump();
}

}  // namespace

std::string render(const NumericalSet& r, RenderFormat format) {
  if (!r.is_proper()) throw DomainError(ErrorCode::NonProperInput);
  switch (format) {
    case RenderFormat::Ascii: {
      const HookGrid grid = hook_grid(r);
      return ascii_rows(partition_of(r), &grid);
    }
    case RenderFormat::LatexYdiagram:
      return latex_ydiagram(partition_of(r));
    case RenderFormat::LatexHooks:
      return latex_hooks(r);
    case RenderFormat::Json:
      return json_object(r);
  }
  return {};
}

std::string render(const Partition& p, RenderFormat format) {
  if (p.parts.empty()) throw DomainError(ErrorCode::NonProperInput);
  switch (format) {
    case RenderFormat::Ascii:
      return ascii_rows(p, nullptr);
    case RenderFormat::LatexYdiagram:
      return latex_ydiagram(p);
    case RenderFormat::LatexHooks:
      return latex_hooks(numerical_set_of(p));
    case RenderFormat::Json:
      return json_object(numerical_set_of(p));
  }
  return {};
}

}  // namespace numdiag
