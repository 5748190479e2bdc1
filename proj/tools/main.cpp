#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "numdiag/census.hpp"
#include "numdiag/decompose.hpp"
#include "numdiag/diagrams.hpp"
#include "numdiag/numerical_set.hpp"
#include "numdiag/sums.hpp"

namespace {

using namespace numdiag;

bool looks_like_partition(const std::string& text) {
  for (char ch : text) {
    if (ch == ' ') continue;
    return ch == '[';
  }
  return false;
}

bool input_is_partition(const std::string& text, const std::string& as) {
  if (as == "set") return false;
  if (as == "partition") return true;
  return looks_like_partition(text);
}

NumericalSet read_set(const std::string& text, const std::string& as) {
  if (input_is_partition(text, as)) {
    return numerical_set_of(parse_partition(text));
  }
  return parse_set(text);
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

int cmd_analyze(const std::string& input, const std::string& as, bool json) {
  const NumericalSet r = read_set(input, as);
  const InvariantReport rep = analyze(r);
  if (json) {
    nlohmann::ordered_json obj;
    obj["set"] = r.small_elements();
    obj["gaps"] = rep.gaps;
    obj["genus"] = rep.genus;
    obj["frobenius"] = rep.frobenius;
    obj["conductor"] = rep.conductor;
    obj["semigroup"] = rep.is_semigroup;
    obj["symmetric"] = rep.is_symmetric;
    obj["pseudo_symmetric"] = rep.is_pseudo_symmetric;
    obj["almost_symmetric"] = rep.is_almost_symmetric;
    if (rep.is_semigroup) {
      obj["pseudo_frobenius"] = rep.pseudo_frobenius;
      obj["type"] = rep.type;
    }
    std::cout << obj.dump() << '\n';
    return 0;
  }
  std::cout << "set: " << r.to_display() << '\n'
            << "gaps: " << join(rep.gaps) << '\n'
            << "genus: " << rep.genus << '\n'
            << "frobenius: " << rep.frobenius << '\n'
            << "conductor: " << rep.conductor << '\n'
            << "semigroup: " << yesno(rep.is_semigroup) << '\n'
            << "symmetric: " << yesno(rep.is_symmetric) << '\n'
            << "pseudo_symmetric: " << yesno(rep.is_pseudo_symmetric) << '\n'
            << "almost_symmetric: " << yesno(rep.is_almost_symmetric) << '\n';
  if (rep.is_semigroup) {
    std::cout << "pseudo_frobenius: " << join(rep.pseudo_frobenius) << '\n'
              << "type: " << rep.type << '\n';
  }
  return 0;
}

int cmd_convert(const std::string& input, const std::string& as) {
  if (input_is_partition(input, as)) {
    std::cout << numerical_set_of(parse_partition(input)).to_literal() << '\n';
  } else {
    std::cout << partition_of(parse_set(input)).to_literal() << '\n';
  }
  return 0;
}

int cmd_dual(const std::string& input, const std::string& as) {
  std::cout << dual(read_set(input, as)).to_literal() << '\n';
  return 0;
}

int cmd_sum(const std::vector<std::string>& inputs, const std::string& kind_name,
            const std::string& as) {
  const SumKind kind = parse_sum_kind(kind_name);
  std::vector<NumericalSet> operands;
  for (const auto& text : inputs) operands.push_back(read_set(text, as));
  const NumericalSet result = sum_fold(operands, kind);
  if (input_is_partition(inputs.front(), as)) {
    std::cout << partition_of(result).to_literal() << '\n';
  } else {
    std::cout << result.to_literal() << '\n';
  }
  return 0;
}

int cmd_decompose(const std::string& input, const std::string& as, bool json,
                  bool semigroup_variant) {
  const NumericalSet r = read_set(input, as);
  Decomposition d = [&] {
    if (r.is_proper() && is_symmetric(r)) {
      return semigroup_variant ? decompose_symmetric_semigroup(r)
                               : decompose_symmetric(r);
    }
    if (r.is_proper() && is_semigroup(r) && is_almost_symmetric(r) && type(r) >= 2) {
      return semigroup_variant ? decompose_almost_symmetric_semigroup(r)
                               : decompose_almost_symmetric(r);
    }
    throw DomainError(ErrorCode::NotAlmostSymmetric,
                      "decompose needs a symmetric set or an almost symmetric semigroup");
  }();
  if (json) {
    std::cout << d.to_json(r) << '\n';
    return 0;
  }
  std::cout << d.to_human() << '\n'
            << "S = " << d.s.to_literal() << '\n';
  if (d.middle) std::cout << "middle = " << d.middle->to_literal() << '\n';
  std::cout << "kinds = ";
  for (std::size_t i = 0; i < d.kinds.size(); ++i) {
    std::cout << (i ? "," : "") << sum_kind_name(d.kinds[i]);
  }
  std::cout << '\n' << "verified = " << yesno(d.evaluate() == r) << '\n';
  return 0;
}

int cmd_render(const std::string& input, const std::string& as,
               const std::string& format_name) {
  const RenderFormat fmt = parse_render_format(format_name);
  std::string out = input_is_partition(input, as)
                        ? render(parse_partition(input), fmt)
                        : render(parse_set(input), fmt);
  if (out.empty() || out.back() != '\n') out += '\n';
  std::cout << out;
  return 0;
}

int cmd_enumerate(const std::string& kind_name, std::optional<Int> max_conductor,
                  std::optional<Int> max_genus, bool count_only, bool override_cap) {
  EnumSpec spec;
  if (kind_name == "sets") spec.kind = EnumKind::Sets;
  else if (kind_name == "semigroups") spec.kind = EnumKind::Semigroups;
  else if (kind_name == "symmetric") spec.kind = EnumKind::Symmetric;
  else if (kind_name == "almost-symmetric") spec.kind = EnumKind::AlmostSymmetric;
  else throw CLI::ValidationError("kind", "unknown kind: " + kind_name);
  if (max_conductor.has_value() == max_genus.has_value()) {
    throw CLI::ValidationError("bound", "give exactly one of --max-conductor, --max-genus");
  }
  if (max_conductor) {
    spec.bound_type = BoundType::Conductor;
    spec.bound = *max_conductor;
  } else {
    spec.bound_type = BoundType::Genus;
    spec.bound = *max_genus;
  }
  spec.override_cap = override_cap;
  if (override_cap) std::cerr << "warning: safety cap overridden\n";
  Int total = 0;
  enumerate(spec, [&](const NumericalSet& r) {
    ++total;
    if (!count_only) std::cout << r.to_literal() << '\n';
  });
  if (count_only) std::cout << total << '\n';
  return 0;
}

int cmd_verify(const std::string& theorem_token, std::optional<Int> bound,
               bool override_cap) {
  const TheoremId id = parse_theorem(theorem_token);
  EnumSpec spec = default_verify_spec(id);
  if (bound) spec.bound = *bound;
  spec.override_cap = spec.override_cap || override_cap;
  const VerifyReport report = verify(id, spec);
  std::cout << report.to_json() << '\n';
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical sets, Young diagrams, and their sums"};
  app.require_subcommand(1);

  std::string input, as = "auto", kind = "e2e", format = "ascii";
  std::vector<std::string> inputs;
  bool json = false, semigroup_variant = false, count_only = false, override_cap = false;
  std::string enum_kind = "sets", theorem;
  std::optional<Int> max_conductor, max_genus, bound;

  auto add_as = [&](CLI::App* sub) {
    sub->add_option("--as", as, "interpret input as")->check(CLI::IsMember({"set", "partition"}));
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "invariants of a numerical set");
  analyze_cmd->add_option("input", input)->required();
  analyze_cmd->add_flag("--json", json);
  add_as(analyze_cmd);

  auto* convert_cmd = app.add_subcommand("convert", "set <-> partition");
  convert_cmd->add_option("input", input)->required();
  add_as(convert_cmd);

  auto* dual_cmd = app.add_subcommand("dual", "dual numerical set");
  dual_cmd->add_option("input", input)->required();
  add_as(dual_cmd);

  auto* sum_cmd = app.add_subcommand("sum", "fold operands under a diagram sum");
  sum_cmd->add_option("--kind", kind)->check(CLI::IsMember({"bonded", "e2e", "conjoint"}));
  // Operands are taken verbatim from the remaining arguments; a declared
  // vector positional would let the parser expand "[4,2,1]" as a list.
  sum_cmd->allow_extras();
  add_as(sum_cmd);

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose into S, middle, S*");
  decompose_cmd->add_option("input", input)->required();
  decompose_cmd->add_flag("--json", json);
  decompose_cmd->add_flag("--semigroup", semigroup_variant,
                          "use the semigroup-refined decomposition");
  add_as(decompose_cmd);

  auto* render_cmd = app.add_subcommand("render", "draw the Young diagram");
  render_cmd->add_option("input", input)->required();
  render_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"ascii", "ydiagram", "hooks", "json"}));
  add_as(render_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "stream sets or semigroups");
  enum_cmd->add_option("kind", enum_kind)
      ->check(CLI::IsMember({"sets", "semigroups", "symmetric", "almost-symmetric"}));
  enum_cmd->add_option("--max-conductor", max_conductor);
  enum_cmd->add_option("--max-genus", max_genus);
  enum_cmd->add_flag("--count", count_only);
  enum_cmd->add_flag("--override-cap", override_cap);

  auto* verify_cmd = app.add_subcommand("verify", "exhaustively check a result");
  verify_cmd->add_option("theorem", theorem)->required();
  verify_cmd->add_option("--bound", bound);
  verify_cmd->add_flag("--override-cap", override_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (*analyze_cmd) return cmd_analyze(input, as, json);
    if (*convert_cmd) return cmd_convert(input, as);
    if (*dual_cmd) return cmd_dual(input, as);
    if (*sum_cmd) {
      inputs = sum_cmd->remaining();
      if (inputs.size() < 2) {
        std::cerr << "sum needs at least two operands\n";
        return 2;
      }
      return cmd_sum(inputs, kind, as);
    }
    if (*decompose_cmd) return cmd_decompose(input, as, json, semigroup_variant);
    if (*render_cmd) return cmd_render(input, as, format);
    if (*enum_cmd) return cmd_enumerate(enum_kind, max_conductor, max_genus,
                                        count_only, override_cap);
    if (*verify_cmd) return cmd_verify(theorem, bound, override_cap);
  } catch (const numdiag::DomainError& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
