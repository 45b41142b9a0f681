// amitsur: command-line front end.
// Exit codes: 0 ok, 1 failed check, 2 bad input, 3 internal inconsistency.

#include <array>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "amitsur.hpp"
#include "amitsur/io.hpp"

namespace {

using namespace amitsur;

Integer integer_flag(const std::string& text, const std::string& flag) {
  try {
    return parse_integer(text);
  } catch (const std::invalid_argument&) {
    throw FormatError(flag + ": expected a decimal integer, got '" + text + "'");
  }
}

std::string join(const std::set<Integer>& values) {
  std::string out = "{";
  for (const auto& v : values) out += (out.size() > 1 ? "," : "") + v.str();
  return out + "}";
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.resize(width, ' ');
  return s;
}

int cmd_am_chi(const std::string& input, const std::optional<std::string>& subgroup, bool machine) {
  const VarietySpec spec = io::load_spec(input, subgroup);
  const AmitsurComputation c = am_chi(spec);
  if (machine) {
    std::cout << io::computation_json(c).dump(2) << "\n";
    return 0;
  }
  std::cout << "variety: " << input << "\n"
            << "dimension: " << spec.dim() << "\n"
            << "|J|: " << spec.action().order() << "\n"
            << "Pic^J rank: " << c.invariant_lattice.rank() << "\n"
            << "Pic^chi generators: " << c.generators_used.size() << "\n"
            << "Pic^chi rank: " << c.split_subgroup.rank() << "\n"
            << "Am^chi: " << c.group.to_string() << "\n";
  return 0;
}

int cmd_am_t(const std::string& input, const std::optional<std::string>& subgroups,
             const std::optional<std::string>& subgroup) {
  const ToricVariety v = io::load_toric(input);
  const FanSymmetries& sym = v.symmetries;
  const ElementNames names = name_pic_elements(sym);

  std::cout << "variety: " << v.name << "\n"
            << "Pic rank: " << v.picard.pic_rank << "\n"
            << "|Aut(fan)|: " << sym.lattice_group.order() << ", |AutP|: " << sym.pic_action.order()
            << ", kernel: " << sym.kernel_size << "\n"
            << "generators:";
  for (const auto& n : sym.generator_names) std::cout << " " << n;
  std::cout << "\n";

  std::vector<LatticeGroupAction> rows;
  const bool all = subgroups.has_value();
  if (all) {
    if (*subgroups != "all") throw FormatError("--subgroups accepts only 'all'");
    rows = amitsur::subgroups(sym.pic_action);
  } else {
    rows.push_back(subgroup ? select_subgroup(sym, *subgroup) : trivial_group(v.picard.pic_rank));
  }

  // Conjugacy classes under AutP, numbered in order of first appearance.
  std::vector<std::size_t> klass(rows.size());
  std::size_t classes = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    klass[i] = classes;
    for (std::size_t k = 0; k < i; ++k)
      if (rows[k].order() == rows[i].order() && are_conjugate(sym.pic_action, rows[k], rows[i])) {
        klass[i] = klass[k];
        break;
      }
    if (klass[i] == classes) ++classes;
  }

  std::cout << pad("J", 16) << pad("order", 7) << pad("class", 7) << pad("Am^T", 14) << (v.has_chi ? "Am^chi" : "")
            << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const AmitsurComputation t = am_T(v.picard, sym, rows[i]);
    std::cout << pad(subgroup_label(sym, rows[i], names), 16) << pad(std::to_string(rows[i].order()), 7)
              << pad("c" + std::to_string(klass[i] + 1), 7) << pad(t.group.to_string(), 14);
    if (v.has_chi) std::cout << am_chi(v.spec(rows[i])).group.to_string();
    std::cout << "\n";
  }
  if (all) std::cout << rows.size() << " subgroups in " << classes << " conjugacy classes\n";
  return 0;
}

struct BoundFlags {
  std::string dim, pa, deg, d2, dk, d3, d2k;
};

int cmd_bounds(const std::string& kind, const BoundFlags& f) {
  auto need = [](const std::string& value, const char* flag) {
    if (value.empty()) throw CLI::RequiredError(flag);
    return integer_flag(value, flag);
  };
  if (kind == "uniform") {
    const Integer dim = need(f.dim, "--dim"), pa = need(f.pa, "--pa");
    if (dim < 1 || dim > 100000) throw FormatError("--dim must be between 1 and 100000");
    const Integer b = uniform_bound(static_cast<std::size_t>(dim), pa);
    std::cout << "rule: m divides |(1 + (-1)^n p_a) * lcm(1..n+1)|\n"
              << "bound: " << b << "\n";
    if (b == 0) std::cout << "warning: the bound is vacuous (chi(O_X) = 0)\n";
    return 0;
  }
  if (kind == "curve") {
    const CurveGcds g = curve_gcds(need(f.deg, "--deg"), need(f.pa, "--pa"));
    std::cout << "chi(kD) = deg(D) k + (1 - p_a)\n"
              << "gcd f(k): " << g.gcd_f << "\n"
              << "gcd k f(k): " << g.gcd_kf << "\n"
              << "ratio: " << (g.ratio ? g.ratio->str() : std::string("undefined")) << "\n";
    if (g.vacuous()) std::cout << "warning: chi(kD) vanishes identically; the bound is vacuous\n";
    return 0;
  }
  if (kind == "surface") {
    const auto c = surface_period_candidates(need(f.d2, "--d2"), need(f.dk, "--dk"));
    std::cout << "rules: 2 | m needs D^2, D.K even and distinct mod 4; 3 | m needs D.K = 0 mod 3 and D^2 = 1 mod 3\n"
              << "candidates: " << join(c) << "\n";
    return 0;
  }
  if (kind == "threefold") {
    const auto c = threefold_period_candidates(need(f.d3, "--d3"), need(f.d2k, "--d2k"));
    std::cout << "rules: m | 12, 2 D^3 = 6 (mod m), D^2.K = 4 (mod 2m)\n"
              << "candidates: " << join(c) << "\n";
    return 0;
  }
  throw FormatError("unknown bound kind '" + kind + "' (uniform, curve, surface, threefold)");
}

int cmd_oracle(const std::string& input, const std::optional<std::string>& subgroup, const std::string& box_text) {
  const Integer box = integer_flag(box_text, "--box");
  if (box < 1) throw CLI::ValidationError("--box", "box radius must be at least 1");
  const VarietySpec spec = io::load_spec(input, subgroup);
  const OracleReport r = oracle_check(spec, box);
  std::cout << "poised: " << r.poised.group.to_string() << "\n"
            << "box " << box << ": " << r.box.group.to_string() << "\n"
            << (r.spans_equal ? "PASS" : "FAIL") << " spans equal\n"
            << (r.stabilized ? "PASS" : "FAIL") << " box span stable at " << box + 1 << "\n";
  if (!r.stabilized) std::cerr << "warning: box span did not stabilize\n";
  return r.spans_equal && r.stabilized ? 0 : 1;
}

int cmd_table_dp6() {
  struct Row {
    const char* selector;
    const char* label;
    const char* expected;
  };
  static const std::array<Row, 10> rows{{{"1", "1", "0"},
                                         {"s", "<s>", "0"},
                                         {"sr^3", "<sr^3>", "0"},
                                         {"r^3", "<r^3>", "(Z/2Z)^2"},
                                         {"r^2", "<r^2>", "Z/3Z"},
                                         {"s,r^3", "<s,r^3>", "Z/2Z"},
                                         {"s,r^2", "<s,r^2>", "0"},
                                         {"sr^3,r^2", "<sr^3,r^2>", "Z/3Z"},
                                         {"r", "<r>", "0"},
                                         {"s,r", "<s,r>", "0"}}};
  const ToricVariety v = dp6_variety();
  std::cout << pad("J", 12) << pad("order", 7) << pad("Am^chi", 12) << pad("expected", 12) << "status\n";
  bool ok = true;
  for (const auto& row : rows) {
    const LatticeGroupAction j = select_subgroup(v.symmetries, row.selector);
    const std::string got = am_chi(v.spec(j)).group.to_string();
    const bool match = got == row.expected;
    ok = ok && match;
    std::cout << pad(row.label, 12) << pad(std::to_string(j.order()), 7) << pad(got, 12) << pad(row.expected, 12)
              << (match ? "ok" : "MISMATCH") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_spec(const std::string& name, const std::optional<std::string>& subgroup) {
  std::cout << io::spec_json(io::load_spec(name, subgroup)).dump(2) << "\n";
  return 0;
}

int cmd_fan(const std::string& name) {
  const auto v = io::named_variety(name);
  if (!v) throw FormatError("unknown bundled variety '" + name + "'");
  std::vector<NamedMatrix> named;
  for (std::size_t k = 0; k < v->symmetries.generator_names.size(); ++k)
    named.push_back({v->symmetries.generator_names[k], v->symmetries.lattice_group.generators()[k]});
  std::cout << io::fan_json(v->picard.fan, named).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical and toric Amitsur groups"};
  app.require_subcommand(1);
  std::optional<int> result;
  auto run = [&](auto&& fn) { return [&, fn] { result = fn(); }; };

  std::string input, kind, box = "0";
  std::optional<std::string> subgroup, subgroups;
  bool machine = false;
  BoundFlags flags;

  auto* am_chi_cmd = app.add_subcommand("am-chi", "Am^chi of a spec file or bundled variety");
  am_chi_cmd->add_option("spec", input, "spec file or bundled name")->required();
  am_chi_cmd->add_option("--subgroup", subgroup, "subgroup words, e.g. s,r^3 (bundled varieties)");
  am_chi_cmd->add_flag("--machine", machine, "emit the full computation as JSON");
  am_chi_cmd->callback(run([&] { return cmd_am_chi(input, subgroup, machine); }));

  auto* am_t_cmd = app.add_subcommand("am-t", "Am^T of a fan file or bundled variety");
  am_t_cmd->add_option("fan", input, "fan file or bundled name")->required();
  auto* all_opt = am_t_cmd->add_option("--subgroups", subgroups, "'all' to list every subgroup of AutP");
  am_t_cmd->add_option("--subgroup", subgroup, "subgroup words")->excludes(all_opt);
  am_t_cmd->callback(run([&] { return cmd_am_t(input, subgroups, subgroup); }));

  auto* bounds_cmd = app.add_subcommand("bounds", "period bounds: uniform, curve, surface, threefold");
  bounds_cmd->add_option("kind", kind, "uniform|curve|surface|threefold")->required();
  bounds_cmd->add_option("--dim", flags.dim, "dimension n");
  bounds_cmd->add_option("--pa", flags.pa, "arithmetic genus");
  bounds_cmd->add_option("--deg", flags.deg, "degree of D on a curve");
  bounds_cmd->add_option("--d2", flags.d2, "D^2");
  bounds_cmd->add_option("--dk", flags.dk, "D.K");
  bounds_cmd->add_option("--d3", flags.d3, "D^3");
  bounds_cmd->add_option("--d2k", flags.d2k, "D^2.K");
  bounds_cmd->callback(run([&] { return cmd_bounds(kind, flags); }));

  auto* oracle_cmd = app.add_subcommand("oracle", "compare the poised generators with a brute-force box");
  oracle_cmd->add_option("spec", input, "spec file or bundled name")->required();
  oracle_cmd->add_option("--box", box, "box radius B >= 1")->required();
  oracle_cmd->add_option("--subgroup", subgroup, "subgroup words (bundled varieties)");
  oracle_cmd->callback(run([&] { return cmd_oracle(input, subgroup, box); }));

  app.add_subcommand("table-dp6", "Am^chi of dP6 for the ten tabulated subgroups")->callback(run([] {
    return cmd_table_dp6();
  }));

  auto* spec_cmd = app.add_subcommand("spec", "print the spec document of a bundled variety");
  spec_cmd->add_option("name", input, "bundled name")->required();
  spec_cmd->add_option("--subgroup", subgroup, "subgroup words");
  spec_cmd->callback(run([&] { return cmd_spec(input, subgroup); }));

  auto* fan_cmd = app.add_subcommand("fan", "print the fan document of a bundled variety");
  fan_cmd->add_option("name", input, "bundled name")->required();
  fan_cmd->callback(run([&] { return cmd_fan(input); }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InternalMismatch& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const ChiNotInvariant& e) {
    std::cerr << "error: " << e.what() << " (action_generators[" << e.generator() << "])\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return result.value_or(0);
}
