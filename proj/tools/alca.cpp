// alca: command line front end for the l-complete approximation library.
//
// Exit codes: 0 success / property holds, 1 property fails,
// 2 usage, parse or schema error, 3 resource limit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "alca/alca.hpp"

namespace {

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;
constexpr int kResource = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw alca::Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw alca::Error("cannot write '" + path + "'");
  out << text;
}

alca::Machine load(const std::string& path) {
  try {
    return alca::parse_machine(read_file(path));
  } catch (const alca::ParseError& e) {
    throw alca::ParseError(path + ": " + e.what(), e.line(), e.column());
  }
}

alca::Completeness parse_kind(const std::string& k) {
  return k == "sync" ? alca::Completeness::sync : alca::Completeness::async;
}

void print_witness(const alca::Alphabet& a, const std::optional<alca::Lasso>& w) {
  if (w) std::cout << "witness: " << alca::spell(a, *w) << "\n";
}

std::string profile_line_label(const alca::EventuallyPeriodic<alca::WordSet>& p, alca::Time i) {
  alca::Time t = p.from + i;
  return "t>=" + std::to_string(p.from) + " (mod " + std::to_string(p.period) + " ≡ " +
         std::to_string(t % p.period) + ")";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alca - l-complete approximations of machine-represented behaviors"};
  app.require_subcommand(1);
  std::size_t budget = alca::node_budget_from_env();
  app.add_option("--node-budget", budget, "product node budget for inclusion checks (env ALCA_NODE_BUDGET)");

  std::string file, file2, out_path, dot_path, kind = "sync", prefix, cycle, fixture_name;
  std::size_t l = 0, l_max = 0;
  std::vector<std::int64_t> window;
  bool strict = false, inclusion = false, equivalence = false;

  auto* validate_cmd = app.add_subcommand("validate", "check a machine file");
  validate_cmd->add_option("FILE", file)->required();

  auto* trim_cmd = app.add_subcommand("trim", "remove unreachable and blocking parts");
  trim_cmd->add_option("FILE", file)->required();
  trim_cmd->add_option("-o,--output", out_path);

  auto* dominoes_cmd = app.add_subcommand("dominoes", "print the window profile t -> B|[t,t+l]");
  dominoes_cmd->add_option("--l", l)->required();
  dominoes_cmd->add_option("--window", window, "print B|[T1,T2] only")->expected(2);
  dominoes_cmd->add_option("FILE", file)->required();

  auto* approx_cmd = app.add_subcommand("approximate", "construct the strongest l-complete approximation");
  approx_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sync", "async"}))->required();
  approx_cmd->add_option("--l", l)->required();
  approx_cmd->add_option("FILE", file)->required();
  approx_cmd->add_option("-o,--output", out_path);
  approx_cmd->add_option("--dot", dot_path);

  auto* check_cmd = app.add_subcommand("check", "decide l-completeness");
  check_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sync", "async"}))->required();
  check_cmd->add_option("--l", l)->required();
  check_cmd->add_option("FILE", file)->required();

  auto* minimal_cmd = app.add_subcommand("minimal-l", "least l for which the behavior is l-complete");
  minimal_cmd->add_option("--kind", kind)->check(CLI::IsMember({"sync", "async"}))->required();
  minimal_cmd->add_option("--max", l_max)->required();
  minimal_cmd->add_option("FILE", file)->required();

  auto* invariance_cmd = app.add_subcommand("invariance", "decide (strict) time invariance");
  invariance_cmd->add_flag("--strict", strict);
  invariance_cmd->add_option("FILE", file)->required();

  auto* compare_cmd = app.add_subcommand("compare", "behavior inclusion FILE1 ⊆ FILE2 or equivalence");
  auto* inc_flag = compare_cmd->add_flag("--inclusion", inclusion);
  auto* eq_flag = compare_cmd->add_flag("--equivalence", equivalence);
  inc_flag->excludes(eq_flag);
  compare_cmd->add_option("FILE1", file)->required();
  compare_cmd->add_option("FILE2", file2)->required();

  auto* member_cmd = app.add_subcommand("member", "lasso membership prefix.cycle^w");
  member_cmd->add_option("--prefix", prefix)->required();
  member_cmd->add_option("--cycle", cycle)->required();
  member_cmd->add_option("FILE", file)->required();

  auto* dot_cmd = app.add_subcommand("export-dot", "render a machine as Graphviz DOT");
  dot_cmd->add_option("FILE", file)->required();
  dot_cmd->add_option("-o,--output", out_path);

  auto* fixture_cmd = app.add_subcommand("fixture", "print a bundled example machine");
  fixture_cmd->add_option("NAME", fixture_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  if (compare_cmd->parsed() && !inclusion && !equivalence) {
    std::cerr << "compare: one of --inclusion or --equivalence is required\n";
    return kUsage;
  }

  const alca::InclusionOptions opt{budget};
  try {
    if (validate_cmd->parsed()) {
      alca::Machine m = load(file);
      std::cout << "ok: " << m.state_count() << " states, " << m.transitions.size() << " transitions, "
                << (m.is_fsm() ? "fsm" : "tfsm") << "\n";
      return kHolds;
    }
    if (fixture_cmd->parsed()) {
      std::cout << alca::serialize_machine(alca::fixture(fixture_name).machine);
      return kHolds;
    }
    if (trim_cmd->parsed()) {
      write_output(out_path, alca::serialize_machine(alca::trim(load(file))));
      return kHolds;
    }
    if (dot_cmd->parsed()) {
      write_output(out_path, alca::export_dot(load(file)));
      return kHolds;
    }

    const alca::Machine m = alca::trim(load(file));
    const alca::Alphabet& a = m.alphabet;

    if (dominoes_cmd->parsed()) {
      if (!window.empty()) {
        if (window[0] < 0 || window[1] < -1) throw CLI::ValidationError("--window", "times must be natural");
        auto set = alca::restrict_window(m, static_cast<alca::Time>(window[0]), window[1]);
        std::cout << "t=[" << window[0] << "," << window[1] << "]: " << alca::spell(a, set) << "\n";
        return kHolds;
      }
      auto p = alca::domino_profile(m, l);
      for (alca::Time t = 0; t < p.sets.from; ++t) std::cout << "t=" << t << ": " << alca::spell(a, p.at(t)) << "\n";
      for (alca::Time i = 0; i < p.sets.period; ++i)
        std::cout << profile_line_label(p.sets, i) << ": " << alca::spell(a, p.sets.cycle[i]) << "\n";
      return kHolds;
    }
    if (approx_cmd->parsed()) {
      alca::Machine out = alca::strongest(m, l, parse_kind(kind));
      write_output(out_path, alca::serialize_machine(out));
      if (!dot_path.empty()) write_output(dot_path, alca::export_dot(out));
      return kHolds;
    }
    if (check_cmd->parsed()) {
      auto r = alca::is_l_complete(m, l, parse_kind(kind), opt);
      std::cout << (r.holds ? "holds" : "fails") << ": " << kind << " " << l << "-complete\n";
      std::cout << "approximation states: " << r.approximation_state_count << "\n";
      print_witness(a, r.witness);
      return r.holds ? kHolds : kFails;
    }
    if (minimal_cmd->parsed()) {
      auto found = alca::minimal_l(m, parse_kind(kind), l_max, opt);
      if (found) {
        std::cout << *found << "\n";
        return kHolds;
      }
      std::cout << "none ≤ " << l_max << "\n";
      return kFails;
    }
    if (invariance_cmd->parsed()) {
      auto v = strict ? alca::is_strictly_time_invariant(m, opt) : alca::is_time_invariant(m, opt);
      std::cout << (v.holds ? "holds" : "fails") << ": " << (strict ? "strictly " : "") << "time invariant\n";
      print_witness(a, v.witness);
      return v.holds ? kHolds : kFails;
    }
    if (compare_cmd->parsed()) {
      const alca::Machine other = alca::trim(load(file2));
      auto v = inclusion ? alca::includes(other, m, opt) : alca::equivalent(m, other, opt);
      std::cout << (v.holds ? "holds" : "fails") << "\n";
      if (v.witness) std::cout << alca::spell(a, *v.witness) << "\n";
      return v.holds ? kHolds : kFails;
    }
    if (member_cmd->parsed()) {
      auto w = alca::make_lasso(a.read(prefix), a.read(cycle));
      bool in = alca::lasso_member(m, w);
      std::cout << (in ? "member" : "not a member") << "\n";
      return in ? kHolds : kFails;
    }
  } catch (const alca::ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const alca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
