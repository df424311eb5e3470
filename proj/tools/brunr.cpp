// brunr: command-line front end. See README.md for subcommands, schemas and exit codes.

#include <brunr/cli/commands.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace brunr;
using brunr::cli::Options;
using brunr::cli::Outcome;

/// The mutually exclusive ways of naming a group on the command line.
struct GroupInput {
  std::string abelian, perm, ext, table, group;

  void add_to(CLI::App* app) {
    auto* a = app->add_option("--abelian", abelian, "invariants, e.g. 2,2,2");
    auto* p = app->add_option("--perm", perm, "GroupSpec JSON file of kind permutation");
    auto* e = app->add_option("--ext", ext, "CentralExtensionData or GroupSpec JSON file");
    auto* t = app->add_option("--table", table, "GroupSpec JSON file of kind cayley");
    auto* g = app->add_option("--group", group, "shorthand (abelian:2,2 cyclic:n symmetric:n dihedral:n heisenberg:p) or GroupSpec JSON file");
    for (auto* x : {a, p, e, t, g})
      for (auto* y : {a, p, e, t, g})
        if (x != y) x->excludes(y);
  }

  bool given() const { return !(abelian.empty() && perm.empty() && ext.empty() && table.empty() && group.empty()); }

  io::GroupSpec resolve() const {
    if (!abelian.empty()) {
      auto s = io::group_spec_from_shorthand("abelian:" + abelian);
      return *s;
    }
    if (!perm.empty()) return io::group_spec_from_json(io::read_json_file(perm), io::GroupKind::Permutation);
    if (!table.empty()) return io::group_spec_from_json(io::read_json_file(table), io::GroupKind::Cayley);
    if (!ext.empty()) return io::extension_spec_from_json(io::read_json_file(ext));
    if (!group.empty()) {
      if (auto s = io::group_spec_from_shorthand(group)) return *s;
      return io::group_spec_from_json(io::read_json_file(group));
    }
    throw ParseError("no group given (use --abelian, --perm, --ext, --table or --group)");
  }
};

int emit(const Outcome& out, const Options& o) {
  if (o.json)
    std::cout << out.report.dump(2) << "\n";
  else
    (out.report.contains("error") ? std::cerr : std::cout) << out.text;
  return out.exit_code;
}

/// Runs a parsing step under the same error-to-exit-code mapping as the commands.
Outcome parse_failure(const std::string& command, const Options& o, const std::function<void()>& parse) {
  return cli::run_guarded(command, o, [&] {
    parse();
    return Outcome{};
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"brunr: obstructions to rationality of invariant fields, computed exactly"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opts;
  std::size_t budget = 0;
  std::string family = "bicyclic";
  app.add_flag("--json", opts.json, "print the full JSON report instead of the text summary");
  app.add_flag("--slow", opts.slow, "lift every size budget");
  app.add_option("--budget", budget, "largest group order for brute-force cocycle computations (overrides BRUNR_BUDGET)")->check(CLI::PositiveNumber);
  app.add_option("--family", family, "restriction family for the oracle")->check(CLI::IsMember({"bicyclic", "abelian"}));
  app.add_flag("--seedless", opts.seedless, "no randomness (every computation is already deterministic)");
  app.add_flag("--timing", opts.timing, "add wall-clock timing to the report (makes reports non-reproducible)");

  GroupInput b0_in, lattice_in, sylow_in;
  auto* b0 = app.add_subcommand("b0", "Bogomolov obstruction B0(G)");
  b0_in.add_to(b0);

  auto* classify = app.add_subcommand("classify", "classify S inside Lambda^2 F_p^4 against the Pluecker quadric");
  std::string subspace_file;
  classify->add_option("subspace", subspace_file, "Subspace JSON file")->required();

  auto* examples = app.add_subcommand("examples", "the five obstructed configurations");
  std::string which = "all";
  std::int64_t ex_p = 2;
  examples->add_option("case", which, "1..5 or all");
  examples->add_option("p", ex_p, "prime");

  auto* pfaffian = app.add_subcommand("pfaffian", "block family in Lambda^2 F_p^{2m}");
  std::size_t pf_m = 2;
  std::int64_t pf_p = 2;
  pfaffian->add_option("m", pf_m, "block size")->required();
  pfaffian->add_option("p", pf_p, "prime")->required();

  auto* lattice = app.add_subcommand("lattice", "H^2(G, L) and the multiplicative obstruction");
  lattice_in.add_to(lattice);
  std::string kind = "standard", lattice_file;
  lattice->add_option("--kind", kind, "trivial, regular, pair, augmentation or standard");
  lattice->add_option("--lattice", lattice_file, "GLattice JSON file (replaces the group options and --kind)");

  auto* sylow = app.add_subcommand("sylow", "Sylow subgroup predicates");
  sylow_in.add_to(sylow);

  auto* compare = app.add_subcommand("oracle-compare", "class-2 formula against the cocycle oracle");
  std::string cmp_ext;
  std::int64_t cmp_p = 2;
  std::size_t cmp_d = 3, cmp_r = 2;
  compare->add_option("--ext", cmp_ext, "one central extension (JSON); without it, sweep all small extensions");
  compare->add_option("--p", cmp_p, "sweep prime");
  compare->add_option("--max-gamma-rank", cmp_d, "sweep bound on rank of G/C");
  compare->add_option("--max-c-rank", cmp_r, "sweep bound on rank of C");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kParse;
  }
  if (budget > 0) opts.budget = budget;
  opts.family = family == "abelian" ? cohomology::Family::Abelian : cohomology::Family::Bicyclic;

  auto with_group = [&](const std::string& name, const GroupInput& in, const std::function<Outcome(const io::GroupSpec&)>& f) {
    std::optional<io::GroupSpec> spec;
    auto failed = parse_failure(name, opts, [&] { spec = in.resolve(); });
    if (!spec) return emit(failed, opts);
    return emit(f(*spec), opts);
  };

  if (*b0) return with_group("b0", b0_in, [&](const io::GroupSpec& s) { return cli::cmd_b0(s, opts); });
  if (*sylow) return with_group("sylow", sylow_in, [&](const io::GroupSpec& s) { return cli::cmd_sylow(s, opts); });
  if (*classify) {
    std::optional<io::SubspaceSpec> spec;
    auto failed = parse_failure("classify", opts, [&] { spec = io::subspace_from_json(io::read_json_file(subspace_file)); });
    if (!spec) return emit(failed, opts);
    return emit(cli::cmd_classify(*spec, opts), opts);
  }
  if (*examples) return emit(cli::cmd_examples(which, ex_p, opts), opts);
  if (*pfaffian) return emit(cli::cmd_pfaffian(pf_m, pf_p, opts), opts);
  if (*lattice) {
    std::optional<io::LatticeSpec> spec;
    auto failed = parse_failure("lattice", opts, [&] {
      if (!lattice_file.empty()) {
        if (lattice_in.given()) throw ParseError("--lattice already names the group");
        spec = io::lattice_spec_from_json(io::read_json_file(lattice_file));
        return;
      }
      io::LatticeSpec l;
      l.group = lattice_in.resolve();
      l.kind = lattices::lattice_kind_from_string(kind);
      if (l.kind == lattices::LatticeKind::Custom) throw ParseError("custom lattices need --lattice FILE");
      spec = std::move(l);
    });
    if (!spec) return emit(failed, opts);
    return emit(cli::cmd_lattice(*spec, opts), opts);
  }
  if (*compare) {
    if (cmp_ext.empty()) return emit(cli::cmd_oracle_sweep(cmp_p, cmp_d, cmp_r, opts), opts);
    std::optional<io::GroupSpec> spec;
    auto failed = parse_failure("oracle-compare", opts, [&] {
      spec = io::extension_spec_from_json(io::read_json_file(cmp_ext));
    });
    if (!spec) return emit(failed, opts);
    return emit(cli::cmd_oracle_compare(*spec->extension, opts), opts);
  }
  return cli::kParse;
}
