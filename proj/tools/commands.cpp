#include "commands.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gphi/analysis.hpp"
#include "gphi/catalog.hpp"
#include "gphi/descriptor.hpp"
#include "gphi/errors.hpp"
#include "gphi/lattice.hpp"
#include "gphi/report_json.hpp"

namespace gphi::cli {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json read_json_file(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw GroupError(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw GroupError(ErrorKind::ParseError, "'" + path.string() + "' is not valid JSON: " + e.what());
  }
}

GroupTable load_group(const std::string& spec, std::size_t max_order) {
  if (!spec.empty() && spec.front() == '{') {
    json j;
    try {
      j = json::parse(spec);
    } catch (const json::parse_error& e) {
      throw GroupError(ErrorKind::ParseError, std::string("inline descriptor is not valid JSON: ") + e.what());
    }
    return build_group(GroupDescriptor::from_json(j), {max_order, fs::current_path()});
  }
  const fs::path path(spec);
  if (path.extension() == ".json") {
    return build_group(GroupDescriptor::from_json(read_json_file(path)), {max_order, path.parent_path()});
  }
  auto g = load_cayley_file(path);
  if (g.order() > max_order) {
    throw GroupError(ErrorKind::SizeBudgetExceeded, "table of order " + std::to_string(g.order()) +
                                                        " exceeds the size budget " + std::to_string(max_order));
  }
  return g;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw GroupError(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int cmd_build(const fs::path& descriptor, const fs::path& out, std::size_t max_order, std::ostream& log,
              std::ostream& err) {
  try {
    const auto d = GroupDescriptor::from_json(read_json_file(descriptor));
    const auto g = build_group(d, {max_order, descriptor.parent_path()});
    std::ostringstream text;
    write_cayley(text, g);
    write_file(out, text.str());
    log << "wrote " << to_string(d.kind) << " group of order " << g.order() << " to " << out.string() << '\n';
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_analyze(const std::string& group, const AnalyzeOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const GroupTable g = load_group(group, options.max_order);
    const LatticeOptions lopts{options.max_lattice, std::nullopt};
    int code = kOk;

    json report;
    report["order"] = g.order();
    report["phi_report"] = phi_report(g);

    std::optional<Lattice> lattice;
    auto need_lattice = [&]() -> const Lattice& {
      if (!lattice) lattice = all_subgroups(g, lopts);
      return *lattice;
    };

    if (options.verdict) {
      const auto v = verify_theorem(g, need_lattice());
      report["verdict"] = v;
      if (!v.agrees) {
        err << std::boolalpha << "classification disagreement: cond1 holds, cond2=" << v.cond2
            << ", classified=" << v.classified << '\n';
        code = kViolation;
      }
    }
    if (options.schmidt) {
      if (is_schmidt(g, need_lattice())) {
        const auto s = schmidt_structure_report(g, lopts);
        report["schmidt"] = s;
        if (!s.all_clauses()) {
          err << "Schmidt structure clause fails\n";
          code = kViolation;
        }
      } else {
        report["schmidt"] = json{{"is_schmidt", false}};
      }
    }
    if (options.dot_path) {
      const auto& l = need_lattice();
      write_file(*options.dot_path, lattice_to_dot(l, phi_annotations(g, l)));
    }
    if (options.json_path) {
      json full = report;
      if (g.order() <= options.max_lattice) {
        const auto& l = need_lattice();
        full["lattice"] = lattice_to_json(l, phi_annotations(g, l));
      }
      write_file(*options.json_path, full.dump(2) + "\n");
    }
    out << report.dump(2) << '\n';
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

int cmd_verify_catalog(const fs::path& catalog, const fs::path& out_dir, const VerifyOptions& options,
                       std::ostream& out, std::ostream& err) {
  CatalogRun run;
  try {
    auto spec = CatalogSpec::load(catalog);
    if (options.max_order) spec.max_order = *options.max_order;
    if (options.max_lattice) spec.max_lattice = *options.max_lattice;
    run = run_catalog(spec, std::max(1U, options.parallel), catalog.parent_path());
    fs::create_directories(out_dir);
    write_file(out_dir / "catalog_summary.tsv", summary_tsv(run));
    write_file(out_dir / "catalog_report.json", report_json(run).dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  for (const auto& msg : run.input_errors) err << "error: " << msg << '\n';
  if (!run.input_errors.empty()) return kInputError;

  std::size_t failed = 0;
  std::vector<std::string> nonnilpotent;
  for (const auto& r : run.results) {
    for (const auto& f : r.failures) err << "violation: " << r.name << ": " << f << '\n';
    if (!r.ok()) ++failed;
    if (r.nonnilpotent_cond1) nonnilpotent.push_back(r.name);
  }
  out << run.results.size() << " groups checked, " << failed << " with violations\n";
  out << "non-nilpotent groups with phi(H) != 0 for all subgroups: ";
  if (nonnilpotent.empty()) out << "none";
  for (std::size_t i = 0; i < nonnilpotent.size(); ++i) out << (i ? ", " : "") << nonnilpotent[i];
  out << '\n';
  return failed == 0 ? kOk : kViolation;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized Euler totient and subgroup-lattice toolkit for finite groups", "gphi"};
  app.require_subcommand(1);

  std::string descriptor;
  std::string build_out;
  std::size_t build_max_order = 1024;
  auto* build = app.add_subcommand("build", "Build a group from a JSON descriptor and write its Cayley table");
  build->add_option("descriptor", descriptor, "Descriptor JSON file")->required();
  build->add_option("-o,--out", build_out, "Output Cayley-table file")->required();
  build->add_option("--max-order", build_max_order, "Size budget for constructed groups");

  std::string group;
  AnalyzeOptions analyze_opts;
  std::string dot_path;
  std::string json_path;
  auto* analyze = app.add_subcommand("analyze", "Report exponent, phi and order spectrum; optionally verdicts");
  analyze->add_option("group", group, "Cayley-table file, descriptor .json file, or inline JSON descriptor")
      ->required();
  analyze->add_flag("--verdict", analyze_opts.verdict, "Check both phi conditions against the classification");
  analyze->add_flag("--schmidt", analyze_opts.schmidt, "Evaluate the Schmidt-group structure clauses");
  analyze->add_option("--dot", dot_path, "Write the annotated subgroup lattice as Graphviz DOT");
  analyze->add_option("--json", json_path, "Write the full report, including the lattice, as JSON");
  analyze->add_option("--max-order", analyze_opts.max_order, "Size budget for constructed groups");
  analyze->add_option("--max-lattice", analyze_opts.max_lattice, "Largest group whose lattice is enumerated");

  std::string catalog;
  std::string out_dir = "catalog_out";
  VerifyOptions verify_opts;
  std::size_t verify_max_order = 0;
  std::size_t verify_max_lattice = 0;
  auto* verify = app.add_subcommand("verify-catalog", "Run every check over a catalog of groups");
  verify->add_option("catalog", catalog, "Catalog JSON file")->required();
  verify->add_option("--out", out_dir, "Directory for catalog_report.json and catalog_summary.tsv");
  verify->add_option("--parallel", verify_opts.parallel, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--max-order", verify_max_order, "Override the catalog size budget");
  verify->add_option("--max-lattice", verify_max_lattice, "Override the catalog lattice budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  if (*build) return cmd_build(descriptor, build_out, build_max_order, out, err);
  if (*analyze) {
    if (!dot_path.empty()) analyze_opts.dot_path = dot_path;
    if (!json_path.empty()) analyze_opts.json_path = json_path;
    return cmd_analyze(group, analyze_opts, out, err);
  }
  if (verify_max_order) verify_opts.max_order = verify_max_order;
  if (verify_max_lattice) verify_opts.max_lattice = verify_max_lattice;
  return cmd_verify_catalog(catalog, out_dir, verify_opts, out, err);
}

}  // namespace gphi::cli
