#include "gphi/catalog.hpp"

#include <atomic>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "gphi/errors.hpp"
#include "gphi/number_theory.hpp"
#include "gphi/report_json.hpp"

namespace gphi {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw GroupError(ErrorKind::ParseError, msg); }

std::size_t read_size(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
    parse_error(std::string("catalog '") + key + "' must be a positive integer");
  }
  return v.get<std::size_t>();
}

const char* flag(bool b) { return b ? "true" : "false"; }

}  // namespace

CatalogSpec CatalogSpec::from_json(const json& j) {
  if (!j.is_object()) parse_error("catalog must be a JSON object");
  CatalogSpec spec;
  spec.max_order = read_size(j, "max_order", kDefaultMaxOrder);
  spec.max_lattice = read_size(j, "max_lattice", kDefaultMaxLattice);
  const auto it = j.find("entries");
  if (it == j.end() || !it->is_array()) parse_error("catalog needs an 'entries' array");
  std::set<std::string> names;
  for (const auto& e : *it) {
    if (!e.is_object() || !e.contains("name") || !e.at("name").is_string() || !e.contains("descriptor")) {
      parse_error("each catalog entry needs a string 'name' and a 'descriptor'");
    }
    CatalogEntry entry{e.at("name").get<std::string>(), GroupDescriptor::from_json(e.at("descriptor"))};
    if (!names.insert(entry.name).second) parse_error("duplicate catalog entry name '" + entry.name + "'");
    spec.entries.push_back(std::move(entry));
  }
  return spec;
}

CatalogSpec CatalogSpec::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) parse_error("cannot open catalog '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    parse_error("catalog '" + path.string() + "' is not valid JSON: " + e.what());
  }
  return from_json(j);
}

EntryResult verify_entry(const std::string& name, const GroupTable& g, const LatticeOptions& options) {
  EntryResult r;
  r.name = name;
  r.order = g.order();
  r.phi = phi_report(g);

  const Lattice l = all_subgroups(g, options);
  r.verdict = verify_theorem(g, l);
  if (!r.verdict.agrees) {
    r.failures.push_back(std::string("classification disagreement: cond1=") + flag(r.verdict.cond1) +
                         " cond2=" + flag(r.verdict.cond2) + " classified=" + flag(r.verdict.classified));
  }

  r.nilpotent_lcs = r.verdict.nilpotent;
  r.nilpotent_sections = is_nilpotent_sections(g, l);
  if (r.nilpotent_lcs != r.nilpotent_sections) {
    r.failures.push_back(std::string("nilpotency mismatch: lower central series says ") + flag(r.nilpotent_lcs) +
                         ", section criterion says " + flag(r.nilpotent_sections));
  }

  if (g.order() > 1 && prime_power_base(g.order()) != 0) {
    r.lemma21 = lemma21_check(g, l);
    if (!r.lemma21->holds) {
      r.failures.push_back(std::string("p-group biconditional fails: cond2=") + flag(r.lemma21->cond2) +
                           " shape=" + std::string(to_string(r.lemma21->shape)));
    }
  }

  r.schmidt = is_schmidt(g, l);
  if (r.schmidt) {
    r.schmidt_report = schmidt_structure_report(g, options);
    if (!r.schmidt_report->all_clauses()) r.failures.push_back("Schmidt structure clause fails");
    if (is_admissible_shape(r.schmidt_report->p_shape)) {
      r.lemma22 = lemma22_case_probe(g, options);
      if (!r.lemma22->contradiction_found) r.failures.push_back("Schmidt case probe found no contradiction");
    }
  }

  r.nonnilpotent_cond1 = !r.nilpotent_lcs && r.verdict.cond1;
  return r;
}

bool CatalogRun::all_ok() const {
  if (!input_errors.empty()) return false;
  for (const auto& r : results) {
    if (!r.ok()) return false;
  }
  return true;
}

CatalogRun run_catalog(const CatalogSpec& spec, unsigned parallelism, const std::filesystem::path& base_dir) {
  const std::size_t n = spec.entries.size();
  std::vector<std::optional<EntryResult>> slots(n);
  std::vector<std::string> errors(n);
  const BuildOptions build{spec.max_order, base_dir};
  const LatticeOptions lattice{spec.max_lattice, std::nullopt};

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      const auto& entry = spec.entries[i];
      try {
        slots[i] = verify_entry(entry.name, build_group(entry.descriptor, build), lattice);
      } catch (const std::exception& e) {
        errors[i] = entry.name + ": " + e.what();
      }
    }
  };

  const auto cap = static_cast<unsigned>(std::max<std::size_t>(n, 1));
  const unsigned threads = std::max(1U, std::min(parallelism, cap));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CatalogRun run;
  for (std::size_t i = 0; i < n; ++i) {
    if (slots[i]) run.results.push_back(std::move(*slots[i]));
    if (!errors[i].empty()) run.input_errors.push_back(errors[i]);
  }
  return run;
}

json to_json(const EntryResult& r) {
  json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["phi_report"] = r.phi;
  j["verdict"] = r.verdict;
  j["nilpotent_lcs"] = r.nilpotent_lcs;
  j["nilpotent_sections"] = r.nilpotent_sections;
  j["lemma21"] = r.lemma21 ? json(*r.lemma21) : json(nullptr);
  j["schmidt"] = r.schmidt;
  j["schmidt_report"] = r.schmidt_report ? json(*r.schmidt_report) : json(nullptr);
  j["lemma22"] = r.lemma22 ? json(*r.lemma22) : json(nullptr);
  j["nonnilpotent_cond1"] = r.nonnilpotent_cond1;
  j["failures"] = r.failures;
  return j;
}

json report_json(const CatalogRun& run) {
  json arr = json::array();
  for (const auto& r : run.results) arr.push_back(to_json(r));
  return arr;
}

std::string summary_tsv(const CatalogRun& run) {
  std::ostringstream out;
  out << "name\torder\texp\tphi\tcond1\tcond2\tnilpotent\tshapes\tclassified\tagrees\n";
  for (const auto& r : run.results) {
    const auto& v = r.verdict;
    out << r.name << '\t' << r.order << '\t' << r.phi.exponent << '\t' << r.phi.phi << '\t' << flag(v.cond1) << '\t'
        << flag(v.cond2) << '\t' << flag(v.nilpotent) << '\t' << format_shapes(v.sylow_shapes) << '\t'
        << flag(v.classified) << '\t' << flag(v.agrees) << '\n';
  }
  return out.str();
}

}  // namespace gphi
