#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "gphi/analysis.hpp"
#include "gphi/descriptor.hpp"

namespace gphi {

struct CatalogEntry {
  std::string name;
  GroupDescriptor descriptor;
};

/// {"max_order": 1024, "max_lattice": 256, "entries": [{"name": ..., "descriptor": {...}}]}
struct CatalogSpec {
  std::vector<CatalogEntry> entries;
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t max_lattice = kDefaultMaxLattice;

  /// Throws ParseError (also on duplicate names).
  static CatalogSpec from_json(const nlohmann::json& j);
  static CatalogSpec load(const std::filesystem::path& path);
};

/// Everything checked for one catalog group.
struct EntryResult {
  std::string name;
  std::size_t order = 0;
  PhiReport phi;
  VerdictReport verdict;
  bool nilpotent_lcs = false;
  bool nilpotent_sections = false;
  std::optional<Lemma21Check> lemma21;
  bool schmidt = false;
  std::optional<SchmidtReport> schmidt_report;
  std::optional<Lemma22Probe> lemma22;
  /// Not nilpotent, yet phi(H) != 0 for every subgroup H.
  bool nonnilpotent_cond1 = false;

  /// Human-readable descriptions of every failed cross-check.
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Runs every check on one group.
EntryResult verify_entry(const std::string& name, const GroupTable& g, const LatticeOptions& options);

struct CatalogRun {
  std::vector<EntryResult> results;  // catalog order
  /// Entries that could not be built: "name: message".
  std::vector<std::string> input_errors;

  bool all_ok() const;
};

/// Builds and verifies every entry using up to `parallelism` worker
/// threads. Results are merged by catalog index, so the output does not
/// depend on the thread count.
CatalogRun run_catalog(const CatalogSpec& spec, unsigned parallelism = 1,
                       const std::filesystem::path& base_dir = ".");

nlohmann::json to_json(const EntryResult& r);
nlohmann::json report_json(const CatalogRun& run);

/// Columns: name, order, exp, phi, cond1, cond2, nilpotent, shapes,
/// classified, agrees.
std::string summary_tsv(const CatalogRun& run);

}  // namespace gphi
