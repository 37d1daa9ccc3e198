#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace gphi::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // a disagreement witness was found
  kInputError = 2,
};

struct AnalyzeOptions {
  bool verdict = false;
  bool schmidt = false;
  std::optional<std::filesystem::path> dot_path;
  std::optional<std::filesystem::path> json_path;
  std::size_t max_order = 1024;
  std::size_t max_lattice = 256;
};

struct VerifyOptions {
  unsigned parallel = 1;
  std::optional<std::size_t> max_order;
  std::optional<std::size_t> max_lattice;
};

int cmd_build(const std::filesystem::path& descriptor, const std::filesystem::path& out, std::size_t max_order,
              std::ostream& log, std::ostream& err);

/// `group` is a Cayley-table file, a descriptor JSON file (*.json), or an
/// inline descriptor starting with '{'.
int cmd_analyze(const std::string& group, const AnalyzeOptions& options, std::ostream& out, std::ostream& err);

int cmd_verify_catalog(const std::filesystem::path& catalog, const std::filesystem::path& out_dir,
                       const VerifyOptions& options, std::ostream& out, std::ostream& err);

/// Full command line, argv[0] included.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gphi::cli
