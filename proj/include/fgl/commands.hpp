#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fgl {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2, kExitConstruction = 3 };

struct ConstructArgs {
  std::string family;
  unsigned n = 0;
  std::string pi = "chi";
  std::filesystem::path out;
  std::optional<std::string> format;  // overrides the extension
  std::optional<std::filesystem::path> cache;
};

struct VerifyArgs {
  std::string family;
  unsigned n = 0;
  std::string verify_orders = "sampled";
  std::uint64_t samples = 1'000'000;
  std::optional<std::filesystem::path> out;
  std::optional<std::filesystem::path> cache;
};

struct AnalyzeArgs {
  std::filesystem::path input;
  std::vector<std::string> checks;
  /// JSON array of class labels, or a metadata sidecar with a "sylow" array.
  std::optional<std::filesystem::path> partition;
  std::optional<std::filesystem::path> out;
};

struct ReportArgs {
  unsigned max_n = 4;
  std::optional<std::filesystem::path> cache;
};

/// Either converts `input` or builds `graph` ("chi", "pi", "phi",
/// "commuting", "omega-multipartite", "omega-cliques") for family/n.
struct ExportArgs {
  std::optional<std::filesystem::path> input;
  std::string family;
  unsigned n = 0;
  std::string graph = "chi";
  std::filesystem::path out;
  std::optional<std::string> format;
};

int cmd_construct(const ConstructArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err);
int cmd_analyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);
int cmd_report(const ReportArgs& args, std::ostream& out, std::ostream& err);
int cmd_export(const ExportArgs& args, std::ostream& out, std::ostream& err);

/// "<path>.meta.json".
std::filesystem::path sidecar_path(const std::filesystem::path& graph_path);

}  // namespace fgl
