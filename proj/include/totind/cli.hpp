#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "totind/enumeration.hpp"
#include "totind/report.hpp"

namespace totind::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Environment variable overriding the enumeration ceiling.
inline constexpr const char* kCeilingEnv = "TOTIND_MAX_ORDER";

enum class Command { invariants, verify, sweep, sharpness, figures };
enum class InputFormat { automatic, edge_list, graph6 };

struct RunConfig {
  Command command = Command::figures;
  std::optional<std::string> input;
  InputFormat input_format = InputFormat::automatic;
  int n_max = 5;
  int order = 0;  // sharpness
  std::optional<int> degree;
  OutputFormat output = OutputFormat::table;
  int workers = 1;
  std::vector<std::string> checks;
  int ceiling = kDefaultCeiling;
  bool allow_large = false;
};

/// Ceiling from kCeilingEnv when set and valid, else kDefaultCeiling.
int ceiling_from_environment();

/// Reads graphs from text in the given format; automatic picks the edge
/// list format when the first meaningful line starts with "n ".
std::vector<Graph> read_graphs(const std::string& text, InputFormat format);

struct FigureCheck {
  std::string figure;
  std::string quantity;
  std::string expected;
  std::string actual;
  bool ok = false;
};

/// Worked examples: both basic-definition figures, the K_{2,3} analysis and
/// the K_3 / K_5 sharpness cases.
std::vector<FigureCheck> figure_regressions();

/// Executes one command. Returns kExitOk, kExitUsage (I/O, parse or input
/// errors) or kExitViolation (some relation failed).
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace totind::cli
