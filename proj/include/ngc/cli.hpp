#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ngc/monoidal.hpp"

namespace ngc {

enum class Command { Classify, Verify, Example, Export, Obstruct };

struct RunConfig {
  Command command = Command::Classify;
  int rank = 1;
  /// Index into enumerate_forms(rank), or "hyperbolic" / "diagonal".
  std::string form = "0";
  int tau_sign = 1;
  bool oracle = false;
  bool json = false;
  std::optional<std::string> input;
  std::optional<std::string> output;
  /// Invariant factors for `obstruct`.
  std::vector<int> group;
  int threads = 1;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// Worker threads: hardware concurrency, capped by NGC_THREADS when set.
int default_threads();

/// The category selected by rank, form and tau_sign. Throws InvalidForm.
MonoidalPtr select_monoidal(const RunConfig& cfg);

int cmd_classify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_example(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_export(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_obstruct(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Parses `args` (without the program name) and runs the command.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngc
