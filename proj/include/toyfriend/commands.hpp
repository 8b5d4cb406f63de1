#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace toyfriend {

// Command implementations behind the CLI, writing to the given streams and
// returning the process exit code. Kept separate from argument parsing so
// tests can drive them directly.

struct RunOptions {
  std::string format = "human";          // "human" or "json"
  std::optional<std::string> step;       // render only the step matching this label (or unique prefix)
};

struct SimulateOptions {
  std::string file;
  std::string model = "both";            // "toy", "quantum", or "both"
  bool require_match = false;
};

struct CompareOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::uint32_t qubits = 2;
  std::uint32_t depth = 6;
  std::optional<std::string> include_file;
};

// Exit 0 iff every verdict of the protocol run passes.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

// Exit 0 on success; with require_match, exit 1 when toy and oracle disagree.
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);

// Survey tool: exit 0 unless the options are invalid or files fail to load.
int cmd_compare(const CompareOptions& options, std::ostream& out, std::ostream& err);

}  // namespace toyfriend
