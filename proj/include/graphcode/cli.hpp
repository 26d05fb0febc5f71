#pragma once

// Command-line front end. Exit codes: 0 success, 1 verified false (with a
// certificate), 2 usage or input error, 3 cap or budget exceeded.

#include <iosfwd>
#include <string>
#include <vector>

#include "graphcode/graph.hpp"

namespace graphcode {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRejected = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitLimit = 3;

/// Hard dimension cap for `construct` without --allow-large-dim.
inline constexpr int kCliDimCap = 24;

/// Runs the CLI on `args` (without the program name). Primary outputs
/// without an -o path go to `out`, diagnostics to `err`. Reads stdin for
/// "-" inputs.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

/// Graph from a generator spec: family name followed by its parameters,
/// e.g. {"product", "c3", "c3"} or {"random", "50", "10"}. Families: kn,
/// cycle, product, cyclepow, hn, cliquechain, random. The seed only
/// affects "random".
Graph generate_graph(const std::vector<std::string>& spec, std::uint64_t seed = 0);

/// File path, "-" for stdin, or "gen:family:param:..." (random graphs use
/// seed 0 unless a final "seed=S" field is given).
Graph load_graph_arg(const std::string& arg);

}  // namespace graphcode
