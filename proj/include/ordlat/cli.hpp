#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ordlat/phi.hpp"
#include "ordlat/poset.hpp"

namespace ordlat::cli {

// Exit codes.
inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_usage = 2;

// Runs the command line `args` (without the program name). Reports go to
// `out` unless --output is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Graphviz digraph, drawn bottom-up. Hasse mode keeps only cover edges.
std::string dot_text(const Poset& p, bool hasse);

// Header plus one row per poset; SKIPPED where a dimension was capped.
std::string dimension_csv(const std::vector<DimensionRow>& rows);

}  // namespace ordlat::cli
