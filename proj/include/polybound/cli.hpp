#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polybound/decide.hpp"

namespace polybound {

/// Command-line front end; args exclude the program name. Subcommands:
/// lbound, nonneg, convex, tangency, sturm, table. Exit status: 0 decided
/// true (or query completed), 1 decided false, 2 inconclusive, 3 usage or
/// input error, 4 resource limit exceeded, 5 internal error. Reports go to
/// out (JSON with --json), diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Lower-boundedness decisions for every line of a batch stream, rendered as
/// an aligned table (input, deg phi, v_F, v_R, output, time). Line format:
///   expr [| point=a1,a2,...] [| vars=x1,x2,...]
/// Blank lines and lines starting with # are skipped; a failing line yields a
/// row marked with the error and the batch continues. Returns 0.
int emit_table(std::istream& batch, std::ostream& out, std::ostream& err,
               const DecideConfig& base = {});

} // namespace polybound
