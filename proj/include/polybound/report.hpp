#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polybound/decide.hpp"

namespace polybound {

/// Condensed outcome of one principal-minor decision inside a convexity run.
struct MinorSummary {
    std::vector<int> index_set; // 1-based Hessian rows/columns
    bool verdict = false;
    std::optional<int> constant_sign; // set when the minor was constant
    std::optional<int> v;             // set when the pipeline ran
    std::optional<Point> point;
};

/// One result row. Every field below has a fixed key in the JSON rendering;
/// fields a subcommand does not produce render as null (minors: empty array).
struct Report {
    std::string command;
    std::string input; // canonical form of the parsed input
    std::vector<std::string> vars;
    std::optional<Point> point;
    std::optional<bool> t_good;
    std::optional<UPoly> theta;
    std::optional<UPoly> phi;
    std::optional<SturmReport> sturm;
    std::optional<std::vector<UPoly>> sequence;
    std::optional<bool> verdict;
    std::optional<int> retries;
    std::optional<PhaseTimings> timings;
    std::optional<GroebnerStats> stats;
    std::vector<MinorSummary> minors;
    std::optional<std::vector<int>> first_failure;
    std::optional<std::string> error;
};

/// w-polynomial as ascending-power rows after canonical normalization:
/// out[i][j] is the integer coefficient of w^j inside the t^i coefficient,
/// rendered as a decimal string so arbitrary precision survives JSON. A zero
/// coefficient row is an empty array.
std::vector<std::vector<std::string>> upoly_rows(const UPoly& f);

/// Fixed-schema JSON object on a single newline-terminated line. Rational
/// numbers (point coordinates) are decimal or a/b strings; w-polynomials use
/// upoly_rows.
std::string report_json(const Report& r);

/// Human-readable rendering: one table row for decisions, a short block for
/// the tangency and sturm subcommands.
std::string report_text(const Report& r);

} // namespace polybound
