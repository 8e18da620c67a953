#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polybound/sturm.hpp"
#include "polybound/tangency.hpp"

namespace polybound {

/// Knobs for the decision pipeline. When explicit_point is set it pins the
/// center of every attempt, so a failed certification is immediately
/// inconclusive instead of resampled.
struct DecideConfig {
    std::uint64_t seed = 0;
    int coordinate_bound = 10; // sampled coordinates lie in [-bound, bound]
    int max_retries = 3;       // fresh points tried after the first failure
    GroebnerBudget budget;
    std::optional<Point> explicit_point;
};

/// Wall-clock milliseconds per pipeline phase.
struct PhaseTimings {
    double theta_ms = 0.0;
    double phi_ms = 0.0;
    double sturm_ms = 0.0;
};

/// Outcome of one decision. When constant_input is set the input was decided
/// by the sign of its constant value and the tangency and sturm reports are
/// unpopulated defaults; otherwise verdict == (sturm.v == 0) at the reported
/// point.
struct Decision {
    bool verdict = false;
    Point point;
    TangencyReport tangency;
    SturmReport sturm;
    PhaseTimings timings;
    int retries_used = 0;
    GroebnerStats stats;
    bool constant_input = false;
};

/// Input normalization: constants are tagged and passed through unchanged;
/// a polynomial whose derivative in the last variable vanishes identically
/// gets a random invertible integer change of variables (entries in [-3, 3],
/// row i = image of variable i) so the image depends on the last variable.
/// The change matrix is recorded, empty when no substitution was applied.
struct Preprocessed {
    QPoly p;
    bool is_constant = false;
    std::vector<std::vector<long>> change;
};

Preprocessed preprocess(const QPoly& p, std::uint64_t seed = 0);

/// Deterministic point for (seed, attempt): integer coordinates uniform in
/// [-coordinate_bound, coordinate_bound], never all zero. A configured
/// explicit point is returned unchanged regardless of seed and attempt.
Point sample_point(std::size_t n, const DecideConfig& cfg, int attempt);

/// Is p bounded below over the reals? Constants are immediate. Otherwise
/// sample a center, require the tangency certificate to hold there, and read
/// the verdict off the sign-variation invariant (true iff v == 0). Throws
/// Inconclusive when no certified point is found within the retry budget.
Decision decide_lower_bounded(const QPoly& p, const DecideConfig& cfg = {});

/// Is p everywhere non-negative? Constants by sign. A homogeneous p of
/// positive degree is non-negative iff it is bounded below, so it is decided
/// directly; any other p is decided through its homogenization, whose fresh
/// variable is appended last (an explicit point then needs n+1 coordinates).
Decision decide_nonnegative(const QPoly& p, const DecideConfig& cfg = {});

/// One principal minor's outcome: either the constant-sign shortcut
/// (constant_sign set, no pipeline run) or a full non-negativity decision.
struct MinorDecision {
    std::vector<int> index_set; // 1-based Hessian rows/columns
    std::optional<int> constant_sign;
    std::optional<Decision> decision;
    bool verdict = false;
};

/// Convexity verdict: true iff every principal minor of the Hessian is
/// non-negative everywhere. Minors are visited by size then lexicographic
/// index set and the scan short-circuits at the first failure, which is
/// recorded in first_failure.
struct ConvexityDecision {
    bool verdict = true;
    std::vector<MinorDecision> per_minor;
    std::optional<std::vector<int>> first_failure;
};

ConvexityDecision decide_convex(const QPoly& p, const DecideConfig& cfg = {});

} // namespace polybound
