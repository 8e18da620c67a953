#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "polybound/mpoly.hpp"
#include "polybound/upoly.hpp"

namespace polybound {

/// Escalating search plan for the exact sampling falsifier.
struct SamplingPlan {
    std::vector<Rat> radii;               // increasing, positive
    int grid_density = 5;                 // points per axis on the boxed grid
    std::vector<Rat> threshold_schedule;  // increasing, positive

    /// Radii 2^0..2^22, a five-point-per-axis grid and thresholds up to 10^6.
    static SamplingPlan defaults();
};

/// Samples p along coordinate/diagonal rays, hyperbola-like paths and a coarse
/// grid, evaluating exactly. Returns the point with the most negative value
/// together with that value, provided it undercuts -M for at least the
/// smallest threshold M of the plan; otherwise nothing. A returned witness is
/// a proof that no lower bound >= -M exists; absence of one proves nothing.
std::optional<std::pair<Point, Rat>> find_unbounded_witness(
    const QPoly& p, const SamplingPlan& plan = SamplingPlan::defaults());

/// Classical single-variable criterion: bounded below exactly when constant,
/// or of even degree with a positive leading coefficient.
/// Throws MultivariateInput when more than one variable occurs.
bool univariate_lower_bounded(const QPoly& p);

/// Counts the real roots of a square-free rational polynomial inside (lo, hi)
/// by recursive sign-change bisection with exact evaluation, splitting down to
/// a proven root-separation width. Fully independent of the Sturm machinery.
/// Throws NotSquareFree, EndpointIsRoot, ZeroPolynomial; coefficients must be
/// plain rationals.
int naive_real_root_count(const UPoly& phi, const Rat& lo, const Rat& hi);

} // namespace polybound
