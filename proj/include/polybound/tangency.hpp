#pragma once

#include <optional>
#include <utility>

#include "polybound/groebner.hpp"
#include "polybound/upoly.hpp"

namespace polybound {

/// The tangency system for p at the center a: for i < n the proportionality
/// conditions between the gradient and the radius vector, and for i = n the
/// infinitesimal sphere itself.
struct TangencySystem {
    std::vector<FPoly> phis; // over the unextended registry, lifted to Q(w)
    FPoly p;
    Point a;
};

TangencySystem build_tangency_system(const QPoly& p, const Point& a);

/// Ideal over s > x1 > ... > xn > t with generators
/// {p - t, Phi_1, ..., Phi_n, s*dp/dxn - 1}; s and t are appended to the
/// registry under collision-free names.
IdealSpec build_ideal_I(const QPoly& p, const Point& a);

/// Ideal over s > xn > ... > x1 with generators {Phi_1, ..., Phi_n,
/// s*dp/dxn - 1}.
IdealSpec build_ideal_J(const QPoly& p, const Point& a);

/// Square-free generator of the t-elimination ideal of I, canonical form.
/// The unit ideal yields the constant 1. When the basis of J is in shape
/// position the generator is obtained from the characteristic polynomial of
/// multiplication by p modulo theta; otherwise it falls back to the direct
/// elimination below.
UPoly compute_phi(const QPoly& p, const Point& a, const GroebnerBudget& budget = {},
                  GroebnerStats* stats = nullptr);

/// Reference path: the same generator read off the reduced basis of I itself.
/// Exponentially slower on larger inputs; kept as an independent oracle.
UPoly compute_phi_elimination(const QPoly& p, const Point& a, const GroebnerBudget& budget = {},
                              GroebnerStats* stats = nullptr);

/// Square-free generator of the x1-elimination ideal of J, canonical form,
/// together with the reduced basis of J for the shape test.
std::pair<UPoly, GroebnerBasis> compute_theta(const QPoly& p, const Point& a,
                                              const GroebnerBudget& budget = {},
                                              GroebnerStats* stats = nullptr);

struct TangencyReport {
    Point point;
    UPoly phi;
    UPoly theta;
    bool t_good = false;
    std::optional<GroebnerBasis> shape_basis;
};

/// Wall-clock milliseconds of the two kernel phases of the condition test:
/// the basis-and-theta computation and the phi computation.
struct TangencyTimings {
    double theta_ms = 0.0;
    double phi_ms = 0.0;
};

/// Sufficient test for T-goodness: deg theta = deg phi and the basis of J is
/// in shape position. Both elimination ideals trivial (empty tangency set)
/// counts as vacuously good.
TangencyReport test_condition_C(const QPoly& p, const Point& a,
                                const GroebnerBudget& budget = {},
                                GroebnerStats* stats = nullptr,
                                TangencyTimings* timings = nullptr);

} // namespace polybound
