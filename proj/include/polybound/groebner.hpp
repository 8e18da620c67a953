#pragma once

#include <vector>

#include "polybound/mpoly.hpp"

namespace polybound {

/// Generators plus the lex order they should be completed under. All
/// generators must share one registry.
struct IdealSpec {
    std::vector<FPoly> generators;
    VarOrder order;
};

struct GroebnerBudget {
    long max_pairs = 200000; // S-pairs processed before giving up
    int max_pi_degree = 4000; // cap on w-degree of any kernel coefficient
};

struct GroebnerStats {
    long pairs_processed = 0;
    long reductions_to_zero = 0;
    long basis_additions = 0;
    int max_pi_degree_seen = 0;
};

/// Reduced basis: monic elements, pairwise head-irreducible, sorted ascending
/// by leading monomial.
struct GroebnerBasis {
    std::vector<FPoly> elements;
    VarOrder order;
    RegistryPtr registry;
};

/// Remainder of f on division by basis (in the given element order);
/// deterministic, exact over Q(w).
FPoly normal_form(const FPoly& f, const std::vector<FPoly>& basis, const VarOrder& ord);

/// Buchberger completion with the normal selection strategy (minimal lcm) and
/// Gebauer-Moeller pair pruning. Deterministic; throws ResourceLimit when the
/// budget is exhausted.
GroebnerBasis buchberger(const IdealSpec& spec, const GroebnerBudget& budget = {},
                         GroebnerStats* stats = nullptr);

/// Basis elements supported entirely on the kept variables, which must be a
/// suffix (least significant block) of the order.
std::vector<FPoly> eliminate(const GroebnerBasis& gb, const std::vector<int>& keep);

/// Detection of the triangular pattern
///   [ theta(x_low), x_v - theta_v(x_low) for every other variable v ].
struct ShapePosition {
    bool is_shape = false;
    FPoly theta; // pure in the lowest variable when is_shape
    std::vector<std::pair<int, FPoly>> coordinates; // (var index, theta_v)
};
ShapePosition shape_position(const GroebnerBasis& gb);

/// Canonical display form: denominators cleared, coefficients Z[w]-primitive
/// as a whole, leading coefficient (in ord) with positive field sign.
FPoly primitive_form(const FPoly& f, const VarOrder& ord);

} // namespace polybound
