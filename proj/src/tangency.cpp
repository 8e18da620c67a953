#include "polybound/tangency.hpp"

#include <algorithm>
#include <chrono>

namespace polybound {

namespace {

void check_input(const QPoly& p, const Point& a) {
    if (p.is_constant()) throw ConstantPolynomial();
    if (a.size() != p.registry()->size()) throw DimensionMismatch();
}

// Registry extended by the named helper variables, plus the identity remap of
// the original ones.
RegistryPtr extend_registry(const RegistryPtr& reg, const std::vector<std::string>& bases,
                            std::vector<int>* new_indices) {
    VarRegistry names = *reg;
    for (const auto& base : bases) {
        std::string name = fresh_var_name(names, base);
        new_indices->push_back(static_cast<int>(names.size()));
        names.push_back(name);
    }
    return make_registry(names);
}

std::vector<int> identity_map(std::size_t n) {
    std::vector<int> m(n);
    for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i);
    return m;
}

} // namespace

TangencySystem build_tangency_system(const QPoly& p, const Point& a) {
    check_input(p, a);
    std::size_t n = a.size();
    FPoly pf = lift_to_felem(p);
    TangencySystem sys{{}, pf, a};
    FPoly dn = pf.partial_derivative(static_cast<int>(n) - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        FPoly xi = FPoly::variable(pf.registry(), static_cast<int>(i)) -
                   FPoly::constant(pf.registry(), FElem(a[i]));
        FPoly xn = FPoly::variable(pf.registry(), static_cast<int>(n) - 1) -
                   FPoly::constant(pf.registry(), FElem(a[n - 1]));
        sys.phis.push_back(xi * dn - xn * pf.partial_derivative(static_cast<int>(i)));
    }
    FPoly sphere(pf.registry());
    for (std::size_t j = 0; j < n; ++j) {
        FPoly d = FPoly::variable(pf.registry(), static_cast<int>(j)) -
                  FPoly::constant(pf.registry(), FElem(a[j]));
        sphere += d * d;
    }
    sys.phis.push_back(sphere.scaled(FElem::pi()) - FPoly::constant(pf.registry(), FElem(1)));
    return sys;
}

IdealSpec build_ideal_I(const QPoly& p, const Point& a) {
    TangencySystem sys = build_tangency_system(p, a);
    std::size_t n = a.size();
    std::vector<int> extra;
    RegistryPtr ext = extend_registry(p.registry(), {"s", "t"}, &extra);
    int s_idx = extra[0], t_idx = extra[1];
    auto remap = identity_map(n);

    IdealSpec spec;
    FPoly pe = sys.p.remapped(ext, remap);
    spec.generators.push_back(pe - FPoly::variable(ext, t_idx));
    for (const auto& phi : sys.phis) spec.generators.push_back(phi.remapped(ext, remap));
    FPoly dn = pe.partial_derivative(static_cast<int>(n) - 1);
    spec.generators.push_back(FPoly::variable(ext, s_idx) * dn -
                              FPoly::constant(ext, FElem(1)));

    spec.order.perm.push_back(s_idx);
    for (std::size_t i = 0; i < n; ++i) spec.order.perm.push_back(static_cast<int>(i));
    spec.order.perm.push_back(t_idx);
    return spec;
}

IdealSpec build_ideal_J(const QPoly& p, const Point& a) {
    TangencySystem sys = build_tangency_system(p, a);
    std::size_t n = a.size();
    std::vector<int> extra;
    RegistryPtr ext = extend_registry(p.registry(), {"s"}, &extra);
    int s_idx = extra[0];
    auto remap = identity_map(n);

    IdealSpec spec;
    for (const auto& phi : sys.phis) spec.generators.push_back(phi.remapped(ext, remap));
    FPoly dn = sys.p.remapped(ext, remap).partial_derivative(static_cast<int>(n) - 1);
    spec.generators.push_back(FPoly::variable(ext, s_idx) * dn -
                              FPoly::constant(ext, FElem(1)));

    spec.order.perm.push_back(s_idx);
    for (std::size_t i = n; i-- > 0;) spec.order.perm.push_back(static_cast<int>(i));
    return spec;
}

namespace {

// Square-free canonical generator of the elimination ideal down to `var`,
// which must be the least significant variable of the basis order.
UPoly eliminated_generator(const GroebnerBasis& gb, int var) {
    std::vector<FPoly> elim = eliminate(gb, {var});
    if (elim.empty()) throw ZeroEliminationIdeal();
    // powers of one variable divide each other, so a reduced basis has exactly
    // one element down here
    UPoly bar = upoly_from_mpoly(elim.front(), var);
    if (bar.degree() == 0) return UPoly(1);
    return square_free_part(bar);
}

UPoly upoly_mod(const UPoly& a, const UPoly& m) { return divmod(a, m).second; }

// p restricted to the variety of J via the shape-position parametrization,
// reduced modulo theta: a univariate polynomial in the last basis variable.
UPoly restrict_p(const QPoly& p, const GroebnerBasis& gb, const ShapePosition& sp) {
    int x1 = gb.order.perm.back();
    UPoly theta = upoly_from_mpoly(sp.theta, x1);
    std::vector<UPoly> images(gb.registry->size());
    images[static_cast<std::size_t>(x1)] = upoly_mod(UPoly::variable(), theta);
    for (const auto& [var, expr] : sp.coordinates)
        images[static_cast<std::size_t>(var)] = upoly_mod(upoly_from_mpoly(expr, x1), theta);
    FPoly pl = lift_to_felem(p).remapped(gb.registry, identity_map(p.registry()->size()));
    UPoly out;
    for (const auto& [m, c] : pl.terms()) {
        UPoly term{UPoly(c)};
        for (std::size_t i = 0; i < m.e.size(); ++i)
            for (int k = 0; k < m.e[i]; ++k) term = upoly_mod(term * images[i], theta);
        out += term;
    }
    return upoly_mod(out, theta);
}

// Polynomial whose roots are the values of ppar at the roots of theta,
// computed as Res_x(theta, c*t - c*ppar). Evaluating the resultant at integer
// nodes t = 0..m and interpolating keeps the heavy arithmetic inside Q[w]
// instead of the fraction field.
UPoly value_poly_by_resultant(const UPoly& ppar, const UPoly& theta) {
    std::vector<PiPoly> th = cleared_coeffs(theta);
    int m = static_cast<int>(th.size()) - 1;
    PiPoly c(1);
    for (const auto& co : ppar.coeffs())
        if (!co.is_zero()) c = pipoly_lcm(c, co.den());
    std::vector<PiPoly> pr;
    for (const auto& co : ppar.coeffs())
        pr.push_back(co.is_zero() ? PiPoly() : co.num() * c.div_exact(co.den()));
    while (!pr.empty() && pr.back().is_zero()) pr.pop_back();

    std::vector<PiPoly> vals;
    for (int j = 0; j <= m; ++j) {
        std::vector<PiPoly> b;
        for (const auto& row : pr) b.push_back(-row);
        if (b.empty()) b.push_back(PiPoly());
        b[0] += c * PiPoly(j);
        vals.push_back(rows_resultant(th, b));
    }
    UPoly acc;
    for (int j = 0; j <= m; ++j) {
        if (vals[static_cast<std::size_t>(j)].is_zero()) continue;
        UPoly basis(FElem(1));
        long denom = 1;
        for (int k = 0; k <= m; ++k) {
            if (k == j) continue;
            basis = basis * (UPoly::variable() - UPoly(static_cast<long>(k)));
            denom *= static_cast<long>(j - k);
        }
        acc += basis.scaled(FElem(vals[static_cast<std::size_t>(j)]) / FElem(PiPoly(denom)));
    }
    return acc;
}

// The shape-position shortcut; empty when the basis is not in shape position.
std::optional<UPoly> phi_from_shape(const QPoly& p, const GroebnerBasis& gb) {
    if (gb.elements.size() == 1 && gb.elements[0].is_constant()) return UPoly(1);
    ShapePosition sp = shape_position(gb);
    if (!sp.is_shape) return std::nullopt;
    int x1 = gb.order.perm.back();
    UPoly theta = upoly_from_mpoly(sp.theta, x1);
    UPoly ppar = restrict_p(p, gb, sp);
    return square_free_part(value_poly_by_resultant(ppar, theta));
}

} // namespace

UPoly compute_phi_elimination(const QPoly& p, const Point& a, const GroebnerBudget& budget,
                              GroebnerStats* stats) {
    IdealSpec spec = build_ideal_I(p, a);
    GroebnerBasis gb = buchberger(spec, budget, stats);
    return eliminated_generator(gb, spec.order.perm.back());
}

UPoly compute_phi(const QPoly& p, const Point& a, const GroebnerBudget& budget,
                  GroebnerStats* stats) {
    IdealSpec spec = build_ideal_J(p, a);
    GroebnerBasis gb = buchberger(spec, budget, stats);
    if (auto phi = phi_from_shape(p, gb)) return *phi;
    return compute_phi_elimination(p, a, budget, stats);
}

std::pair<UPoly, GroebnerBasis> compute_theta(const QPoly& p, const Point& a,
                                              const GroebnerBudget& budget,
                                              GroebnerStats* stats) {
    IdealSpec spec = build_ideal_J(p, a);
    GroebnerBasis gb = buchberger(spec, budget, stats);
    UPoly theta = eliminated_generator(gb, spec.order.perm.back());
    return {std::move(theta), std::move(gb)};
}

TangencyReport test_condition_C(const QPoly& p, const Point& a, const GroebnerBudget& budget,
                                GroebnerStats* stats, TangencyTimings* timings) {
    const auto t0 = std::chrono::steady_clock::now();
    auto lap = [last = t0](double& out) mutable {
        auto now = std::chrono::steady_clock::now();
        out = std::chrono::duration<double, std::milli>(now - last).count();
        last = now;
    };
    TangencyTimings local;
    TangencyReport rep;
    rep.point = a;
    IdealSpec spec = build_ideal_J(p, a);
    GroebnerBasis gb = buchberger(spec, budget, stats);
    rep.theta = eliminated_generator(gb, spec.order.perm.back());
    lap(local.theta_ms);
    if (auto phi = phi_from_shape(p, gb)) {
        rep.phi = *phi;
        if (rep.phi.degree() == 0 && rep.theta.degree() == 0)
            rep.t_good = true; // empty tangency set: nothing to certify
        else
            rep.t_good = rep.theta.degree() == rep.phi.degree();
    } else {
        rep.phi = compute_phi_elimination(p, a, budget, stats);
        rep.t_good = false;
    }
    lap(local.phi_ms);
    rep.shape_basis = std::move(gb);
    if (timings) *timings = local;
    return rep;
}

} // namespace polybound
