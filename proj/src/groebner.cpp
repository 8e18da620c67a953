#include "polybound/groebner.hpp"

#include <algorithm>

#include "polybound/errors.hpp"

namespace polybound {

namespace {

// Kernel rows: terms sorted descending in the engine order, coefficients in
// Q[w] kept collectively Z[w]-primitive. A row stands for its polynomial up to
// a nonzero scalar, which is all completion needs.
struct Term {
    Monomial m;
    PiPoly c;
};
using Row = std::vector<Term>;

int max_pi_degree(const Row& r) {
    int d = 0;
    for (const auto& t : r)
        if (!t.c.is_zero()) d = std::max(d, t.c.degree());
    return d;
}

void strip_content(Row& a, Row& b) {
    PiPoly g;
    auto fold_gcd = [&g](const Row& r) {
        for (const auto& t : r) {
            if (g.is_constant() && !g.is_zero()) return;
            g = pipoly_gcd(g, t.c);
        }
    };
    fold_gcd(a);
    fold_gcd(b);
    if (!g.is_zero() && !g.is_constant()) {
        for (auto& t : a) t.c = t.c.div_exact(g);
        for (auto& t : b) t.c = t.c.div_exact(g);
    }
    Rat rc(0);
    auto fold_rc = [&rc](const Row& r) {
        for (const auto& t : r) {
            Rat c = t.c.rational_content();
            rc = (rc == 0) ? c : rat(gcd(rc.get_num(), c.get_num()), lcm(rc.get_den(), c.get_den()));
        }
    };
    fold_rc(a);
    fold_rc(b);
    if (rc != 0 && rc != 1) {
        Rat inv = Rat(1) / rc;
        for (auto& t : a) t.c = t.c.scaled(inv);
        for (auto& t : b) t.c = t.c.scaled(inv);
    }
}

void strip_content(Row& a) {
    Row empty;
    strip_content(a, empty);
}

// cf*h[ih0..] - cg*(u*g[ig0..]), terms kept descending in ord.
Row merge_scaled(const VarOrder& ord, const Row& h, std::size_t ih0, const PiPoly& cf,
                 const Row& g, std::size_t ig0, const PiPoly& cg, const Monomial& u) {
    Row out;
    out.reserve(h.size() + g.size());
    std::size_t ih = ih0, ig = ig0;
    while (ih < h.size() || ig < g.size()) {
        if (ig >= g.size()) {
            out.push_back({h[ih].m, h[ih].c * cf});
            ++ih;
            continue;
        }
        Monomial gm = g[ig].m * u;
        if (ih >= h.size()) {
            out.push_back({std::move(gm), -(g[ig].c * cg)});
            ++ig;
            continue;
        }
        int c = ord.compare(h[ih].m, gm);
        if (c > 0) {
            out.push_back({h[ih].m, h[ih].c * cf});
            ++ih;
        } else if (c < 0) {
            out.push_back({std::move(gm), -(g[ig].c * cg)});
            ++ig;
        } else {
            PiPoly v = h[ih].c * cf - g[ig].c * cg;
            if (!v.is_zero()) out.push_back({h[ih].m, std::move(v)});
            ++ih;
            ++ig;
        }
    }
    return out;
}

struct Engine {
    VarOrder ord;
    RegistryPtr reg;
    GroebnerBudget budget;
    GroebnerStats st;

    std::vector<Row> basis;

    struct Pair {
        Monomial lcm;
        std::size_t i, j;
    };
    std::vector<Pair> pairs;

    void note_degree(const Row& r) {
        int d = max_pi_degree(r);
        st.max_pi_degree_seen = std::max(st.max_pi_degree_seen, d);
        if (d > budget.max_pi_degree)
            throw ResourceLimit("w-degree " + std::to_string(d));
    }

    Row from_fpoly(const FPoly& f) const {
        PiPoly den(1);
        for (const auto& [m, c] : f.terms()) den = pipoly_lcm(den, c.den());
        Row r;
        for (const auto& [m, c] : f.terms())
            r.push_back({m, c.num() * den.div_exact(c.den())});
        std::sort(r.begin(), r.end(),
                  [this](const Term& a, const Term& b) { return ord.greater(a.m, b.m); });
        strip_content(r);
        return r;
    }

    FPoly to_monic_fpoly(const Row& r) const {
        FPoly f(reg);
        if (r.empty()) return f;
        const PiPoly& lead = r.front().c;
        for (const auto& t : r) f.add_term(t.m, FElem(t.c, lead));
        return f;
    }

    Row reduce_full(Row h) {
        Row out;
        int steps = 0;
        while (!h.empty()) {
            const Monomial& lm = h.front().m;
            std::size_t hit = basis.size();
            for (std::size_t k = 0; k < basis.size(); ++k) {
                if (!basis[k].empty() && basis[k].front().m.divides(lm)) {
                    hit = k;
                    break;
                }
            }
            if (hit == basis.size()) {
                out.push_back(std::move(h.front()));
                h.erase(h.begin());
                continue;
            }
            const Row& g = basis[hit];
            Monomial u = lm.div(g.front().m);
            PiPoly a = g.front().c;
            Row next = merge_scaled(ord, h, 1, a, g, 1, h.front().c, u);
            h = std::move(next);
            if (!out.empty())
                for (auto& t : out) t.c = t.c * a;
            if (++steps % 8 == 0) strip_content(h, out);
            if (!h.empty()) note_degree(h);
        }
        strip_content(out);
        note_degree(out);
        return out;
    }

    Row spoly(const Row& f, const Row& g) {
        Monomial l = f.front().m.lcm(g.front().m);
        Monomial uf = l.div(f.front().m);
        Monomial ug = l.div(g.front().m);
        Row lhs;
        lhs.reserve(f.size());
        for (const auto& t : f) lhs.push_back({t.m * uf, t.c});
        Row out = merge_scaled(ord, lhs, 1, g.front().c, g, 1, lhs.front().c, ug);
        strip_content(out);
        return out;
    }

    void add_pairs_for(std::size_t r) {
        const Monomial& lmr = basis[r].front().m;
        std::erase_if(pairs, [&](const Pair& p) {
            if (!lmr.divides(p.lcm)) return false;
            Monomial lir = basis[p.i].front().m.lcm(lmr);
            Monomial ljr = basis[p.j].front().m.lcm(lmr);
            return lir != p.lcm && ljr != p.lcm;
        });
        struct Cand {
            Monomial lcm;
            std::size_t i;
            bool coprime;
        };
        std::vector<Cand> cands;
        for (std::size_t i = 0; i < r; ++i) {
            if (basis[i].empty()) continue;
            const Monomial& lmi = basis[i].front().m;
            cands.push_back({lmi.lcm(lmr), i, lmi.coprime(lmr)});
        }
        std::vector<Cand> kept;
        for (std::size_t a = 0; a < cands.size(); ++a) {
            bool drop = false;
            if (!cands[a].coprime) {
                // another candidate or survivor with (weakly) dividing lcm
                for (std::size_t b = a + 1; b < cands.size() && !drop; ++b)
                    if (cands[b].lcm.divides(cands[a].lcm)) drop = true;
                for (std::size_t b = 0; b < kept.size() && !drop; ++b)
                    if (kept[b].lcm.divides(cands[a].lcm)) drop = true;
            }
            if (!drop) kept.push_back(cands[a]);
        }
        for (const auto& k : kept)
            if (!k.coprime) pairs.push_back({k.lcm, k.i, r});
    }

    void add_element(Row h) {
        basis.push_back(std::move(h));
        ++st.basis_additions;
        add_pairs_for(basis.size() - 1);
    }

    std::size_t pick_best_pair() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < pairs.size(); ++k) {
            int c = ord.compare(pairs[k].lcm, pairs[best].lcm);
            if (c < 0 || (c == 0 && (pairs[k].i < pairs[best].i ||
                                     (pairs[k].i == pairs[best].i && pairs[k].j < pairs[best].j))))
                best = k;
        }
        return best;
    }

    void run() {
        while (!pairs.empty()) {
            if (++st.pairs_processed > budget.max_pairs)
                throw ResourceLimit("pair count " + std::to_string(st.pairs_processed));
            std::size_t k = pick_best_pair();
            Pair p = pairs[k];
            pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(k));
            Row h = reduce_full(spoly(basis[p.i], basis[p.j]));
            if (h.empty())
                ++st.reductions_to_zero;
            else
                add_element(std::move(h));
        }
    }

    std::vector<Row> reduced_rows() {
        std::vector<std::size_t> alive;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].empty()) continue;
            bool dominated = false;
            for (std::size_t j = 0; j < basis.size() && !dominated; ++j) {
                if (i == j || basis[j].empty()) continue;
                const Monomial &mi = basis[i].front().m, &mj = basis[j].front().m;
                if (mj.divides(mi) && (mi != mj || j < i)) dominated = true;
            }
            if (!dominated) alive.push_back(i);
        }
        std::vector<Row> pruned;
        for (auto i : alive) pruned.push_back(basis[i]);
        for (std::size_t i = 0; i < pruned.size(); ++i) {
            Row self = std::move(pruned[i]);
            std::vector<Row> others;
            for (std::size_t j = 0; j < pruned.size(); ++j)
                if (j != i && !pruned[j].empty()) others.push_back(pruned[j]);
            std::swap(basis, others);
            Row r = reduce_full(std::move(self));
            std::swap(basis, others);
            pruned[i] = std::move(r);
        }
        std::erase_if(pruned, [](const Row& r) { return r.empty(); });
        std::sort(pruned.begin(), pruned.end(),
                  [this](const Row& a, const Row& b) { return ord.less(a.front().m, b.front().m); });
        return pruned;
    }
};

} // namespace

FPoly normal_form(const FPoly& f, const std::vector<FPoly>& basis, const VarOrder& ord) {
    for (const auto& g : basis) f.check_registry(g);
    FPoly r(f.registry());
    FPoly h = f;
    while (!h.is_zero()) {
        Monomial lm = h.leading_monomial(ord);
        const FPoly* red = nullptr;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            if (g.leading_monomial(ord).divides(lm)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            FElem c = h.coeff(lm);
            FPoly t(f.registry());
            t.add_term(lm, c);
            r += t;
            h -= t;
            continue;
        }
        Monomial glm = red->leading_monomial(ord);
        FElem factor = h.coeff(lm) / red->coeff(glm);
        FPoly t(f.registry());
        t.add_term(lm.div(glm), factor);
        h -= t * *red;
    }
    return r;
}

GroebnerBasis buchberger(const IdealSpec& spec, const GroebnerBudget& budget,
                         GroebnerStats* stats) {
    if (spec.generators.empty()) throw Error("empty generator list");
    RegistryPtr reg = spec.generators.front().registry();
    for (const auto& g : spec.generators) spec.generators.front().check_registry(g);
    if (spec.order.perm.size() != reg->size()) throw Error("order does not cover registry");

    Engine e;
    e.ord = spec.order;
    e.reg = reg;
    e.budget = budget;

    for (const auto& g : spec.generators) {
        if (g.is_zero()) continue;
        Row red = e.reduce_full(e.from_fpoly(g));
        if (!red.empty()) e.add_element(std::move(red));
    }
    if (e.basis.empty()) throw Error("all generators are zero");
    e.run();
    auto rows = e.reduced_rows();

    GroebnerBasis out;
    out.order = spec.order;
    out.registry = reg;
    for (const auto& r : rows) out.elements.push_back(e.to_monic_fpoly(r));
    if (stats) *stats = e.st;
    return out;
}

std::vector<FPoly> eliminate(const GroebnerBasis& gb, const std::vector<int>& keep) {
    std::size_t k = keep.size();
    if (k == 0 || k > gb.order.perm.size()) throw NotASuffix();
    std::vector<int> suffix(gb.order.perm.end() - static_cast<std::ptrdiff_t>(k),
                            gb.order.perm.end());
    std::vector<int> sorted_keep = keep, sorted_suffix = suffix;
    std::sort(sorted_keep.begin(), sorted_keep.end());
    std::sort(sorted_suffix.begin(), sorted_suffix.end());
    if (sorted_keep != sorted_suffix) throw NotASuffix();

    std::vector<bool> kept(gb.order.perm.size(), false);
    for (int v : keep) kept[static_cast<std::size_t>(v)] = true;
    std::vector<FPoly> out;
    for (const auto& g : gb.elements) {
        bool ok = true;
        for (const auto& [m, c] : g.terms()) {
            for (std::size_t i = 0; i < m.e.size() && ok; ++i)
                if (m.e[i] > 0 && !kept[i]) ok = false;
            if (!ok) break;
        }
        if (ok) out.push_back(g);
    }
    return out;
}

ShapePosition shape_position(const GroebnerBasis& gb) {
    ShapePosition sp;
    std::size_t n = gb.order.perm.size();
    if (gb.elements.size() != n) return sp;
    int low = gb.order.perm.back();

    const FPoly& g0 = gb.elements.front();
    for (const auto& [m, c] : g0.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] > 0 && static_cast<int>(i) != low) return sp;
    if (g0.degree_in(low) < 1) return sp;

    std::vector<std::pair<int, FPoly>> coords;
    for (std::size_t k = 1; k < n; ++k) {
        int v = gb.order.perm[n - 1 - k]; // least significant upward
        const FPoly& g = gb.elements[k];
        Monomial lm = g.leading_monomial(gb.order);
        if (lm != Monomial::var(n, v)) return sp;
        FPoly head(gb.registry);
        head.add_term(lm, g.coeff(lm));
        FPoly tail = g - head; // g = x_v - theta_v, so tail = -theta_v
        for (const auto& [m, c] : tail.terms())
            for (std::size_t i = 0; i < m.e.size(); ++i)
                if (m.e[i] > 0 && static_cast<int>(i) != low) return sp;
        coords.emplace_back(v, -tail);
    }
    sp.is_shape = true;
    sp.theta = g0;
    sp.coordinates = std::move(coords);
    return sp;
}

FPoly primitive_form(const FPoly& f, const VarOrder& ord) {
    if (f.is_zero()) return f;
    PiPoly den(1);
    for (const auto& [m, c] : f.terms()) den = pipoly_lcm(den, c.den());
    std::vector<std::pair<Monomial, PiPoly>> terms;
    PiPoly g;
    for (const auto& [m, c] : f.terms()) {
        terms.emplace_back(m, c.num() * den.div_exact(c.den()));
        if (!(g.is_constant() && !g.is_zero())) g = pipoly_gcd(g, terms.back().second);
    }
    if (!g.is_zero() && !g.is_constant())
        for (auto& [m, c] : terms) c = c.div_exact(g);
    Rat rc(0);
    for (const auto& [m, c] : terms) {
        Rat cc = c.rational_content();
        rc = (rc == 0) ? cc : rat(gcd(rc.get_num(), cc.get_num()), lcm(rc.get_den(), cc.get_den()));
    }
    Monomial lead = f.leading_monomial(ord);
    for (auto& [m, c] : terms)
        if (m == lead && c.scaled(Rat(1) / rc).sign() < 0) rc = -rc;
    FPoly out(f.registry());
    for (auto& [m, c] : terms) out.add_term(m, FElem(c.scaled(Rat(1) / rc)));
    return out;
}

} // namespace polybound
