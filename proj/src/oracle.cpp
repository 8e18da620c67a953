#include "polybound/oracle.hpp"

#include <algorithm>

#include "polybound/errors.hpp"

namespace polybound {

namespace {

void check_increasing_positive(const std::vector<Rat>& xs, const char* what) {
    if (xs.empty()) throw Error(std::string("sampling plan: empty ") + what);
    Rat prev(0);
    for (const auto& x : xs) {
        if (x <= prev) throw Error(std::string("sampling plan: ") + what + " not increasing");
        prev = x;
    }
}

// All points of the {-1,0,1}^n ray lattice scaled by r, the zero vector
// excluded.
void ray_points(std::size_t n, const Rat& r, std::vector<Point>& out) {
    std::vector<int> d(n, -1);
    while (true) {
        if (std::any_of(d.begin(), d.end(), [](int x) { return x != 0; })) {
            Point p(n);
            for (std::size_t i = 0; i < n; ++i) p[i] = Rat(d[i]) * r;
            out.push_back(std::move(p));
        }
        std::size_t i = 0;
        while (i < n && d[i] == 1) d[i++] = -1;
        if (i == n) break;
        ++d[i];
    }
}

// Escape valleys along x_i ~ r, x_j ~ 1/r for every ordered pair and sign
// choice; the curved paths that plain rays miss.
void hyperbola_points(std::size_t n, const Rat& r, std::vector<Point>& out) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            for (int si : {-1, 1})
                for (int sj : {-1, 1}) {
                    Point p(n, Rat(0));
                    p[i] = Rat(si) * r;
                    p[j] = Rat(sj) / r;
                    out.push_back(std::move(p));
                }
        }
}

void grid_points(std::size_t n, const Rat& r, int density, std::vector<Point>& out) {
    if (density < 2) return;
    double total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= density;
    if (total > 4096) return; // keep the sample budget bounded in high dimension
    std::vector<int> k(n, 0);
    while (true) {
        Point p(n);
        for (std::size_t i = 0; i < n; ++i)
            p[i] = -r + Rat(2 * k[i]) * r / Rat(density - 1);
        out.push_back(std::move(p));
        std::size_t i = 0;
        while (i < n && k[i] == density - 1) k[i++] = 0;
        if (i == n) break;
        ++k[i];
    }
}

} // namespace

SamplingPlan SamplingPlan::defaults() {
    SamplingPlan plan;
    Rat r(1);
    for (int k = 0; k <= 22; ++k, r *= 2) plan.radii.push_back(r);
    plan.grid_density = 5;
    plan.threshold_schedule = {Rat(100), Rat(10000), Rat(1000000)};
    return plan;
}

std::optional<std::pair<Point, Rat>> find_unbounded_witness(const QPoly& p,
                                                            const SamplingPlan& plan) {
    check_increasing_positive(plan.radii, "radii");
    check_increasing_positive(plan.threshold_schedule, "threshold schedule");
    std::size_t n = p.registry()->size();

    std::optional<std::pair<Point, Rat>> best;
    auto consider = [&](Point&& pt) {
        Rat v = p.eval_full(pt);
        if (!best || v < best->second) best = {std::move(pt), std::move(v)};
    };

    consider(Point(n, Rat(0)));
    for (std::size_t ri = 0; ri < plan.radii.size(); ++ri) {
        const Rat& r = plan.radii[ri];
        std::vector<Point> pts;
        ray_points(n, r, pts);
        hyperbola_points(n, r, pts);
        // the grid resolves behaviour near the origin; rays and hyperbolas
        // handle the escapes, so only box the smallest radii
        if (ri < 8) grid_points(n, r, plan.grid_density, pts);
        for (auto& pt : pts) consider(std::move(pt));
    }

    if (best->second < -plan.threshold_schedule.front()) return best;
    return std::nullopt;
}

bool univariate_lower_bounded(const QPoly& p) {
    int var = -1;
    for (const auto& [m, c] : p.terms())
        for (std::size_t i = 0; i < m.e.size(); ++i) {
            if (m.e[i] == 0) continue;
            if (var != -1 && var != static_cast<int>(i))
                throw MultivariateInput("polynomial mentions " + (*p.registry())[i] + " and " +
                                        (*p.registry())[static_cast<std::size_t>(var)]);
            var = static_cast<int>(i);
        }
    if (var == -1) return true; // constant
    int deg = 0;
    Rat lead(0);
    for (const auto& [m, c] : p.terms())
        if (m.e[static_cast<std::size_t>(var)] >= deg) {
            deg = m.e[static_cast<std::size_t>(var)];
            lead = c;
        }
    return deg % 2 == 0 && lead > 0;
}

namespace {

struct Bisector {
    std::vector<Rat> coeffs; // integer, primitive, ascending
    Rat sep;                 // proven lower bound on the distance of distinct roots

    Rat eval(const Rat& x) const {
        Rat acc(0);
        for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
        return acc;
    }

    // upper bound on |phi'| over [-r, r]; evaluated per interval so the bound
    // stays sharp near flat stretches instead of using one global constant
    Rat slope_bound(const Rat& r) const {
        Rat acc(0);
        for (std::size_t i = coeffs.size(); i-- > 1;)
            acc = acc * r + Rat(static_cast<long>(i)) * abs_of(coeffs[i]);
        return acc;
    }

    // roots strictly inside (a, b); both endpoint values nonzero
    int count(const Rat& a, const Rat& b, const Rat& fa, const Rat& fb) const {
        Rat width = b - a;
        Rat lip = slope_bound(std::max(abs_of(a), abs_of(b)));
        if (abs_of(fa) > lip * width || abs_of(fb) > lip * width) return 0;
        if (width < sep) return sign_of(fa) != sign_of(fb) ? 1 : 0;
        Rat mid = (a + b) / 2;
        Rat fm = eval(mid);
        if (fm != 0) return count(a, mid, fa, fm) + count(mid, b, fm, fb);
        // exact root at the midpoint: bracket it by less than the separation
        // bound so the flanks miss no neighbour
        Rat shrink = std::min(Rat(width / 4), Rat(sep / 2));
        Rat gl = eval(mid - shrink), gr = eval(mid + shrink);
        while (gl == 0 || gr == 0) {
            shrink /= 2;
            gl = eval(mid - shrink);
            gr = eval(mid + shrink);
        }
        return count(a, mid - shrink, fa, gl) + 1 + count(mid + shrink, b, gr, fb);
    }
};

} // namespace

int naive_real_root_count(const UPoly& phi, const Rat& lo, const Rat& hi) {
    if (phi.is_zero()) throw ZeroPolynomial("naive root count of zero polynomial");
    if (!(lo < hi)) throw Error("naive_real_root_count: endpoints out of order");
    Bisector bis;
    for (int i = 0; i <= phi.degree(); ++i) {
        const FElem c = phi.coeff(i);
        if (!(c.num().is_zero() || c.num().is_constant()) || !c.den().is_constant())
            throw Error("naive_real_root_count: coefficient depends on the infinitesimal");
        bis.coeffs.push_back(c.num().is_zero() ? Rat(0) : c.num().low_coeff() / c.den().low_coeff());
    }
    if (phi.degree() == 0) return 0;
    if (upoly_gcd(phi, phi.derivative()).degree() > 0)
        throw NotSquareFree("naive root count requires a square-free input");

    // integer primitive rescale: positive, so signs and roots are untouched
    Int den_lcm(1), num_gcd(0);
    for (const auto& c : bis.coeffs) den_lcm = lcm(den_lcm, c.get_den());
    for (auto& c : bis.coeffs) c *= den_lcm;
    for (const auto& c : bis.coeffs) num_gcd = gcd(num_gcd, c.get_num());
    for (auto& c : bis.coeffs) c /= num_gcd;

    int d = phi.degree();
    Rat height(0);
    for (const auto& c : bis.coeffs) height += abs_of(c);
    // crude but valid Mahler-style separation bound: 1 / (d^(d+2) * |phi|_1^(d-1))
    Rat denom = pow_rat(Rat(d), static_cast<unsigned long>(d + 2)) *
                pow_rat(height, static_cast<unsigned long>(d - 1));
    bis.sep = Rat(1) / denom;

    Rat fa = bis.eval(lo), fb = bis.eval(hi);
    if (fa == 0) throw EndpointIsRoot("lower endpoint");
    if (fb == 0) throw EndpointIsRoot("upper endpoint");
    return bis.count(lo, hi, fa, fb);
}

} // namespace polybound
