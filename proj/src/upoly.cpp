#include "polybound/upoly.hpp"

#include <algorithm>

namespace polybound {

UPoly::UPoly(const FElem& c) {
    if (!c.is_zero()) c_.push_back(c);
}

UPoly::UPoly(std::vector<FElem> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::variable() { return UPoly(std::vector<FElem>{FElem(0), FElem(1)}); }

void UPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FElem UPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return FElem(0);
    return c_[static_cast<std::size_t>(i)];
}

const FElem& UPoly::lc() const {
    if (c_.empty()) throw ZeroPolynomial("leading coefficient of zero polynomial");
    return c_.back();
}

UPoly UPoly::operator-() const {
    UPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FElem(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), FElem(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<FElem> out(a.c_.size() + b.c_.size() - 1, FElem(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    return UPoly(std::move(out));
}

UPoly UPoly::scaled(const FElem& c) const {
    if (c.is_zero()) return UPoly();
    UPoly r = *this;
    for (auto& x : r.c_) x = x * c;
    return r;
}

UPoly UPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    UPoly r;
    r.c_.assign(static_cast<std::size_t>(k), FElem(0));
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

UPoly UPoly::derivative() const {
    UPoly r;
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_.push_back(c_[i] * FElem(static_cast<long>(i)));
    r.trim();
    return r;
}

FElem UPoly::eval(const FElem& x) const {
    FElem acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const FElem& c = c_[i];
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs = c.str();
        if (i == 0) {
            out += cs;
            continue;
        }
        if (c == FElem(1))
            out += var;
        else
            out += cs + "*" + var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DivisionByZero("univariate division by zero");
    UPoly q, r = a;
    FElem inv = FElem(1) / b.lc();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        int k = r.degree() - b.degree();
        FElem c = r.lc() * inv;
        q += UPoly(c).shifted(k);
        r -= b.scaled(c).shifted(k);
    }
    return {q, r};
}

namespace {

// Cleared integer coefficient rows, ascending by degree, trailing zeros removed.
using Rows = std::vector<PiPoly>;

int rows_degree(const Rows& r) { return static_cast<int>(r.size()) - 1; }

void rows_trim(Rows& r) {
    while (!r.empty() && r.back().is_zero()) r.pop_back();
}

Rows clear_denominators(const UPoly& f) {
    Rows rows;
    if (f.is_zero()) return rows;
    PiPoly den(1);
    for (const auto& c : f.coeffs())
        if (!c.is_zero()) den = pipoly_lcm(den, c.den());
    if (den.sign() < 0) den = -den; // keep the multiplier positive
    for (const auto& c : f.coeffs()) {
        if (c.is_zero())
            rows.push_back(PiPoly());
        else
            rows.push_back(c.num() * den.div_exact(c.den()));
    }
    rows_trim(rows);
    return rows;
}

// Divide out the collective Z[w]-content, keeping the content positive so the
// operation is a positive rescaling.
void rows_primitive(Rows& rows) {
    PiPoly g;
    for (const auto& c : rows) {
        if (g.is_constant() && !g.is_zero()) break;
        g = pipoly_gcd(g, c);
    }
    if (!g.is_zero() && !g.is_constant()) {
        if (g.sign() < 0) g = -g;
        for (auto& c : rows) c = c.div_exact(g);
    }
    Rat rc(0);
    for (const auto& c : rows) {
        if (c.is_zero()) continue;
        Rat cc = c.rational_content();
        rc = (rc == 0) ? cc : rat(gcd(rc.get_num(), cc.get_num()), lcm(rc.get_den(), cc.get_den()));
    }
    if (rc != 0 && rc != 1) {
        Rat inv = Rat(1) / rc;
        for (auto& c : rows) c = c.scaled(inv);
    }
}

UPoly rows_to_monic(const Rows& rows) {
    if (rows.empty()) return UPoly();
    FElem inv = FElem(1) / FElem(rows.back());
    std::vector<FElem> cs;
    cs.reserve(rows.size());
    for (const auto& c : rows) cs.push_back(FElem(c) * inv);
    return UPoly(std::move(cs));
}

PiPoly pipoly_pow(const PiPoly& x, int e) {
    PiPoly r(1);
    for (int i = 0; i < e; ++i) r = r * x;
    return r;
}

// Pseudo-remainder with the exact multiplier lc(b)^(deg a - deg b + 1), as the
// subresultant divisions require.
Rows rows_prem_strict(Rows a, const Rows& b) {
    const PiPoly& lb = b.back();
    int e = rows_degree(a) - rows_degree(b) + 1;
    while (!a.empty() && rows_degree(a) >= rows_degree(b)) {
        int k = rows_degree(a) - rows_degree(b);
        PiPoly la = a.back();
        for (auto& c : a) c = c * lb;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[static_cast<std::size_t>(k) + i] -= la * b[i];
        rows_trim(a);
        --e;
    }
    if (e > 0 && !a.empty()) {
        PiPoly f = pipoly_pow(lb, e);
        for (auto& c : a) c = c * f;
    }
    return a;
}

} // namespace

std::vector<PiPoly> cleared_coeffs(const UPoly& f) {
    Rows rows = clear_denominators(f);
    rows_primitive(rows);
    if (!rows.empty() && rows.back().sign() < 0)
        for (auto& c : rows) c = -c;
    return rows;
}

UPoly canonical_form(const UPoly& f) {
    Rows rows = cleared_coeffs(f);
    std::vector<FElem> cs;
    cs.reserve(rows.size());
    for (const auto& c : rows) cs.push_back(FElem(c));
    return UPoly(std::move(cs));
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero() && b.is_zero()) return UPoly();
    if (a.is_zero()) return b.scaled(FElem(1) / b.lc());
    if (b.is_zero()) return a.scaled(FElem(1) / a.lc());
    Rows ra = clear_denominators(a), rb = clear_denominators(b);
    rows_primitive(ra);
    rows_primitive(rb);
    if (rows_degree(ra) < rows_degree(rb)) std::swap(ra, rb);
    PiPoly g(1), h(1);
    while (!rb.empty()) {
        if (rows_degree(rb) == 0) return UPoly(FElem(1));
        int delta = rows_degree(ra) - rows_degree(rb);
        Rows r = rows_prem_strict(ra, rb);
        ra = std::move(rb);
        PiPoly divisor = g * pipoly_pow(h, delta);
        rb = std::move(r);
        for (auto& c : rb) c = c.div_exact(divisor);
        g = ra.back();
        if (delta > 0) h = pipoly_pow(g, delta).div_exact(pipoly_pow(h, delta - 1));
    }
    rows_primitive(ra);
    return rows_to_monic(ra);
}

UPoly square_free_part(const UPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("square-free part of zero polynomial");
    UPoly g = upoly_gcd(f, f.derivative());
    if (g.degree() <= 0) return canonical_form(f);
    auto [q, r] = divmod(f, g);
    if (!r.is_zero()) throw Error("square_free_part: gcd does not divide input");
    return canonical_form(q);
}

PiPoly rows_resultant(std::vector<PiPoly> a, std::vector<PiPoly> b) {
    rows_trim(a);
    rows_trim(b);
    if (a.empty() || b.empty()) return PiPoly();
    int s = 1;
    if (rows_degree(a) < rows_degree(b)) {
        if ((rows_degree(a) & 1) && (rows_degree(b) & 1)) s = -s;
        std::swap(a, b);
    }
    if (rows_degree(a) == 0) return PiPoly(1);
    if (rows_degree(b) == 0) return pipoly_pow(b[0], rows_degree(a));
    PiPoly g(1), h(1);
    while (true) {
        int da = rows_degree(a), db = rows_degree(b);
        int delta = da - db;
        if ((da & 1) && (db & 1)) s = -s;
        Rows r = rows_prem_strict(a, b);
        if (r.empty()) return PiPoly();
        a = std::move(b);
        PiPoly divisor = g * pipoly_pow(h, delta);
        b = std::move(r);
        for (auto& c : b) c = c.div_exact(divisor);
        g = a.back();
        if (delta > 0) h = pipoly_pow(g, delta).div_exact(pipoly_pow(h, delta - 1));
        if (rows_degree(b) == 0) break;
    }
    int da = rows_degree(a);
    PiPoly res = pipoly_pow(b[0], da).div_exact(pipoly_pow(h, da - 1));
    return s < 0 ? -res : res;
}

std::pair<std::vector<UPoly>, std::vector<int>> signed_remainder_chain(const UPoly& f,
                                                                       const UPoly& g) {
    if (f.is_zero()) throw ZeroPolynomial("signed remainder chain of zero polynomial");
    auto as_upoly = [](const Rows& r) {
        std::vector<FElem> cs;
        cs.reserve(r.size());
        for (const auto& c : r) cs.emplace_back(c);
        return UPoly(std::move(cs));
    };
    auto sgn_pow = [](int s, int e) { return e % 2 == 0 ? 1 : s; };
    std::vector<UPoly> chain;
    std::vector<int> signs;
    Rows ra = cleared_coeffs(f);
    int sa = felem_sign(f.lc());
    chain.push_back(as_upoly(ra));
    signs.push_back(sa);
    if (g.is_zero()) return {std::move(chain), std::move(signs)};
    if (g.degree() >= f.degree()) throw Error("signed remainder chain needs deg g < deg f");
    Rows rb = cleared_coeffs(g);
    int sb = felem_sign(g.lc());
    chain.push_back(as_upoly(rb));
    signs.push_back(sb);
    PiPoly gc(1), h(1);
    while (rows_degree(rb) > 0) {
        int delta = rows_degree(ra) - rows_degree(rb);
        Rows r = rows_prem_strict(ra, rb);
        if (r.empty()) break; // shared factor: the last element is the gcd
        PiPoly divisor = gc * pipoly_pow(h, delta);
        for (auto& c : r) c = c.div_exact(divisor);
        int snew = -sgn_pow(rb.back().sign(), delta + 1) * sa * divisor.sign();
        ra = std::move(rb);
        sa = sb;
        rb = std::move(r);
        sb = snew;
        chain.push_back(as_upoly(rb));
        signs.push_back(sb);
        gc = ra.back();
        if (delta > 0) h = pipoly_pow(gc, delta).div_exact(pipoly_pow(h, delta - 1));
    }
    return {std::move(chain), std::move(signs)};
}

UPoly upoly_from_mpoly(const MPoly<FElem>& f, int var) {
    std::vector<FElem> cs;
    for (const auto& [m, c] : f.terms()) {
        for (std::size_t i = 0; i < m.e.size(); ++i)
            if (m.e[i] != 0 && static_cast<int>(i) != var)
                throw MultivariateInput("polynomial mentions " + (*f.registry())[i]);
        int d = m.e[static_cast<std::size_t>(var)];
        if (static_cast<int>(cs.size()) <= d) cs.resize(static_cast<std::size_t>(d) + 1, FElem(0));
        cs[static_cast<std::size_t>(d)] = c;
    }
    return UPoly(std::move(cs));
}

} // namespace polybound
