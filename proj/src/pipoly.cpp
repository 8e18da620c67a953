#include "polybound/pipoly.hpp"

#include <algorithm>
#include <cassert>

#include "polybound/errors.hpp"

namespace polybound {

PiPoly::PiPoly(const Rat& c) {
    if (c != 0) t_.emplace_back(0, c);
}

PiPoly::PiPoly(int exp, const Rat& c) {
    assert(exp >= 0);
    if (c != 0) t_.emplace_back(exp, c);
}

PiPoly PiPoly::from_terms(std::vector<std::pair<int, Rat>> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    PiPoly p;
    for (auto& [e, c] : terms) {
        if (!p.t_.empty() && p.t_.back().first == e)
            p.t_.back().second += c;
        else
            p.t_.emplace_back(e, c);
    }
    p.trim();
    return p;
}

void PiPoly::trim() {
    t_.erase(std::remove_if(t_.begin(), t_.end(),
                            [](const auto& t) { return t.second == 0; }),
             t_.end());
}

int PiPoly::order() const {
    assert(!t_.empty());
    return t_.front().first;
}

int PiPoly::degree() const {
    assert(!t_.empty());
    return t_.back().first;
}

const Rat& PiPoly::low_coeff() const {
    assert(!t_.empty());
    return t_.front().second;
}

const Rat& PiPoly::high_coeff() const {
    assert(!t_.empty());
    return t_.back().second;
}

Rat PiPoly::coeff(int exp) const {
    auto it = std::lower_bound(t_.begin(), t_.end(), exp,
                               [](const auto& t, int e) { return t.first < e; });
    if (it != t_.end() && it->first == exp) return it->second;
    return Rat(0);
}

PiPoly PiPoly::operator-() const {
    PiPoly r(*this);
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

PiPoly& PiPoly::operator+=(const PiPoly& o) {
    std::vector<std::pair<int, Rat>> out;
    out.reserve(t_.size() + o.t_.size());
    auto a = t_.cbegin();
    auto b = o.t_.cbegin();
    while (a != t_.cend() || b != o.t_.cend()) {
        if (b == o.t_.cend() || (a != t_.cend() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == t_.cend() || b->first < a->first) {
            out.push_back(*b++);
        } else {
            Rat s = a->second + b->second;
            if (s != 0) out.emplace_back(a->first, s);
            ++a;
            ++b;
        }
    }
    t_ = std::move(out);
    return *this;
}

PiPoly& PiPoly::operator-=(const PiPoly& o) { return *this += -o; }

PiPoly operator*(const PiPoly& a, const PiPoly& b) {
    if (a.is_zero() || b.is_zero()) return PiPoly();
    // dense accumulation; w-degrees stay modest
    int lo = a.order() + b.order();
    int hi = a.degree() + b.degree();
    std::vector<Rat> acc(static_cast<std::size_t>(hi - lo + 1), Rat(0));
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) acc[static_cast<std::size_t>(ea + eb - lo)] += ca * cb;
    PiPoly r;
    for (int e = lo; e <= hi; ++e) {
        Rat& c = acc[static_cast<std::size_t>(e - lo)];
        if (c != 0) r.t_.emplace_back(e, std::move(c));
    }
    return r;
}

PiPoly PiPoly::shifted(int k) const {
    assert(k >= 0);
    PiPoly r(*this);
    for (auto& [e, c] : r.t_) e += k;
    return r;
}

PiPoly PiPoly::scaled(const Rat& c) const {
    if (c == 0) return PiPoly();
    PiPoly r(*this);
    for (auto& [e, cc] : r.t_) cc *= c;
    return r;
}

std::pair<PiPoly, PiPoly> PiPoly::divmod(const PiPoly& d) const {
    if (d.is_zero()) throw DivisionByZero();
    PiPoly q, r(*this);
    const int dd = d.degree();
    const Rat& dl = d.high_coeff();
    while (!r.is_zero() && r.degree() >= dd) {
        int e = r.degree() - dd;
        Rat c = r.high_coeff() / dl;
        PiPoly m(e, c);
        q += m;
        r -= m * d;
    }
    return {q, r};
}

PiPoly PiPoly::div_exact(const PiPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw Error("inexact division in Q[w]");
    return q;
}

Rat PiPoly::rational_content() const {
    if (is_zero()) return Rat(0);
    Int num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : t_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    return rat(num_gcd, den_lcm);
}

PiPoly PiPoly::primitive_positive() const {
    if (is_zero()) return PiPoly();
    Rat c = rational_content();
    if (sign() < 0) c = -c;
    return scaled(Rat(1) / c);
}

std::string PiPoly::str(const char* var) const {
    if (is_zero()) return "0";
    std::string s;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = abs_of(c);
        if (s.empty())
            s += (sign_of(c) < 0) ? "-" : "";
        else
            s += (sign_of(c) < 0) ? " - " : " + ";
        if (e == 0) {
            s += to_string(a);
        } else {
            if (a != 1) s += to_string(a) + "*";
            s += var;
            if (e != 1) s += "^" + std::to_string(e);
        }
    }
    return s;
}

PiPoly pipoly_gcd(const PiPoly& a, const PiPoly& b) {
    if (a.is_zero() && b.is_zero()) return PiPoly();
    if (a.is_zero()) return b.scaled(Rat(1) / b.high_coeff());
    if (b.is_zero()) return a.scaled(Rat(1) / a.high_coeff());
    if (a.is_constant() || b.is_constant()) return PiPoly(1);
    PiPoly f = a.primitive_positive();
    PiPoly g = b.primitive_positive();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        // pseudo-remainder keeps coefficients integral; scale is irrelevant here
        PiPoly r = f;
        const Rat& gl = g.high_coeff();
        int gd = g.degree();
        while (!r.is_zero() && r.degree() >= gd) {
            PiPoly m(r.degree() - gd, r.high_coeff());
            r = r.scaled(gl) - m * g;
        }
        f = g;
        g = r.is_zero() ? PiPoly() : r.primitive_positive();
    }
    return f.scaled(Rat(1) / f.high_coeff());
}

PiPoly pipoly_lcm(const PiPoly& a, const PiPoly& b) {
    if (a.is_zero() || b.is_zero()) return PiPoly();
    PiPoly g = pipoly_gcd(a, b);
    return (a * b.div_exact(g)).scaled(Rat(1) / (a.high_coeff() * b.high_coeff()));
}

} // namespace polybound
