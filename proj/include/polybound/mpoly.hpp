#pragma once

#include <map>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "polybound/felem.hpp"
#include "polybound/rat.hpp"
#include "polybound/vars.hpp"

namespace polybound {

using Point = std::vector<Rat>;

namespace detail {
template <class C> inline bool coeff_is_zero(const C& c) { return c == C(0); }
template <> inline bool coeff_is_zero<FElem>(const FElem& c) { return c.is_zero(); }
template <class C> inline std::string coeff_str(const C& c);
template <> inline std::string coeff_str<Rat>(const Rat& c) { return to_string(c); }
template <> inline std::string coeff_str<FElem>(const FElem& c) { return c.str(); }
} // namespace detail

/// Sparse multivariate polynomial over a field coefficient type (Rat or
/// FElem). Terms are keyed by monomial in a fixed storage order; leading-term
/// queries take the VarOrder they should be answered under.
template <class C>
class MPoly {
public:
    MPoly() : reg_(make_registry({})) {}
    explicit MPoly(RegistryPtr reg) : reg_(std::move(reg)) {}

    static MPoly constant(RegistryPtr reg, const C& c) {
        MPoly p(std::move(reg));
        p.add_term(Monomial(p.nvars()), c);
        return p;
    }
    static MPoly variable(RegistryPtr reg, int i) {
        MPoly p(reg);
        p.add_term(Monomial::var(reg->size(), i), C(1));
        return p;
    }

    const RegistryPtr& registry() const { return reg_; }
    std::size_t nvars() const { return reg_->size(); }
    const std::map<Monomial, C>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const {
        return t_.empty() || (t_.size() == 1 && t_.begin()->first.is_unit());
    }
    /// Value of a constant polynomial (zero polynomial gives 0).
    C constant_value() const {
        if (t_.empty()) return C(0);
        if (!is_constant()) throw Error("polynomial is not constant");
        return t_.begin()->second;
    }

    int total_degree() const { // -1 for the zero polynomial
        int d = -1;
        for (const auto& [m, c] : t_) d = std::max(d, m.total_degree());
        return d;
    }
    int degree_in(int var) const {
        int d = 0;
        for (const auto& [m, c] : t_) d = std::max(d, m.e[static_cast<std::size_t>(var)]);
        return d;
    }
    bool uses_var(int var) const {
        for (const auto& [m, c] : t_)
            if (m.e[static_cast<std::size_t>(var)] > 0) return true;
        return false;
    }
    bool is_homogeneous() const {
        if (t_.empty()) return true;
        int d = t_.begin()->first.total_degree();
        for (const auto& [m, c] : t_)
            if (m.total_degree() != d) return false;
        return true;
    }

    C coeff(const Monomial& m) const {
        auto it = t_.find(m);
        return it == t_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        if (detail::coeff_is_zero(c)) return;
        auto [it, fresh] = t_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) t_.erase(it);
        }
    }

    MPoly operator-() const {
        MPoly r(reg_);
        for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
        return r;
    }
    MPoly& operator+=(const MPoly& o) {
        check_registry(o);
        for (const auto& [m, c] : o.t_) add_term(m, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o) {
        check_registry(o);
        for (const auto& [m, c] : o.t_) add_term(m, -c);
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b) {
        a.check_registry(b);
        MPoly r(a.reg_);
        for (const auto& [ma, ca] : a.t_)
            for (const auto& [mb, cb] : b.t_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    MPoly scaled(const C& c) const {
        MPoly r(reg_);
        if (detail::coeff_is_zero(c)) return r;
        for (const auto& [m, cc] : t_) r.t_.emplace(m, cc * c);
        return r;
    }
    MPoly pow(unsigned k) const {
        MPoly r = constant(reg_, C(1));
        for (unsigned i = 0; i < k; ++i) r = r * *this;
        return r;
    }

    bool operator==(const MPoly& o) const {
        return registry_equal(reg_, o.reg_) && t_ == o.t_;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly partial_derivative(int var) const {
        MPoly r(reg_);
        auto v = static_cast<std::size_t>(var);
        for (const auto& [m, c] : t_) {
            if (m.e[v] == 0) continue;
            Monomial d = m;
            int k = d.e[v]--;
            r.add_term(d, c * C(k));
        }
        return r;
    }

    /// Substitute values for a subset of variables; untouched variables stay
    /// symbolic and the registry is unchanged.
    MPoly evaluate(const std::map<int, C>& assignment) const {
        for (const auto& [v, val] : assignment)
            if (v < 0 || static_cast<std::size_t>(v) >= nvars())
                throw UnknownVariable("#" + std::to_string(v));
        MPoly r(reg_);
        for (const auto& [m, c] : t_) {
            C cc = c;
            Monomial mm = m;
            for (const auto& [v, val] : assignment) {
                auto i = static_cast<std::size_t>(v);
                for (int k = 0; k < m.e[i]; ++k) cc = cc * val;
                mm.e[i] = 0;
            }
            r.add_term(mm, cc);
        }
        return r;
    }

    /// Full evaluation at a point given in registry order.
    C eval_full(const std::vector<C>& vals) const {
        if (vals.size() != nvars()) throw DimensionMismatch();
        std::map<int, C> a;
        for (std::size_t i = 0; i < vals.size(); ++i) a.emplace(static_cast<int>(i), vals[i]);
        return evaluate(a).constant_value();
    }

    const Monomial& leading_monomial(const VarOrder& ord) const {
        if (t_.empty()) throw ZeroPolynomial();
        const Monomial* best = nullptr;
        for (const auto& [m, c] : t_)
            if (!best || ord.greater(m, *best)) best = &m;
        return *best;
    }
    C leading_coeff(const VarOrder& ord) const { return coeff(leading_monomial(ord)); }

    /// Rebuild over a larger registry; var_map[i] is the new index of old
    /// variable i.
    MPoly remapped(RegistryPtr new_reg, const std::vector<int>& var_map) const {
        MPoly r(new_reg);
        for (const auto& [m, c] : t_) {
            Monomial mm(new_reg->size());
            for (std::size_t i = 0; i < m.e.size(); ++i)
                mm.e[static_cast<std::size_t>(var_map[i])] = m.e[i];
            r.add_term(mm, c);
        }
        return r;
    }

    std::string str() const { return str(VarOrder::identity(nvars())); }
    std::string str(const VarOrder& ord) const {
        if (t_.empty()) return "0";
        std::vector<const Monomial*> ms;
        for (const auto& [m, c] : t_) ms.push_back(&m);
        std::sort(ms.begin(), ms.end(),
                  [&](const Monomial* a, const Monomial* b) { return ord.greater(*a, *b); });
        std::string s;
        for (const Monomial* m : ms) {
            std::string cs = detail::coeff_str(t_.at(*m));
            bool neg = false;
            if constexpr (std::is_same_v<C, Rat>) {
                neg = sign_of(t_.at(*m)) < 0;
                if (neg) cs = detail::coeff_str<Rat>(-t_.at(*m));
            }
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string vars;
            for (std::size_t i = 0; i < m->e.size(); ++i) {
                if (m->e[i] == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += (*reg_)[i];
                if (m->e[i] > 1) vars += "^" + std::to_string(m->e[i]);
            }
            if (vars.empty()) {
                s += cs;
            } else if (cs == "1") {
                s += vars;
            } else {
                s += cs + "*" + vars;
            }
        }
        return s;
    }

    void check_registry(const MPoly& o) const {
        if (!registry_equal(reg_, o.reg_)) throw RegistryMismatch();
    }

private:
    RegistryPtr reg_;
    std::map<Monomial, C> t_;
};

using QPoly = MPoly<Rat>;
using FPoly = MPoly<FElem>;

inline FPoly lift_to_felem(const QPoly& f) {
    FPoly r(f.registry());
    for (const auto& [m, c] : f.terms()) r.add_term(m, FElem(c));
    return r;
}

/// z^d * f(x/z) with z appended as the last variable; zname must be fresh.
inline QPoly homogenize(const QPoly& f, const std::string& zname) {
    VarRegistry names = *f.registry();
    for (const auto& n : names)
        if (n == zname) throw VariableCollision(zname);
    names.push_back(zname);
    RegistryPtr reg = make_registry(std::move(names));
    int d = f.total_degree();
    QPoly r(reg);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm(reg->size());
        for (std::size_t i = 0; i < m.e.size(); ++i) mm.e[i] = m.e[i];
        mm.e[reg->size() - 1] = d - m.total_degree();
        r.add_term(mm, c);
    }
    return r;
}

/// Leading-term exact division under the identity lex order; nullopt when g
/// does not divide f.
template <class C>
std::optional<MPoly<C>> try_divide_exact(const MPoly<C>& f, const MPoly<C>& g) {
    f.check_registry(g);
    if (g.is_zero()) throw DivisionByZero();
    VarOrder ord = VarOrder::identity(f.nvars());
    MPoly<C> q(f.registry()), r = f;
    const Monomial& glm = g.leading_monomial(ord);
    C glc = g.coeff(glm);
    while (!r.is_zero()) {
        const Monomial& rlm = r.leading_monomial(ord);
        if (!glm.divides(rlm)) return std::nullopt;
        C c = r.coeff(rlm) / glc;
        Monomial m = rlm.div(glm);
        MPoly<C> piece(f.registry());
        piece.add_term(m, c);
        q += piece;
        r -= piece * g;
    }
    return q;
}

/// Fraction-free determinant (Bareiss) with row pivoting; entries may be
/// polynomials, every interior division is exact.
template <class C>
MPoly<C> det_bareiss(std::vector<std::vector<MPoly<C>>> m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw NonSquare();
    if (n == 0) throw NonSquare();
    RegistryPtr reg = m[0][0].registry();
    MPoly<C> prev = MPoly<C>::constant(reg, C(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t j = k + 1;
            while (j < n && m[j][k].is_zero()) ++j;
            if (j == n) return MPoly<C>(reg);
            std::swap(m[k], m[j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MPoly<C> num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = try_divide_exact(num, prev);
                if (!q) throw Error("bareiss interior division failed");
                m[i][j] = *q;
            }
            m[i][k] = MPoly<C>(reg);
        }
        prev = m[k][k];
    }
    MPoly<C> d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

template <class C>
std::vector<std::vector<MPoly<C>>> hessian(const MPoly<C>& f) {
    std::size_t n = f.nvars();
    std::vector<std::vector<MPoly<C>>> h(n, std::vector<MPoly<C>>(n, MPoly<C>(f.registry())));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            h[i][j] = f.partial_derivative(static_cast<int>(i))
                          .partial_derivative(static_cast<int>(j));
            if (j != i) h[j][i] = h[i][j];
        }
    }
    return h;
}

template <class C>
struct MinorEntry {
    std::vector<int> index_set; // 1-based row/column indices
    MPoly<C> minor;
};

/// All principal minors, ordered by size then lexicographically by index set:
/// {1}, {2}, ..., {1,2}, {1,3}, ...
template <class C>
std::vector<MinorEntry<C>> principal_minors(const std::vector<std::vector<MPoly<C>>>& h) {
    std::size_t n = h.size();
    for (const auto& row : h)
        if (row.size() != n) throw NonSquare();
    std::vector<MinorEntry<C>> out;
    std::vector<std::vector<int>> subsets;
    for (std::size_t size = 1; size <= n; ++size) {
        std::vector<int> idx(size);
        // lexicographically ordered combinations
        for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<int>(i);
        for (;;) {
            subsets.push_back(idx);
            int i = static_cast<int>(size) - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] ==
                                 static_cast<int>(n - size) + i)
                --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (std::size_t j = static_cast<std::size_t>(i) + 1; j < size; ++j)
                idx[j] = idx[j - 1] + 1;
        }
    }
    for (const auto& s : subsets) {
        std::vector<std::vector<MPoly<C>>> sub;
        for (int i : s) {
            std::vector<MPoly<C>> row;
            for (int j : s) row.push_back(h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
            sub.push_back(std::move(row));
        }
        MinorEntry<C> e;
        for (int i : s) e.index_set.push_back(i + 1);
        e.minor = det_bareiss(std::move(sub));
        out.push_back(std::move(e));
    }
    return out;
}

} // namespace polybound
