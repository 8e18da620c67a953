#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "polybound/errors.hpp"

namespace polybound {

/// Ordered list of distinct variable names. Polynomials sharing a computation
/// must agree on the registry (same object or equal contents).
using VarRegistry = std::vector<std::string>;
using RegistryPtr = std::shared_ptr<const VarRegistry>;

inline RegistryPtr make_registry(VarRegistry names) {
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i].empty()) throw Error("empty variable name");
        for (std::size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw VariableCollision(names[i]);
    }
    return std::make_shared<const VarRegistry>(std::move(names));
}

inline int var_index(const VarRegistry& reg, const std::string& name) {
    for (std::size_t i = 0; i < reg.size(); ++i)
        if (reg[i] == name) return static_cast<int>(i);
    throw UnknownVariable(name);
}

inline bool registry_equal(const RegistryPtr& a, const RegistryPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Pick a name not present in reg, starting from base and appending
/// underscores as needed.
inline std::string fresh_var_name(const VarRegistry& reg, std::string base) {
    auto taken = [&](const std::string& s) {
        return std::find(reg.begin(), reg.end(), s) != reg.end();
    };
    while (taken(base)) base += "_";
    return base;
}

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::size_t n) : e(n, 0) {}
    static Monomial var(std::size_t n, int i, int k = 1) {
        Monomial m(n);
        m.e[static_cast<std::size_t>(i)] = k;
        return m;
    }

    std::size_t nvars() const { return e.size(); }
    int total_degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_unit() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
        return r;
    }

    /// Quotient; requires m.divides(*this).
    Monomial div(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = std::max(r.e[i], m.e[i]);
        return r;
    }

    bool coprime(const Monomial& m) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0 && m.e[i] > 0) return false;
        return true;
    }

    // storage ordering only; semantic comparisons go through VarOrder
    auto operator<=>(const Monomial&) const = default;
};

/// Lexicographic order given by a permutation of variable indices, most
/// significant variable first.
struct VarOrder {
    std::vector<int> perm;

    static VarOrder identity(std::size_t n) {
        VarOrder o;
        o.perm.resize(n);
        std::iota(o.perm.begin(), o.perm.end(), 0);
        return o;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        for (int v : perm) {
            std::size_t i = static_cast<std::size_t>(v);
            if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
        }
        return 0;
    }
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

} // namespace polybound
