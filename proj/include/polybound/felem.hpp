#pragma once

#include <optional>
#include <string>

#include "polybound/pipoly.hpp"

namespace polybound {

/// Element of the ordered field Q(w), w an infinitesimal > 0. Canonical form:
/// gcd(num, den) constant, den integer-primitive with positive lowest-order
/// coefficient, and 0 is stored as 0/1. Equality is therefore representational.
class FElem {
public:
    FElem() : num_(), den_(1) {}
    FElem(long c) : num_(c), den_(1) {}
    FElem(const Rat& c) : num_(c), den_(1) {}
    explicit FElem(const PiPoly& num) : num_(num), den_(1) {}
    FElem(PiPoly num, PiPoly den);
    static FElem pi() { return FElem(PiPoly::pi()); }
    static FElem pi_pow(int k);

    const PiPoly& num() const { return num_; }
    const PiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    FElem operator-() const;
    FElem& operator+=(const FElem& o);
    FElem& operator-=(const FElem& o);
    FElem& operator*=(const FElem& o);
    FElem& operator/=(const FElem& o);
    friend FElem operator+(FElem a, const FElem& b) { return a += b; }
    friend FElem operator-(FElem a, const FElem& b) { return a -= b; }
    friend FElem operator*(FElem a, const FElem& b) { return a *= b; }
    friend FElem operator/(FElem a, const FElem& b) { return a /= b; }

    bool operator==(const FElem& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const FElem& o) const { return !(*this == o); }

    /// Sign as an element of the ordered field: sign of the lowest-order
    /// coefficient of num over that of den.
    int sign() const { return num_.sign() * den_.sign(); }

    /// w-adic order; nullopt encodes +infinity (the zero element).
    std::optional<int> order() const;

    struct Limit {
        enum Kind { Finite, PlusInfinity, MinusInfinity } kind;
        Rat value; // meaningful only when kind == Finite
    };
    /// Limit as w -> 0+.
    Limit limit() const;

    std::string str(const char* var = "w") const;

private:
    PiPoly num_, den_;
    void canonicalize();
};

inline int felem_sign(const FElem& a) { return a.sign(); }
inline std::optional<int> felem_order(const FElem& a) { return a.order(); }
inline FElem::Limit felem_limit(const FElem& a) { return a.limit(); }

} // namespace polybound
