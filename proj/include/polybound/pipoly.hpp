#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polybound/rat.hpp"

namespace polybound {

/// Polynomial in the infinitesimal w over Q, stored sparsely with ascending
/// exponents and no zero coefficients. The field sign of a nonzero element is
/// the sign of its lowest-order coefficient (w is a positive infinitesimal).
class PiPoly {
public:
    PiPoly() = default;
    PiPoly(long c) : PiPoly(Rat(c)) {}
    explicit PiPoly(const Rat& c);
    PiPoly(int exp, const Rat& c);
    static PiPoly pi() { return PiPoly(1, Rat(1)); }
    static PiPoly from_terms(std::vector<std::pair<int, Rat>> terms);

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    int order() const;  // lowest exponent; requires nonzero
    int degree() const; // highest exponent; requires nonzero
    const Rat& low_coeff() const;
    const Rat& high_coeff() const;
    Rat coeff(int exp) const;
    int sign() const { return t_.empty() ? 0 : sign_of(t_.front().second); }
    const std::vector<std::pair<int, Rat>>& terms() const { return t_; }
    std::size_t term_count() const { return t_.size(); }

    PiPoly operator-() const;
    PiPoly& operator+=(const PiPoly& o);
    PiPoly& operator-=(const PiPoly& o);
    friend PiPoly operator+(PiPoly a, const PiPoly& b) { return a += b; }
    friend PiPoly operator-(PiPoly a, const PiPoly& b) { return a -= b; }
    friend PiPoly operator*(const PiPoly& a, const PiPoly& b);

    PiPoly shifted(int k) const; // multiply by w^k, k >= 0
    PiPoly scaled(const Rat& c) const;

    bool operator==(const PiPoly& o) const { return t_ == o.t_; }
    bool operator!=(const PiPoly& o) const { return !(*this == o); }

    /// Euclidean division over Q[w]: returns (q, r) with *this = q*d + r and
    /// deg r < deg d.
    std::pair<PiPoly, PiPoly> divmod(const PiPoly& d) const;
    PiPoly div_exact(const PiPoly& d) const;

    /// Positive rational c with (*this)/c integer-coefficient and primitive.
    /// Zero polynomial yields 0.
    Rat rational_content() const;
    /// Integer-primitive form with positive lowest-order coefficient.
    PiPoly primitive_positive() const;

    std::string str(const char* var = "w") const;

private:
    std::vector<std::pair<int, Rat>> t_;
    void trim();
};

/// Monic gcd over Q[w] (content pre-extraction, then a primitive remainder
/// sequence). gcd(0,0) = 0.
PiPoly pipoly_gcd(const PiPoly& a, const PiPoly& b);
PiPoly pipoly_lcm(const PiPoly& a, const PiPoly& b);

} // namespace polybound
