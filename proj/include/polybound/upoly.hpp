#pragma once

#include <string>
#include <utility>
#include <vector>

#include "polybound/errors.hpp"
#include "polybound/felem.hpp"
#include "polybound/mpoly.hpp"

namespace polybound {

/// Dense univariate polynomial over the fraction field Q(w), coefficients
/// ascending by degree with no trailing zeros (zero polynomial = empty).
class UPoly {
public:
    UPoly() = default;
    UPoly(long c) : UPoly(FElem(c)) {}
    explicit UPoly(const FElem& c);
    explicit UPoly(std::vector<FElem> coeffs);
    static UPoly variable();

    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    FElem coeff(int i) const;
    const FElem& lc() const; // throws ZeroPolynomial on the zero polynomial
    const std::vector<FElem>& coeffs() const { return c_; }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const FElem& c) const;
    UPoly shifted(int k) const; // multiply by t^k

    bool operator==(const UPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    UPoly derivative() const;
    FElem eval(const FElem& x) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<FElem> c_;
    void trim();
};

/// Field division: a = q*b + r with deg r < deg b. Throws DivisionByZero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);

/// Monic gcd (computed by a primitive pseudo-remainder sequence over Z[w]).
/// gcd(0,0) = 0.
UPoly upoly_gcd(const UPoly& a, const UPoly& b);

/// f / gcd(f, f') in canonical form. Throws ZeroPolynomial.
UPoly square_free_part(const UPoly& f);

/// Coefficient rows after clearing denominators: collectively Z[w]-primitive
/// with integer coefficients, leading row of positive field sign. Ascending by
/// degree; empty for the zero polynomial.
std::vector<PiPoly> cleared_coeffs(const UPoly& f);

/// The unique positive-leading, Z[w]-primitive scalar multiple of f.
UPoly canonical_form(const UPoly& f);

/// Conversion from a multivariate polynomial that mentions only `var`.
/// Throws MultivariateInput otherwise.
UPoly upoly_from_mpoly(const MPoly<FElem>& f, int var);

/// Resultant of two univariate polynomials given as Q[w]-coefficient rows
/// (ascending degree), computed by the subresultant pseudo-remainder sequence.
/// Zero exactly when the inputs share a root.
PiPoly rows_resultant(std::vector<PiPoly> a, std::vector<PiPoly> b);

/// Subresultant pseudo-remainder chain of f and g (deg g < deg f) with
/// polynomial Q[w] coefficients throughout. chain[0] and chain[1] are scalar
/// multiples of f and g; afterwards chain[k+1] is a scalar multiple of
/// -rem(s_{k-1}, s_k) where s is the signed-remainder sequence of (f, g).
/// signs[k] is the field sign of the scalar, so signs[k] * chain[k] is a
/// positive multiple of s_k. The chain stops at a constant element or, when
/// the inputs share a nonconstant gcd, at a scalar multiple of that gcd.
std::pair<std::vector<UPoly>, std::vector<int>> signed_remainder_chain(const UPoly& f,
                                                                       const UPoly& g);

} // namespace polybound
