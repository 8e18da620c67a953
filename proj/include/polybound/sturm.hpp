#pragma once

#include <vector>

#include "polybound/upoly.hpp"

namespace polybound {

/// Evaluation points for sign queries: the point below every field element
/// (MinusInfinityF), the point below every real but above the infinitely
/// negative field elements (MinusInfinity), and ordinary field elements.
struct EvalPoint {
    enum class Kind { MinusInfinityF, MinusInfinity, Finite };
    Kind kind = Kind::MinusInfinityF;
    FElem value; // meaningful only for Finite

    static EvalPoint minus_infinity_F() { return {Kind::MinusInfinityF, FElem(0)}; }
    static EvalPoint minus_infinity() { return {Kind::MinusInfinity, FElem(0)}; }
    static EvalPoint finite(FElem v) { return {Kind::Finite, std::move(v)}; }
};

/// Strict order on evaluation points inside the real closure.
bool eval_point_less(const EvalPoint& lo, const EvalPoint& hi);

/// Signed-remainder sequence phi_0 = phi, phi_1 = phi', each later element a
/// positive-scalar multiple of -rem(phi_{i-2}, phi_{i-1}).
struct SturmSeq {
    std::vector<UPoly> polys;
};

struct SturmReport {
    std::vector<int> signs_at_minus_infty_F;
    std::vector<int> signs_at_minus_infty;
    int v_F = 0;
    int v_R = 0;
    int v = 0;
};

SturmSeq sturm_sequence(const UPoly& phi); // NotSquareFree, ZeroPolynomial
int sign_at(const UPoly& phi, const EvalPoint& pt); // ZeroPolynomial at infinite points
int sign_variations(const std::vector<int>& signs);
int variations_at(const SturmSeq& seq, const EvalPoint& pt);
SturmReport v_count(const UPoly& phi); // NotSquareFree
int count_roots_interval(const UPoly& phi, const EvalPoint& lo, const EvalPoint& hi); // EndpointIsRoot

} // namespace polybound
