#include "polybound/sturm.hpp"

#include <algorithm>

namespace polybound {

namespace {

int parity_sign(int lc_sign, int deg) { return deg % 2 == 0 ? lc_sign : -lc_sign; }

} // namespace

bool eval_point_less(const EvalPoint& lo, const EvalPoint& hi) {
    using K = EvalPoint::Kind;
    switch (lo.kind) {
    case K::MinusInfinityF:
        return hi.kind != K::MinusInfinityF;
    case K::MinusInfinity:
        if (hi.kind == K::Finite) {
            // -infinity precedes exactly the elements with a real or +infinite limit
            return felem_limit(hi.value).kind != FElem::Limit::MinusInfinity;
        }
        return false;
    case K::Finite:
        if (hi.kind == K::Finite) return felem_sign(hi.value - lo.value) > 0;
        if (hi.kind == K::MinusInfinity)
            return felem_limit(lo.value).kind == FElem::Limit::MinusInfinity;
        return false;
    }
    return false;
}

SturmSeq sturm_sequence(const UPoly& phi) {
    if (phi.is_zero()) throw ZeroPolynomial("sturm sequence of zero polynomial");
    SturmSeq seq;
    seq.polys.push_back(phi);
    if (phi.degree() == 0) return seq;
    seq.polys.push_back(phi.derivative());
    auto [chain, signs] = signed_remainder_chain(phi, phi.derivative());
    if (chain.back().degree() > 0)
        throw NotSquareFree("gcd has degree " + std::to_string(chain.back().degree()));
    // each later chain element, sign-corrected, is a positive multiple of the
    // true signed remainder, which is all the variation counts can see
    for (std::size_t k = 2; k < chain.size(); ++k)
        seq.polys.push_back(signs[k] < 0 ? -chain[k] : chain[k]);
    return seq;
}

int sign_at(const UPoly& phi, const EvalPoint& pt) {
    using K = EvalPoint::Kind;
    if (pt.kind == K::Finite) return felem_sign(phi.eval(pt.value));
    if (phi.is_zero()) throw ZeroPolynomial("sign of zero polynomial at an infinite point");
    if (pt.kind == K::MinusInfinityF) return parity_sign(felem_sign(phi.lc()), phi.degree());
    // MinusInfinity: the coefficients of minimal w-order dominate, and among
    // them the highest t-degree wins at an arbitrarily negative real. The
    // w-order and field sign of each coefficient are read off directly.
    int alpha0 = 0, deg = -1, lead = 0;
    for (int i = 0; i <= phi.degree(); ++i) {
        const FElem& c = phi.coeff(i);
        if (c.is_zero()) continue;
        int o = *c.order();
        if (deg < 0 || o < alpha0) {
            alpha0 = o;
            deg = i;
            lead = felem_sign(c);
        } else if (o == alpha0) {
            deg = i;
            lead = felem_sign(c);
        }
    }
    return parity_sign(lead, deg);
}

int sign_variations(const std::vector<int>& signs) {
    int count = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

int variations_at(const SturmSeq& seq, const EvalPoint& pt) {
    std::vector<int> signs;
    signs.reserve(seq.polys.size());
    for (const auto& p : seq.polys) signs.push_back(sign_at(p, pt));
    return sign_variations(signs);
}

SturmReport v_count(const UPoly& phi) {
    SturmSeq seq = sturm_sequence(phi);
    SturmReport rep;
    for (const auto& p : seq.polys) {
        rep.signs_at_minus_infty_F.push_back(sign_at(p, EvalPoint::minus_infinity_F()));
        rep.signs_at_minus_infty.push_back(sign_at(p, EvalPoint::minus_infinity()));
    }
    rep.v_F = sign_variations(rep.signs_at_minus_infty_F);
    rep.v_R = sign_variations(rep.signs_at_minus_infty);
    rep.v = rep.v_F - rep.v_R;
    return rep;
}

int count_roots_interval(const UPoly& phi, const EvalPoint& lo, const EvalPoint& hi) {
    if (!eval_point_less(lo, hi))
        throw Error("count_roots_interval: endpoints out of order");
    if (lo.kind == EvalPoint::Kind::Finite && sign_at(phi, lo) == 0)
        throw EndpointIsRoot("lower endpoint");
    if (hi.kind == EvalPoint::Kind::Finite && sign_at(phi, hi) == 0)
        throw EndpointIsRoot("upper endpoint");
    SturmSeq seq = sturm_sequence(phi);
    return variations_at(seq, lo) - variations_at(seq, hi);
}

} // namespace polybound
