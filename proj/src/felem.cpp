#include "polybound/felem.hpp"

#include "polybound/errors.hpp"

namespace polybound {

FElem::FElem(PiPoly num, PiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

FElem FElem::pi_pow(int k) {
    if (k >= 0) return FElem(PiPoly(k, Rat(1)));
    return FElem(PiPoly(1), PiPoly(-k, Rat(1)));
}

void FElem::canonicalize() {
    if (num_.is_zero()) {
        den_ = PiPoly(1);
        return;
    }
    if (den_.is_constant()) {
        Rat c = den_.high_coeff();
        if (c != 1) {
            num_ = num_.scaled(Rat(1) / c);
            den_ = PiPoly(1);
        }
        return;
    }
    PiPoly g = pipoly_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
    Rat c = den_.rational_content();
    if (den_.sign() < 0) c = -c;
    if (c != 1) {
        Rat inv = Rat(1) / c;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

FElem FElem::operator-() const {
    FElem r(*this);
    r.num_ = -r.num_;
    return r;
}

FElem& FElem::operator+=(const FElem& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FElem& FElem::operator-=(const FElem& o) { return *this += -o; }

FElem& FElem::operator*=(const FElem& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

FElem& FElem::operator/=(const FElem& o) {
    if (o.is_zero()) throw DivisionByZero();
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    canonicalize();
    return *this;
}

std::optional<int> FElem::order() const {
    if (num_.is_zero()) return std::nullopt;
    return num_.order() - den_.order();
}

FElem::Limit FElem::limit() const {
    auto ord = order();
    if (!ord || *ord > 0) return {Limit::Finite, Rat(0)};
    if (*ord == 0) return {Limit::Finite, num_.low_coeff() / den_.low_coeff()};
    return {sign() > 0 ? Limit::PlusInfinity : Limit::MinusInfinity, Rat(0)};
}

std::string FElem::str(const char* var) const {
    if (den_ == PiPoly(1)) {
        if (num_.term_count() <= 1) return num_.str(var);
        return "(" + num_.str(var) + ")";
    }
    std::string n = num_.term_count() <= 1 ? num_.str(var) : "(" + num_.str(var) + ")";
    std::string d = den_.term_count() <= 1 ? den_.str(var) : "(" + den_.str(var) + ")";
    return n + "/" + d;
}

} // namespace polybound
