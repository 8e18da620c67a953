#pragma once

#include <gmpxx.h>

#include <string>

#include "polybound/errors.hpp"

namespace polybound {

// Exact integers and rationals. mpq_class keeps the canonical form we rely on
// (coprime numerator/denominator, denominator > 0), so equality is plain ==.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZero();
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline int sign_of(const Rat& q) { return sgn(q); }

inline Rat abs_of(const Rat& q) { return abs(q); }

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r; // canonical since base was
}

inline std::string to_string(const Rat& q) { return q.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

} // namespace polybound
