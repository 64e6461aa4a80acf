#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace sgpa {

// Exact rational scalar. GMP keeps arithmetic results reduced with a
// positive denominator as long as construction goes through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool fits_int64(const BigInt& z) { return z.fits_slong_p(); }

}  // namespace sgpa
