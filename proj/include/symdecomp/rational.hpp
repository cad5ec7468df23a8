#pragma once

#include <gmpxx.h>

#include <stdexcept>

namespace symdecomp {

// Exact arithmetic scalars. mpq_class keeps values in lowest terms with a
// positive denominator; zero is canonically 0/1.
using Integer = mpz_class;
using Rational = mpq_class;

// Canonical rational from a numerator/denominator pair.
inline Rational make_rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0) throw std::invalid_argument("zero denominator");
    Rational value(numerator, denominator);
    value.canonicalize();
    return value;
}

inline Integer factorial(long k) {
    if (k < 0) throw std::invalid_argument("factorial of a negative number");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return out;
}

// a / b where b is known to divide a exactly.
inline Integer exact_quotient(const Integer& a, const Integer& b) {
    Integer out;
    mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

}  // namespace symdecomp
