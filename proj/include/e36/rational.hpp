#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace e36 {

// Exact scalars. mpq_class is kept canonical by GMP (reduced, positive
// denominator), which is exactly the ExactRational contract.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat_from_strings(const std::string& num, const std::string& den) {
    Rational q(Int(num), Int(den));
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
    q.canonicalize();
    return q;
}

// q^e for e possibly negative; q must be nonzero when e < 0.
inline Rational rat_pow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw std::domain_error("0 raised to a negative power");
    Rational base = e > 0 ? q : Rational(1) / q;
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational out(1);
    while (n) {
        if (n & 1) out *= base;
        base *= base;
        n >>= 1;
    }
    return out;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

inline Int factorial(unsigned long n) {
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in long");
    return z.get_si();
}

}  // namespace e36
