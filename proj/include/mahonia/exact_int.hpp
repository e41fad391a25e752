#pragma once

#include <gmpxx.h>

#include <string>

namespace mahonia {

/// Arbitrary-precision signed integer. Every count in this library is exact;
/// no operation here is allowed to round or overflow.
using ExactInt = mpz_class;

inline ExactInt factorial(unsigned long n) {
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

/// Ordinary binomial coefficient C(n, k).
inline ExactInt binomial(unsigned long n, unsigned long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline ExactInt pow_ui(const ExactInt& base, unsigned long exp) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline std::string to_decimal(const ExactInt& v) { return v.get_str(); }

}  // namespace mahonia
