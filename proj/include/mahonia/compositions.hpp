#pragma once

#include <vector>

#include "mahonia/exact_int.hpp"
#include "mahonia/unipoly.hpp"

namespace mahonia {

/// Distribution of coordinate sums over {0..d-1}^n: values[t] is the number
/// of vectors with sum t (compositions of t into at most n parts, each part
/// at most d-1), for t = 0 .. n(d-1).
struct CompositionTable {
    unsigned n = 0;
    unsigned d = 1;
    std::vector<ExactInt> values;

    UniPoly to_poly() const { return UniPoly(values); }
    bool operator==(const CompositionTable&) const = default;
};

/// Histogram over all d^n vectors. Guarded at 10^7 enumerated vectors by
/// default. Requires d >= 1.
CompositionTable comp_bruteforce(unsigned n, unsigned d);

/// H(n,d,t) by the recurrence H(n,d,t) = H(n-1,d,t) + ... + H(n-1,d,t-d+1),
/// tabulated row by row. t is signed; t < 0 or t > n(d-1) returns 0.
ExactInt comp_recurrence(unsigned n, unsigned d, long long t);

/// The full recurrence row for fixed (n, d).
CompositionTable comp_recurrence_row(unsigned n, unsigned d);

/// Coefficients of (1 + x + ... + x^(d-1))^n, computed by binary
/// exponentiation. Requires n, d >= 1.
CompositionTable comp_genfun(unsigned n, unsigned d);

/// sum_{i=0}^{t} H(n,d,i) in closed form:
/// sum_{i=0}^{n} (-1)^i C(n,i) restricted_binomial(t - d*i + n, n).
ExactInt comp_prefix_closed(unsigned n, unsigned d, unsigned long t);

/// H(n,d,t) by the closed binomial-difference formula.
ExactInt comp_closed(unsigned n, unsigned d, unsigned long t);

/// Number of vectors in {0..d-1}^n with entry sum <= t, by dynamic
/// programming. This is the standard-monomial count matching
/// comp_prefix_closed.
ExactInt standard_monomial_count_M(unsigned n, unsigned d, unsigned long t);

}  // namespace mahonia
