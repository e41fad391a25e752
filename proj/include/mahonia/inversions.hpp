#pragma once

#include <vector>

#include "mahonia/exact_int.hpp"
#include "mahonia/unipoly.hpp"

namespace mahonia {

/// Distribution of inversion counts over S_n: values[t] is the number of
/// permutations of [n] with exactly t inversions, t = 0 .. n(n-1)/2.
struct InversionTable {
    unsigned n = 0;
    std::vector<ExactInt> values;

    UniPoly to_poly() const { return UniPoly(values); }
    bool operator==(const InversionTable&) const = default;
};

/// Histogram over all n! permutations. Guarded at 10! enumerated
/// permutations (n <= 10) by default.
InversionTable inv_bruteforce(unsigned n);

/// I_n(t) by the Bourget recurrence
/// I_n(t) = sum_{j=max(0,t-n+1)}^{t} I_{n-1}(j),
/// tabulated row by row with running prefix sums. Out-of-range t returns 0.
ExactInt inv_recurrence(unsigned n, unsigned long t);

/// The full recurrence row for fixed n.
InversionTable inv_recurrence_row(unsigned n);

/// Coefficients of prod_{i=1}^{n-1} (1 + z + ... + z^i), the inversion-number
/// generating function in product form. Requires n >= 1.
InversionTable inv_genfun(unsigned n);

/// sum_{i=0}^{t} I_n(i) in closed form: C(n+t,t) plus the alternating double
/// sum of shifted Gaussian-binomial coefficients against restricted binomials.
ExactInt inv_prefix_closed(unsigned n, unsigned long t);

/// I_n(t) by the closed binomial-difference formula; evaluated directly, with
/// no inversion table involved.
ExactInt inv_closed(unsigned n, unsigned long t);

/// I_n(t) for t <= n by the Netto-Knuth pentagonal-number formula. Throws
/// std::domain_error when t > n, where the formula is not claimed valid.
ExactInt inv_pentagonal(unsigned n, unsigned long t);

/// Number of staircase-bounded vectors (entry i at most i, zero-based) of
/// length n with entry sum <= t, by dynamic programming. This is the
/// standard-monomial count matching inv_prefix_closed.
ExactInt standard_monomial_count_L(unsigned n, unsigned long t);

}  // namespace mahonia
