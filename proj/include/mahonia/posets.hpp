#pragma once

#include <utility>
#include <vector>

#include "mahonia/exact_int.hpp"
#include "mahonia/unipoly.hpp"

namespace mahonia {

struct PrimePower {
    unsigned long prime = 2;
    unsigned exponent = 1;

    bool operator==(const PrimePower&) const = default;
};

/// Prime factorization p_1^e_1 ... p_r^e_r with strictly increasing primes
/// and positive exponents. The empty factorization is 1.
struct Factorization {
    std::vector<PrimePower> prime_powers;

    static Factorization of(std::vector<PrimePower> prime_powers);

    bool operator==(const Factorization&) const = default;
};

/// Factors N by trial division. Requires N >= 1; guarded at N <= 10^6 by
/// default (this is oracle-scale machinery, not a general factorizer).
Factorization factorize(unsigned long N);

/// Rank generating function of the divisor lattice: the coefficient of q^i
/// counts divisors with i prime factors (with multiplicity). Equals
/// prod over prime powers p^e of (1 + q + ... + q^e).
UniPoly divisor_rank_genfun(const Factorization& f);

/// Same polynomial by explicit divisor enumeration; the oracle for
/// divisor_rank_genfun. Throws std::domain_error for N = 0.
UniPoly brute_divisor_rank_genfun(unsigned long N);

/// Fixed-point-free involution of [2n] in standard representation: arcs
/// [a, b] with a < b, partitioning [2n], listed with increasing initial
/// points.
struct Involution {
    std::vector<std::pair<unsigned, unsigned>> arcs;

    /// Validates the standard-representation invariants.
    static Involution from_arcs(std::vector<std::pair<unsigned, unsigned>> arcs);

    unsigned arc_count() const { return static_cast<unsigned>(arcs.size()); }

    bool operator==(const Involution&) const = default;
};

/// Weight statistic: total arc span (span[a,b] = b - a - 1) minus the number
/// of crossing arc pairs. Two arcs [i,j], [k,l] cross when i < k < j < l or
/// k < i < l < j.
unsigned long involution_weight(const Involution& inv);

/// Weight histogram over all (2n-1)!! fixed-point-free involutions of [2n],
/// as a polynomial in q. Equals prod_{i=1}^{n} (1 + q + ... + q^(2i-2)).
/// Guarded at 13!! enumerated involutions (n <= 7) by default.
UniPoly involution_rank_genfun(unsigned n);

/// (2n-1)!! = 1 * 3 * 5 * ... * (2n-1).
ExactInt odd_double_factorial(unsigned n);

}  // namespace mahonia
