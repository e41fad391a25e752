#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mahonia/exact_int.hpp"

namespace mahonia {

/// Restricted binomial coefficient: C(n, k) when 0 <= k <= n, otherwise 0
/// (including negative arguments). Alternating-sum formulas rely on
/// out-of-range terms vanishing here.
ExactInt restricted_binomial(long long n, long long k);

/// Generator degrees d_1..d_n of a complete intersection.
struct DegreeSequence {
    std::vector<unsigned> degrees;

    /// Validates every degree >= 1.
    static DegreeSequence of(std::vector<unsigned> degrees);
    /// (d, d, ..., d), n times.
    static DegreeSequence uniform(unsigned n, unsigned d);
    /// (1, 2, ..., n).
    static DegreeSequence staircase(unsigned n);

    unsigned size() const { return static_cast<unsigned>(degrees.size()); }
};

/// Hilbert function of the complete-intersection quotient at degree t:
///   sum over subsets J of [n] of (-1)^|J| C(t - sum_{i in J} d_i + n, n)_0.
/// Evaluated through the signed degree-sum histogram (a subset-sum DP), so
/// the cost is polynomial in n and sum(d_i).
ExactInt koszul_hilbert(const DegreeSequence& degrees, unsigned long t);

/// The same alternating sum by direct enumeration of all 2^n subsets.
/// Verification path; guarded at 2^25 subsets by default.
ExactInt koszul_hilbert_by_subsets(const DegreeSequence& degrees, unsigned long t);

/// i-th elementary symmetric function evaluated at (1, 2, ..., n); 0 for i > n.
ExactInt elementary_symmetric_at_init(unsigned n, unsigned i);

/// i-th complete homogeneous symmetric function evaluated at the given
/// values, by the variable-at-a-time recurrence
///   h(i, m vars) = h(i, m-1 vars) + x_m * h(i-1, m vars).
ExactInt complete_symmetric_eval(std::span<const ExactInt> vars, unsigned i);

/// A point of the S_n orbit of (1, ..., n): its coordinates are a permutation
/// of 1..n.
struct OrbitPoint {
    std::vector<ExactInt> coordinates;

    /// Validates that `image` is a bijection [n] -> [n].
    static OrbitPoint from_permutation(const std::vector<unsigned>& image);
};

/// Value at `point` of the Groebner basis element
///   f_k = sum_{i=0}^{k} (-1)^i h_{k-i}(x_k, ..., x_n) sigma_i(1, ..., n),
/// which has leading monomial x_k^k and vanishes on the S_n orbit of
/// (1, ..., n). The point may be arbitrary, not just an orbit point.
/// Requires 1 <= k <= n and point of length n.
ExactInt groebner_f_eval(unsigned n, unsigned k, std::span<const ExactInt> point);

inline ExactInt groebner_f_eval(unsigned n, unsigned k, const OrbitPoint& point) {
    return groebner_f_eval(n, k, std::span<const ExactInt>(point.coordinates));
}

struct OrbitVanishingReport {
    unsigned n = 0;
    std::uint64_t evaluations = 0;
    bool all_zero = true;
    // Set when all_zero is false: the first offending generator and point.
    unsigned failing_k = 0;
    std::vector<unsigned> failing_permutation;
};

/// Evaluates every f_k (1 <= k <= n) at every point of the S_n orbit and
/// reports whether all n * n! values vanish. Guarded at 8! orbit points by
/// default.
OrbitVanishingReport verify_orbit_vanishing(unsigned n);

/// Value of prod_{j=1}^{d} (point_i - j), the i-th generator of the d-box
/// vanishing ideal; zero exactly when point_i is one of 1..d. Requires
/// 1 <= i <= n and point of length n.
ExactInt dbox_groebner_eval(unsigned n, unsigned d, unsigned i, std::span<const ExactInt> point);

}  // namespace mahonia
