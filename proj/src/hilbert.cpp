#include "mahonia/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "mahonia/errors.hpp"

namespace mahonia {

ExactInt restricted_binomial(long long n, long long k) {
    if (k < 0 || n < k) return 0;
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

DegreeSequence DegreeSequence::of(std::vector<unsigned> degrees) {
    for (unsigned d : degrees)
        if (d < 1) throw std::invalid_argument("DegreeSequence: degrees must be >= 1");
    return DegreeSequence{std::move(degrees)};
}

DegreeSequence DegreeSequence::uniform(unsigned n, unsigned d) {
    return of(std::vector<unsigned>(n, d));
}

DegreeSequence DegreeSequence::staircase(unsigned n) {
    std::vector<unsigned> ds(n);
    std::iota(ds.begin(), ds.end(), 1u);
    return DegreeSequence{std::move(ds)};
}

ExactInt koszul_hilbert(const DegreeSequence& degrees, unsigned long t) {
    const unsigned n = degrees.size();
    if (n < 1) throw std::invalid_argument("koszul_hilbert: empty degree sequence");
    // signed[s] = sum over subsets with degree sum s of (-1)^|subset|
    unsigned long total_deg = 0;
    for (unsigned d : degrees.degrees) total_deg += d;
    std::vector<ExactInt> signed_counts(total_deg + 1);
    signed_counts[0] = 1;
    unsigned long reached = 0;
    for (unsigned d : degrees.degrees) {
        reached += d;
        for (std::size_t s = reached + 1; s-- > d;) signed_counts[s] -= signed_counts[s - d];
    }
    const long long nn = n;
    ExactInt total(0);
    for (std::size_t s = 0; s < signed_counts.size() && s <= t; ++s) {
        if (signed_counts[s] == 0) continue;
        total += signed_counts[s] * restricted_binomial(static_cast<long long>(t - s) + nn, nn);
    }
    return total;
}

ExactInt koszul_hilbert_by_subsets(const DegreeSequence& degrees, unsigned long t) {
    const unsigned n = degrees.size();
    if (n < 1) throw std::invalid_argument("koszul_hilbert_by_subsets: empty degree sequence");
    detail::check_enumeration_guard("koszul_hilbert_by_subsets", pow_ui(ExactInt(2), n),
                                    1ul << 25);
    const long long nn = n;
    ExactInt total(0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        long long deg_sum = 0;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) deg_sum += degrees.degrees[i];
        ExactInt term =
            restricted_binomial(static_cast<long long>(t) - deg_sum + nn, nn);
        if (std::popcount(mask) % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

ExactInt elementary_symmetric_at_init(unsigned n, unsigned i) {
    if (i > n) return 0;
    std::vector<ExactInt> e(i + 1);
    e[0] = 1;
    for (unsigned v = 1; v <= n; ++v)
        for (unsigned j = std::min(i, v); j >= 1; --j) e[j] += ExactInt(v) * e[j - 1];
    return e[i];
}

ExactInt complete_symmetric_eval(std::span<const ExactInt> vars, unsigned i) {
    std::vector<ExactInt> h(i + 1);
    h[0] = 1;
    for (const ExactInt& x : vars)
        for (unsigned j = 1; j <= i; ++j) h[j] += x * h[j - 1];
    return h[i];
}

OrbitPoint OrbitPoint::from_permutation(const std::vector<unsigned>& image) {
    const unsigned n = static_cast<unsigned>(image.size());
    std::vector<bool> seen(n, false);
    for (unsigned v : image) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("OrbitPoint: coordinates must be a permutation of 1..n");
        seen[v - 1] = true;
    }
    OrbitPoint p;
    p.coordinates.reserve(n);
    for (unsigned v : image) p.coordinates.emplace_back(v);
    return p;
}

ExactInt groebner_f_eval(unsigned n, unsigned k, std::span<const ExactInt> point) {
    if (k < 1 || k > n) throw std::invalid_argument("groebner_f_eval: requires 1 <= k <= n");
    if (point.size() != n) throw std::invalid_argument("groebner_f_eval: point must have length n");
    // h_0..h_k of the coordinate suffix (x_k, ..., x_n)
    std::vector<ExactInt> h(k + 1);
    h[0] = 1;
    for (std::size_t v = k - 1; v < n; ++v)
        for (unsigned j = 1; j <= k; ++j) h[j] += point[v] * h[j - 1];
    ExactInt total(0);
    for (unsigned i = 0; i <= k; ++i) {
        ExactInt term = h[k - i] * elementary_symmetric_at_init(n, i);
        if (i % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

OrbitVanishingReport verify_orbit_vanishing(unsigned n) {
    detail::check_enumeration_guard("verify_orbit_vanishing", factorial(n), 40320ul);
    OrbitVanishingReport report{n, 0, true, 0, {}};
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    std::vector<ExactInt> point(n);
    do {
        for (unsigned i = 0; i < n; ++i) point[i] = perm[i];
        for (unsigned k = 1; k <= n; ++k) {
            ++report.evaluations;
            if (groebner_f_eval(n, k, point) != 0) {
                report.all_zero = false;
                report.failing_k = k;
                report.failing_permutation = perm;
                return report;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return report;
}

ExactInt dbox_groebner_eval(unsigned n, unsigned d, unsigned i, std::span<const ExactInt> point) {
    if (i < 1 || i > n) throw std::invalid_argument("dbox_groebner_eval: requires 1 <= i <= n");
    if (point.size() != n)
        throw std::invalid_argument("dbox_groebner_eval: point must have length n");
    ExactInt prod(1);
    for (unsigned j = 1; j <= d; ++j) prod *= point[i - 1] - ExactInt(j);
    return prod;
}

}  // namespace mahonia
