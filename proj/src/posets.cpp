#include "mahonia/posets.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mahonia/errors.hpp"
#include "mahonia/exponent_vector.hpp"

namespace mahonia {

Factorization Factorization::of(std::vector<PrimePower> prime_powers) {
    for (std::size_t i = 0; i < prime_powers.size(); ++i) {
        if (prime_powers[i].prime < 2)
            throw std::invalid_argument("Factorization: primes must be >= 2");
        if (prime_powers[i].exponent < 1)
            throw std::invalid_argument("Factorization: exponents must be >= 1");
        if (i > 0 && prime_powers[i - 1].prime >= prime_powers[i].prime)
            throw std::invalid_argument("Factorization: primes must be strictly increasing");
    }
    return Factorization{std::move(prime_powers)};
}

Factorization factorize(unsigned long N) {
    if (N == 0) throw std::domain_error("factorize: N must be >= 1");
    detail::check_enumeration_guard("factorize", ExactInt(static_cast<unsigned long>(N)),
                                    1000000ul);
    std::vector<PrimePower> pps;
    for (unsigned long p = 2; p * p <= N; ++p) {
        if (N % p != 0) continue;
        unsigned e = 0;
        while (N % p == 0) {
            N /= p;
            ++e;
        }
        pps.push_back({p, e});
    }
    if (N > 1) pps.push_back({N, 1});
    return Factorization{std::move(pps)};
}

UniPoly divisor_rank_genfun(const Factorization& f) {
    UniPoly g = UniPoly::constant(ExactInt(1));
    for (const PrimePower& pp : f.prime_powers) g = g * UniPoly::geometric(pp.exponent + 1);
    return g;
}

UniPoly brute_divisor_rank_genfun(unsigned long N) {
    if (N == 0) throw std::domain_error("brute_divisor_rank_genfun: N must be >= 1");
    const Factorization f = factorize(N);
    std::vector<unsigned> bounds;
    bounds.reserve(f.prime_powers.size());
    unsigned long rank = 0;
    for (const PrimePower& pp : f.prime_powers) {
        bounds.push_back(pp.exponent);
        rank += pp.exponent;
    }
    std::vector<ExactInt> hist(rank + 1);
    detail::for_each_bounded_vector(bounds, [&](const ExponentVector& v) { hist[v.sum()] += 1; });
    return UniPoly(std::move(hist));
}

Involution Involution::from_arcs(std::vector<std::pair<unsigned, unsigned>> arcs) {
    const unsigned two_n = static_cast<unsigned>(2 * arcs.size());
    std::vector<bool> seen(two_n, false);
    unsigned prev_initial = 0;
    for (const auto& [a, b] : arcs) {
        if (a >= b) throw std::invalid_argument("Involution: arcs must satisfy a < b");
        if (a < 1 || b > two_n) throw std::invalid_argument("Involution: arcs must cover [2n]");
        if (seen[a - 1] || seen[b - 1])
            throw std::invalid_argument("Involution: arcs must be disjoint");
        if (a <= prev_initial)
            throw std::invalid_argument("Involution: initial points must increase");
        seen[a - 1] = seen[b - 1] = true;
        prev_initial = a;
    }
    return Involution{std::move(arcs)};
}

unsigned long involution_weight(const Involution& inv) {
    unsigned long span_sum = 0;
    unsigned long crossings = 0;
    const auto& arcs = inv.arcs;
    for (std::size_t p = 0; p < arcs.size(); ++p) {
        span_sum += arcs[p].second - arcs[p].first - 1;
        for (std::size_t r = p + 1; r < arcs.size(); ++r) {
            // arcs are ordered by initial point, so only a_p < a_r < b_p < b_r
            // can cross
            if (arcs[r].first < arcs[p].second && arcs[p].second < arcs[r].second) ++crossings;
        }
    }
    return span_sum - crossings;
}

namespace {

void enumerate_involutions(std::vector<unsigned>& free_points,
                           std::vector<std::pair<unsigned, unsigned>>& arcs,
                           std::vector<ExactInt>& hist) {
    if (free_points.empty()) {
        hist[involution_weight(Involution{arcs})] += 1;
        return;
    }
    // Pair the smallest free point with every larger one; initial points come
    // out increasing, so the standard representation is automatic.
    const unsigned a = free_points.front();
    for (std::size_t i = 1; i < free_points.size(); ++i) {
        const unsigned b = free_points[i];
        std::vector<unsigned> rest;
        rest.reserve(free_points.size() - 2);
        for (std::size_t j = 1; j < free_points.size(); ++j)
            if (j != i) rest.push_back(free_points[j]);
        arcs.emplace_back(a, b);
        enumerate_involutions(rest, arcs, hist);
        arcs.pop_back();
    }
}

}  // namespace

ExactInt odd_double_factorial(unsigned n) {
    ExactInt r(1);
    for (unsigned i = 1; i <= n; ++i) r *= 2 * i - 1;
    return r;
}

UniPoly involution_rank_genfun(unsigned n) {
    detail::check_enumeration_guard("involution_rank_genfun", odd_double_factorial(n), 135135ul);
    const unsigned long max_weight = n < 2 ? 0 : 2 * (static_cast<unsigned long>(n) * (n - 1) / 2);
    std::vector<ExactInt> hist(max_weight + 1);
    std::vector<unsigned> points(2 * n);
    std::iota(points.begin(), points.end(), 1u);
    std::vector<std::pair<unsigned, unsigned>> arcs;
    arcs.reserve(n);
    enumerate_involutions(points, arcs, hist);
    return UniPoly(std::move(hist));
}

}  // namespace mahonia
