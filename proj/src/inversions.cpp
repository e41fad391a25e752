#include "mahonia/inversions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "mahonia/errors.hpp"
#include "mahonia/hilbert.hpp"
#include "mahonia/qanalog.hpp"

namespace mahonia {

namespace {

unsigned long max_inversions(unsigned n) {
    return n < 2 ? 0 : static_cast<unsigned long>(n) * (n - 1) / 2;
}

// Row caches for the closed formulas. Thread-local, so concurrent callers
// never share mutable state.
const std::vector<UniPoly>& cached_gauss_row(unsigned n) {
    thread_local std::map<unsigned, std::vector<UniPoly>> cache;
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, gaussian_binomial_row(n)).first;
    return it->second;
}

}  // namespace

InversionTable inv_bruteforce(unsigned n) {
    detail::check_enumeration_guard("inv_bruteforce", factorial(n), 3628800ul);
    InversionTable table{n, std::vector<ExactInt>(max_inversions(n) + 1)};
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 1u);
    do {
        unsigned long t = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++t;
        table.values[t] += 1;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return table;
}

InversionTable inv_recurrence_row(unsigned n) {
    std::vector<ExactInt> row{ExactInt(1)};  // I_0
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<ExactInt> prefix(row.size() + 1);
        for (std::size_t j = 0; j < row.size(); ++j) prefix[j + 1] = prefix[j] + row[j];
        std::vector<ExactInt> next(max_inversions(i) + 1);
        for (std::size_t t = 0; t < next.size(); ++t) {
            const std::size_t lo = t + 1 >= i ? t + 1 - i : 0;          // max(0, t-i+1)
            const std::size_t hi = std::min(t, row.size() - 1);
            next[t] = prefix[hi + 1] - prefix[lo];
        }
        row = std::move(next);
    }
    return InversionTable{n, std::move(row)};
}

ExactInt inv_recurrence(unsigned n, unsigned long t) {
    if (t > max_inversions(n)) return 0;
    return inv_recurrence_row(n).values[t];
}

InversionTable inv_genfun(unsigned n) {
    if (n < 1) throw std::invalid_argument("inv_genfun: n must be >= 1");
    UniPoly g = UniPoly::constant(ExactInt(1));
    for (unsigned i = 1; i < n; ++i) g = g * UniPoly::geometric(i + 1);
    return InversionTable{n, g.coeffs()};
}

ExactInt inv_prefix_closed(unsigned n, unsigned long t) {
    const long long nn = n;
    const long long tt = static_cast<long long>(t);
    ExactInt total = restricted_binomial(nn + tt, nn);  // C(n+t, t)
    const auto& row = cached_gauss_row(n);
    for (unsigned j = 1; j <= n; ++j) {
        const bool negative = (j % 2 == 1);
        const long long k_min = static_cast<long long>(j) * (j + 1) / 2;
        const auto& coeffs = row[j].coeffs();
        for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
            const long long k = k_min + static_cast<long long>(idx);
            if (k > tt) break;  // restricted binomial vanishes past k = t
            ExactInt term = coeffs[idx] * restricted_binomial(tt - k + nn, nn);
            if (negative) total -= term;
            else total += term;
        }
    }
    return total;
}

ExactInt inv_closed(unsigned n, unsigned long t) {
    const long long nn = n;
    const long long tt = static_cast<long long>(t);
    ExactInt total = restricted_binomial(nn + tt, nn) - restricted_binomial(nn + tt - 1, nn);
    const auto& row = cached_gauss_row(n);
    for (unsigned j = 1; j <= n; ++j) {
        const bool negative = (j % 2 == 1);
        const long long k_min = static_cast<long long>(j) * (j + 1) / 2;
        const auto& coeffs = row[j].coeffs();
        for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
            const long long k = k_min + static_cast<long long>(idx);
            if (k > tt) break;
            ExactInt term = coeffs[idx] * (restricted_binomial(tt - k + nn, nn) -
                                           restricted_binomial(tt - k + nn - 1, nn));
            if (negative) total -= term;
            else total += term;
        }
    }
    return total;
}

ExactInt inv_pentagonal(unsigned n, unsigned long t) {
    if (t > n) throw std::domain_error("inv_pentagonal: formula only valid for t <= n");
    const long long nn = n;
    const long long tt = static_cast<long long>(t);
    ExactInt total = restricted_binomial(nn + tt - 1, tt);
    for (long long j = 1;; ++j) {
        const long long u = j * (3 * j - 1) / 2;  // pentagonal numbers 1, 5, 12, ...
        if (u > tt) break;
        ExactInt term = restricted_binomial(nn + tt - u - j - 1, tt - u - j) +
                        restricted_binomial(nn + tt - u - 1, tt - u);
        if (j % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

ExactInt standard_monomial_count_L(unsigned n, unsigned long t) {
    // counts[s] = number of vectors of the first i entries with sum s.
    std::vector<ExactInt> counts{ExactInt(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<ExactInt> prefix(counts.size() + 1);
        for (std::size_t s = 0; s < counts.size(); ++s) prefix[s + 1] = prefix[s] + counts[s];
        // entry i ranges over 0..i-1
        std::vector<ExactInt> next(counts.size() + i - 1);
        for (std::size_t s = 0; s < next.size(); ++s) {
            const std::size_t lo = s + 1 >= i ? s + 1 - i : 0;
            const std::size_t hi = std::min(s, counts.size() - 1);
            next[s] = prefix[hi + 1] - prefix[lo];
        }
        counts = std::move(next);
    }
    ExactInt total(0);
    for (std::size_t s = 0; s < counts.size() && s <= t; ++s) total += counts[s];
    return total;
}

}  // namespace mahonia
