#include "mahonia/compositions.hpp"

#include <algorithm>
#include <stdexcept>

#include "mahonia/errors.hpp"
#include "mahonia/exponent_vector.hpp"
#include "mahonia/hilbert.hpp"

namespace mahonia {

namespace {

void require_d(unsigned d) {
    if (d < 1) throw std::invalid_argument("compositions: d must be >= 1");
}

unsigned long max_sum(unsigned n, unsigned d) {
    return static_cast<unsigned long>(n) * (d - 1);
}

}  // namespace

CompositionTable comp_bruteforce(unsigned n, unsigned d) {
    require_d(d);
    detail::check_enumeration_guard("comp_bruteforce", pow_ui(ExactInt(d), n), 10000000ul);
    CompositionTable table{n, d, std::vector<ExactInt>(max_sum(n, d) + 1)};
    detail::for_each_bounded_vector(std::vector<unsigned>(n, d - 1),
                                    [&](const ExponentVector& v) { table.values[v.sum()] += 1; });
    return table;
}

CompositionTable comp_recurrence_row(unsigned n, unsigned d) {
    require_d(d);
    std::vector<ExactInt> row{ExactInt(1)};  // zero parts
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<ExactInt> prefix(row.size() + 1);
        for (std::size_t s = 0; s < row.size(); ++s) prefix[s + 1] = prefix[s] + row[s];
        std::vector<ExactInt> next(max_sum(i, d) + 1);
        for (std::size_t t = 0; t < next.size(); ++t) {
            const std::size_t lo = t + 1 >= d ? t + 1 - d : 0;  // max(0, t-d+1)
            const std::size_t hi = std::min(t, row.size() - 1);
            next[t] = prefix[hi + 1] - prefix[lo];
        }
        row = std::move(next);
    }
    return CompositionTable{n, d, std::move(row)};
}

ExactInt comp_recurrence(unsigned n, unsigned d, long long t) {
    require_d(d);
    if (t < 0 || t > static_cast<long long>(max_sum(n, d))) return 0;
    return comp_recurrence_row(n, d).values[static_cast<std::size_t>(t)];
}

CompositionTable comp_genfun(unsigned n, unsigned d) {
    if (n < 1) throw std::invalid_argument("comp_genfun: n must be >= 1");
    require_d(d);
    UniPoly result = UniPoly::constant(ExactInt(1));
    UniPoly base = UniPoly::geometric(d);
    unsigned e = n;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return CompositionTable{n, d, result.coeffs()};
}

ExactInt comp_prefix_closed(unsigned n, unsigned d, unsigned long t) {
    require_d(d);
    const long long nn = n;
    const long long tt = static_cast<long long>(t);
    ExactInt total(0);
    for (unsigned i = 0; i <= n; ++i) {
        const long long shift = static_cast<long long>(d) * i;
        if (shift > tt) break;  // all later restricted binomials vanish
        ExactInt term = binomial(n, i) * restricted_binomial(tt - shift + nn, nn);
        if (i % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

ExactInt comp_closed(unsigned n, unsigned d, unsigned long t) {
    require_d(d);
    const long long nn = n;
    const long long tt = static_cast<long long>(t);
    ExactInt total(0);
    for (unsigned i = 0; i <= n; ++i) {
        const long long shift = static_cast<long long>(d) * i;
        if (shift > tt) break;
        ExactInt term = binomial(n, i) * (restricted_binomial(tt - shift + nn, nn) -
                                          restricted_binomial(tt - shift + nn - 1, nn));
        if (i % 2 == 1) total -= term;
        else total += term;
    }
    return total;
}

ExactInt standard_monomial_count_M(unsigned n, unsigned d, unsigned long t) {
    require_d(d);
    std::vector<ExactInt> counts{ExactInt(1)};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<ExactInt> prefix(counts.size() + 1);
        for (std::size_t s = 0; s < counts.size(); ++s) prefix[s + 1] = prefix[s] + counts[s];
        std::vector<ExactInt> next(counts.size() + d - 1);
        for (std::size_t s = 0; s < next.size(); ++s) {
            const std::size_t lo = s + 1 >= d ? s + 1 - d : 0;
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
