#include "mahonia/qanalog.hpp"

#include <stdexcept>

#include "mahonia/errors.hpp"

namespace mahonia {

UniPoly q_factorial(unsigned n) {
    UniPoly p = UniPoly::constant(ExactInt(1));
    for (unsigned i = 2; i <= n; ++i) p = p * UniPoly::geometric(i);
    return p;
}

UniPoly gaussian_binomial(unsigned n, unsigned m) {
    if (m > n) throw std::domain_error("gaussian_binomial: m > n");
    auto [quot, rem] = q_factorial(n).divmod(q_factorial(n - m) * q_factorial(m));
    if (!rem.is_zero())
        throw std::logic_error("gaussian_binomial: q-factorial division left a remainder");
    return quot;
}

std::vector<UniPoly> gaussian_binomial_row(unsigned n) {
    std::vector<UniPoly> row{UniPoly::constant(ExactInt(1))};
    for (unsigned i = 1; i <= n; ++i) {
        std::vector<UniPoly> next(i + 1);
        next[0] = row[0];
        next[i] = row[i - 1];
        for (unsigned j = 1; j < i; ++j)
            next[j] = row[j] + UniPoly::monomial(ExactInt(1), i - j) * row[j - 1];
        row = std::move(next);
    }
    return row;
}

namespace {

// Counts j-subsets of {next..n} summing to k, with min/max sum pruning.
ExactInt subset_count_rec(unsigned n, unsigned next, unsigned j, unsigned long k) {
    if (j == 0) return k == 0 ? 1 : 0;
    if (next > n || n - next + 1 < j) return 0;
    // Smallest and largest achievable sums with j picks from {next..n}.
    const unsigned long lo =
        static_cast<unsigned long>(j) * next + static_cast<unsigned long>(j) * (j - 1) / 2;
    const unsigned long hi =
        static_cast<unsigned long>(j) * n - static_cast<unsigned long>(j) * (j - 1) / 2;
    if (k < lo || k > hi) return 0;
    return subset_count_rec(n, next + 1, j - 1, k - next) + subset_count_rec(n, next + 1, j, k);
}

}  // namespace

ExactInt subset_sum_count(unsigned n, unsigned j, unsigned k) {
    detail::check_enumeration_guard("subset_sum_count", pow_ui(ExactInt(2), n), 1ul << 25);
    if (j > n) return 0;
    return subset_count_rec(n, 1, j, k);
}

ExactInt gauss_coefficient_C(unsigned n, unsigned j, unsigned k) {
    if (j < 1 || j > n) return 0;
    const unsigned long min_k = static_cast<unsigned long>(j) * (j + 1) / 2;
    const unsigned long max_k = static_cast<unsigned long>(n) * (n + 1) / 2;
    if (k < min_k || k > max_k) return 0;
    return gaussian_binomial(n, j).coeff(k - min_k);
}

BiPoly cauchy_product(unsigned n) {
    BiPoly p = BiPoly::one();
    for (unsigned i = 1; i <= n; ++i)
        p = p * (BiPoly::one() + BiPoly::term(1, i, ExactInt(1)));
    return p;
}

}  // namespace mahonia
