#include <cstdint>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mahonia/errors.hpp"
#include "mahonia/qanalog.hpp"

using namespace mahonia;

namespace {

UniPoly poly(std::initializer_list<long> cs) {
    std::vector<ExactInt> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// Full signed histogram D[j][k] over subsets of {1..n}, one 2^n walk.
std::vector<std::vector<ExactInt>> subset_sum_histogram(unsigned n) {
    const unsigned long kmax = static_cast<unsigned long>(n) * (n + 1) / 2;
    std::vector<std::vector<ExactInt>> hist(n + 1, std::vector<ExactInt>(kmax + 1));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        unsigned j = 0;
        unsigned long k = 0;
        for (unsigned i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) {
                ++j;
                k += i + 1;
            }
        hist[j][k] += 1;
    }
    return hist;
}

}  // namespace

TEST_SUITE("qanalog") {

TEST_CASE("q_factorial") {
    CHECK(q_factorial(0) == poly({1}));
    CHECK(q_factorial(1) == poly({1}));
    CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
    CHECK(q_factorial(4).eval(ExactInt(1)) == 24);
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(q_factorial(n).eval(ExactInt(1)) == factorial(n));
        CHECK(q_factorial(n).degree() == static_cast<std::ptrdiff_t>(n * (n - (n > 0)) / 2));
    }
}

TEST_CASE("gaussian_binomial basics") {
    for (unsigned n = 0; n <= 8; ++n) CHECK(gaussian_binomial(n, 0) == poly({1}));
    CHECK(gaussian_binomial(2, 1) == poly({1, 1}));
    CHECK(gaussian_binomial(4, 2) == poly({1, 1, 2, 1, 1}));
    CHECK_THROWS_AS(gaussian_binomial(3, 4), std::domain_error);
}

TEST_CASE("gaussian polynomial shape invariants") {
    for (unsigned n = 0; n <= 10; ++n) {
        for (unsigned m = 0; m <= n; ++m) {
            const UniPoly g = gaussian_binomial(n, m);
            const std::size_t deg = static_cast<std::size_t>(m) * (n - m);
            REQUIRE(g.degree() == static_cast<std::ptrdiff_t>(deg));
            CHECK(g.eval(ExactInt(1)) == binomial(n, m));
            for (std::size_t k = 0; k <= deg; ++k) {
                CHECK(g.coeff(k) > 0);
                CHECK(g.coeff(k) == g.coeff(deg - k));  // palindromic coefficients
            }
        }
    }
}

TEST_CASE("gaussian symmetry in the lower index") {
    for (unsigned n = 0; n <= 30; ++n) {
        const auto row = gaussian_binomial_row(n);
        for (unsigned m = 0; m <= n; ++m) CHECK(row[m] == row[n - m]);
    }
}

TEST_CASE("q-Pascal row agrees with q-factorial division") {
    for (unsigned n = 0; n <= 16; ++n) {
        const auto row = gaussian_binomial_row(n);
        REQUIRE(row.size() == n + 1);
        for (unsigned m = 0; m <= n; ++m) CHECK(row[m] == gaussian_binomial(n, m));
    }
}

TEST_CASE("subset_sum_count") {
    CHECK(subset_sum_count(4, 2, 5) == 2);  // {1,4}, {2,3}
    CHECK(subset_sum_count(5, 3, 5) == 0);  // below the minimal sum 1+2+3
    CHECK(subset_sum_count(7, 0, 0) == 1);  // the empty subset
    CHECK(subset_sum_count(7, 0, 3) == 0);
    CHECK(subset_sum_count(6, 7, 10) == 0);  // j > n
    CHECK_THROWS_AS(subset_sum_count(26, 3, 10), resource_guard_error);
}

TEST_CASE("gauss_coefficient_C") {
    CHECK(gauss_coefficient_C(4, 2, 5) == 2);
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned j = 1; j <= n; ++j)
            CHECK(gauss_coefficient_C(n, j, j * (j + 1) / 2) == 1);  // minimal subset {1..j}
        CHECK(gauss_coefficient_C(n, n, n * (n + 1) / 2) == 1);      // the full set
    }
    CHECK(gauss_coefficient_C(5, 0, 0) == 0);   // j out of range
    CHECK(gauss_coefficient_C(5, 6, 10) == 0);  // j > n
    CHECK(gauss_coefficient_C(5, 2, 2) == 0);   // k below j(j+1)/2
    CHECK(gauss_coefficient_C(5, 2, 16) == 0);  // k above n(n+1)/2
}

TEST_CASE("gauss coefficients count subset sums") {
    for (unsigned n = 1; n <= 10; ++n) {
        const auto hist = subset_sum_histogram(n);
        const unsigned long kmax = static_cast<unsigned long>(n) * (n + 1) / 2;
        for (unsigned j = 1; j <= n; ++j)
            for (unsigned long k = 0; k <= kmax; ++k)
                CHECK(gauss_coefficient_C(n, j, k) == hist[j][k]);
    }
    // spot-check the recursive oracle itself against the histogram walk
    CHECK(subset_sum_count(10, 4, 21) == subset_sum_histogram(10)[4][21]);
}

TEST_CASE("cauchy_product") {
    CHECK(cauchy_product(0) == BiPoly::one());
    BiPoly expected = BiPoly::one();
    expected.add_term(1, 1, ExactInt(1));
    expected.add_term(1, 2, ExactInt(1));
    expected.add_term(2, 3, ExactInt(1));
    CHECK(cauchy_product(2) == expected);
    CHECK(cauchy_product(4).coeff(2, 5) == subset_sum_count(4, 2, 5));
}

TEST_CASE("Cauchy binomial identity") {
    for (unsigned n = 0; n <= 10; ++n) {
        BiPoly rhs;
        for (unsigned m = 0; m <= n; ++m)
            rhs = rhs + BiPoly::from_unipoly(gaussian_binomial(n, m), m, m * (m + 1) / 2);
        CHECK(cauchy_product(n) == rhs);
    }
}

}  // TEST_SUITE
