#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mahonia/compositions.hpp"
#include "mahonia/errors.hpp"
#include "mahonia/inversions.hpp"
#include "mahonia/posets.hpp"

using namespace mahonia;

namespace {

UniPoly poly(std::initializer_list<long> cs) {
    std::vector<ExactInt> v;
    for (long c : cs) v.emplace_back(c);
    return UniPoly(std::move(v));
}

// first primes, enough for every test here
constexpr unsigned long kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

TEST_SUITE("posets") {

TEST_CASE("factorize") {
    CHECK(factorize(1) == Factorization{});
    CHECK(factorize(12) == Factorization::of({{2, 2}, {3, 1}}));
    CHECK(factorize(999983) == Factorization::of({{999983, 1}}));  // prime
    CHECK_THROWS_AS(factorize(0), std::domain_error);
    CHECK_THROWS_AS(factorize(1000001), resource_guard_error);
}

TEST_CASE("Factorization validation") {
    CHECK_THROWS_AS(Factorization::of({{3, 1}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Factorization::of({{2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Factorization::of({{1, 2}}), std::invalid_argument);
}

TEST_CASE("divisor_rank_genfun") {
    CHECK(divisor_rank_genfun(factorize(12)) == poly({1, 2, 2, 1}));
    CHECK(divisor_rank_genfun(factorize(7)) == poly({1, 1}));
    CHECK(divisor_rank_genfun(Factorization{}) == poly({1}));
}

TEST_CASE("brute_divisor_rank_genfun") {
    CHECK(brute_divisor_rank_genfun(12) == poly({1, 2, 2, 1}));
    CHECK(brute_divisor_rank_genfun(1) == poly({1}));
    CHECK(brute_divisor_rank_genfun(30) == poly({1, 3, 3, 1}));
    CHECK_THROWS_AS(brute_divisor_rank_genfun(0), std::domain_error);
}

TEST_CASE("factored and brute divisor polynomials agree") {
    for (unsigned long N = 1; N <= 10000; ++N)
        CHECK(divisor_rank_genfun(factorize(N)) == brute_divisor_rank_genfun(N));
}

TEST_CASE("staircase prime signatures give inversion polynomials") {
    for (unsigned n = 2; n <= 8; ++n) {
        std::vector<PrimePower> pps;
        for (unsigned i = 2; i <= n; ++i) pps.push_back({kPrimes[i - 2], i - 1});
        CHECK(divisor_rank_genfun(Factorization::of(pps)) == inv_genfun(n).to_poly());
    }
}

TEST_CASE("box prime signatures give composition polynomials") {
    for (unsigned n = 1; n <= 6; ++n) {
        for (unsigned d = 2; d <= 4; ++d) {
            std::vector<PrimePower> pps;
            for (unsigned i = 0; i < n; ++i) pps.push_back({kPrimes[i], d - 1});
            CHECK(divisor_rank_genfun(Factorization::of(pps)) == comp_genfun(n, d).to_poly());
        }
    }
}

TEST_CASE("involution_weight hand values") {
    CHECK(involution_weight(Involution::from_arcs({{1, 2}, {3, 4}})) == 0);
    CHECK(involution_weight(Involution::from_arcs({{1, 3}, {2, 4}})) == 1);
    CHECK(involution_weight(Involution::from_arcs({{1, 4}, {2, 3}})) == 2);
}

TEST_CASE("Involution validation") {
    CHECK_THROWS_AS(Involution::from_arcs({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Involution::from_arcs({{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Involution::from_arcs({{2, 3}, {1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(Involution::from_arcs({{1, 5}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("involution_rank_genfun") {
    CHECK(involution_rank_genfun(0) == poly({1}));
    CHECK(involution_rank_genfun(1) == poly({1}));
    CHECK(involution_rank_genfun(2) == poly({1, 1, 1}));
    CHECK_THROWS_AS(involution_rank_genfun(8), resource_guard_error);
}

TEST_CASE("involution polynomial equals the odd q-number product") {
    for (unsigned n = 1; n <= 6; ++n) {
        UniPoly expected = UniPoly::constant(ExactInt(1));
        for (unsigned i = 1; i <= n; ++i) expected = expected * UniPoly::geometric(2 * i - 1);
        const UniPoly actual = involution_rank_genfun(n);
        CHECK(actual == expected);
        CHECK(actual.degree() == static_cast<std::ptrdiff_t>(n * (n - 1)));  // rank 2*C(n,2)
        CHECK(actual.eval(ExactInt(1)) == odd_double_factorial(n));
    }
}

TEST_CASE("rank polynomials are nonnegative and count the poset") {
    for (unsigned long N : {360ul, 1024ul, 30030ul}) {
        const UniPoly g = divisor_rank_genfun(factorize(N));
        ExactInt divisors(0);
        for (const auto& c : g.coeffs()) {
            CHECK(c >= 0);
            divisors += c;
        }
        CHECK(g.eval(ExactInt(1)) == divisors);
    }
}

}  // TEST_SUITE
