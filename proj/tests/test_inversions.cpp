#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "mahonia/errors.hpp"
#include "mahonia/exponent_vector.hpp"
#include "mahonia/inversions.hpp"

using namespace mahonia;

namespace {

std::vector<ExactInt> values(std::initializer_list<long> cs) {
    std::vector<ExactInt> v;
    for (long c : cs) v.emplace_back(c);
    return v;
}

unsigned long choose2(unsigned n) { return n < 2 ? 0 : static_cast<unsigned long>(n) * (n - 1) / 2; }

}  // namespace

TEST_SUITE("inversions") {

TEST_CASE("inv_bruteforce") {
    CHECK(inv_bruteforce(1).values == values({1}));
    CHECK(inv_bruteforce(3).values == values({1, 2, 2, 1}));
    CHECK(inv_bruteforce(4).values[2] == 5);
    CHECK_THROWS_AS(inv_bruteforce(11), resource_guard_error);
}

TEST_CASE("inversion table invariants") {
    for (unsigned n = 1; n <= 7; ++n) {
        const InversionTable table = inv_bruteforce(n);
        REQUIRE(table.values.size() == choose2(n) + 1);
        CHECK(table.values[0] == 1);
        ExactInt total(0);
        for (const auto& v : table.values) total += v;
        CHECK(total == factorial(n));
        for (std::size_t t = 0; t < table.values.size(); ++t)
            CHECK(table.values[t] == table.values[choose2(n) - t]);
    }
}

TEST_CASE("inv_recurrence") {
    for (unsigned n = 1; n <= 9; ++n) CHECK(inv_recurrence(n, 0) == 1);
    CHECK(inv_recurrence(3, 1) == 2);
    CHECK(inv_recurrence(4, 7) == 0);  // past n(n-1)/2
    const InversionTable oracle = inv_bruteforce(6);
    for (unsigned long t = 0; t <= choose2(6); ++t)
        CHECK(inv_recurrence(6, t) == oracle.values[t]);
    CHECK(inv_recurrence_row(6).values == oracle.values);
}

TEST_CASE("inv_genfun") {
    CHECK_THROWS_AS(inv_genfun(0), std::invalid_argument);
    CHECK(inv_genfun(1).values == values({1}));
    CHECK(inv_genfun(2).values == values({1, 1}));
    CHECK(inv_genfun(3).values == values({1, 2, 2, 1}));
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(inv_genfun(n).to_poly().eval(ExactInt(1)) == factorial(n));
}

TEST_CASE("inv_prefix_closed") {
    CHECK(inv_prefix_closed(3, 1) == 3);
    CHECK(inv_prefix_closed(4, 2) == 9);
    for (unsigned n = 1; n <= 10; ++n) CHECK(inv_prefix_closed(n, choose2(n)) == factorial(n));
}

TEST_CASE("inv_closed") {
    for (unsigned n = 1; n <= 10; ++n) CHECK(inv_closed(n, 0) == 1);
    CHECK(inv_closed(3, 2) == 2);
    for (unsigned long t = 0; t <= choose2(8); ++t) CHECK(inv_closed(8, t) == inv_recurrence(8, t));
}

TEST_CASE("inv_pentagonal") {
    CHECK(inv_pentagonal(4, 2) == 5);
    CHECK(inv_pentagonal(5, 5) == 22);
    CHECK_THROWS_AS(inv_pentagonal(4, 5), std::domain_error);
    for (unsigned n = 1; n <= 8; ++n) {
        const InversionTable oracle = inv_bruteforce(n);
        for (unsigned long t = 0; t <= n && t <= choose2(n); ++t)
            CHECK(inv_pentagonal(n, t) == oracle.values[t]);
    }
}

TEST_CASE("standard_monomial_count_L") {
    for (unsigned n = 0; n <= 8; ++n) CHECK(standard_monomial_count_L(n, 0) == 1);
    CHECK(standard_monomial_count_L(3, 1) == 3);  // (0,0,0), (0,1,0), (0,0,1)
    for (unsigned n = 1; n <= 10; ++n)
        CHECK(standard_monomial_count_L(n, choose2(n)) == factorial(n));
}

TEST_CASE("standard monomial count matches staircase enumeration") {
    for (unsigned n = 1; n <= 6; ++n) {
        std::vector<unsigned> bounds(n);
        for (unsigned i = 0; i < n; ++i) bounds[i] = i;  // entry i ranges 0..i
        for (unsigned long t = 0; t <= choose2(n) + 1; ++t) {
            ExactInt count(0);
            detail::for_each_bounded_vector(bounds, [&](const ExponentVector& v) {
                REQUIRE(v.within_staircase());
                if (v.sum() <= t) count += 1;
            });
            CHECK(standard_monomial_count_L(n, t) == count);
        }
    }
}

TEST_CASE("four algorithms agree") {
    for (unsigned n = 1; n <= 6; ++n) {
        const InversionTable brute = inv_bruteforce(n);
        const InversionTable genfun = inv_genfun(n);
        CHECK(genfun.values == brute.values);
        for (unsigned long t = 0; t <= choose2(n); ++t) {
            CHECK(inv_recurrence(n, t) == brute.values[t]);
            CHECK(inv_closed(n, t) == brute.values[t]);
        }
    }
}

TEST_CASE("closed-form symmetry") {
    for (unsigned n = 1; n <= 12; ++n)
        for (unsigned long t = 0; t <= choose2(n); ++t)
            CHECK(inv_closed(n, t) == inv_closed(n, choose2(n) - t));
}

TEST_CASE("prefix consistency") {
    for (unsigned n = 1; n <= 12; ++n) {
        ExactInt running(0);
        for (unsigned long t = 0; t <= choose2(n); ++t) {
            running += inv_closed(n, t);
            CHECK(inv_prefix_closed(n, t) == running);
            CHECK(standard_monomial_count_L(n, t) == running);
        }
    }
}

TEST_CASE("closed-form total mass") {
    for (unsigned n = 1; n <= 20; ++n) {
        ExactInt total(0);
        for (unsigned long t = 0; t <= choose2(n); ++t) total += inv_closed(n, t);
        CHECK(total == factorial(n));
    }
}

}  // TEST_SUITE
