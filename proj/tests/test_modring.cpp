#include "oracles.hpp"
#include "unitcode/modring.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using namespace unitcode;

TEST(Gcd, SmallCases) {
    EXPECT_EQ(gcd(12, 8), 4U);
    EXPECT_EQ(gcd(7, 1), 1U);
    EXPECT_EQ(gcd(10, 0), 10U);
    EXPECT_EQ(gcd(0, 10), 10U);
}

TEST(Gcd, BothZeroIsInvalid) { EXPECT_THROW(gcd(0, 0), std::invalid_argument); }

TEST(Gcd, AgreesWithSearch) {
    for (std::uint64_t a = 0; a <= 40; ++a) {
        for (std::uint64_t b = 1; b <= 40; ++b) {
            EXPECT_EQ(gcd(a, b), oracle::gcd_by_search(a, b)) << a << "," << b;
        }
    }
}

TEST(IsUnit, Examples) {
    EXPECT_TRUE(is_unit(3, make_ring(5)));
    EXPECT_FALSE(is_unit(0, make_ring(5)));
    EXPECT_FALSE(is_unit(5, make_ring(10)));
}

TEST(IsUnit, OutOfRange) {
    const auto ring = make_ring(5);
    EXPECT_THROW(is_unit(5, ring), std::invalid_argument);
}

TEST(MakeRing, Examples) {
    const auto z5 = make_ring(5);
    EXPECT_EQ(std::vector<std::uint64_t>(z5.units().begin(), z5.units().end()), (std::vector<std::uint64_t>{1, 2, 3, 4}));
    EXPECT_EQ(z5.phi(), 4U);

    const auto z6 = make_ring(6);
    EXPECT_EQ(std::vector<std::uint64_t>(z6.units().begin(), z6.units().end()), (std::vector<std::uint64_t>{1, 5}));
    EXPECT_EQ(z6.phi(), 2U);

    const auto z2 = make_ring(2);
    EXPECT_EQ(z2.phi(), 1U);
    EXPECT_EQ(z2.units()[0], 1U);
}

TEST(MakeRing, RejectsSmallModulus) {
    EXPECT_THROW(make_ring(1), std::invalid_argument);
    EXPECT_THROW(make_ring(0), std::invalid_argument);
}

TEST(MakeRing, UnitsMatchInverseSearch) {
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const auto ring = make_ring(n);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t a = 1; a < n; ++a) {
            if (oracle::unit_by_inverse(a, n)) expected.push_back(a);
        }
        EXPECT_EQ(std::vector<std::uint64_t>(ring.units().begin(), ring.units().end()), expected) << "n=" << n;
        EXPECT_EQ(ring.phi(), expected.size());
        EXPECT_TRUE(std::is_sorted(ring.units().begin(), ring.units().end()));
        EXPECT_EQ(ring.units().front(), 1U);
    }
}

TEST(MakeRing, FamilyProperties) {
    for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
        EXPECT_EQ(make_ring(p).phi(), p - 1);
        const auto twice = make_ring(2 * p);
        EXPECT_EQ(twice.phi(), p - 1);
        for (auto u : twice.units()) EXPECT_EQ(u % 2, 1U);
    }
}

TEST(MakeRing, UnitsClosedUnderInversion) {
    for (std::uint64_t n = 2; n <= 60; ++n) {
        const auto ring = make_ring(n);
        for (auto u : ring.units()) {
            bool found = false;
            for (auto v : ring.units()) found = found || (u * v % n == 1);
            EXPECT_TRUE(found) << u << " mod " << n;
        }
    }
}

TEST(IsPrime, TrialDivision) {
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
    for (std::uint64_t n = 0; n < 50; ++n) {
        EXPECT_EQ(is_prime(n), std::find(primes.begin(), primes.end(), n) != primes.end()) << n;
    }
    EXPECT_TRUE(is_prime(251));
    EXPECT_FALSE(is_prime(253));
}
