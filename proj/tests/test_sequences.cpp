#include <doctest.h>

#include <cmath>
#include <random>

#include "coembed/sequences.hpp"

using namespace coembed;

TEST_SUITE_BEGIN("sequences");

namespace {

GroupSpec std_group(long long a1, long long b1, long long a2, long long b2) {
    return GroupSpec::standard(Rational(a1, b1), Rational(a2, b2));
}

// Independent slow tail: Euler-Maclaurin corrected partial sum of
// m^rho from m0 to infinity.
long double brute_tail(long long m0, long double rho) {
    long double acc = 0.0L;
    const long long M = 1'000'000;
    for (long long m = m0; m < M; ++m) acc += std::pow((long double)m, rho);
    // remainder: integral + half-term correction at M
    acc += std::pow((long double)M, rho + 1.0L) / (-(rho + 1.0L));
    acc += std::pow((long double)M, rho) / 2.0L;
    return acc;
}

bool contains(const std::vector<OctantId>& v, int index, bool plus) {
    for (const auto& o : v)
        if (o.index == index && o.plus == plus) return true;
    return false;
}

} // namespace

TEST_CASE("psi examples") {
    // b = 0 kills both factors at n = 0
    PowerSum p0(psi(std_group(9, 1, -4, 1), Rational(7, 3), Rational(0), 0, 13, -5));
    CHECK(p0.compare(Rational(1)) == std::strong_ordering::equal);

    PowerSum p1(psi(std_group(1, 1, 1, 1), Rational(0), Rational(1), 0, 0, 0));
    CHECK(p1.compare(Rational(1, 3)) == std::strong_ordering::equal);

    // at n = 0 the value is (3 + |m1| + |m2|)^{-b} for any a
    for (long long m1 : {0LL, 4LL, -9LL})
        for (long long m2 : {2LL, -3LL}) {
            PowerSum got(psi(std_group(1, 2, 3, 1), Rational(5, 7), Rational(2), 0, m1, m2));
            Rational base(3 + (m1 < 0 ? -m1 : m1) + (m2 < 0 ? -m2 : m2));
            CHECK(got.compare(Rational(1) / (base * base)) == std::strong_ordering::equal);
        }

    CHECK_THROWS_AS(psi(std_group(1, 1, 1, 1), Rational(0), Rational(-1), 0, 0, 0),
                    std::invalid_argument);
}

TEST_CASE("zeta splits into two psi terms") {
    auto g = std_group(1, 1, 2, 1);
    const ExtReal p(1), q(2), r(Rational(3, 2));
    const WeightSpec ws(Rational(-2, 3), Rational(5, 2));
    const long long k = 2;
    const Rational a = a_shift(g, p, q, r, ws.alpha);

    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long long> nd(-6, 6), md(-40, 40);
    for (int trial = 0; trial < 100; ++trial) {
        long long n = nd(rng), m1 = md(rng), m2 = md(rng);
        PowerSum z = zeta(g, p, q, r, ws, k, FamilyIndex(n, m1, m2, +1));
        PowerSum split(psi(g, a, ws.beta, n, m1, m2));
        split += psi(g, a, ws.beta - Rational(k), n, m1, m2);
        CHECK(z == split);
        // and the sign component never matters
        CHECK(z == zeta(g, p, q, r, ws, k, FamilyIndex(n, m1, m2, -1)));
    }
}

TEST_CASE("zeta with k = 0 doubles psi") {
    auto g = GroupSpec::toeplitz(Rational(1, 3));
    const WeightSpec ws(Rational(1, 2), Rational(3, 4));
    PowerSum z = zeta(g, ExtReal(2), ExtReal(2), ExtReal(2), ws, 0, FamilyIndex(2, 1, -3, +1));
    const Rational a = a_shift(g, ExtReal(2), ExtReal(2), ExtReal(2), ws.alpha);
    PowerSum twice = PowerSum(psi(g, a, ws.beta, 2, 1, -3)) * DyadicValue::from_integer(2);
    CHECK(z == twice);
}

TEST_CASE("zeta numeric example") {
    // gamma = 0, a = 0; 1/3 + 1 = 4/3
    PowerSum z = zeta(std_group(1, 1, 1, 1), ExtReal(2), ExtReal(2), ExtReal(2),
                      WeightSpec(Rational(0), Rational(1)), 1, FamilyIndex(0, 0, 0, +1));
    CHECK(z.compare(Rational(4, 3)) == std::strong_ordering::equal);
}

TEST_CASE("psi respects the index swap symmetry") {
    auto g12 = std_group(1, 2, 3, 1);
    auto g21 = std_group(3, 1, 1, 2);
    const Rational a(7, 5), b(2, 3);
    for (long long n : {-3LL, 0LL, 2LL})
        for (long long m1 : {0LL, 5LL, -9LL})
            for (long long m2 : {1LL, -4LL})
                CHECK(psi(g12, a, b, n, m1, m2) == psi(g21, a, b, n, m2, m1));
}

TEST_CASE("octant membership examples") {
    auto at_origin = octant_members(Rational(5, 4), Rational(2), 0, 0, 0);
    CHECK(at_origin.size() == 2);
    CHECK(contains(at_origin, 2, true));
    CHECK(contains(at_origin, 4, true));

    auto tall = octant_members(Rational(1), Rational(2), 1, 0, 5);
    CHECK(tall.size() == 1);
    CHECK(contains(tall, 1, true));

    auto neg = octant_members(Rational(1), Rational(2), -1, 0, 0);
    CHECK(neg.size() == 2);
    CHECK(contains(neg, 2, false));
    CHECK(contains(neg, 4, false));

    CHECK_THROWS_AS(octant_members(Rational(2), Rational(1), 0, 0, 0), std::invalid_argument);
}

TEST_CASE("octants cover the index grid") {
    for (long long n = -10; n <= 10; ++n)
        for (long long m1 = -100; m1 <= 100; ++m1)
            for (long long m2 = -100; m2 <= 100; ++m2)
                if (octant_members(Rational(1), Rational(2), n, m1, m2).empty()) {
                    FAIL("uncovered index (" << n << "," << m1 << "," << m2 << ")");
                }
    // fractional exponents, strided grid
    for (long long n = -10; n <= 10; ++n)
        for (long long m1 : {-100LL, -34LL, -8LL, -1LL, 0LL, 2LL, 13LL, 55LL, 100LL})
            for (long long m2 : {-89LL, -21LL, -2LL, 0LL, 1LL, 5LL, 34LL, 100LL})
                CHECK_FALSE(octant_members(Rational(1, 2), Rational(5, 2), n, m1, m2).empty());
}

TEST_CASE("dominant term examples") {
    CHECK(dominant_norm_term(OctantId{2, true}, Rational(3, 2), Rational(7, 4), 2, 0, 0) ==
          DyadicValue::pow2(Rational(7, 2)));
    CHECK(dominant_norm_term(OctantId{1, true}, Rational(1), Rational(2), 1, 0, 5) ==
          DyadicValue(Rational(5), Rational(2)));
    CHECK(dominant_norm_term(OctantId{4, false}, Rational(1), Rational(3), -3, 0, 0) ==
          DyadicValue::pow2(Rational(-3)));

    CHECK_THROWS_AS(dominant_norm_term(OctantId{1, true}, Rational(1), Rational(2), 1, 0, 0),
                    std::invalid_argument);  // origin column is not in M1+
    CHECK_THROWS_AS(dominant_norm_term(OctantId{1, true}, Rational(1, 2), Rational(2), 1, 0, 5),
                    std::invalid_argument);  // lambda1 < 1 not certified
}

TEST_CASE("dominant term brackets the norm within factor 5") {
    std::vector<std::pair<Rational, Rational>> lambdas = {
        {Rational(1), Rational(1)}, {Rational(1), Rational(2)}, {Rational(3, 2), Rational(3)}};
    const std::vector<long long> ms = {-100, -55, -21, -8, -3, -1, 0, 1, 2, 5, 13, 34, 89, 100};
    for (const auto& [l1, l2] : lambdas) {
        GroupSpec g = GroupSpec::standard(l1, l2);
        for (long long n = -8; n <= 8; ++n)
            for (long long m1 : ms)
                for (long long m2 : ms) {
                    DyadicSum norm = norm_sum(matrix_A(g, FamilyIndex(n, m1, m2)));
                    for (const auto& o : octant_members(l1, l2, n, m1, m2)) {
                        DyadicValue dom = dominant_norm_term(o, l1, l2, n, m1, m2);
                        CHECK(norm.compare(DyadicSum(dom)) != std::strong_ordering::less);
                        DyadicSum five = DyadicSum(dom) * DyadicValue::from_integer(5);
                        CHECK(norm.compare(five) != std::strong_ordering::greater);
                    }
                }
    }
}

TEST_CASE("tail sum estimate") {
    CHECK(tail_sum_estimate(1, Rational(-2)) == 1.0L);
    CHECK(tail_sum_estimate(4, Rational(-2)) == 0.25L);
    CHECK_THROWS_AS(tail_sum_estimate(1, Rational(-1)), std::invalid_argument);
    CHECK_THROWS_AS(tail_sum_estimate(1, Rational(1, 2)), std::invalid_argument);
    CHECK_THROWS_AS(tail_sum_estimate(0, Rational(-2)), std::invalid_argument);

    for (long long m0 = 1; m0 <= 100; ++m0) {
        long double ratio = brute_tail(m0, -2.0L) / tail_sum_estimate(m0, Rational(-2));
        CHECK(ratio >= 0.5L);
        CHECK(ratio <= 2.0L);
    }
}

TEST_SUITE_END();
