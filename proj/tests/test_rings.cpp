#include <gtest/gtest.h>

#include "support.hpp"

using namespace test;

TEST(Rings, EuclidDivExamples) {
    auto [q, r] = euclid_div(z(7), z(3));
    EXPECT_EQ(q, z(2));
    EXPECT_EQ(r, z(1));

    for (RingId ring : euclidean_rings()) {
        RingElem a = RingElem::from_int(ring, 5, ring.is_field() || ring == ZZ ? 0 : -3);
        auto [q1, r1] = euclid_div(a, RingElem::one(ring));
        EXPECT_EQ(q1, a);
        EXPECT_TRUE(r1.is_zero());
    }

    RingElem a = gi(3, 2), b = gi(1, 1);
    auto [qg, rg] = euclid_div(a, b);
    EXPECT_LT(rg.norm(), b.norm());
    EXPECT_EQ(qg * b + rg, a);
}

TEST(Rings, EuclidDivRejectsZeroAndMixedRings) {
    EXPECT_THROW(euclid_div(z(3), z(0)), DomainError);
    EXPECT_THROW(euclid_div(z(3), gi(1, 0)), DomainError);
}

TEST(Rings, EuclidDivNormContractRandom) {
    std::mt19937_64 rng(11);
    for (RingId ring : euclidean_rings())
        for (int i = 0; i < 10000; ++i) {
            RingElem a = random_elem(rng, ring, 40);
            RingElem b = random_elem(rng, ring, 9);
            if (b.is_zero())
                continue;
            auto [q, r] = euclid_div(a, b);
            ASSERT_EQ(q * b + r, a) << ring.name();
            ASSERT_LT(r.norm(), b.norm()) << ring.name() << " " << a.to_string() << " / " << b.to_string();
        }
}

TEST(Rings, Units) {
    EXPECT_EQ(units(ZZ).size(), 2u);
    auto g = units(GI);
    EXPECT_EQ(g.size(), 4u);
    for (const RingElem &u : g)
        EXPECT_EQ(u.norm(), 1);
    EXPECT_EQ(units(EI).size(), 6u);
    auto f3 = units(RingId::prime_field(3));
    ASSERT_EQ(f3.size(), 2u);
    EXPECT_EQ(f3[0], RingElem::from_int(RingId::prime_field(3), 1));
    EXPECT_EQ(f3[1], RingElem::from_int(RingId::prime_field(3), 2));
}

TEST(Rings, Gcd) {
    EXPECT_EQ(gcd(z(6), z(4)), z(2));
    EXPECT_EQ(gcd(z(-1), z(17)), z(1));
    // 2 = -i (1+i)^2
    RingElem g = gcd(gi(1, 1), gi(2, 0));
    EXPECT_EQ(g, canonical_unit(gi(1, 1)) * gi(1, 1));
    EXPECT_THROW(gcd(z(0), z(0)), DomainError);
}

TEST(Rings, GcdProperties) {
    std::mt19937_64 rng(5);
    for (RingId ring : {ZZ, GI, EI})
        for (int i = 0; i < 2000; ++i) {
            RingElem a = random_elem(rng, ring, 30), b = random_elem(rng, ring, 30);
            if (a.is_zero() && b.is_zero())
                continue;
            RingElem g = gcd(a, b);
            EXPECT_TRUE(divides(g, a));
            EXPECT_TRUE(divides(g, b));
            for (const RingElem &u : units(ring))
                EXPECT_EQ(gcd(u * a, b), g);
        }
}

TEST(Rings, CanonicalUnit) {
    EXPECT_EQ(canonical_unit(z(-5)), z(-1));
    EXPECT_EQ(canonical_unit(gi(0, 1)), gi(0, -1));
    for (RingId ring : euclidean_rings())
        for (const RingElem &u : units(ring)) {
            EXPECT_EQ(canonical_unit(u), unit_inverse(u));
            EXPECT_TRUE((canonical_unit(u) * u).is_one());
        }
}

TEST(Rings, CanonicalUnitIdempotent) {
    std::mt19937_64 rng(9);
    for (RingId ring : euclidean_rings())
        for (int i = 0; i < 1000; ++i) {
            RingElem a = random_elem(rng, ring, 25);
            if (a.is_zero())
                continue;
            RingElem c = canonical_unit(a) * a;
            EXPECT_TRUE(canonical_unit(c).is_one()) << ring.name() << " " << a.to_string();
        }
}

TEST(Rings, EisensteinArithmetic) {
    RingElem w = RingElem::from_int(EI, 0, 1);
    EXPECT_EQ(w * w, RingElem::from_int(EI, -1, -1));
    EXPECT_EQ(w * w * w, RingElem::one(EI));
    EXPECT_EQ(RingElem::from_int(EI, 2, 1).norm(), 3);
}

TEST(Rings, FieldStorage) {
    RingId f7 = RingId::prime_field(7);
    RingElem x = RingElem::from_int(f7, -3);
    EXPECT_EQ(x.a(), 4);
    EXPECT_TRUE((x * unit_inverse(x)).is_one());
    EXPECT_THROW(RingId::prime_field(4), DomainError);
    EXPECT_THROW(RingId::prime_field(17), DomainError);
    EXPECT_EQ(z(3).b(), 0);
}

TEST(Rings, ParseNames) {
    for (RingId ring : euclidean_rings())
        EXPECT_EQ(parse_ring(ring.name()), ring);
    EXPECT_EQ(parse_ring("gauss"), GI);
    EXPECT_EQ(parse_ring("eis"), EI);
    EXPECT_THROW(parse_ring("Q[x]"), DomainError);
    EXPECT_EQ(parse_coeff("ZHalf"), CoeffRing::z_half());
    EXPECT_EQ(parse_coeff("F3"), CoeffRing::fp(3));
    EXPECT_THROW(parse_coeff("F4"), DomainError);
}
