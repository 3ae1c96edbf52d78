#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace test;

namespace {

RingId F(int q) { return RingId::prime_field(q); }

VertexLabel line(RingId ring, std::initializer_list<long> xs) { return Line::from_vector(vec(ring, xs)); }

/// Applies a vertex permutation to a chain through the boundary and checks
/// the chain map commutes with it.
bool commutes_with_boundary(const SimplicialComplex &k, const std::vector<std::size_t> &perm) {
    for (int d = 1; d <= k.dimension(); ++d)
        for (std::size_t i = 0; i < k.count(d); ++i) {
            CycleChain c{d, {{i, Integer(1)}}};
            CycleChain lhs = boundary_of(k, push_forward(k, c, perm));
            CycleChain rhs = push_forward(k, boundary_of(k, c), perm);
            if (!(lhs == rhs))
                return false;
        }
    return true;
}

CoinvariantsReport b_coinvariants(std::size_t n, std::size_t m, int q) {
    return coinvariants(build_B(F(q), n, m), gl_fix_generators(F(q), m, n));
}

} // namespace

TEST(Groups, GeneratorsFixTheBlock) {
    for (int q : {2, 3, 5})
        for (std::size_t m : {0u, 1u, 2u}) {
            GroupGenSet g = gl_fix_generators(F(q), m, 2);
            EXPECT_NO_THROW(g.validate());
            EXPECT_EQ(g.fix_rank, m);
        }
    GroupGenSet bad{F(2), 2, 1, {ExactMatrix::from_ints(F(2), {{0, 1}, {1, 0}})}};
    EXPECT_THROW(bad.validate(), DomainError);
    GroupGenSet singular{F(3), 2, 0, {ExactMatrix::from_ints(F(3), {{1, 1}, {1, 1}})}};
    EXPECT_THROW(singular.validate(), DomainError);
}

TEST(Groups, EnumerationOrders) {
    EXPECT_EQ(enumerate_gl_fix(F(2), 0, 2).size(), 6u);
    EXPECT_EQ(enumerate_gl_fix(F(3), 0, 2).size(), 48u);
    // affine-type group fixing e1 in F_2^2: columns (e1, x) with x not in span(e1)
    EXPECT_EQ(enumerate_gl_fix(F(2), 1, 1).size(), 2u);
    EXPECT_EQ(primitive_root(7), 3);
    EXPECT_EQ(primitive_root(13), 2);
}

TEST(Actions, IdentityAndSwap) {
    SimplicialComplex k = build_B(F(2), 2, 0);
    std::vector<std::size_t> id(k.vertex_count());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_EQ(act_on_complex(ExactMatrix::identity(F(2), 2), k), id);

    auto perm = act_on_complex(ExactMatrix::from_ints(F(2), {{0, 1}, {1, 0}}), k);
    std::size_t e1 = index_of_line(k, vec(F(2), {1, 0})), e2 = index_of_line(k, vec(F(2), {0, 1})),
                s = index_of_line(k, vec(F(2), {1, 1}));
    EXPECT_EQ(perm[e1], e2);
    EXPECT_EQ(perm[e2], e1);
    EXPECT_EQ(perm[s], s);
}

TEST(Actions, RankTwoMatrixSwapsLines) {
    for (long r = 1; r <= 3; ++r) {
        SimplicialComplex k = build_B(ZZ, 1, 1, NormBound(Integer(r)));
        ExactMatrix g = ExactMatrix::from_ints(ZZ, {{1, -r}, {0, -1}});
        VertexLabel e2 = line(ZZ, {0, 1}), vr = line(ZZ, {r, 1});
        EXPECT_EQ(act_on_label(g, e2), vr);
        EXPECT_EQ(act_on_label(g, vr), e2);
        // the rest of the truncation need not be stable; the class is
        CycleChain c = sphere_class(SphereClassSpec{{{e2, vr}}}, k);
        EXPECT_EQ(act_on_chain(g, k, c), c.negated());
    }
}

TEST(Actions, TruncationEscapeIsReported) {
    SimplicialComplex k = build_B(ZZ, 2, 0, NormBound(1));
    ExactMatrix g = ExactMatrix::from_ints(ZZ, {{1, 2}, {0, 1}});
    EXPECT_THROW(act_on_complex(g, k), TruncationEscape);
}

TEST(Actions, ChainMapsCommuteWithBoundary) {
    for (auto [n, m, q] : std::vector<std::tuple<std::size_t, std::size_t, int>>{{2, 0, 2}, {2, 0, 3}, {2, 1, 2}, {3, 0, 2}}) {
        SimplicialComplex k = build_B(F(q), n, m);
        for (const ExactMatrix &g : gl_fix_generators(F(q), m, n).generators)
            EXPECT_TRUE(commutes_with_boundary(k, act_on_complex(g, k)));
    }
    SimplicialComplex t = order_complex(build_tits(F(2), 3));
    for (const ExactMatrix &g : gl_fix_generators(F(2), 0, 3).generators)
        EXPECT_TRUE(commutes_with_boundary(t, act_on_complex(g, t)));
}

TEST(SphereClasses, TwoPointBlock) {
    SimplicialComplex k = build_B(ZZ, 1, 1, NormBound(2));
    VertexLabel e2 = line(ZZ, {0, 1}), v2 = line(ZZ, {2, 1});
    CycleChain c = sphere_class(SphereClassSpec{{{e2, v2}}}, k);
    std::size_t ie2 = *k.vertex_index(e2), iv = *k.vertex_index(v2);
    EXPECT_EQ(c.degree, 0);
    EXPECT_EQ(c.coefficients.size(), 2u);
    EXPECT_EQ(c.coefficients.at(*k.index_of({iv})), 1);
    EXPECT_EQ(c.coefficients.at(*k.index_of({ie2})), -1);
}

TEST(SphereClasses, JoinOfTwoPairs) {
    // all pairs of lines in F_3^2 are frames, so the join is a square
    SimplicialComplex k = build_B(F(3), 2, 0);
    VertexLabel a = k.vertex(0), b = k.vertex(1), c = k.vertex(2), d = k.vertex(3);
    CycleChain x = sphere_class(SphereClassSpec{{{a, b}, {c, d}}}, k);
    auto coeff = [&](std::size_t i, std::size_t j) { return x.coefficients.at(*k.index_of({i, j})); };
    EXPECT_EQ(coeff(0, 2), 1);
    EXPECT_EQ(coeff(0, 3), -1);
    EXPECT_EQ(coeff(1, 2), -1);
    EXPECT_EQ(coeff(1, 3), 1);
    EXPECT_TRUE(is_cycle(k, x));
}

TEST(SphereClasses, TranspositionNegates) {
    SimplicialComplex k = build_B(F(3), 2, 0);
    VertexLabel a = k.vertex(0), b = k.vertex(1), c = k.vertex(2), d = k.vertex(3);
    CycleChain x = sphere_class(SphereClassSpec{{{a, b}, {c, d}}}, k);
    EXPECT_EQ(sphere_class(SphereClassSpec{{{b, a}, {c, d}}}, k), x.negated());
    EXPECT_EQ(sphere_class(SphereClassSpec{{{a, b}, {d, c}}}, k), x.negated());
    CycleChain tri = sphere_class(SphereClassSpec{{{a, b, c}}}, k);
    EXPECT_EQ(sphere_class(SphereClassSpec{{{b, a, c}}}, k), tri.negated());
    EXPECT_EQ(sphere_class(SphereClassSpec{{{b, c, a}}}, k), tri);
}

TEST(SphereClasses, RejectsMissingSimplices) {
    SimplicialComplex k = build_B(ZZ, 2, 0, NormBound(1));
    VertexLabel s = line(ZZ, {1, 1}), t = line(ZZ, {1, -1}), e1 = line(ZZ, {1, 0}), e2 = line(ZZ, {0, 1});
    SphereClassSpec bad{{{s, e1}, {t, e2}}};
    EXPECT_FALSE(join_condition_holds(bad, k));
    EXPECT_THROW(sphere_class(bad, k), DomainError);
    SphereClassSpec repeated{{{e1, e1}}};
    EXPECT_THROW(sphere_class(repeated, k), DomainError);
}

TEST(GeneratingFamily, SmallCases) {
    SimplicialComplex b11 = build_B(F(2), 1, 1);
    auto fam = generating_family(b11);
    ASSERT_EQ(fam.size(), 1u);
    SphereClassSpec expected{{{line(F(2), {0, 1}), line(F(2), {1, 1})}}};
    EXPECT_EQ(fam[0], expected.canonical());

    SimplicialComplex b2 = build_B(F(2), 2, 0);
    SphereClassSpec triangle{{{line(F(2), {1, 0}), line(F(2), {0, 1}), line(F(2), {1, 1})}}};
    auto fam2 = generating_family(b2);
    EXPECT_NE(std::find(fam2.begin(), fam2.end(), triangle.canonical()), fam2.end());

    EXPECT_TRUE(generating_family(build_B(F(2), 1, 0)).empty());
    EXPECT_THROW(generating_family(build_BA(F(2), 2, 0)), DomainError);
}

TEST(GeneratingFamily, SpansTopHomology) {
    for (auto [n, m, q] : std::vector<std::tuple<std::size_t, std::size_t, int>>{
             {1, 1, 2}, {1, 1, 3}, {2, 0, 2}, {2, 0, 3}, {1, 2, 2}, {2, 1, 2}, {2, 1, 3}, {3, 0, 2}}) {
        SimplicialComplex k = build_B(F(q), n, m);
        std::vector<CycleChain> gens;
        for (const SphereClassSpec &s : generating_family(k)) {
            gens.push_back(sphere_class(s, k));
            EXPECT_TRUE(is_cycle(k, gens.back()));
        }
        SpanTester span(k, static_cast<int>(n) - 1, gens);
        for (const CycleChain &b : top_cycle_basis(k))
            EXPECT_TRUE(span.contains(b)) << n << " " << m << " " << q;
    }
}

TEST(Coinvariants, SplittingPosetOfPlane) {
    SimplicialComplex s = order_complex(build_splitting_poset(F(2), 2));
    CoinvariantsReport r = coinvariants(s, gl_fix_generators(F(2), 0, 2));
    EXPECT_EQ(r.module_rank, 5u);
    EXPECT_EQ(r.invariant_factors, std::vector<Integer>{2});
    EXPECT_TRUE(r.vanishes_over_zhalf);
}

TEST(Coinvariants, UnipotentOnB11) {
    SimplicialComplex k = build_B(F(2), 1, 1);
    GroupGenSet g{F(2), 2, 1, {ExactMatrix::from_ints(F(2), {{1, 1}, {0, 1}})}};
    CoinvariantsReport r = coinvariants(k, g);
    EXPECT_EQ(r.invariant_factors, std::vector<Integer>{2});
    EXPECT_TRUE(r.vanishes_over_zhalf);
}

TEST(Coinvariants, SteinbergVanishes) {
    for (int q : {2, 3}) {
        SimplicialComplex t = order_complex(build_tits(F(q), 3));
        CoinvariantsReport r = coinvariants(t, gl_fix_generators(F(q), 0, 3));
        EXPECT_EQ(r.module_rank, static_cast<std::size_t>(q * q * q));
        EXPECT_TRUE(r.invariant_factors.empty());
        EXPECT_TRUE(r.vanishes_over_zhalf);
    }
}

TEST(Coinvariants, IndependentOfGeneratingSet) {
    for (int q : {2, 3}) {
        SimplicialComplex s = order_complex(build_splitting_poset(F(q), 2));
        SimplicialComplex b = build_B(F(q), 2, 0);
        for (const SimplicialComplex *k : {&s, &b}) {
            CoinvariantsReport gens = coinvariants(*k, gl_fix_generators(F(q), 0, 2));
            CoinvariantsReport all = coinvariants(*k, enumerate_gl_fix(F(q), 0, 2));
            EXPECT_EQ(gens.invariant_factors, all.invariant_factors) << q;
        }
    }
}

TEST(Coinvariants, FieldAnalogVanishes) {
    for (auto [n, m, q] : std::vector<std::tuple<std::size_t, std::size_t, int>>{
             {2, 0, 2}, {2, 0, 3}, {1, 1, 2}, {1, 1, 3}, {2, 1, 2}, {1, 2, 2}, {2, 0, 5}, {3, 0, 2}})
        EXPECT_TRUE(b_coinvariants(n, m, q).vanishes_over_zhalf) << n << " " << m << " " << q;
}

TEST(Coinvariants, RefusesTruncated) {
    SimplicialComplex k = build_B(ZZ, 2, 0, NormBound(1));
    GroupGenSet g{ZZ, 2, 0, {ExactMatrix::from_ints(ZZ, {{0, 1}, {1, 0}})}};
    EXPECT_THROW(coinvariants(k, g), DomainError);
}

TEST(Coinvariants, ZHalfCriterion) {
    EXPECT_TRUE(vanishes_over_zhalf({}));
    EXPECT_TRUE(vanishes_over_zhalf({Integer(2), Integer(8)}));
    EXPECT_FALSE(vanishes_over_zhalf({Integer(6)}));
    EXPECT_FALSE(vanishes_over_zhalf({Integer(2), Integer(0)}));
}

TEST(SignWitness, StandardBattery) {
    for (RingId ring : {ZZ, GI, EI}) {
        for (const auto &[which, params] : standard_witnesses(ring)) {
            SignWitnessResult r = sign_witness(which, params);
            EXPECT_TRUE(r.holds) << ring.name() << " " << sign_case_name(which) << " r=" << params.r << " "
                                 << r.detail;
            EXPECT_EQ(r.gc, r.c.negated());
        }
    }
}

TEST(SignWitness, InternalSwapMatrix) {
    SignWitnessParams p{ZZ, 2, 0, Integer(1), {vec(ZZ, {1, 0}), vec(ZZ, {0, 1})}, 1, {}, 0};
    SignWitnessResult r = sign_witness(SignCase::InternalSwap, p);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.g, ExactMatrix::from_ints(ZZ, {{0, 1}, {1, 0}}));
    EXPECT_FALSE(r.c.coefficients.empty());
}

TEST(SignWitness, LastBlockSwapMatrix) {
    SignWitnessParams p{ZZ, 1, 1, Integer(1), {vec(ZZ, {0, 1})}, 0, {vec(ZZ, {1, 0})}, 0};
    SignWitnessResult r = sign_witness(SignCase::LastBlockSwap, p);
    EXPECT_TRUE(r.holds);
    // v -> -v - e1
    EXPECT_EQ(r.g, ExactMatrix::from_ints(ZZ, {{1, -1}, {0, -1}}));
}

TEST(SignWitness, RankTwoWithLargerBound) {
    SignWitnessParams p{ZZ, 1, 1, Integer(4), {}, 0, {}, 3};
    SignWitnessResult r = sign_witness(SignCase::Bpid, p);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.g, ExactMatrix::from_ints(ZZ, {{1, -3}, {0, -1}}));
    EXPECT_EQ(r.c.coefficients.size(), 2u);
}

TEST(SignWitness, DegenerateRankTwo) {
    SignWitnessParams p{ZZ, 1, 1, Integer(1), {}, 0, {}, 0};
    SignWitnessResult r = sign_witness(SignCase::Bpid, p);
    EXPECT_TRUE(r.holds);
    EXPECT_TRUE(r.c.coefficients.empty());
}

TEST(SignWitness, RejectsWrongShapes) {
    SignWitnessParams p{ZZ, 3, 0, Integer(1), {vec(ZZ, {1, 0, 0}), vec(ZZ, {0, 1, 0}), vec(ZZ, {0, 0, 1})}, 1, {}, 0};
    EXPECT_THROW(sign_witness(SignCase::InternalSwap, p), DomainError);
    SignWitnessParams q{ZZ, 2, 0, Integer(1), {}, 0, {}, 1};
    EXPECT_THROW(sign_witness(SignCase::Bpid, q), DomainError);
}

TEST(CuttingDown, Instances) {
    CuttingDownReport r = cutting_down_iso(Subspace::span(2, 3, {{1, 0, 0}}), Subspace::span(2, 3, {{0, 1, 0}}));
    EXPECT_TRUE(r.holds());
    EXPECT_EQ(r.source_size, r.target_size);
    EXPECT_GT(r.source_size, 0u);
    EXPECT_TRUE(r.complement.contains(Subspace::span(2, 3, {{1, 0, 0}})));
    EXPECT_EQ(r.complement.intersect(Subspace::span(2, 3, {{0, 1, 0}})).rank(), 0u);

    CuttingDownReport r3 = cutting_down_iso(Subspace::span(3, 3, {{1, 1, 0}}), Subspace::span(3, 3, {{0, 1, 2}}));
    EXPECT_TRUE(r3.holds());
}

TEST(CuttingDown, RejectsDegenerateInput) {
    Subspace v = Subspace::span(2, 2, {{1, 0}}), w = Subspace::span(2, 2, {{0, 1}});
    EXPECT_THROW(cutting_down_iso(v, w), DomainError);
    Subspace a = Subspace::span(2, 3, {{1, 0, 0}});
    EXPECT_THROW(cutting_down_iso(a, a), DomainError);
}
