#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

using namespace test;

namespace {

RingId F(int q) { return RingId::prime_field(q); }

std::vector<Integer> ints(std::initializer_list<long> xs) {
    std::vector<Integer> out;
    for (long x : xs)
        out.emplace_back(x);
    return out;
}

std::vector<std::pair<std::string, SimplicialComplex>> sample_complexes() {
    return {{"triangle", hollow_triangle()},
            {"tetrahedron boundary", boundary_of_tetrahedron()},
            {"RP2", projective_plane()},
            {"B_2(F3)", build_B(F(3), 2, 0)},
            {"B_3(F2)", build_B(F(2), 3, 0)},
            {"BA_2(F2)", build_BA(F(2), 2, 0)},
            {"BA_2^1(F2)", build_BA(F(2), 2, 1)},
            {"B_2(Z,2)", build_B(ZZ, 2, 0, NormBound(2))},
            {"T(F2^3)", order_complex(build_tits(F(2), 3))},
            {"S(F2^3)", order_complex(build_splitting_poset(F(2), 3))},
            {"empty", SimplicialComplex{}}};
}

} // namespace

TEST(Homology, HollowTriangle) {
    HomologyResult h = reduced_homology(hollow_triangle());
    EXPECT_TRUE(h.at(0).vanishes());
    EXPECT_EQ(h.at(1).betti, 1u);
    EXPECT_TRUE(h.at(1).torsion.empty());
    EXPECT_TRUE(h.at(-1).vanishes());
    EXPECT_THROW(h.at(2), DomainError);
    EXPECT_EQ(h.betti(7), 0u);
}

TEST(Homology, ProjectivePlane) {
    SimplicialComplex rp2 = projective_plane();
    HomologyResult z = reduced_homology(rp2);
    EXPECT_EQ(z.at(1).betti, 0u);
    EXPECT_EQ(z.at(1).torsion, ints({2}));
    EXPECT_TRUE(z.at(2).vanishes());
    HomologyResult f2 = reduced_homology(rp2, CoeffRing::fp(2));
    EXPECT_EQ(f2.at(1).betti, 1u);
    EXPECT_EQ(f2.at(2).betti, 1u);
    EXPECT_TRUE(reduced_homology(rp2, CoeffRing::z_half()).at(1).vanishes());
    EXPECT_TRUE(reduced_homology(rp2, CoeffRing::rationals()).at(1).vanishes());
    EXPECT_TRUE(reduced_homology(rp2, CoeffRing::fp(3)).at(1).vanishes());
}

TEST(Homology, EmptyComplex) {
    HomologyResult h = reduced_homology(SimplicialComplex{});
    EXPECT_EQ(h.betti(-1), 1u);
    EXPECT_EQ(h.euler_characteristic(), -1);
}

TEST(Homology, TitsBuilding) {
    HomologyResult h = reduced_homology(build_tits(F(2), 3));
    EXPECT_TRUE(h.at(0).vanishes());
    EXPECT_EQ(h.at(1).betti, 8u);
    EXPECT_TRUE(h.at(1).torsion.empty());
    EXPECT_EQ(reduced_homology(build_tits(F(3), 3)).betti(1), 27u);
}

TEST(Homology, ChainComplexSquaresToZero) {
    for (const auto &[name, k] : sample_complexes()) {
        ChainComplex cc(k);
        for (int d = 1; d <= cc.top(); ++d) {
            ExactMatrix hi = cc.boundary(d).dense(ZZ), lo = cc.boundary(d - 1).dense(ZZ);
            EXPECT_TRUE((lo * hi).is_zero()) << name << " degree " << d;
        }
    }
}

TEST(Homology, EulerCharacteristicAgrees) {
    for (const auto &[name, k] : sample_complexes())
        for (CoeffRing c : {CoeffRing::integers(), CoeffRing::rationals(), CoeffRing::fp(2), CoeffRing::fp(3)})
            EXPECT_EQ(reduced_homology(k, c).euler_characteristic(), reduced_euler_characteristic(k))
                << name << " over " << c.name();
}

TEST(Homology, RationalBettiBoundedByModP) {
    for (const auto &[name, k] : sample_complexes()) {
        HomologyResult q = reduced_homology(k, CoeffRing::rationals());
        for (int p : {2, 3, 5}) {
            HomologyResult fp = reduced_homology(k, CoeffRing::fp(p));
            for (int d = -1; d <= k.dimension(); ++d)
                EXPECT_LE(q.betti(d), fp.betti(d)) << name << " F" << p << " degree " << d;
        }
    }
}

TEST(Homology, ZHalfDropsTwoPowerTorsion) {
    for (const auto &[name, k] : sample_complexes()) {
        HomologyResult z = reduced_homology(k), half = reduced_homology(k, CoeffRing::z_half());
        for (int d = -1; d <= k.dimension(); ++d) {
            std::vector<Integer> odd;
            for (Integer t : z.at(d).torsion) {
                while (t % 2 == 0)
                    t /= 2;
                if (t != 1)
                    odd.push_back(t);
            }
            EXPECT_EQ(half.at(d).betti, z.at(d).betti) << name;
            EXPECT_EQ(half.at(d).torsion, odd) << name;
        }
    }
}

TEST(Homology, SizeGuard) {
    SimplicialComplex big = build_B(F(5), 3, 0);
    ASSERT_GT(big.count(2), kMaxBoundaryColumns);
    EXPECT_THROW(reduced_homology(big), SizeGuardError);
}

TEST(Sphericity, Examples) {
    EXPECT_TRUE(is_spherical(boundary_of_tetrahedron(), 2));
    EXPECT_TRUE(is_spherical(build_B(F(3), 2, 0), 1));
    SimplicialComplex b3 = build_B(F(2), 3, 0);
    EXPECT_TRUE(is_spherical(b3, 2));
    EXPECT_TRUE(is_cohen_macaulay(b3, 2));
    EXPECT_FALSE(is_spherical(hollow_triangle(), 0));
    EXPECT_FALSE(is_spherical(hollow_triangle(), 2));
    // two disjoint triangles: spherical fails in degree 0
    SimplicialComplex two = SimplicialComplex::from_facets(std::vector<VertexLabel>(6),
                                                           {{0, 1, 2}, {3, 4, 5}});
    EXPECT_FALSE(is_spherical(two, 2));
}

TEST(Sphericity, CohenMacaulayNeedsLinks) {
    // two triangles sharing a vertex: contractible, but the shared vertex
    // has a disconnected link
    SimplicialComplex bowtie = SimplicialComplex::from_facets(std::vector<VertexLabel>(5), {{0, 1, 2}, {0, 3, 4}});
    EXPECT_TRUE(is_spherical(bowtie, 2));
    EXPECT_FALSE(is_cohen_macaulay(bowtie, 2));
}

TEST(Sphericity, RefusesTruncated) {
    EXPECT_THROW(is_spherical(build_B(ZZ, 2, 0, NormBound(1)), 1), DomainError);
}

TEST(Cycles, BasisAndSpan) {
    SimplicialComplex tri = hollow_triangle();
    auto basis = top_cycle_basis(tri);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_TRUE(is_cycle(tri, basis[0]));
    CycleChain twice = basis[0];
    for (auto &[i, c] : twice.coefficients)
        c *= 2;
    EXPECT_TRUE(class_in_span(tri, twice, {basis[0]}));
    EXPECT_FALSE(class_in_span(tri, basis[0], {twice}));
    EXPECT_TRUE(class_in_span(tri, basis[0].negated(), {basis[0]}));
}

TEST(Cycles, SphereClassesSpanB2F2) {
    SimplicialComplex k = build_B(F(2), 2, 0);
    std::vector<CycleChain> gens;
    // the whole triangle as one three-vertex block is a sphere class
    SphereClassSpec triangle{{{k.vertex(0), k.vertex(1), k.vertex(2)}}};
    gens.push_back(sphere_class(triangle, k));
    for (const CycleChain &b : top_cycle_basis(k))
        EXPECT_TRUE(class_in_span(k, b, gens));
}

TEST(Cycles, SpanMonotoneInGenerators) {
    SimplicialComplex k = build_B(F(3), 2, 0);
    auto basis = top_cycle_basis(k);
    ASSERT_EQ(basis.size(), 3u);
    std::vector<CycleChain> gens;
    for (const CycleChain &g : basis) {
        bool before = class_in_span(k, basis[0], gens);
        gens.push_back(g);
        bool after = class_in_span(k, basis[0], gens);
        EXPECT_TRUE(!before || after);
    }
    EXPECT_TRUE(class_in_span(k, basis[2], gens));
}

TEST(Cycles, EmptyComplexClass) {
    auto basis = top_cycle_basis(SimplicialComplex{});
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0].degree, -1);
}

TEST(Nerve, PointToPoint) {
    Poset pt(std::vector<VertexLabel>(1), {{false}});
    NerveReport r = nerve_rank_identity(pt, pt, {0}, {0}, 0);
    EXPECT_TRUE(r.hypotheses_hold);
    EXPECT_EQ(r.x_rank, 0u);
    EXPECT_EQ(r.predicted(), 0u);
    EXPECT_TRUE(r.identity_holds());
}

TEST(Nerve, RelativeSpanMapB11) {
    SimplicialComplex k = build_B(F(2), 1, 1);
    Poset x = simplex_poset(k);
    Poset y = build_relative_tits(F(2), 2, 1);
    std::vector<std::size_t> f;
    for (const Simplex &s : k.simplices(0))
        f.push_back(*y.index_of(subspace_of(std::get<Line>(k.vertex(s[0])))));
    std::vector<int> t(y.size(), 0);
    NerveReport r = nerve_rank_identity(x, y, f, t, 0);
    EXPECT_TRUE(r.identity_holds());
    EXPECT_EQ(r.x_rank, 1u);
}

TEST(Nerve, SplittingsOntoOppositeBuilding) {
    Poset x = build_splitting_poset(F(2), 2);
    Poset y = build_tits(F(2), 2).opposite();
    std::vector<std::size_t> f;
    for (const VertexLabel &e : x.elements())
        f.push_back(*y.index_of(std::get<Splitting>(e).second));
    NerveReport r = nerve_rank_identity(x, y, f, std::vector<int>(y.size(), 0), 0);
    EXPECT_TRUE(r.identity_holds());
    EXPECT_EQ(r.x_rank, 5u);
    EXPECT_EQ(r.y_rank, 2u);
}

TEST(Nerve, ReportsFailedHypotheses) {
    // Y = hollow triangle's face poset is not 0-spherical
    Poset y = simplex_poset(hollow_triangle());
    std::vector<std::size_t> id(y.size());
    std::iota(id.begin(), id.end(), 0);
    NerveReport r = nerve_rank_identity(y, y, id, std::vector<int>(y.size(), 0), 0);
    EXPECT_FALSE(r.hypotheses_hold);
    EXPECT_FALSE(r.failed_hypotheses.empty());
    EXPECT_FALSE(r.identity_holds());
}

TEST(Nerve, RejectsIntegerCoefficientsAndNonMonotoneMaps) {
    Poset t = build_tits(F(2), 3);
    std::vector<std::size_t> id(t.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_THROW(nerve_rank_identity(t, t, id, std::vector<int>(t.size(), 0), 1, CoeffRing::integers()),
                 DomainError);
    std::vector<std::size_t> rev(id.rbegin(), id.rend());
    EXPECT_THROW(nerve_rank_identity(t, t, rev, std::vector<int>(t.size(), 0), 1), NonMonotoneError);
}
