#include <gtest/gtest.h>

#include "framelab/oracles.hpp"
#include "support.hpp"

using namespace test;

namespace {

RingId F(int q) { return RingId::prime_field(q); }

void expect_face_closed(const SimplicialComplex &k) {
    for (int d = 1; d <= k.dimension(); ++d)
        for (const Simplex &s : k.simplices(d)) {
            ASSERT_TRUE(std::is_sorted(s.begin(), s.end()));
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<long>(drop));
                ASSERT_TRUE(k.contains(face));
            }
        }
}

Vector rep(const SimplicialComplex &k, std::size_t v) { return std::get<Line>(k.vertex(v)).rep(); }

} // namespace

TEST(BuildB, SmallFields) {
    SimplicialComplex k = build_B(F(2), 2, 0);
    EXPECT_EQ(k.count(0), 3u);
    EXPECT_EQ(k.count(1), 3u);
    EXPECT_EQ(k.dimension(), 1);

    SimplicialComplex k4 = build_B(F(3), 2, 0);
    EXPECT_EQ(k4.count(0), 4u);
    EXPECT_EQ(k4.count(1), 6u);

    SimplicialComplex b11 = build_B(F(2), 1, 1);
    EXPECT_EQ(b11.count(0), 2u);
    EXPECT_EQ(b11.dimension(), 0);
    EXPECT_TRUE(b11.vertex_index(Line::from_vector(vec(F(2), {0, 1}))));
    EXPECT_TRUE(b11.vertex_index(Line::from_vector(vec(F(2), {1, 1}))));
}

TEST(BuildB, FieldCountsMatchFormulas) {
    for (int q : {2, 3, 5})
        for (long n = 1; n <= 3; ++n) {
            if (q == 5 && n == 3)
                continue;
            SimplicialComplex k = build_B(F(q), static_cast<std::size_t>(n), 0);
            EXPECT_EQ(k.count(0), oracle::line_count(q, n).get_ui());
            EXPECT_EQ(k.count(static_cast<int>(n) - 1), oracle::frame_count(q, n).get_ui());
            expect_face_closed(k);
        }
}

TEST(BuildB, TruncatedIntegers) {
    SimplicialComplex k = build_B(ZZ, 2, 0, NormBound(1));
    EXPECT_TRUE(k.info().truncated);
    EXPECT_EQ(k.count(0), 4u);
    // (1,1) and (1,-1) span an index-2 sublattice
    std::size_t a = index_of_line(k, vec(ZZ, {1, 1})), b = index_of_line(k, vec(ZZ, {1, -1}));
    EXPECT_FALSE(k.contains(Simplex{std::min(a, b), std::max(a, b)}));
    EXPECT_EQ(k.count(1), 5u);
    EXPECT_THROW(build_B(ZZ, 2, 0), DomainError);
}

TEST(BuildBA, ContainsBAsFrameSubcomplex) {
    for (auto [ring, n, m, bound] : std::vector<std::tuple<RingId, std::size_t, std::size_t, long>>{
             {F(2), 2, 0, 0}, {F(3), 2, 0, 0}, {F(2), 2, 1, 0}, {F(2), 1, 1, 0}, {ZZ, 2, 0, 1}, {GI, 2, 0, 1}}) {
        std::optional<NormBound> b;
        if (bound)
            b = NormBound(bound);
        SimplicialComplex plain = build_B(ring, n, m, b);
        SimplicialComplex aug = build_BA(ring, n, m, b);
        SimplicialComplex frames = aug.frame_subcomplex();
        ASSERT_EQ(frames.total_count(), plain.total_count()) << ring.name();
        for (int d = 0; d <= plain.dimension(); ++d)
            for (const Simplex &s : plain.simplices(d)) {
                Simplex mapped;
                for (std::size_t v : s)
                    mapped.push_back(*aug.vertex_index(plain.vertex(v)));
                std::sort(mapped.begin(), mapped.end());
                EXPECT_TRUE(aug.contains(mapped));
                EXPECT_EQ(aug.tag_of(mapped), TagKind::Frame);
            }
        expect_face_closed(aug);
    }
}

TEST(BuildBA, WitnessesHoldExactly) {
    for (auto [ring, n, m] : std::vector<std::tuple<RingId, std::size_t, std::size_t>>{
             {F(2), 2, 0}, {F(3), 2, 0}, {F(2), 2, 1}, {F(3), 1, 1}, {F(2), 3, 0}}) {
        SimplicialComplex k = build_BA(ring, n, m);
        std::size_t additive = 0;
        for (const auto &[s, tag] : k.tags()) {
            if (tag.kind == TagKind::Frame)
                continue;
            ++additive;
            ASSERT_FALSE(tag.witnesses.empty());
            for (const AdditiveWitness &w : tag.witnesses) {
                Vector lhs = rep(k, w.i), rhs(n + m, RingElem::zero(ring));
                Vector first = w.kind == TagKind::Internal ? rep(k, w.j) : Line::standard(ring, n + m, w.k).rep();
                Vector second = w.kind == TagKind::Internal ? rep(k, w.k) : rep(k, w.j);
                for (std::size_t c = 0; c < n + m; ++c)
                    rhs[c] = w.u1 * first[c] + w.u2 * second[c];
                EXPECT_EQ(lhs, rhs) << tag_name(w.kind);
                EXPECT_TRUE(w.u1.is_unit() && w.u2.is_unit());
            }
        }
        EXPECT_GT(additive, 0u);
    }
}

TEST(BuildBA, ClassifiesSmallExamples) {
    // In F_2^2 the three lines form one internally additive triangle.
    SimplicialComplex k = build_BA(F(2), 2, 0);
    EXPECT_EQ(k.count(2), 1u);
    EXPECT_EQ(k.tag_of(k.simplices(2)[0]), TagKind::Internal);
    // B_1^1(F_2): e2 and e1 + e2 differ by e1, an external edge.
    SimplicialComplex k11 = build_BA(F(2), 1, 1);
    ASSERT_EQ(k11.count(1), 1u);
    EXPECT_EQ(k11.tag_of(k11.simplices(1)[0]), TagKind::External);
}

TEST(Link, Examples) {
    SimplicialComplex tri = hollow_triangle();
    EXPECT_EQ(link(tri, {0}).count(0), 2u);
    EXPECT_EQ(link(tri, {0}).dimension(), 0);
    EXPECT_EQ(link(boundary_of_tetrahedron(), {0, 1}).count(0), 2u);

    SimplicialComplex b2 = build_B(F(2), 2, 0);
    std::size_t e1 = index_of_line(b2, vec(F(2), {1, 0}));
    SimplicialComplex l = link(b2, {e1});
    SimplicialComplex b11 = build_B(F(2), 1, 1);
    ASSERT_EQ(l.count(0), b11.count(0));
    for (const VertexLabel &v : l.vertices())
        EXPECT_TRUE(b11.vertex_index(v));
}

TEST(Buildings, Tits) {
    Poset t2 = build_tits(F(2), 2);
    EXPECT_EQ(t2.size(), 3u);
    EXPECT_TRUE(t2.relations().empty());
    Poset t3 = build_tits(F(2), 3);
    EXPECT_EQ(t3.size(), 14u);
    EXPECT_EQ(t3.covering_relations().size(), 21u);
    EXPECT_EQ(t3.dimension(), 1);
}

TEST(Buildings, RelativeTits) {
    Poset t = build_relative_tits(F(2), 3, 1);
    Subspace w = Subspace::standard(2, 3, 1);
    std::size_t lines = 0, planes = 0;
    for (const VertexLabel &e : t.elements()) {
        const Subspace &v = std::get<Subspace>(e);
        EXPECT_EQ(v.intersect(w).rank(), 0u);
        (v.rank() == 1 ? lines : planes)++;
    }
    EXPECT_EQ(lines, 6u);
    EXPECT_EQ(planes, 4u);
    EXPECT_EQ(t.relations().size(), 12u);
}

TEST(SplittingPoset, Examples) {
    Poset s2 = build_splitting_poset(F(2), 2);
    EXPECT_EQ(s2.size(), 6u);
    EXPECT_TRUE(s2.relations().empty());
    Poset s3 = build_splitting_poset(F(2), 3);
    EXPECT_EQ(s3.size(), 56u);
    EXPECT_EQ(order_complex(s3).dimension(), 1);

    SplittingConstraints c;
    c.second_contains = Subspace::standard(2, 3, 1);
    Poset sub = build_splitting_poset(F(2), 3, c);
    std::size_t expected = 0;
    for (const Splitting &s : enumerate_splittings(F(2), 3))
        expected += s.second.contains(*c.second_contains);
    EXPECT_EQ(sub.size(), expected);
    for (const VertexLabel &e : sub.elements())
        EXPECT_TRUE(std::get<Splitting>(e).second.contains(*c.second_contains));
}

TEST(Posets, OrderComplexOfChain) {
    std::vector<std::vector<bool>> less = {{false, true, true}, {false, false, true}, {false, false, false}};
    Poset chain(std::vector<VertexLabel>(3), less);
    SimplicialComplex k = order_complex(chain);
    EXPECT_EQ(k.dimension(), 2);
    EXPECT_EQ(k.count(2), 1u);
}

TEST(Posets, RejectsNonTransitive) {
    std::vector<std::vector<bool>> less = {{false, true, false}, {false, false, true}, {false, false, false}};
    EXPECT_THROW(Poset(std::vector<VertexLabel>(3), less), Error);
    std::vector<std::vector<bool>> loop = {{true}};
    EXPECT_THROW(Poset(std::vector<VertexLabel>(1), loop), Error);
}

TEST(Posets, AboveALineInTits) {
    Poset t = build_tits(F(2), 3);
    std::size_t line = *t.index_of(Subspace::span(2, 3, {{1, 0, 0}}));
    Poset above = poset_above(t, line);
    EXPECT_EQ(above.size(), 3u);
    for (const VertexLabel &e : above.elements())
        EXPECT_EQ(std::get<Subspace>(e).rank(), 2u);
    EXPECT_EQ(poset_below(t, line).size(), 0u);
}

TEST(Posets, SpanFiberIsSimplexPosetInsidePlane) {
    // simplices of B_3(F_2) spanning a proper subspace, mapped to T(F_2^3)
    SimplicialComplex b3 = build_B(F(2), 3, 0);
    Poset all = simplex_poset(b3);
    std::vector<Simplex> simplices;
    std::vector<std::size_t> proper;
    for (int d = 0; d <= b3.dimension(); ++d)
        for (const Simplex &s : b3.simplices(d)) {
            if (d < 2)
                proper.push_back(simplices.size());
            simplices.push_back(s);
        }
    Poset x = all.induced(proper);
    Poset y = build_tits(F(2), 3);
    std::vector<std::size_t> f;
    for (std::size_t i : proper) {
        Subspace span = Subspace::zero(2, 3);
        for (std::size_t v : simplices[i])
            span = span.sum(subspace_of(std::get<Line>(b3.vertex(v))));
        f.push_back(*y.index_of(span));
    }
    check_monotone(x, y, f);
    Subspace plane = Subspace::span(2, 3, {{1, 0, 0}, {0, 1, 0}});
    Poset fiber = poset_fiber_le(x, y, f, *y.index_of(plane));
    // B_2(F_2) inside the plane: three lines, three edges
    EXPECT_EQ(fiber.size(), 6u);
    EXPECT_EQ(fiber.relations().size(), 6u);
    HomologyResult h = reduced_homology(fiber);
    EXPECT_EQ(h.betti(1), 1u);
}

TEST(Posets, MonotonicityWitness) {
    Poset t = build_tits(F(2), 3);
    std::vector<std::size_t> f(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        f[i] = t.size() - 1 - i;
    try {
        check_monotone(t, t, f);
        FAIL() << "expected NonMonotoneError";
    } catch (const NonMonotoneError &e) {
        auto [lo, hi] = e.witness();
        EXPECT_TRUE(t.less(lo, hi));
        EXPECT_FALSE(t.less_equal(f[lo], f[hi]));
    }
}
