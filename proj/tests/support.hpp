#pragma once

#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "framelab/actions.hpp"

namespace framelab {

inline void PrintTo(const RingElem &x, std::ostream *os) { *os << x.to_string(); }

} // namespace framelab

namespace test {

using namespace framelab;

inline const RingId ZZ = RingId::integers();
inline const RingId GI = RingId::gaussian();
inline const RingId EI = RingId::eisenstein();

inline RingElem z(long a) { return RingElem::from_int(ZZ, a); }
inline RingElem gi(long a, long b) { return RingElem::from_int(GI, a, b); }

inline Vector vec(RingId ring, std::initializer_list<long> xs) {
    Vector v;
    for (long x : xs)
        v.push_back(RingElem::from_int(ring, x));
    return v;
}

inline RingElem random_elem(std::mt19937_64 &rng, RingId ring, long spread) {
    std::uniform_int_distribution<long> d(-spread, spread);
    const bool two = ring.kind == RingKind::Gaussian || ring.kind == RingKind::Eisenstein;
    return RingElem::from_int(ring, d(rng), two ? d(rng) : 0);
}

inline ExactMatrix random_matrix(std::mt19937_64 &rng, RingId ring, std::size_t rows, std::size_t cols, long spread) {
    ExactMatrix a(ring, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a(i, j) = random_elem(rng, ring, spread);
    return a;
}

inline const std::vector<RingId> &euclidean_rings() {
    static const std::vector<RingId> all = {ZZ, GI, EI, RingId::prime_field(2), RingId::prime_field(5),
                                            RingId::prime_field(13)};
    return all;
}

/// Hollow triangle on unlabelled vertices.
inline SimplicialComplex hollow_triangle() {
    return SimplicialComplex::from_facets(std::vector<VertexLabel>(3), {{0, 1}, {0, 2}, {1, 2}});
}

inline SimplicialComplex boundary_of_tetrahedron() {
    return SimplicialComplex::from_facets(std::vector<VertexLabel>(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

inline SimplicialComplex projective_plane() {
    return SimplicialComplex::from_facets(std::vector<VertexLabel>(6),
                                          {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5},
                                           {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline std::size_t index_of_line(const SimplicialComplex &k, const Vector &v) {
    return k.vertex_index(Line::from_vector(v)).value();
}

} // namespace test
