#pragma once

// Exact checks of the matrix and group identities used for integral
// stability: elementary-matrix relations, a determinant comparison, the S_3
// action on {e1, e2, e1+e2}, and abelianization images in GL_2(F_q).

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "framelab/exact_linalg.hpp"

namespace framelab {

/// One evaluated identity, as emitted to identities.json.
struct IdentityCase {
    std::string name;
    RingId ring;
    std::vector<RingElem> params;
    bool holds = false;
};

/// Names accepted in IdentityCase::name.
const std::vector<std::string> &identity_registry();

/// [[1, a], [0, 1]]
ExactMatrix elementary(const RingElem &a);
/// diag(u, 1)
ExactMatrix diagonal_unit(const RingElem &u);

struct DetIdentityReport {
    RingElem swap_det;
    RingElem sign_det;
    bool holds = false;
};

/// det of the 3x3 transposition matrix against det diag(-1, 1, 1).
DetIdentityReport verify_det_identity();

struct ElementaryReport {
    RingId ring;
    std::size_t samples = 0;
    std::vector<IdentityCase> cases;

    bool holds() const;
};

/// E(a+b) = E(a)E(b), N E(a) N^-1 = E(-a) with N = diag(-1,1), and
/// E(u) = diag(u,1) E(1) diag(u^-1,1), on seeded random samples.
ElementaryReport verify_elementary_relations(RingId ring, std::size_t samples, std::uint64_t seed);

/// Permutation of {0, 1, 2} indexing e1, e2, e1+e2: perm[i] is the image of i.
using Perm3 = std::array<int, 3>;

struct S3Report {
    /// Matrix for each permutation, rows are images of e1 and e2.
    std::vector<std::pair<Perm3, ExactMatrix>> images;
    bool permutes_lines = false;
    bool homomorphism_up_to_sign = false;
    bool swap_matches = false;      // (e1 e2) -> [[0,1],[1,0]]
    bool reflection_matches = false; // (e1, e1+e2) -> [[1,1],[0,-1]]
    bool three_cycle_order_three = false;

    bool holds() const {
        return permutes_lines && homomorphism_up_to_sign && swap_matches && reflection_matches &&
               three_cycle_order_three;
    }
};

S3Report verify_s3_embedding(RingId ring);

struct AbelianizationReport {
    int q = 0;
    std::size_t group_order = 0;
    std::size_t commutator_order = 0;
    /// Order of the subgroup generated by diag(u,1), the swap and [G,G].
    std::size_t image_order = 0;

    std::size_t abelianization_order() const { return group_order / commutator_order; }
    bool surjective() const { return image_order == group_order; }
};

/// q in {2, 3, 4, 5}; F_4 is F_2[t]/(t^2+t+1).
AbelianizationReport abelianization_image_test(int q);

/// Matrices of GL_2(F_q) packed as (a, b, c, d) for [[a,b],[c,d]], with
/// field elements encoded as 0..q-1.
struct SmallGL2 {
    int q = 0;
    std::vector<std::array<int, 4>> elements;
    std::array<int, 4> multiply(const std::array<int, 4> &x, const std::array<int, 4> &y) const;
    std::array<int, 4> invert(const std::array<int, 4> &x) const;
    std::size_t index_of(const std::array<int, 4> &x) const;
    std::vector<int> units() const;

    std::vector<int> add_table;
    std::vector<int> mul_table;
    int add(int x, int y) const { return add_table[static_cast<std::size_t>(x * q + y)]; }
    int mul(int x, int y) const { return mul_table[static_cast<std::size_t>(x * q + y)]; }
    int neg(int x) const;
    int inv(int x) const;
};

SmallGL2 make_gl2(int q);

/// Subgroup generated by `gens` (indices into g.elements), as sorted indices.
std::vector<std::size_t> generated_subgroup(const SmallGL2 &g, const std::vector<std::size_t> &gens);

/// Runs every registered identity; sampled ones use `seed`.
std::vector<IdentityCase> run_identity_suite(std::uint64_t seed, std::size_t samples = 50);

} // namespace framelab
