#pragma once

// Linear group actions on complexes and chains, sphere classes, the
// generating family for top homology of B_n^m, coinvariant presentations,
// chain-level sign witnesses and the cutting-down poset isomorphism.

#include <cstddef>
#include <string>
#include <vector>

#include "framelab/homology.hpp"

namespace framelab {

/// Generators of a subgroup of GL(R^{m+n}) fixing e_1..e_m, acting on column vectors.
struct GroupGenSet {
    RingId ring;
    std::size_t ambient_rank = 0;
    std::size_t fix_rank = 0;
    std::vector<ExactMatrix> generators;

    /// Throws DomainError unless every generator is invertible and fixes e_1..e_m.
    void validate() const;
};

/// Elementary matrices and a primitive-root diagonal in the lower n x n block,
/// plus elementary column operations into the fixed block.
GroupGenSet gl_fix_generators(RingId field, std::size_t m, std::size_t n);

/// Every element of GL(F_p^{m+n}, fix F_p^m) (small cases only).
std::vector<ExactMatrix> enumerate_gl_fix(RingId field, std::size_t m, std::size_t n);

/// A smallest multiplicative generator of F_p^x.
long primitive_root(int p);

/// Image of a line, subspace or splitting under g.
VertexLabel act_on_label(const ExactMatrix &g, const VertexLabel &label);

/// Vertex permutation induced by g; throws TruncationEscape if a vertex
/// leaves K and Error if a simplex is not sent to a simplex.
std::vector<std::size_t> act_on_complex(const ExactMatrix &g, const SimplicialComplex &k);

/// Image of a chain under a vertex map, with permutation signs.
CycleChain push_forward(const SimplicialComplex &k, const CycleChain &c, const std::vector<std::size_t> &vertex_map);

/// g . c, mapping only the vertices in the support of c; throws
/// TruncationEscape when the support leaves K.
CycleChain act_on_chain(const ExactMatrix &g, const SimplicialComplex &k, const CycleChain &c);

/// Join of simplex boundaries, one block per factor, in the given order.
struct SphereClassSpec {
    std::vector<std::vector<VertexLabel>> blocks;

    /// Sum over blocks of (size - 1), minus one.
    int degree() const;
    /// Blocks sorted internally and among themselves (orientation dropped).
    SphereClassSpec canonical() const;
    friend bool operator==(const SphereClassSpec &, const SphereClassSpec &) = default;
    friend auto operator<=>(const SphereClassSpec &, const SphereClassSpec &) = default;
};

/// Fundamental cycle of the join; throws DomainError when a required simplex
/// is missing from K or a vertex is absent or repeated.
CycleChain sphere_class(const SphereClassSpec &spec, const SimplicialComplex &k);

/// True iff every choice omitting one vertex from each block is a simplex of K.
bool join_condition_holds(const SphereClassSpec &spec, const SimplicialComplex &k);

/// All sphere classes of the generating shape for K = B_n^m over a prime field,
/// deduplicated up to orientation.
std::vector<SphereClassSpec> generating_family(const SimplicialComplex &k);

struct CoinvariantsReport {
    std::size_t module_rank = 0;
    std::size_t relation_rows = 0;
    std::size_t relation_cols = 0;
    /// Nonunit invariant factors of the cokernel, 0 for each free summand.
    std::vector<Integer> invariant_factors;
    bool vanishes_over_zhalf = false;
};

/// Coinvariants of H~_top(K) under the vertex permutations `actions`.
CoinvariantsReport coinvariants(const SimplicialComplex &k, const std::vector<std::vector<std::size_t>> &actions);
CoinvariantsReport coinvariants(const SimplicialComplex &k, const GroupGenSet &group);
CoinvariantsReport coinvariants(const SimplicialComplex &k, const std::vector<ExactMatrix> &group);

/// True iff the factor list describes a finite module of 2-power order.
bool vanishes_over_zhalf(const std::vector<Integer> &factors);

enum class SignCase { InternalSwap, LastBlockSwap, Bpid };

const char *sign_case_name(SignCase c);

struct SignWitnessParams {
    RingId ring;
    std::size_t n = 0;
    std::size_t m = 0;
    /// Norm bound for the ambient truncation (infinite rings).
    Integer bound{1};
    /// Representatives v_1..v_n; with e_1..e_m they must form a basis.
    std::vector<Vector> frame;
    /// Number of three-vertex blocks.
    std::size_t d = 0;
    /// a_j for j = 2d+1..n, so that u_j = v_j + a_j.
    std::vector<Vector> addends;
    /// Parameter of the rank-two matrix [[1,-r],[0,-1]].
    long r = 0;
};

struct SignWitnessResult {
    bool holds = false;
    ExactMatrix g;
    CycleChain c;
    CycleChain gc;
    std::string detail;
};

SignWitnessResult sign_witness(SignCase which, const SignWitnessParams &params);

/// The stock witnesses over `ring`: the swap on the frame {e1, e2} with
/// w = e1 + e2, the last-block swap with u = e2 + e1 in B_1^1, and the
/// rank-two matrices for r = 0..3.
std::vector<std::pair<SignCase, SignWitnessParams>> standard_witnesses(RingId ring);

struct CuttingDownReport {
    std::size_t source_size = 0;
    std::size_t target_size = 0;
    bool maps_well_defined = false;
    bool mutually_inverse = false;
    bool order_preserving = false;
    Subspace complement;

    bool holds() const { return maps_well_defined && mutually_inverse && order_preserving; }
};

/// Checks (A,B) -> (A, B n C) and (A',B') -> (A', B' + W) between splittings
/// of P with A in V, W in B, and splittings of C with A' in V, where C
/// contains V and complements W. Throws DomainError unless V n W = 0 and
/// V + W is proper.
CuttingDownReport cutting_down_iso(const Subspace &v, const Subspace &w);

} // namespace framelab
