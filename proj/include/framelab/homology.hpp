#pragma once

// Reduced simplicial homology over Z, Z[1/2], Q and F_p; sphericity and
// Cohen-Macaulay verdicts; cycle bases, span tests and the poset-map rank
// identity.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "framelab/complexes.hpp"

namespace framelab {

/// Boundary columns above this refuse to be densified.
inline constexpr std::size_t kMaxBoundaryColumns = 2000;

/// Sparse boundary matrix: column j lists (row, +-1) pairs.
struct SparseBoundary {
    std::size_t rows = 0;
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;

    std::size_t cols() const { return columns.size(); }
    /// Dense copy over `ring`; throws SizeGuardError above kMaxBoundaryColumns.
    ExactMatrix dense(RingId ring) const;
};

/// Augmented simplicial chain complex: degree -1 is the coefficient ring itself.
class ChainComplex {
  public:
    /// Builds every boundary map and checks d o d = 0.
    explicit ChainComplex(const SimplicialComplex &k);

    /// Top simplex dimension (-1 for the empty complex).
    int top() const { return static_cast<int>(ranks_.size()) - 2; }
    /// Rank of C_d for d >= -1; 0 outside the range.
    std::size_t rank(int d) const;
    /// d_d : C_d -> C_{d-1} for d in [0, top()]; d_0 is the augmentation row.
    const SparseBoundary &boundary(int d) const;

  private:
    std::vector<std::size_t> ranks_; // index d + 1
    std::vector<SparseBoundary> boundaries_; // index d
};

struct DegreeHomology {
    int degree = -1;
    std::size_t betti = 0;
    /// Nonunit invariant factors (> 1); empty over fields.
    std::vector<Integer> torsion;

    bool vanishes() const { return betti == 0 && torsion.empty(); }
};

struct HomologyResult {
    CoeffRing coeff;
    std::vector<DegreeHomology> degrees; // degrees -1 .. dim

    /// Throws DomainError outside [-1, dim].
    const DegreeHomology &at(int d) const;
    /// 0 outside [-1, dim].
    std::size_t betti(int d) const;
    /// Sum of (-1)^d betti_d over d >= -1 (reduced Euler characteristic).
    long euler_characteristic() const;
};

HomologyResult reduced_homology(const SimplicialComplex &k, const CoeffRing &coeff = CoeffRing::integers());
HomologyResult reduced_homology(const Poset &p, const CoeffRing &coeff = CoeffRing::integers());

/// Alternating simplex count including the empty simplex.
long reduced_euler_characteristic(const SimplicialComplex &k);

/// dim K = d and H~_i(K; coeff) = 0 for i < d. Refuses truncated complexes.
bool is_spherical(const SimplicialComplex &k, int d, const CoeffRing &coeff = CoeffRing::integers());
/// Spherical, and every k-simplex link is (d-k-1)-spherical.
bool is_cohen_macaulay(const SimplicialComplex &k, int d, const CoeffRing &coeff = CoeffRing::integers());

/// H~_i = 0 for every i != d (homological sphericity used for poset
/// hypotheses, which only needs vanishing away from d).
bool homologically_spherical(const HomologyResult &h, int d);

/// A d-chain with integer coefficients, keyed by simplex index.
struct CycleChain {
    int degree = 0;
    std::map<std::size_t, Integer> coefficients;

    CycleChain negated() const;
    friend bool operator==(const CycleChain &, const CycleChain &) = default;
};

/// Boundary chain in degree - 1 (degree -1 is the augmentation).
CycleChain boundary_of(const SimplicialComplex &k, const CycleChain &c);
/// True iff the boundary of c vanishes in K.
bool is_cycle(const SimplicialComplex &k, const CycleChain &c);

/// Integral basis of ker(d_top) for the top dimension of K.
std::vector<CycleChain> top_cycle_basis(const SimplicialComplex &k);

/// Decides c in span(gens) + im(d_{d+1}) over Z by Smith normal form.
/// Build once, query many times.
class SpanTester {
  public:
    SpanTester(const SimplicialComplex &k, int degree, const std::vector<CycleChain> &gens);
    bool contains(const CycleChain &c) const;

  private:
    const SimplicialComplex *k_;
    int degree_;
    SmithForm sf_;
    std::size_t rank_ = 0;
};

bool class_in_span(const SimplicialComplex &k, const CycleChain &c, const std::vector<CycleChain> &gens);

/// One summand of the filtration: dim H~_{t(y)-1}(Y_{>y}) * dim H~_{n-t(y)}(X_{f<=y}).
struct NerveTerm {
    std::size_t y = 0;
    int t = 0;
    std::size_t above_rank = 0;
    std::size_t fiber_rank = 0;
};

struct NerveReport {
    int n = 0;
    bool hypotheses_hold = false;
    std::vector<std::string> failed_hypotheses;
    std::size_t x_rank = 0;  // dim H~_n(X)
    std::size_t y_rank = 0;  // dim H~_n(Y)
    std::vector<NerveTerm> terms;

    std::size_t predicted() const;
    bool identity_holds() const { return hypotheses_hold && x_rank == predicted(); }
};

/// Checks the hypotheses (Y n-spherical, f_{<=y} (n-t(y))-spherical,
/// Y_{>y} (t(y)-1)-spherical) homologically over `coeff`, then compares
/// dim H~_n(X) with dim H~_n(Y) plus the filtration terms. Field
/// coefficients only; throws NonMonotoneError for non-monotone f.
NerveReport nerve_rank_identity(const Poset &x, const Poset &y, const std::vector<std::size_t> &f,
                                const std::vector<int> &t, int n, const CoeffRing &coeff = CoeffRing::rationals());

} // namespace framelab
