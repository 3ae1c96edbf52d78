#pragma once

// Simplicial complexes and finite posets: complexes of partial frames B_n^m
// and augmented partial frames BA_n^m, Tits buildings (absolute and
// relative), splitting posets, links, order complexes and poset fibers.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "framelab/enumeration.hpp"

namespace framelab {

/// What a vertex (or poset element) stands for. std::monostate marks
/// unlabelled elements, e.g. simplices in a poset of simplices.
using VertexLabel = std::variant<std::monostate, Line, Subspace, Splitting>;

/// Strictly increasing vertex indices.
using Simplex = std::vector<std::size_t>;

enum class TagKind { Frame, Internal, External };

const char *tag_name(TagKind kind);

/// One additive relation on a simplex, in terms of vertex indices:
///   internal: rep(v_i) = u1 * rep(v_j) + u2 * rep(v_k)
///   external: rep(v_i) = u1 * e_k + u2 * rep(v_j)   (k is a standard basis index)
struct AdditiveWitness {
    TagKind kind = TagKind::Internal;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    RingElem u1;
    RingElem u2;
};

struct AdditiveTag {
    TagKind kind = TagKind::Frame;
    /// Every additive relation found; more than one is flagged as multiplicity.
    std::vector<AdditiveWitness> witnesses;
};

/// Provenance of a built complex; `truncated` complexes never feed
/// sphericity claims.
struct ComplexInfo {
    std::string kind;
    std::optional<RingId> ring;
    std::size_t n = 0;
    std::size_t m = 0;
    std::optional<Integer> bound;
    bool truncated = false;
};

class SimplicialComplex {
  public:
    SimplicialComplex() = default;

    /// Builds from an explicit simplex set; throws Error unless face-closed.
    static SimplicialComplex from_simplices(std::vector<VertexLabel> vertices,
                                            const std::vector<Simplex> &simplices,
                                            ComplexInfo info = {});
    /// Adds every face of every facet.
    static SimplicialComplex from_facets(std::vector<VertexLabel> vertices,
                                         const std::vector<Simplex> &facets, ComplexInfo info = {});

    const ComplexInfo &info() const { return info_; }
    ComplexInfo &info() { return info_; }

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<VertexLabel> &vertices() const { return vertices_; }
    const VertexLabel &vertex(std::size_t i) const { return vertices_.at(i); }
    std::optional<std::size_t> vertex_index(const VertexLabel &label) const;

    /// Simplices of dimension d, sorted; empty for d outside [0, dimension()].
    const std::vector<Simplex> &simplices(int d) const;
    std::size_t count(int d) const { return simplices(d).size(); }
    std::size_t total_count() const;
    std::optional<std::size_t> index_of(const Simplex &s) const;
    bool contains(const Simplex &s) const { return index_of(s).has_value(); }

    /// Additive tags, keyed by simplex; frame simplices carry no entry unless
    /// the builder recorded them.
    const std::map<Simplex, AdditiveTag> &tags() const { return tags_; }
    void set_tag(const Simplex &s, AdditiveTag tag) { tags_[s] = std::move(tag); }
    TagKind tag_of(const Simplex &s) const;

    /// Sub-complex of simplices with no additive tag.
    SimplicialComplex frame_subcomplex() const;

  private:
    std::vector<VertexLabel> vertices_;
    std::map<VertexLabel, std::size_t> label_index_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, std::size_t>> index_;
    std::map<Simplex, AdditiveTag> tags_;
    ComplexInfo info_;
};

/// B_n^m: link of e_1..e_m in the complex of partial frames of R^{n+m}.
SimplicialComplex build_B(RingId ring, std::size_t n, std::size_t m,
                          const std::optional<NormBound> &bound = std::nullopt);

/// BA_n^m: B_n^m plus augmented partial frames, each additive simplex tagged
/// internal or external with its witnesses.
SimplicialComplex build_BA(RingId ring, std::size_t n, std::size_t m,
                           const std::optional<NormBound> &bound = std::nullopt);

/// Simplicial link, vertices re-based to the link's own indices.
SimplicialComplex link(const SimplicialComplex &k, const Simplex &sigma);

class Poset {
  public:
    Poset() = default;
    /// `less[i][j]` means element i < element j. Throws Error unless the
    /// relation is irreflexive and transitive.
    Poset(std::vector<VertexLabel> elements, std::vector<std::vector<bool>> less);

    std::size_t size() const { return elements_.size(); }
    const std::vector<VertexLabel> &elements() const { return elements_; }
    const VertexLabel &element(std::size_t i) const { return elements_.at(i); }
    std::optional<std::size_t> index_of(const VertexLabel &label) const;

    bool less(std::size_t i, std::size_t j) const { return less_[i][j]; }
    bool less_equal(std::size_t i, std::size_t j) const { return i == j || less_[i][j]; }
    std::vector<std::pair<std::size_t, std::size_t>> relations() const;
    std::vector<std::pair<std::size_t, std::size_t>> covering_relations() const;
    /// Longest chain length minus one; -1 when empty.
    int dimension() const;

    Poset opposite() const;
    Poset induced(const std::vector<std::size_t> &subset) const;

  private:
    std::vector<VertexLabel> elements_;
    std::vector<std::vector<bool>> less_;
    std::map<VertexLabel, std::size_t> label_index_;
};

/// T(F_p^n): proper nonzero subspaces ordered by inclusion.
Poset build_tits(RingId field, std::size_t n);

/// T(F_p^n rel^0 W) with W = span(e_1..e_w): subspaces V with V n W = 0.
Poset build_relative_tits(RingId field, std::size_t n, std::size_t w);

/// Optional constraints on splittings (A, B): A inside `first_within`,
/// B containing `second_contains`.
struct SplittingConstraints {
    std::optional<Subspace> first_within;
    std::optional<Subspace> second_contains;
};

/// Splittings of F_p^n with (A,B) <= (A',B') iff A c A' and B' c B.
Poset build_splitting_poset(RingId field, std::size_t n, const SplittingConstraints &constraints = {});

/// Splitting poset of an arbitrary subspace `ambient` (used for S(. c V, . | C)).
Poset splitting_poset_of(const Subspace &ambient, const SplittingConstraints &constraints = {});

/// Nerve: chains of the poset are the simplices, vertices are the elements.
SimplicialComplex order_complex(const Poset &p);

/// Nonempty simplices ordered by proper face inclusion.
Poset simplex_poset(const SimplicialComplex &k);

/// Thrown by monotonicity checks; carries an offending pair x < x'.
class NonMonotoneError : public DomainError {
  public:
    NonMonotoneError(std::size_t lo, std::size_t hi)
        : DomainError("map is not monotone on elements " + std::to_string(lo) + " < " +
                      std::to_string(hi)),
          lo_(lo), hi_(hi) {}
    std::pair<std::size_t, std::size_t> witness() const { return {lo_, hi_}; }

  private:
    std::size_t lo_;
    std::size_t hi_;
};

void check_monotone(const Poset &x, const Poset &y, const std::vector<std::size_t> &f);

/// Y_{>y}
Poset poset_above(const Poset &p, std::size_t y);
/// Y_{<y}
Poset poset_below(const Poset &p, std::size_t y);
/// f_{<=y} = { x : f(x) <= y } as an induced sub-poset of X.
Poset poset_fiber_le(const Poset &x, const Poset &y, const std::vector<std::size_t> &f, std::size_t target);

} // namespace framelab
