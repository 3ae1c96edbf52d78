#pragma once

// Vertex and poset-element sets: lines in R^n (truncated by a norm bound for
// infinite rings), subspaces of F_p^n in reduced row echelon form, and
// ordered splittings of F_p^n.

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "framelab/exact_linalg.hpp"

namespace framelab {

/// Scales v by the canonical unit of its first nonzero coordinate.
Vector canonicalize_vector(const Vector &v);

/// A rank-one summand, stored through its canonical primitive representative.
class Line {
  public:
    Line() = default;
    /// Throws DomainError if v is zero or not primitive.
    static Line from_vector(const Vector &v);
    static Line standard(RingId ring, std::size_t n, std::size_t i);

    RingId ring() const { return rep_.front().ring(); }
    std::size_t ambient_rank() const { return rep_.size(); }
    const Vector &rep() const { return rep_; }
    /// Largest coordinate norm of the representative.
    Integer max_norm() const;

    friend bool operator==(const Line &x, const Line &y) { return x.rep_ == y.rep_; }
    friend bool operator<(const Line &x, const Line &y) { return x.rep_ < y.rep_; }

  private:
    Vector rep_;
};

struct NormBound {
    Integer value;
    explicit NormBound(Integer b);
};

/// Vertex sets larger than this are refused with SizeGuardError.
inline constexpr std::size_t kMaxVertices = 50000;

/// Lines of R^n. Infinite rings need a bound: every coordinate of the
/// canonical representative has norm <= bound. Sorted canonically.
std::vector<Line> enumerate_lines(RingId ring, std::size_t n, const std::optional<NormBound> &bound);

/// A subspace of F_p^n stored by its unique reduced row echelon basis.
class Subspace {
  public:
    Subspace() = default;
    /// Row space of the given vectors (entries taken mod p).
    static Subspace span(int p, std::size_t n, const std::vector<std::vector<long>> &vectors);
    static Subspace zero(int p, std::size_t n) { return span(p, n, {}); }
    static Subspace whole(int p, std::size_t n);
    /// span(e_1, ..., e_k)
    static Subspace standard(int p, std::size_t n, std::size_t k);

    int p() const { return p_; }
    std::size_t ambient_rank() const { return n_; }
    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::vector<long>> &basis() const { return rows_; }

    bool contains(const std::vector<long> &v) const;
    bool contains(const Subspace &other) const;
    Subspace sum(const Subspace &other) const;
    Subspace intersect(const Subspace &other) const;
    /// Image under the matrix g acting on column vectors.
    Subspace image(const ExactMatrix &g) const;
    ExactMatrix to_matrix() const;

    friend bool operator==(const Subspace &, const Subspace &) = default;
    friend auto operator<=>(const Subspace &, const Subspace &) = default;

  private:
    int p_ = 2;
    std::size_t n_ = 0;
    std::vector<std::vector<long>> rows_;
};

/// The line of F_p^n as a rank-one subspace.
Subspace subspace_of(const Line &line);

/// All rank-r subspaces of F_p^n, sorted. Throws DomainError for non-field rings.
std::vector<Subspace> enumerate_subspaces(RingId field, std::size_t n, std::size_t rank);

/// Ordered pair (V_0, V_1) of complementary nonzero proper subspaces.
struct Splitting {
    Subspace first;
    Subspace second;

    friend bool operator==(const Splitting &, const Splitting &) = default;
    friend auto operator<=>(const Splitting &, const Splitting &) = default;
};

/// All splittings of F_p^n (empty for n < 2).
std::vector<Splitting> enumerate_splittings(RingId field, std::size_t n);

/// Splittings (A, B) of the subspace `ambient`, i.e. A + B = ambient, A n B = 0.
std::vector<Splitting> enumerate_splittings_of(const Subspace &ambient);

} // namespace framelab
