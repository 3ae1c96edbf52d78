#pragma once

// Dense exact matrices over the supported rings, Smith normal form with
// transforms, and the frame/primitivity tests built on it.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "framelab/rings.hpp"

namespace framelab {

using Vector = std::vector<RingElem>;

class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(RingId ring, std::size_t rows, std::size_t cols);

    static ExactMatrix identity(RingId ring, std::size_t n);
    static ExactMatrix from_ints(RingId ring, std::initializer_list<std::initializer_list<long>> rows);
    static ExactMatrix from_ints(RingId ring, const std::vector<std::vector<long>> &rows);
    /// Rows must share a length; an empty row list gives a 0 x cols matrix.
    static ExactMatrix from_rows(RingId ring, const std::vector<Vector> &rows, std::size_t cols);
    static ExactMatrix from_columns(RingId ring, const std::vector<Vector> &cols, std::size_t rows);

    RingId ring() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    const RingElem &operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    RingElem &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

    Vector row(std::size_t i) const;
    Vector column(std::size_t j) const;
    ExactMatrix transpose() const;
    bool is_zero() const;

    void swap_rows(std::size_t i, std::size_t k);
    void swap_cols(std::size_t j, std::size_t k);
    /// row[dst] += c * row[src]
    void add_row_multiple(std::size_t dst, std::size_t src, const RingElem &c);
    /// col[dst] += c * col[src]
    void add_col_multiple(std::size_t dst, std::size_t src, const RingElem &c);
    void scale_row(std::size_t i, const RingElem &c);
    void scale_col(std::size_t j, const RingElem &c);

    friend ExactMatrix operator*(const ExactMatrix &x, const ExactMatrix &y);
    friend ExactMatrix operator+(const ExactMatrix &x, const ExactMatrix &y);
    friend ExactMatrix operator-(const ExactMatrix &x, const ExactMatrix &y);
    friend Vector operator*(const ExactMatrix &x, const Vector &v);
    friend bool operator==(const ExactMatrix &x, const ExactMatrix &y);

  private:
    RingId ring_{};
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RingElem> data_;
};

/// Fraction-free (Bareiss) determinant with exact division.
RingElem determinant(const ExactMatrix &a);

struct SmithForm {
    ExactMatrix D;
    ExactMatrix U;
    ExactMatrix V;
    /// Diagonal of D, length min(rows, cols); zeros (if any) come last.
    std::vector<RingElem> invariant_factors;

    std::size_t rank() const;
};

/// U * A * V = D with D diagonal, d_1 | d_2 | ..., each d_i canonical.
/// Pivot: nonzero entry of minimal norm, ties broken by row-major position.
SmithForm smith_normal_form(const ExactMatrix &a);

/// Same diagonal as smith_normal_form, without accumulating U and V.
std::vector<RingElem> invariant_factors(const ExactMatrix &a);

/// Inverse of a square matrix with unit determinant; throws DomainError otherwise.
ExactMatrix inverse(const ExactMatrix &a);

bool is_primitive(std::span<const RingElem> v);

/// True iff the vectors extend to a basis of R^n (all invariant factors units).
bool is_partial_frame(const std::vector<Vector> &vs);

/// Vectors C such that W followed by C is a basis of R^n.
std::vector<Vector> complement(const std::vector<Vector> &w, std::size_t n);

} // namespace framelab
