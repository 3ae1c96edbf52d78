#include "framelab/exact_linalg.hpp"

#include <algorithm>
#include <optional>

namespace framelab {

ExactMatrix::ExactMatrix(RingId ring, std::size_t rows, std::size_t cols)
    : ring_(ring), rows_(rows), cols_(cols), data_(rows * cols, RingElem::zero(ring)) {}

ExactMatrix ExactMatrix::identity(RingId ring, std::size_t n) {
    ExactMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = RingElem::one(ring);
    return m;
}

ExactMatrix ExactMatrix::from_ints(RingId ring,
                                   std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<long>> v;
    for (const auto &r : rows)
        v.emplace_back(r);
    return from_ints(ring, v);
}

ExactMatrix ExactMatrix::from_ints(RingId ring, const std::vector<std::vector<long>> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    ExactMatrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DomainError("ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = RingElem::from_int(ring, rows[i][j]);
    }
    return m;
}

ExactMatrix ExactMatrix::from_rows(RingId ring, const std::vector<Vector> &rows, std::size_t cols) {
    ExactMatrix m(ring, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw DomainError("vector length does not match ambient rank");
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(rows[i][j].ring() == ring))
                throw DomainError("mixed rings in matrix");
            m(i, j) = rows[i][j];
        }
    }
    return m;
}

ExactMatrix ExactMatrix::from_columns(RingId ring, const std::vector<Vector> &cols,
                                      std::size_t rows) {
    return from_rows(ring, cols, rows).transpose();
}

Vector ExactMatrix::row(std::size_t i) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vector ExactMatrix::column(std::size_t j) const {
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

bool ExactMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const RingElem &x) { return x.is_zero(); });
}

void ExactMatrix::swap_rows(std::size_t i, std::size_t k) {
    if (i == k)
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap((*this)(i, j), (*this)(k, j));
}

void ExactMatrix::swap_cols(std::size_t j, std::size_t k) {
    if (j == k)
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        std::swap((*this)(i, j), (*this)(i, k));
}

void ExactMatrix::add_row_multiple(std::size_t dst, std::size_t src, const RingElem &c) {
    if (c.is_zero())
        return;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(src, j).is_zero())
            (*this)(dst, j) += c * (*this)(src, j);
}

void ExactMatrix::add_col_multiple(std::size_t dst, std::size_t src, const RingElem &c) {
    if (c.is_zero())
        return;
    for (std::size_t i = 0; i < rows_; ++i)
        if (!(*this)(i, src).is_zero())
            (*this)(i, dst) += c * (*this)(i, src);
}

void ExactMatrix::scale_row(std::size_t i, const RingElem &c) {
    for (std::size_t j = 0; j < cols_; ++j)
        (*this)(i, j) *= c;
}

void ExactMatrix::scale_col(std::size_t j, const RingElem &c) {
    for (std::size_t i = 0; i < rows_; ++i)
        (*this)(i, j) *= c;
}

ExactMatrix operator*(const ExactMatrix &x, const ExactMatrix &y) {
    if (x.cols_ != y.rows_)
        throw DomainError("matrix shape mismatch in product");
    if (!(x.ring_ == y.ring_))
        throw DomainError("mixed rings in matrix product");
    ExactMatrix out(x.ring_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const RingElem &xik = x(i, k);
            if (xik.is_zero())
                continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                if (!y(k, j).is_zero())
                    out(i, j) += xik * y(k, j);
        }
    return out;
}

ExactMatrix operator+(const ExactMatrix &x, const ExactMatrix &y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw DomainError("matrix shape mismatch in sum");
    ExactMatrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k)
        out.data_[k] += y.data_[k];
    return out;
}

ExactMatrix operator-(const ExactMatrix &x, const ExactMatrix &y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw DomainError("matrix shape mismatch in difference");
    ExactMatrix out = x;
    for (std::size_t k = 0; k < out.data_.size(); ++k)
        out.data_[k] -= y.data_[k];
    return out;
}

Vector operator*(const ExactMatrix &x, const Vector &v) {
    if (x.cols_ != v.size())
        throw DomainError("matrix-vector shape mismatch");
    Vector out(x.rows_, RingElem::zero(x.ring_));
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t j = 0; j < x.cols_; ++j)
            if (!v[j].is_zero())
                out[i] += x(i, j) * v[j];
    return out;
}

bool operator==(const ExactMatrix &x, const ExactMatrix &y) {
    return x.ring_ == y.ring_ && x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
}

RingElem determinant(const ExactMatrix &a) {
    if (a.rows() != a.cols())
        throw DomainError("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    const RingId ring = a.ring();
    if (n == 0)
        return RingElem::one(ring);
    ExactMatrix m = a;
    RingElem sign = RingElem::one(ring);
    RingElem prev = RingElem::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && m(swap_with, k).is_zero())
                ++swap_with;
            if (swap_with == n)
                return RingElem::zero(ring);
            m.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

std::size_t SmithForm::rank() const {
    return static_cast<std::size_t>(std::count_if(invariant_factors.begin(), invariant_factors.end(),
                                                  [](const RingElem &d) { return !d.is_zero(); }));
}

namespace {

struct Pos {
    std::size_t row;
    std::size_t col;
};

// Nonzero entry of minimal norm in the block [t.., t..], first in row-major order.
std::optional<Pos> min_pivot(const ExactMatrix &d, std::size_t t) {
    std::optional<Pos> best;
    Integer best_norm;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            const RingElem &x = d(i, j);
            if (x.is_zero())
                continue;
            Integer n = x.norm();
            if (!best || n < best_norm) {
                best = Pos{i, j};
                best_norm = n;
                if (best_norm == 1)
                    return best;
            }
        }
    return best;
}

// Nonzero entry of minimal norm in row t / column t (excluding the pivot).
std::optional<Pos> min_in_cross(const ExactMatrix &d, std::size_t t) {
    std::optional<Pos> best;
    Integer best_norm;
    auto consider = [&](std::size_t i, std::size_t j) {
        const RingElem &x = d(i, j);
        if (x.is_zero())
            return;
        Integer n = x.norm();
        if (!best || n < best_norm) {
            best = Pos{i, j};
            best_norm = n;
        }
    };
    for (std::size_t j = t + 1; j < d.cols(); ++j)
        consider(t, j);
    for (std::size_t i = t + 1; i < d.rows(); ++i)
        consider(i, t);
    return best;
}

} // namespace

namespace {

// With track == false the transforms stay empty and only D is reduced.
SmithForm smith_impl(const ExactMatrix &a, bool track) {
    const RingId ring = a.ring();
    SmithForm sf{a, ExactMatrix(ring, 0, 0), ExactMatrix(ring, 0, 0), {}};
    if (track) {
        sf.U = ExactMatrix::identity(ring, a.rows());
        sf.V = ExactMatrix::identity(ring, a.cols());
    }
    ExactMatrix &d = sf.D;
    ExactMatrix &u = sf.U;
    ExactMatrix &v = sf.V;
    const std::size_t steps = std::min(a.rows(), a.cols());

    auto row_op = [&](std::size_t dst, std::size_t src, const RingElem &c) {
        d.add_row_multiple(dst, src, c);
        if (track)
            u.add_row_multiple(dst, src, c);
    };
    auto col_op = [&](std::size_t dst, std::size_t src, const RingElem &c) {
        d.add_col_multiple(dst, src, c);
        if (track)
            v.add_col_multiple(dst, src, c);
    };
    auto move_to_pivot = [&](std::size_t t, Pos p) {
        d.swap_rows(t, p.row);
        d.swap_cols(t, p.col);
        if (track) {
            u.swap_rows(t, p.row);
            v.swap_cols(t, p.col);
        }
    };

    for (std::size_t t = 0; t < steps; ++t) {
        auto pivot = min_pivot(d, t);
        if (!pivot)
            break;
        move_to_pivot(t, *pivot);
        for (;;) {
            // Reduce row t and column t modulo the pivot.
            for (std::size_t i = t + 1; i < d.rows(); ++i)
                if (!d(i, t).is_zero())
                    row_op(i, t, -euclid_div(d(i, t), d(t, t)).first);
            for (std::size_t j = t + 1; j < d.cols(); ++j)
                if (!d(t, j).is_zero())
                    col_op(j, t, -euclid_div(d(t, j), d(t, t)).first);
            if (auto rest = min_in_cross(d, t)) {
                // A remainder of smaller norm survived; make it the pivot.
                if (rest->row == t) {
                    d.swap_cols(t, rest->col);
                    if (track)
                        v.swap_cols(t, rest->col);
                } else {
                    d.swap_rows(t, rest->row);
                    if (track)
                        u.swap_rows(t, rest->row);
                }
                continue;
            }
            // Cross is clear; enforce divisibility of the remaining block.
            std::optional<std::size_t> bad_row;
            for (std::size_t i = t + 1; i < d.rows() && !bad_row; ++i)
                for (std::size_t j = t + 1; j < d.cols(); ++j)
                    if (!divides(d(t, t), d(i, j))) {
                        bad_row = i;
                        break;
                    }
            if (!bad_row)
                break;
            row_op(t, *bad_row, RingElem::one(ring));
        }
        RingElem c = canonical_unit(d(t, t));
        if (!c.is_one()) {
            d.scale_row(t, c);
            if (track)
                u.scale_row(t, c);
        }
    }
    sf.invariant_factors.reserve(steps);
    for (std::size_t t = 0; t < steps; ++t)
        sf.invariant_factors.push_back(d(t, t));
    return sf;
}

} // namespace

SmithForm smith_normal_form(const ExactMatrix &a) { return smith_impl(a, true); }

std::vector<RingElem> invariant_factors(const ExactMatrix &a) {
    return smith_impl(a, false).invariant_factors;
}

ExactMatrix inverse(const ExactMatrix &a) {
    if (a.rows() != a.cols())
        throw DomainError("inverse of a non-square matrix");
    SmithForm sf = smith_normal_form(a);
    for (const RingElem &f : sf.invariant_factors)
        if (!f.is_unit())
            throw DomainError("matrix is not invertible over " + a.ring().name());
    // U A V = D with D = I after canonicalization, so A^{-1} = V U.
    return sf.V * sf.U;
}

bool is_primitive(std::span<const RingElem> v) {
    if (v.empty())
        throw DomainError("is_primitive of an empty vector");
    std::optional<RingElem> g;
    for (const RingElem &x : v) {
        if (x.is_zero())
            continue;
        g = g ? gcd(*g, x) : canonical_unit(x) * x;
        if (g->is_unit())
            return true;
    }
    return g && g->is_unit();
}

bool is_partial_frame(const std::vector<Vector> &vs) {
    if (vs.empty())
        return true;
    const std::size_t n = vs.front().size();
    const RingId ring = vs.front().empty() ? RingId{} : vs.front().front().ring();
    if (vs.size() > n)
        return false;
    auto factors = invariant_factors(ExactMatrix::from_rows(ring, vs, n));
    return std::all_of(factors.begin(), factors.end(),
                       [](const RingElem &d) { return d.is_unit(); });
}

std::vector<Vector> complement(const std::vector<Vector> &w, std::size_t n) {
    if (w.empty())
        throw DomainError("complement needs at least one vector to fix the ring");
    if (!is_partial_frame(w))
        throw DomainError("complement: input is not a partial frame");
    const RingId ring = w.front().front().ring();
    SmithForm sf = smith_normal_form(ExactMatrix::from_rows(ring, w, n));
    // Row space of W equals the first k rows of V^{-1}; the rest complete a basis.
    ExactMatrix vinv = inverse(sf.V);
    std::vector<Vector> out;
    for (std::size_t i = w.size(); i < n; ++i)
        out.push_back(vinv.row(i));
    return out;
}

} // namespace framelab
