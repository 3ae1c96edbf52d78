#include "framelab/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace framelab {

namespace {

long mod(long x, int p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

long inv_mod(long x, int p) {
    // p is small; Fermat inverse.
    long result = 1, base = mod(x, p);
    for (int e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result;
}

// Reduced row echelon form over F_p with zero rows dropped.
std::vector<std::vector<long>> rref(std::vector<std::vector<long>> rows, int p, std::size_t n) {
    for (auto &r : rows)
        for (auto &x : r)
            x = mod(x, p);
    std::size_t lead = 0;
    for (std::size_t col = 0; col < n && lead < rows.size(); ++col) {
        std::size_t piv = lead;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[lead]);
        long inv = inv_mod(rows[lead][col], p);
        for (auto &x : rows[lead])
            x = x * inv % p;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == lead || rows[i][col] == 0)
                continue;
            long c = rows[i][col];
            for (std::size_t j = 0; j < n; ++j)
                rows[i][j] = mod(rows[i][j] - c * rows[lead][j], p);
        }
        ++lead;
    }
    rows.resize(lead);
    return rows;
}

// Coordinate values of norm <= bound, for building truncated line sets.
std::vector<RingElem> small_elements(RingId ring, const Integer &bound) {
    std::vector<RingElem> out;
    if (ring.is_field()) {
        for (int x = 0; x < ring.p; ++x)
            out.push_back(RingElem::from_int(ring, x));
        return out;
    }
    long b = bound.get_si();
    long reach = ring.kind == RingKind::Integers ? b : static_cast<long>(std::sqrt(4.0 * b / 3.0)) + 2;
    for (long x = -reach; x <= reach; ++x) {
        if (ring.kind == RingKind::Integers) {
            out.push_back(RingElem::from_int(ring, x));
            continue;
        }
        for (long y = -reach; y <= reach; ++y) {
            RingElem e = RingElem::from_int(ring, x, y);
            if (e.norm() <= bound)
                out.push_back(e);
        }
    }
    return out;
}

} // namespace

Vector canonicalize_vector(const Vector &v) {
    for (const RingElem &x : v)
        if (!x.is_zero()) {
            RingElem u = canonical_unit(x);
            Vector out;
            out.reserve(v.size());
            for (const RingElem &y : v)
                out.push_back(u * y);
            return out;
        }
    throw DomainError("cannot canonicalize the zero vector");
}

Line Line::from_vector(const Vector &v) {
    if (!is_primitive(v))
        throw DomainError("vector is not primitive");
    Line l;
    l.rep_ = canonicalize_vector(v);
    return l;
}

Line Line::standard(RingId ring, std::size_t n, std::size_t i) {
    Vector v(n, RingElem::zero(ring));
    v.at(i) = RingElem::one(ring);
    return from_vector(v);
}

Integer Line::max_norm() const {
    Integer best = 0;
    for (const RingElem &x : rep_)
        best = std::max(best, x.norm());
    return best;
}

NormBound::NormBound(Integer b) : value(std::move(b)) {
    if (value < 1)
        throw DomainError("norm bound must be >= 1");
}

std::vector<Line> enumerate_lines(RingId ring, std::size_t n, const std::optional<NormBound> &bound) {
    if (!ring.is_field() && !bound)
        throw DomainError("enumerate_lines over " + ring.name() + " requires a norm bound");
    if (n == 0)
        return {};
    const std::vector<RingElem> coords = small_elements(ring, bound ? bound->value : Integer(1));
    const double tuples = std::pow(static_cast<double>(coords.size()), static_cast<double>(n));
    if (tuples > 100.0 * kMaxVertices)
        throw SizeGuardError("line enumeration would scan " + std::to_string(static_cast<long long>(tuples)) +
                                 " coordinate tuples",
                             static_cast<std::size_t>(std::min(tuples, 1e18)));
    std::vector<Line> out;
    Vector v(n, RingElem::zero(ring));
    // Odometer over all coordinate tuples; keep canonical primitive vectors.
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        for (std::size_t i = 0; i < n; ++i)
            v[i] = coords[idx[i]];
        auto first = std::find_if(v.begin(), v.end(), [](const RingElem &x) { return !x.is_zero(); });
        if (first != v.end() && canonical_unit(*first).is_one() && is_primitive(v))
            out.push_back(Line::from_vector(v));
        std::size_t k = 0;
        while (k < n && ++idx[k] == coords.size())
            idx[k++] = 0;
        if (k == n)
            break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > kMaxVertices)
        throw SizeGuardError(std::to_string(out.size()) + " lines exceed the vertex limit", out.size());
    return out;
}

Subspace Subspace::span(int p, std::size_t n, const std::vector<std::vector<long>> &vectors) {
    for (const auto &v : vectors)
        if (v.size() != n)
            throw DomainError("vector length does not match ambient rank");
    Subspace s;
    s.p_ = p;
    s.n_ = n;
    s.rows_ = rref(vectors, p, n);
    return s;
}

Subspace Subspace::whole(int p, std::size_t n) { return standard(p, n, n); }

Subspace Subspace::standard(int p, std::size_t n, std::size_t k) {
    std::vector<std::vector<long>> rows;
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<long> r(n, 0);
        r[i] = 1;
        rows.push_back(r);
    }
    return span(p, n, rows);
}

bool Subspace::contains(const std::vector<long> &v) const {
    auto rows = rows_;
    rows.push_back(v);
    return rref(rows, p_, n_).size() == rows_.size();
}

bool Subspace::contains(const Subspace &other) const { return sum(other).rank() == rank(); }

Subspace Subspace::sum(const Subspace &other) const {
    if (other.p_ != p_ || other.n_ != n_)
        throw DomainError("subspaces live in different ambient spaces");
    auto rows = rows_;
    rows.insert(rows.end(), other.rows_.begin(), other.rows_.end());
    return span(p_, n_, rows);
}

Subspace Subspace::intersect(const Subspace &other) const {
    if (other.p_ != p_ || other.n_ != n_)
        throw DomainError("subspaces live in different ambient spaces");
    // Zassenhaus: rows [a | a] and [b | 0]; echelon rows [0 | x] span the intersection.
    std::vector<std::vector<long>> rows;
    for (const auto &a : rows_) {
        std::vector<long> r(a);
        r.insert(r.end(), a.begin(), a.end());
        rows.push_back(r);
    }
    for (const auto &b : other.rows_) {
        std::vector<long> r(b);
        r.insert(r.end(), n_, 0);
        rows.push_back(r);
    }
    auto ech = rref(rows, p_, 2 * n_);
    std::vector<std::vector<long>> meet;
    for (const auto &r : ech)
        if (std::all_of(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n_), [](long x) { return x == 0; }))
            meet.emplace_back(r.begin() + static_cast<std::ptrdiff_t>(n_), r.end());
    return span(p_, n_, meet);
}

Subspace Subspace::image(const ExactMatrix &g) const {
    if (g.rows() != n_ || g.cols() != n_)
        throw DomainError("matrix shape does not match subspace ambient rank");
    std::vector<std::vector<long>> out;
    for (const auto &r : rows_) {
        std::vector<long> w(n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                w[i] += g(i, j).a().get_si() * r[j];
        out.push_back(w);
    }
    return span(p_, n_, out);
}

ExactMatrix Subspace::to_matrix() const {
    RingId ring = RingId::prime_field(p_);
    ExactMatrix m(ring, rows_.size(), n_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
        for (std::size_t j = 0; j < n_; ++j)
            m(i, j) = RingElem::from_int(ring, rows_[i][j]);
    return m;
}

Subspace subspace_of(const Line &line) {
    if (!line.ring().is_field())
        throw DomainError("subspace_of requires a line over a prime field");
    std::vector<long> v;
    for (const RingElem &x : line.rep())
        v.push_back(x.a().get_si());
    return Subspace::span(line.ring().p, line.ambient_rank(), {v});
}

std::vector<Subspace> enumerate_subspaces(RingId field, std::size_t n, std::size_t rank) {
    if (!field.is_field())
        throw DomainError("enumerate_subspaces requires a prime field");
    if (rank > n)
        throw DomainError("rank exceeds ambient dimension");
    const int p = field.p;
    std::vector<Subspace> out;
    // Choose pivot columns, then fill the free entries of each pivot row.
    std::vector<std::size_t> pivots;
    std::function<void(std::size_t)> choose = [&](std::size_t start) {
        if (pivots.size() == rank) {
            std::vector<std::pair<std::size_t, std::size_t>> free; // (row, col)
            for (std::size_t r = 0; r < rank; ++r)
                for (std::size_t c = pivots[r] + 1; c < n; ++c)
                    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                        free.emplace_back(r, c);
            std::vector<long> vals(free.size(), 0);
            for (;;) {
                std::vector<std::vector<long>> rows(rank, std::vector<long>(n, 0));
                for (std::size_t r = 0; r < rank; ++r)
                    rows[r][pivots[r]] = 1;
                for (std::size_t k = 0; k < free.size(); ++k)
                    rows[free[k].first][free[k].second] = vals[k];
                out.push_back(Subspace::span(p, n, rows));
                std::size_t k = 0;
                while (k < vals.size() && ++vals[k] == p)
                    vals[k++] = 0;
                if (k == vals.size())
                    break;
            }
            return;
        }
        for (std::size_t c = start; c < n; ++c) {
            pivots.push_back(c);
            choose(c + 1);
            pivots.pop_back();
        }
    };
    choose(0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Splitting> enumerate_splittings_of(const Subspace &ambient) {
    const std::size_t n = ambient.ambient_rank();
    const std::size_t dim = ambient.rank();
    std::vector<Splitting> out;
    if (dim < 2)
        return out;
    RingId field = RingId::prime_field(ambient.p());
    std::vector<std::vector<Subspace>> by_rank(dim);
    for (std::size_t r = 1; r < dim; ++r)
        for (Subspace &s : enumerate_subspaces(field, n, r))
            if (ambient.contains(s))
                by_rank[r].push_back(std::move(s));
    for (std::size_t r = 1; r < dim; ++r)
        for (const Subspace &a : by_rank[r])
            for (const Subspace &b : by_rank[dim - r])
                if (a.sum(b).rank() == dim)
                    out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Splitting> enumerate_splittings(RingId field, std::size_t n) {
    if (!field.is_field())
        throw DomainError("enumerate_splittings requires a prime field");
    if (n < 2)
        return {};
    return enumerate_splittings_of(Subspace::whole(field.p, n));
}

} // namespace framelab
