#include "framelab/homology.hpp"

#include <algorithm>

namespace framelab {

ExactMatrix SparseBoundary::dense(RingId ring) const {
    if (cols() > kMaxBoundaryColumns)
        throw SizeGuardError("boundary matrix has " + std::to_string(cols()) + " columns (limit " +
                                 std::to_string(kMaxBoundaryColumns) + ")",
                             cols());
    ExactMatrix m(ring, rows, cols());
    for (std::size_t j = 0; j < cols(); ++j)
        for (auto [row, sign] : columns[j])
            m(row, j) = RingElem::from_int(ring, sign);
    return m;
}

ChainComplex::ChainComplex(const SimplicialComplex &k) {
    ranks_.push_back(1);
    for (int d = 0; d <= k.dimension(); ++d)
        ranks_.push_back(k.count(d));
    for (int d = 0; d <= k.dimension(); ++d) {
        SparseBoundary b;
        b.rows = rank(d - 1);
        for (const Simplex &s : k.simplices(d)) {
            std::vector<std::pair<std::size_t, int>> col;
            if (d == 0) {
                col.emplace_back(0, 1);
            } else {
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex face = s;
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    col.emplace_back(*k.index_of(face), i % 2 == 0 ? 1 : -1);
                }
            }
            b.columns.push_back(std::move(col));
        }
        boundaries_.push_back(std::move(b));
    }
    // d o d = 0, column by column.
    for (int d = 1; d <= top(); ++d) {
        const SparseBoundary &hi = boundaries_[static_cast<std::size_t>(d)];
        const SparseBoundary &lo = boundaries_[static_cast<std::size_t>(d - 1)];
        for (const auto &col : hi.columns) {
            std::map<std::size_t, long> acc;
            for (auto [mid, s1] : col)
                for (auto [row, s2] : lo.columns[mid])
                    acc[row] += s1 * s2;
            for (auto &[row, v] : acc)
                if (v != 0)
                    throw Error("boundary of a boundary is nonzero in degree " + std::to_string(d));
        }
    }
}

std::size_t ChainComplex::rank(int d) const {
    if (d < -1 || d > top())
        return 0;
    return ranks_[static_cast<std::size_t>(d + 1)];
}

const SparseBoundary &ChainComplex::boundary(int d) const {
    if (d < 0 || d > top())
        throw DomainError("no boundary map in degree " + std::to_string(d));
    return boundaries_[static_cast<std::size_t>(d)];
}

const DegreeHomology &HomologyResult::at(int d) const {
    for (const DegreeHomology &h : degrees)
        if (h.degree == d)
            return h;
    throw DomainError("no homology recorded in degree " + std::to_string(d));
}

std::size_t HomologyResult::betti(int d) const {
    for (const DegreeHomology &h : degrees)
        if (h.degree == d)
            return h.betti;
    return 0;
}

long HomologyResult::euler_characteristic() const {
    long chi = 0;
    for (const DegreeHomology &h : degrees)
        chi += (h.degree % 2 == 0 ? 1 : -1) * static_cast<long>(h.betti);
    return chi;
}

long reduced_euler_characteristic(const SimplicialComplex &k) {
    long chi = -1;
    for (int d = 0; d <= k.dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(k.count(d));
    return chi;
}

namespace {

long mod(long x, long p) {
    long r = x % p;
    return r < 0 ? r + p : r;
}

long inv_mod(long x, long p) {
    long result = 1, base = mod(x, p);
    for (long e = p - 2; e > 0; e >>= 1) {
        if (e & 1)
            result = result * base % p;
        base = base * base % p;
    }
    return result;
}

std::size_t rank_mod_p(const SparseBoundary &b, long p) {
    if (b.cols() > kMaxBoundaryColumns)
        throw SizeGuardError("boundary matrix has " + std::to_string(b.cols()) + " columns", b.cols());
    // Rows of the transpose: one per simplex.
    std::vector<std::vector<long>> m(b.cols(), std::vector<long>(b.rows, 0));
    for (std::size_t j = 0; j < b.cols(); ++j)
        for (auto [row, sign] : b.columns[j])
            m[j][row] = mod(sign, p);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < b.rows && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0)
            ++piv;
        if (piv == m.size())
            continue;
        std::swap(m[piv], m[rank]);
        long inv = inv_mod(m[rank][col], p);
        for (std::size_t i = rank + 1; i < m.size(); ++i) {
            if (m[i][col] == 0)
                continue;
            long c = m[i][col] * inv % p;
            for (std::size_t j = col; j < b.rows; ++j)
                m[i][j] = mod(m[i][j] - c * m[rank][j], p);
        }
        ++rank;
    }
    return rank;
}

Integer odd_part(Integer x) {
    while (x % 2 == 0)
        x /= 2;
    return x;
}

} // namespace

HomologyResult reduced_homology(const SimplicialComplex &k, const CoeffRing &coeff) {
    ChainComplex cc(k);
    const int top = cc.top();
    // rank of d_d for d in [0, top]; index d. torsion_of[d]: nonunit factors of d_d.
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 2), 0);
    std::vector<std::vector<Integer>> torsion_of(static_cast<std::size_t>(top + 2));
    for (int d = 0; d <= top; ++d) {
        const SparseBoundary &b = cc.boundary(d);
        std::size_t r = 0;
        if (coeff.kind == CoeffKind::Fp) {
            r = rank_mod_p(b, coeff.p);
        } else {
            for (const RingElem &f : invariant_factors(b.dense(RingId::integers()))) {
                if (f.is_zero())
                    continue;
                ++r;
                Integer v = abs(f.a());
                if (coeff.kind == CoeffKind::ZHalf)
                    v = odd_part(v);
                if (v > 1 && coeff.kind != CoeffKind::Q)
                    torsion_of[static_cast<std::size_t>(d)].push_back(v);
            }
        }
        ranks[static_cast<std::size_t>(d)] = r;
    }
    HomologyResult out;
    out.coeff = coeff;
    for (int d = -1; d <= top; ++d) {
        DegreeHomology h;
        h.degree = d;
        std::size_t rank_out = d >= 0 ? ranks[static_cast<std::size_t>(d)] : 0;
        std::size_t rank_in = d + 1 <= top ? ranks[static_cast<std::size_t>(d + 1)] : 0;
        h.betti = cc.rank(d) - rank_out - rank_in;
        if (d + 1 <= top)
            h.torsion = torsion_of[static_cast<std::size_t>(d + 1)];
        out.degrees.push_back(std::move(h));
    }
    return out;
}

HomologyResult reduced_homology(const Poset &p, const CoeffRing &coeff) {
    return reduced_homology(order_complex(p), coeff);
}

bool homologically_spherical(const HomologyResult &h, int d) {
    for (const DegreeHomology &x : h.degrees)
        if (x.degree != d && !x.vanishes())
            return false;
    return true;
}

bool is_spherical(const SimplicialComplex &k, int d, const CoeffRing &coeff) {
    if (k.info().truncated)
        throw DomainError("sphericity verdicts are not available for truncated complexes");
    if (k.dimension() != d)
        return false;
    HomologyResult h = reduced_homology(k, coeff);
    for (const DegreeHomology &x : h.degrees)
        if (x.degree < d && !x.vanishes())
            return false;
    return true;
}

bool is_cohen_macaulay(const SimplicialComplex &k, int d, const CoeffRing &coeff) {
    if (!is_spherical(k, d, coeff))
        return false;
    for (int dim = 0; dim <= k.dimension(); ++dim)
        for (const Simplex &s : k.simplices(dim))
            if (!is_spherical(link(k, s), d - dim - 1, coeff))
                return false;
    return true;
}

CycleChain CycleChain::negated() const {
    CycleChain out{degree, {}};
    for (const auto &[i, c] : coefficients)
        out.coefficients.emplace(i, -c);
    return out;
}

CycleChain boundary_of(const SimplicialComplex &k, const CycleChain &c) {
    CycleChain out{c.degree - 1, {}};
    for (const auto &[idx, coef] : c.coefficients) {
        if (idx >= k.count(c.degree))
            throw DomainError("chain refers to a missing simplex");
        if (c.degree == 0) {
            out.coefficients[0] += coef;
            continue;
        }
        const Simplex &s = k.simplices(c.degree)[idx];
        for (std::size_t i = 0; i < s.size(); ++i) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
            Integer &slot = out.coefficients[*k.index_of(face)];
            if (i % 2 == 0)
                slot += coef;
            else
                slot -= coef;
        }
    }
    std::erase_if(out.coefficients, [](const auto &kv) { return kv.second == 0; });
    return out;
}

bool is_cycle(const SimplicialComplex &k, const CycleChain &c) {
    if (c.degree < 0)
        return true;
    return boundary_of(k, c).coefficients.empty();
}

std::vector<CycleChain> top_cycle_basis(const SimplicialComplex &k) {
    const int d = k.dimension();
    if (d < 0)
        return {CycleChain{-1, {{0, Integer(1)}}}};
    ChainComplex cc(k);
    SmithForm sf = smith_normal_form(cc.boundary(d).dense(RingId::integers()));
    std::vector<CycleChain> out;
    for (std::size_t j = sf.rank(); j < sf.V.cols(); ++j) {
        CycleChain c{d, {}};
        for (std::size_t i = 0; i < sf.V.rows(); ++i)
            if (!sf.V(i, j).is_zero())
                c.coefficients.emplace(i, sf.V(i, j).a());
        out.push_back(std::move(c));
    }
    return out;
}

SpanTester::SpanTester(const SimplicialComplex &k, int degree, const std::vector<CycleChain> &gens)
    : k_(&k), degree_(degree) {
    const RingId zz = RingId::integers();
    const std::size_t rows = degree < 0 ? 1 : k.count(degree);
    std::vector<Vector> cols;
    for (const CycleChain &g : gens) {
        if (g.degree != degree)
            throw DomainError("generator has degree " + std::to_string(g.degree) + ", expected " +
                              std::to_string(degree));
        if (!is_cycle(k, g))
            throw DomainError("generator is not a cycle");
        Vector v(rows, RingElem::zero(zz));
        for (const auto &[i, c] : g.coefficients)
            v.at(i) = RingElem(zz, c);
        cols.push_back(std::move(v));
    }
    if (degree + 1 <= k.dimension()) {
        ChainComplex cc(k);
        ExactMatrix b = cc.boundary(degree + 1).dense(zz);
        for (std::size_t j = 0; j < b.cols(); ++j)
            cols.push_back(b.column(j));
    }
    ExactMatrix a = cols.empty() ? ExactMatrix(zz, rows, 0) : ExactMatrix::from_columns(zz, cols, rows);
    sf_ = smith_normal_form(a);
    rank_ = sf_.rank();
}

bool SpanTester::contains(const CycleChain &c) const {
    if (c.degree != degree_)
        throw DomainError("chain has the wrong degree for this span test");
    if (!is_cycle(*k_, c))
        throw DomainError("chain is not a cycle");
    const RingId zz = RingId::integers();
    Vector v(sf_.U.cols(), RingElem::zero(zz));
    for (const auto &[i, coef] : c.coefficients)
        v.at(i) = RingElem(zz, coef);
    Vector y = sf_.U * v;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (i < rank_) {
            if (!divides(sf_.invariant_factors[i], y[i]))
                return false;
        } else if (!y[i].is_zero()) {
            return false;
        }
    }
    return true;
}

bool class_in_span(const SimplicialComplex &k, const CycleChain &c, const std::vector<CycleChain> &gens) {
    return SpanTester(k, c.degree, gens).contains(c);
}

std::size_t NerveReport::predicted() const {
    std::size_t total = y_rank;
    for (const NerveTerm &t : terms)
        total += t.above_rank * t.fiber_rank;
    return total;
}

NerveReport nerve_rank_identity(const Poset &x, const Poset &y, const std::vector<std::size_t> &f,
                                const std::vector<int> &t, int n, const CoeffRing &coeff) {
    if (!coeff.is_field())
        throw DomainError("the rank identity is checked over fields only");
    if (t.size() != y.size())
        throw DomainError("t must assign an integer to every element of Y");
    check_monotone(x, y, f);
    NerveReport report;
    report.n = n;
    HomologyResult hy = reduced_homology(y, coeff);
    if (!homologically_spherical(hy, n))
        report.failed_hypotheses.push_back("Y is not " + std::to_string(n) + "-spherical");
    for (std::size_t el = 0; el < y.size(); ++el) {
        NerveTerm term;
        term.y = el;
        term.t = t[el];
        HomologyResult above = reduced_homology(poset_above(y, el), coeff);
        HomologyResult fiber = reduced_homology(poset_fiber_le(x, y, f, el), coeff);
        if (!homologically_spherical(above, t[el] - 1))
            report.failed_hypotheses.push_back("Y_{>" + std::to_string(el) + "} is not " +
                                               std::to_string(t[el] - 1) + "-spherical");
        if (!homologically_spherical(fiber, n - t[el]))
            report.failed_hypotheses.push_back("f_{<=" + std::to_string(el) + "} is not " +
                                               std::to_string(n - t[el]) + "-spherical");
        term.above_rank = above.betti(t[el] - 1);
        term.fiber_rank = fiber.betti(n - t[el]);
        report.terms.push_back(term);
    }
    report.hypotheses_hold = report.failed_hypotheses.empty();
    report.x_rank = reduced_homology(x, coeff).betti(n);
    report.y_rank = hy.betti(n);
    return report;
}

} // namespace framelab
