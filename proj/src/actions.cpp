#include "framelab/actions.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

namespace framelab {

void GroupGenSet::validate() const {
    for (const ExactMatrix &g : generators) {
        if (g.rows() != ambient_rank || g.cols() != ambient_rank)
            throw DomainError("generator has the wrong shape");
        if (!determinant(g).is_unit())
            throw DomainError("generator is not invertible over " + ring.name());
        for (std::size_t j = 0; j < fix_rank; ++j)
            for (std::size_t i = 0; i < ambient_rank; ++i)
                if (!(g(i, j) == (i == j ? RingElem::one(ring) : RingElem::zero(ring))))
                    throw DomainError("generator does not fix e_" + std::to_string(j + 1));
    }
}

long primitive_root(int p) {
    if (!is_prime(p))
        throw DomainError("primitive_root needs a prime");
    for (long g = 1; g < p; ++g) {
        long x = 1;
        int order = 0;
        do {
            x = x * g % p;
            ++order;
        } while (x != 1);
        if (order == p - 1)
            return g;
    }
    return 1;
}

GroupGenSet gl_fix_generators(RingId field, std::size_t m, std::size_t n) {
    if (!field.is_field())
        throw DomainError("gl_fix_generators needs a prime field");
    if (n < 1)
        throw DomainError("gl_fix_generators needs n >= 1");
    const std::size_t total = m + n;
    GroupGenSet gs{field, total, m, {}};
    auto elementary = [&](std::size_t i, std::size_t j) {
        ExactMatrix e = ExactMatrix::identity(field, total);
        e(i, j) = RingElem::one(field);
        return e;
    };
    for (std::size_t i = m; i < total; ++i)
        for (std::size_t j = m; j < total; ++j)
            if (i != j)
                gs.generators.push_back(elementary(i, j));
    if (field.p > 2) {
        ExactMatrix d = ExactMatrix::identity(field, total);
        d(m, m) = RingElem::from_int(field, primitive_root(field.p));
        gs.generators.push_back(d);
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = m; j < total; ++j)
            gs.generators.push_back(elementary(i, j));
    gs.validate();
    return gs;
}

std::vector<ExactMatrix> enumerate_gl_fix(RingId field, std::size_t m, std::size_t n) {
    if (!field.is_field())
        throw DomainError("enumerate_gl_fix needs a prime field");
    const std::size_t total = m + n;
    // Free entries: the m x n block X and the n x n block A.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < total; ++i)
        for (std::size_t j = m; j < total; ++j)
            slots.emplace_back(i, j);
    const double count = std::pow(static_cast<double>(field.p), static_cast<double>(slots.size()));
    if (count > 2e6)
        throw SizeGuardError("group enumeration too large", static_cast<std::size_t>(count));
    std::vector<ExactMatrix> out;
    std::vector<int> vals(slots.size(), 0);
    for (;;) {
        ExactMatrix g = ExactMatrix::identity(field, total);
        for (std::size_t k = 0; k < slots.size(); ++k)
            g(slots[k].first, slots[k].second) = RingElem::from_int(field, vals[k]);
        if (!determinant(g).is_zero())
            out.push_back(std::move(g));
        std::size_t k = 0;
        while (k < vals.size() && ++vals[k] == field.p)
            vals[k++] = 0;
        if (k == vals.size())
            break;
    }
    return out;
}

namespace {

Line act_on_line(const ExactMatrix &g, const Line &l) {
    if (!(g.ring() == l.ring()))
        throw DomainError("matrix and line live over different rings");
    return Line::from_vector(g * l.rep());
}

} // namespace

VertexLabel act_on_label(const ExactMatrix &g, const VertexLabel &label) {
    if (const auto *l = std::get_if<Line>(&label))
        return act_on_line(g, *l);
    if (const auto *s = std::get_if<Subspace>(&label))
        return s->image(g);
    if (const auto *sp = std::get_if<Splitting>(&label))
        return Splitting{sp->first.image(g), sp->second.image(g)};
    throw DomainError("cannot act on an unlabelled vertex");
}

namespace {

// Sorts `s` in place and returns the sign of the sorting permutation.
int sort_with_sign(Simplex &s) {
    int sign = 1;
    for (std::size_t i = 1; i < s.size(); ++i)
        for (std::size_t j = i; j > 0 && s[j - 1] > s[j]; --j) {
            std::swap(s[j - 1], s[j]);
            sign = -sign;
        }
    return sign;
}

std::size_t image_vertex(const ExactMatrix &g, const SimplicialComplex &k, std::size_t v) {
    auto idx = k.vertex_index(act_on_label(g, k.vertex(v)));
    if (!idx)
        throw TruncationEscape("vertex " + std::to_string(v) + " is mapped outside the complex", v);
    return *idx;
}

} // namespace

std::vector<std::size_t> act_on_complex(const ExactMatrix &g, const SimplicialComplex &k) {
    std::vector<std::size_t> perm(k.vertex_count());
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        perm[v] = image_vertex(g, k, v);
    std::vector<bool> hit(k.vertex_count(), false);
    for (std::size_t v : perm) {
        if (hit[v])
            throw DomainError("group element does not act injectively on vertices");
        hit[v] = true;
    }
    for (int d = 1; d <= k.dimension(); ++d)
        for (const Simplex &s : k.simplices(d)) {
            Simplex t;
            for (std::size_t v : s)
                t.push_back(perm[v]);
            std::sort(t.begin(), t.end());
            if (!k.contains(t))
                throw Error("group element does not send simplices to simplices");
        }
    return perm;
}

CycleChain push_forward(const SimplicialComplex &k, const CycleChain &c, const std::vector<std::size_t> &vertex_map) {
    CycleChain out{c.degree, {}};
    if (c.degree < 0) {
        out.coefficients = c.coefficients;
        return out;
    }
    for (const auto &[idx, coef] : c.coefficients) {
        Simplex t;
        for (std::size_t v : k.simplices(c.degree).at(idx))
            t.push_back(vertex_map.at(v));
        int sign = sort_with_sign(t);
        auto target = k.index_of(t);
        if (!target || std::adjacent_find(t.begin(), t.end()) != t.end())
            throw Error("vertex map does not send the chain's simplices to simplices");
        Integer &slot = out.coefficients[*target];
        if (sign > 0)
            slot += coef;
        else
            slot -= coef;
    }
    std::erase_if(out.coefficients, [](const auto &kv) { return kv.second == 0; });
    return out;
}

CycleChain act_on_chain(const ExactMatrix &g, const SimplicialComplex &k, const CycleChain &c) {
    std::vector<std::size_t> partial(k.vertex_count(), SIZE_MAX);
    if (c.degree >= 0)
        for (const auto &entry : c.coefficients)
            for (std::size_t v : k.simplices(c.degree).at(entry.first))
                if (partial[v] == SIZE_MAX)
                    partial[v] = image_vertex(g, k, v);
    return push_forward(k, c, partial);
}

int SphereClassSpec::degree() const {
    int d = -1;
    for (const auto &b : blocks)
        d += static_cast<int>(b.size()) - 1;
    return d;
}

SphereClassSpec SphereClassSpec::canonical() const {
    SphereClassSpec out = *this;
    for (auto &b : out.blocks)
        std::sort(b.begin(), b.end());
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> block_indices(const SphereClassSpec &spec, const SimplicialComplex &k) {
    std::vector<std::vector<std::size_t>> blocks;
    std::set<std::size_t> seen;
    for (const auto &b : spec.blocks) {
        if (b.size() < 2)
            throw DomainError("sphere class blocks need at least two vertices");
        std::vector<std::size_t> idx;
        for (const VertexLabel &label : b) {
            auto v = k.vertex_index(label);
            if (!v)
                throw DomainError("sphere class vertex is not in the complex");
            if (!seen.insert(*v).second)
                throw DomainError("sphere class repeats a vertex");
            idx.push_back(*v);
        }
        blocks.push_back(std::move(idx));
    }
    return blocks;
}

// Calls visit(simplex in block order, sign) for each omission choice.
void for_each_omission(const std::vector<std::vector<std::size_t>> &blocks,
                       const std::function<void(const std::vector<std::size_t> &, int)> &visit) {
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t b, int sign) {
        if (b == blocks.size()) {
            visit(cur, sign);
            return;
        }
        const auto &block = blocks[b];
        for (std::size_t omit = 0; omit < block.size(); ++omit) {
            std::size_t before = cur.size();
            for (std::size_t i = 0; i < block.size(); ++i)
                if (i != omit)
                    cur.push_back(block[i]);
            rec(b + 1, omit % 2 == 0 ? sign : -sign);
            cur.resize(before);
        }
    };
    rec(0, 1);
}

} // namespace

bool join_condition_holds(const SphereClassSpec &spec, const SimplicialComplex &k) {
    std::vector<std::vector<std::size_t>> blocks;
    try {
        blocks = block_indices(spec, k);
    } catch (const DomainError &) {
        return false;
    }
    bool ok = true;
    for_each_omission(blocks, [&](const std::vector<std::size_t> &s, int) {
        if (!ok)
            return;
        Simplex t = s;
        std::sort(t.begin(), t.end());
        ok = k.contains(t);
    });
    return ok;
}

CycleChain sphere_class(const SphereClassSpec &spec, const SimplicialComplex &k) {
    auto blocks = block_indices(spec, k);
    CycleChain c{spec.degree(), {}};
    for_each_omission(blocks, [&](const std::vector<std::size_t> &s, int sign) {
        Simplex t = s;
        sign *= sort_with_sign(t);
        auto idx = k.index_of(t);
        if (!idx)
            throw DomainError("join condition violated: a required simplex is missing");
        Integer &slot = c.coefficients[*idx];
        if (sign > 0)
            slot += 1;
        else
            slot -= 1;
    });
    std::erase_if(c.coefficients, [](const auto &kv) { return kv.second == 0; });
    if (!is_cycle(k, c))
        throw Error("sphere class is not a cycle");
    return c;
}

std::vector<SphereClassSpec> generating_family(const SimplicialComplex &k) {
    const ComplexInfo &info = k.info();
    if (!info.ring || !info.ring->is_field() || info.kind != "B")
        throw DomainError("generating_family needs B_n^m over a prime field");
    const RingId ring = *info.ring;
    const std::size_t n = info.n, m = info.m, total = n + m;
    const std::vector<RingElem> us = units(ring);
    std::vector<Vector> fixed;
    for (std::size_t i = 0; i < m; ++i)
        fixed.push_back(Line::standard(ring, total, i).rep());
    auto combine = [&](const Vector &x, const RingElem &c, const Vector &y) {
        Vector out(x.size(), RingElem::zero(ring));
        for (std::size_t i = 0; i < x.size(); ++i)
            out[i] = x[i] + c * y[i];
        return Line::from_vector(out);
    };

    std::set<SphereClassSpec> found;
    std::vector<Line> frame(n);
    SphereClassSpec spec;

    // Fills u-blocks for j = from..n-1 (0-based) after the w-blocks.
    std::function<void(std::size_t)> add_u = [&](std::size_t j) {
        if (j == n) {
            if (join_condition_holds(spec, k))
                found.insert(spec.canonical());
            return;
        }
        std::vector<const Vector *> partners;
        for (std::size_t i = 0; i < j; ++i)
            partners.push_back(&frame[i].rep());
        for (const Vector &e : fixed)
            partners.push_back(&e);
        for (const Vector *a : partners)
            for (const RingElem &c : us) {
                spec.blocks.push_back({frame[j], combine(frame[j].rep(), c, *a)});
                add_u(j + 1);
                spec.blocks.pop_back();
            }
    };
    std::function<void(std::size_t, std::size_t)> add_w = [&](std::size_t i, std::size_t d) {
        if (i == d) {
            add_u(2 * d);
            return;
        }
        for (const RingElem &c : us) {
            const Line &a = frame[2 * i], &b = frame[2 * i + 1];
            spec.blocks.push_back({a, b, combine(a.rep(), c, b.rep())});
            add_w(i + 1, d);
            spec.blocks.pop_back();
        }
    };

    for (const Simplex &top : k.simplices(static_cast<int>(n) - 1)) {
        Simplex order = top;
        do {
            for (std::size_t i = 0; i < n; ++i)
                frame[i] = std::get<Line>(k.vertex(order[i]));
            for (std::size_t d = 0; 2 * d <= n; ++d)
                add_w(0, d);
        } while (std::next_permutation(order.begin(), order.end()));
    }
    return {found.begin(), found.end()};
}

bool vanishes_over_zhalf(const std::vector<Integer> &factors) {
    for (Integer f : factors) {
        if (f == 0)
            return false;
        while (f % 2 == 0)
            f /= 2;
        if (f != 1)
            return false;
    }
    return true;
}

CoinvariantsReport coinvariants(const SimplicialComplex &k, const std::vector<std::vector<std::size_t>> &actions) {
    const RingId zz = RingId::integers();
    const int d = k.dimension();
    CoinvariantsReport report;
    std::vector<CycleChain> basis = top_cycle_basis(k);
    const std::size_t rank = basis.size();
    report.module_rank = rank;
    if (rank == 0) {
        report.vanishes_over_zhalf = true;
        return report;
    }
    const std::size_t chains = d < 0 ? 1 : k.count(d);
    // Z: cycle basis as columns; L: a left inverse with L Z = I.
    ExactMatrix z(zz, chains, rank);
    for (std::size_t j = 0; j < rank; ++j)
        for (const auto &[i, c] : basis[j].coefficients)
            z(i, j) = RingElem(zz, c);
    SmithForm sz = smith_normal_form(z);
    // U Z V = [I; 0], so L = V * (first rank rows of U).
    ExactMatrix top_u(zz, rank, chains);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < chains; ++j)
            top_u(i, j) = sz.U(i, j);
    ExactMatrix left = sz.V * top_u;

    std::vector<Vector> relations;
    for (const auto &perm : actions)
        for (const CycleChain &b : basis) {
            CycleChain moved = push_forward(k, b, perm);
            Vector diff(chains, RingElem::zero(zz));
            for (const auto &[i, c] : moved.coefficients)
                diff[i] += RingElem(zz, c);
            for (const auto &[i, c] : b.coefficients)
                diff[i] -= RingElem(zz, c);
            relations.push_back(left * diff);
        }
    ExactMatrix rel = relations.empty() ? ExactMatrix(zz, rank, 0) : ExactMatrix::from_columns(zz, relations, rank);
    report.relation_rows = rel.rows();
    report.relation_cols = rel.cols();
    std::vector<RingElem> factors = invariant_factors(rel);
    for (const RingElem &f : factors)
        if (!f.is_unit())
            report.invariant_factors.push_back(f.a());
    for (std::size_t i = factors.size(); i < rank; ++i)
        report.invariant_factors.push_back(0);
    report.vanishes_over_zhalf = vanishes_over_zhalf(report.invariant_factors);
    return report;
}

CoinvariantsReport coinvariants(const SimplicialComplex &k, const std::vector<ExactMatrix> &group) {
    std::vector<std::vector<std::size_t>> actions;
    for (const ExactMatrix &g : group)
        actions.push_back(act_on_complex(g, k));
    return coinvariants(k, actions);
}

CoinvariantsReport coinvariants(const SimplicialComplex &k, const GroupGenSet &group) {
    if (k.info().truncated)
        throw DomainError("coinvariants are not computed on truncated complexes");
    group.validate();
    return coinvariants(k, group.generators);
}

const char *sign_case_name(SignCase c) {
    switch (c) {
    case SignCase::InternalSwap:
        return "internal_swap";
    case SignCase::LastBlockSwap:
        return "last_block_swap";
    case SignCase::Bpid:
        return "bpid";
    }
    return "?";
}

namespace {

Vector vec_sum(const Vector &x, const Vector &y) {
    Vector out = x;
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += y[i];
    return out;
}

Vector vec_neg(const Vector &x) {
    Vector out = x;
    for (RingElem &v : out)
        v = -v;
    return out;
}

SimplicialComplex witness_complex(const SignWitnessParams &p) {
    std::optional<NormBound> bound;
    if (!p.ring.is_field())
        bound = NormBound(p.bound);
    return build_B(p.ring, p.n, p.m, bound);
}

// Basis e_1..e_m, v_1..v_n as columns.
ExactMatrix frame_matrix(const SignWitnessParams &p) {
    const std::size_t total = p.n + p.m;
    if (p.frame.size() != p.n)
        throw DomainError("sign witness needs exactly n frame vectors");
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < p.m; ++i)
        cols.push_back(Line::standard(p.ring, total, i).rep());
    for (const Vector &v : p.frame) {
        if (v.size() != total)
            throw DomainError("frame vector has the wrong length");
        cols.push_back(v);
    }
    ExactMatrix f = ExactMatrix::from_columns(p.ring, cols, total);
    if (!determinant(f).is_unit())
        throw DomainError("e_1..e_m, v_1..v_n is not a basis");
    return f;
}

SphereClassSpec witness_spec(const SignWitnessParams &p) {
    if (2 * p.d > p.n || p.addends.size() != p.n - 2 * p.d)
        throw DomainError("sign witness needs n - 2d addends");
    SphereClassSpec spec;
    for (std::size_t i = 0; i < p.d; ++i) {
        const Vector &a = p.frame[2 * i], &b = p.frame[2 * i + 1];
        spec.blocks.push_back({Line::from_vector(a), Line::from_vector(b), Line::from_vector(vec_sum(a, b))});
    }
    for (std::size_t j = 2 * p.d; j < p.n; ++j) {
        const Vector &v = p.frame[j];
        spec.blocks.push_back({Line::from_vector(v), Line::from_vector(vec_sum(v, p.addends[j - 2 * p.d]))});
    }
    return spec;
}

SignWitnessResult finish(const SimplicialComplex &k, const SphereClassSpec &spec, ExactMatrix g) {
    SignWitnessResult r;
    r.g = std::move(g);
    r.c = sphere_class(spec, k);
    r.gc = act_on_chain(r.g, k, r.c);
    r.holds = r.gc == r.c.negated();
    r.detail = r.holds ? "g.c = -c" : "g.c differs from -c";
    return r;
}

} // namespace

SignWitnessResult sign_witness(SignCase which, const SignWitnessParams &p) {
    switch (which) {
    case SignCase::InternalSwap: {
        if (p.n != 2 * p.d || p.d == 0)
            throw DomainError("internal_swap needs n = 2d >= 2");
        ExactMatrix f = frame_matrix(p);
        ExactMatrix swap = ExactMatrix::identity(p.ring, p.n + p.m);
        swap.swap_cols(p.m, p.m + 1);
        SimplicialComplex k = witness_complex(p);
        return finish(k, witness_spec(p), f * swap * inverse(f));
    }
    case SignCase::LastBlockSwap: {
        if (2 * p.d >= p.n)
            throw DomainError("last_block_swap needs 2d < n");
        ExactMatrix f = frame_matrix(p);
        // Images of the basis: everything fixed except v_n -> -v_n - a_n.
        ExactMatrix images = f;
        Vector moved = vec_neg(vec_sum(p.frame.back(), p.addends.back()));
        for (std::size_t i = 0; i < moved.size(); ++i)
            images(i, p.n + p.m - 1) = moved[i];
        SimplicialComplex k = witness_complex(p);
        return finish(k, witness_spec(p), images * inverse(f));
    }
    case SignCase::Bpid: {
        if (p.n != 1 || p.m != 1)
            throw DomainError("bpid witness lives in B_1^1");
        const RingId ring = p.ring;
        ExactMatrix g(ring, 2, 2);
        g(0, 0) = RingElem::one(ring);
        g(0, 1) = RingElem::from_int(ring, -p.r);
        g(1, 1) = -RingElem::one(ring);
        Line e2 = Line::standard(ring, 2, 1);
        Line vr = Line::from_vector({RingElem::from_int(ring, p.r), RingElem::one(ring)});
        SimplicialComplex k = witness_complex(p);
        if (vr == e2) {
            // v_0 = e_2: the class is zero, and g must fix the line.
            SignWitnessResult r;
            r.g = g;
            r.c = CycleChain{0, {}};
            r.gc = r.c;
            r.holds = act_on_label(g, e2) == VertexLabel(e2);
            r.detail = "v_0 = e_2, the class vanishes and g fixes e_2";
            return r;
        }
        SphereClassSpec spec{{{e2, vr}}};
        return finish(k, spec, g);
    }
    }
    throw DomainError("unknown sign witness case");
}

std::vector<std::pair<SignCase, SignWitnessParams>> standard_witnesses(RingId ring) {
    const RingElem zero = RingElem::zero(ring), one = RingElem::one(ring);
    std::vector<std::pair<SignCase, SignWitnessParams>> out;
    SignWitnessParams swap{ring, 2, 0, Integer(1), {{one, zero}, {zero, one}}, 1, {}, 0};
    out.emplace_back(SignCase::InternalSwap, swap);
    SignWitnessParams last{ring, 1, 1, Integer(1), {{zero, one}}, 0, {{one, zero}}, 0};
    out.emplace_back(SignCase::LastBlockSwap, last);
    for (long r = 0; r <= 3; ++r) {
        Integer bound = RingElem::from_int(ring, r).norm();
        if (bound < 1)
            bound = 1;
        out.emplace_back(SignCase::Bpid, SignWitnessParams{ring, 1, 1, bound, {}, 0, {}, r});
    }
    return out;
}

CuttingDownReport cutting_down_iso(const Subspace &v, const Subspace &w) {
    const int p = v.p();
    const std::size_t n = v.ambient_rank();
    if (w.p() != p || w.ambient_rank() != n)
        throw DomainError("V and W live in different ambient spaces");
    if (v.intersect(w).rank() != 0)
        throw DomainError("cutting down needs V n W = 0");
    if (v.sum(w).rank() == n)
        throw DomainError("cutting down needs V + W to be a proper summand");
    const RingId field = RingId::prime_field(p);
    // C = V + (a complement of V + W): contains V and complements W.
    std::vector<Vector> basis;
    for (const Subspace *s : {&v, &w})
        for (const auto &row : s->basis()) {
            Vector r;
            for (long x : row)
                r.push_back(RingElem::from_int(field, x));
            basis.push_back(std::move(r));
        }
    std::vector<std::vector<long>> c_rows = v.basis();
    for (const Vector &x : complement(basis, n)) {
        std::vector<long> r;
        for (const RingElem &e : x)
            r.push_back(e.a().get_si());
        c_rows.push_back(std::move(r));
    }
    const Subspace c = Subspace::span(p, n, c_rows);
    const Subspace whole = Subspace::whole(p, n);

    Poset source = splitting_poset_of(whole, {v, w});
    Poset target = splitting_poset_of(c, {v, std::nullopt});
    CuttingDownReport report;
    report.complement = c;
    report.source_size = source.size();
    report.target_size = target.size();

    std::vector<std::size_t> phi(source.size()), psi(target.size());
    bool defined = true;
    for (std::size_t i = 0; i < source.size(); ++i) {
        const auto &s = std::get<Splitting>(source.element(i));
        auto idx = target.index_of(Splitting{s.first, s.second.intersect(c)});
        defined = defined && idx.has_value();
        phi[i] = idx.value_or(0);
    }
    for (std::size_t i = 0; i < target.size(); ++i) {
        const auto &s = std::get<Splitting>(target.element(i));
        auto idx = source.index_of(Splitting{s.first, s.second.sum(w)});
        defined = defined && idx.has_value();
        psi[i] = idx.value_or(0);
    }
    report.maps_well_defined = defined;
    if (!defined)
        return report;
    bool inverse_ok = true;
    for (std::size_t i = 0; i < source.size(); ++i)
        inverse_ok = inverse_ok && psi[phi[i]] == i;
    for (std::size_t i = 0; i < target.size(); ++i)
        inverse_ok = inverse_ok && phi[psi[i]] == i;
    report.mutually_inverse = inverse_ok;
    bool order_ok = true;
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = 0; b < source.size(); ++b)
            order_ok = order_ok && source.less(a, b) == target.less(phi[a], phi[b]);
    report.order_preserving = order_ok;
    return report;
}

} // namespace framelab
