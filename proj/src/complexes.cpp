#include "framelab/complexes.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace framelab {

const char *tag_name(TagKind kind) {
    switch (kind) {
    case TagKind::Frame:
        return "frame";
    case TagKind::Internal:
        return "internal";
    case TagKind::External:
        return "external";
    }
    return "?";
}

namespace {

std::map<VertexLabel, std::size_t> make_label_index(const std::vector<VertexLabel> &labels) {
    std::map<VertexLabel, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (std::holds_alternative<std::monostate>(labels[i]))
            continue;
        if (!index.emplace(labels[i], i).second)
            throw Error("duplicate vertex label at index " + std::to_string(i));
    }
    return index;
}

const std::vector<Simplex> kNoSimplices;

} // namespace

SimplicialComplex SimplicialComplex::from_simplices(std::vector<VertexLabel> vertices,
                                                    const std::vector<Simplex> &simplices,
                                                    ComplexInfo info) {
    SimplicialComplex k;
    k.vertices_ = std::move(vertices);
    k.label_index_ = make_label_index(k.vertices_);
    k.info_ = std::move(info);
    std::vector<std::set<Simplex>> by_dim;
    for (const Simplex &s : simplices) {
        if (s.empty())
            continue;
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i] >= k.vertices_.size())
                throw Error("simplex refers to a missing vertex");
            if (i > 0 && s[i - 1] >= s[i])
                throw Error("simplex vertices must be strictly increasing");
        }
        if (by_dim.size() < s.size())
            by_dim.resize(s.size());
        by_dim[s.size() - 1].insert(s);
    }
    for (std::size_t d = 1; d < by_dim.size(); ++d)
        for (const Simplex &s : by_dim[d])
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                if (!by_dim[d - 1].count(face))
                    throw Error("simplex set is not closed under faces");
            }
    for (auto &level : by_dim) {
        k.simplices_.emplace_back(level.begin(), level.end());
        std::map<Simplex, std::size_t> idx;
        for (std::size_t i = 0; i < k.simplices_.back().size(); ++i)
            idx.emplace(k.simplices_.back()[i], i);
        k.index_.push_back(std::move(idx));
    }
    return k;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<VertexLabel> vertices,
                                                 const std::vector<Simplex> &facets, ComplexInfo info) {
    std::set<Simplex> all;
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        const std::size_t n = f.size();
        if (n > 20)
            throw SizeGuardError("facet too large to close under faces", n);
        for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1UL << i))
                    face.push_back(f[i]);
            all.insert(std::move(face));
        }
    }
    return from_simplices(std::move(vertices), std::vector<Simplex>(all.begin(), all.end()), std::move(info));
}

std::optional<std::size_t> SimplicialComplex::vertex_index(const VertexLabel &label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<Simplex> &SimplicialComplex::simplices(int d) const {
    if (d < 0 || d > dimension())
        return kNoSimplices;
    return simplices_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::total_count() const {
    std::size_t total = 0;
    for (const auto &level : simplices_)
        total += level.size();
    return total;
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex &s) const {
    if (s.empty() || s.size() > simplices_.size())
        return std::nullopt;
    const auto &idx = index_[s.size() - 1];
    auto it = idx.find(s);
    if (it == idx.end())
        return std::nullopt;
    return it->second;
}

TagKind SimplicialComplex::tag_of(const Simplex &s) const {
    auto it = tags_.find(s);
    return it == tags_.end() ? TagKind::Frame : it->second.kind;
}

SimplicialComplex SimplicialComplex::frame_subcomplex() const {
    std::vector<Simplex> keep;
    for (const auto &level : simplices_)
        for (const Simplex &s : level)
            if (tag_of(s) == TagKind::Frame)
                keep.push_back(s);
    ComplexInfo info = info_;
    info.kind = info.kind + "/frames";
    return from_simplices(vertices_, keep, info);
}

namespace {

struct FrameSetup {
    RingId ring;
    std::size_t total_rank;
    std::vector<Vector> fixed;    // e_1..e_m
    std::vector<Line> vertices;   // lines v with {e_1..e_m, v} a partial frame
};

FrameSetup frame_setup(RingId ring, std::size_t n, std::size_t m, const std::optional<NormBound> &bound) {
    if (n < 1)
        throw DomainError("complexes of partial frames need n >= 1");
    FrameSetup s{ring, n + m, {}, {}};
    for (std::size_t i = 0; i < m; ++i)
        s.fixed.push_back(Line::standard(ring, n + m, i).rep());
    for (Line &l : enumerate_lines(ring, n + m, bound)) {
        auto rows = s.fixed;
        rows.push_back(l.rep());
        if (is_partial_frame(rows))
            s.vertices.push_back(std::move(l));
    }
    return s;
}

ComplexInfo frame_info(const char *kind, RingId ring, std::size_t n, std::size_t m,
                       const std::optional<NormBound> &bound) {
    ComplexInfo info;
    info.kind = kind;
    info.ring = ring;
    info.n = n;
    info.m = m;
    if (!ring.is_field()) {
        info.bound = bound->value;
        info.truncated = true;
    }
    return info;
}

// Enumerates all vertex sets accepted by `is_simplex`, which must be closed
// under subsets; candidates are restricted to common neighbours.
std::vector<Simplex> enumerate_cliques(std::size_t nv, const std::function<bool(const Simplex &)> &is_simplex) {
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < nv; ++i) {
        if (!is_simplex({i}))
            throw Error("vertex is not a simplex");
        out.push_back({i});
        for (std::size_t j = i + 1; j < nv; ++j)
            adj[i][j] = adj[j][i] = is_simplex({i, j});
    }
    std::function<void(Simplex &, const std::vector<std::size_t> &)> grow =
        [&](Simplex &cur, const std::vector<std::size_t> &cands) {
            for (std::size_t c = 0; c < cands.size(); ++c) {
                std::size_t v = cands[c];
                cur.push_back(v);
                if (cur.size() == 2 || is_simplex(cur)) {
                    out.push_back(cur);
                    std::vector<std::size_t> next;
                    for (std::size_t d = c + 1; d < cands.size(); ++d)
                        if (adj[v][cands[d]])
                            next.push_back(cands[d]);
                    grow(cur, next);
                }
                cur.pop_back();
            }
        };
    for (std::size_t i = 0; i < nv; ++i) {
        Simplex cur{i};
        std::vector<std::size_t> cands;
        for (std::size_t j = i + 1; j < nv; ++j)
            if (adj[i][j])
                cands.push_back(j);
        grow(cur, cands);
    }
    return out;
}

std::vector<Vector> rows_for(const FrameSetup &s, const Simplex &simplex) {
    std::vector<Vector> rows = s.fixed;
    for (std::size_t v : simplex)
        rows.push_back(s.vertices[v].rep());
    return rows;
}

bool equals_combination(const Vector &target, const RingElem &u1, const Vector &x, const RingElem &u2,
                        const Vector &y) {
    for (std::size_t c = 0; c < target.size(); ++c)
        if (!(target[c] == u1 * x[c] + u2 * y[c]))
            return false;
    return true;
}

// All additive relations on fixed + simplex, one witness per dependent triple.
std::vector<AdditiveWitness> additive_witnesses(const FrameSetup &s, const Simplex &simplex) {
    struct Member {
        bool fixed;
        std::size_t index; // basis index for fixed members, vertex index otherwise
        const Vector *rep;
    };
    std::vector<Member> members;
    for (std::size_t i = 0; i < s.fixed.size(); ++i)
        members.push_back({true, i, &s.fixed[i]});
    for (std::size_t v : simplex)
        members.push_back({false, v, &s.vertices[v].rep()});
    const std::size_t t = members.size();
    if (t < 3)
        return {};
    const std::vector<RingElem> us = units(s.ring);
    std::vector<AdditiveWitness> out;
    std::set<std::set<std::size_t>> seen;
    for (std::size_t x0 = 0; x0 < t; ++x0) {
        std::vector<Vector> rest;
        for (std::size_t k = 0; k < t; ++k)
            if (k != x0)
                rest.push_back(*members[k].rep);
        if (!is_partial_frame(rest))
            continue;
        for (std::size_t x1 = 0; x1 < t; ++x1)
            for (std::size_t x2 = x1 + 1; x2 < t; ++x2) {
                if (x1 == x0 || x2 == x0)
                    continue;
                for (const RingElem &u1 : us)
                    for (const RingElem &u2 : us) {
                        if (!equals_combination(*members[x0].rep, u1, *members[x1].rep, u2, *members[x2].rep))
                            continue;
                        if (!seen.insert({x0, x1, x2}).second)
                            continue;
                        const Member &a = members[x0], &b = members[x1], &c = members[x2];
                        int fixed_count = int(a.fixed) + int(b.fixed) + int(c.fixed);
                        if (fixed_count >= 2)
                            throw Error("additive relation forces a vertex into R^m");
                        AdditiveWitness w;
                        if (fixed_count == 0) {
                            w = {TagKind::Internal, a.index, b.index, c.index, u1, u2};
                        } else if (b.fixed) {
                            w = {TagKind::External, a.index, c.index, b.index, u1, u2};
                        } else if (c.fixed) {
                            w = {TagKind::External, a.index, b.index, c.index, u2, u1};
                        } else {
                            // e_k = u1 b + u2 c  =>  b = u1^{-1} e_k - u1^{-1} u2 c
                            RingElem inv = unit_inverse(u1);
                            w = {TagKind::External, b.index, c.index, a.index, inv, -(inv * u2)};
                        }
                        out.push_back(std::move(w));
                    }
            }
    }
    return out;
}

} // namespace

SimplicialComplex build_B(RingId ring, std::size_t n, std::size_t m, const std::optional<NormBound> &bound) {
    if (!ring.is_field() && !bound)
        throw DomainError("build_B over " + ring.name() + " requires a norm bound");
    FrameSetup s = frame_setup(ring, n, m, bound);
    auto simplices = enumerate_cliques(s.vertices.size(), [&](const Simplex &sx) {
        return is_partial_frame(rows_for(s, sx));
    });
    std::vector<VertexLabel> labels(s.vertices.begin(), s.vertices.end());
    return SimplicialComplex::from_simplices(std::move(labels), simplices, frame_info("B", ring, n, m, bound));
}

SimplicialComplex build_BA(RingId ring, std::size_t n, std::size_t m, const std::optional<NormBound> &bound) {
    if (!ring.is_field() && !bound)
        throw DomainError("build_BA over " + ring.name() + " requires a norm bound");
    FrameSetup s = frame_setup(ring, n, m, bound);
    std::map<Simplex, AdditiveTag> tags;
    auto simplices = enumerate_cliques(s.vertices.size(), [&](const Simplex &sx) {
        bool frame = is_partial_frame(rows_for(s, sx));
        auto witnesses = additive_witnesses(s, sx);
        if (frame && !witnesses.empty())
            throw Error("simplex is both a partial frame and augmented");
        if (!frame && witnesses.empty())
            return false;
        AdditiveTag tag;
        if (!frame) {
            bool internal = std::any_of(witnesses.begin(), witnesses.end(),
                                        [](const AdditiveWitness &w) { return w.kind == TagKind::Internal; });
            tag.kind = internal ? TagKind::Internal : TagKind::External;
            tag.witnesses = std::move(witnesses);
        }
        tags[sx] = std::move(tag);
        return true;
    });
    std::vector<VertexLabel> labels(s.vertices.begin(), s.vertices.end());
    auto k = SimplicialComplex::from_simplices(std::move(labels), simplices, frame_info("BA", ring, n, m, bound));
    for (auto &[sx, tag] : tags)
        if (k.contains(sx))
            k.set_tag(sx, std::move(tag));
    return k;
}

SimplicialComplex link(const SimplicialComplex &k, const Simplex &sigma) {
    if (!sigma.empty() && !k.contains(sigma))
        throw DomainError("link: simplex is not in the complex");
    std::vector<std::size_t> old_to_new(k.vertex_count(), SIZE_MAX);
    std::vector<VertexLabel> labels;
    std::vector<Simplex> raw;
    for (int d = static_cast<int>(sigma.size()); d <= k.dimension(); ++d)
        for (const Simplex &s : k.simplices(d)) {
            if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end()))
                continue;
            Simplex rest;
            std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(rest));
            if (!rest.empty())
                raw.push_back(std::move(rest));
        }
    for (const Simplex &s : raw)
        if (s.size() == 1 && old_to_new[s[0]] == SIZE_MAX) {
            old_to_new[s[0]] = SIZE_MAX - 1; // mark
        }
    for (std::size_t v = 0; v < k.vertex_count(); ++v)
        if (old_to_new[v] == SIZE_MAX - 1) {
            old_to_new[v] = labels.size();
            labels.push_back(k.vertex(v));
        }
    std::vector<Simplex> rebased;
    for (const Simplex &s : raw) {
        Simplex t;
        for (std::size_t v : s)
            t.push_back(old_to_new[v]);
        rebased.push_back(std::move(t));
    }
    ComplexInfo info = k.info();
    info.kind = "link(" + info.kind + ")";
    return SimplicialComplex::from_simplices(std::move(labels), rebased, info);
}

Poset::Poset(std::vector<VertexLabel> elements, std::vector<std::vector<bool>> less)
    : elements_(std::move(elements)), less_(std::move(less)) {
    const std::size_t n = elements_.size();
    if (less_.size() != n)
        throw Error("order relation has the wrong size");
    for (const auto &row : less_)
        if (row.size() != n)
            throw Error("order relation has the wrong size");
    for (std::size_t i = 0; i < n; ++i) {
        if (less_[i][i])
            throw Error("order relation is not irreflexive");
        for (std::size_t j = 0; j < n; ++j) {
            if (!less_[i][j])
                continue;
            for (std::size_t k = 0; k < n; ++k)
                if (less_[j][k] && !less_[i][k])
                    throw Error("order relation is not transitive");
        }
    }
    label_index_ = make_label_index(elements_);
}

std::optional<std::size_t> Poset::index_of(const VertexLabel &label) const {
    auto it = label_index_.find(label);
    if (it == label_index_.end())
        return std::nullopt;
    return it->second;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            if (less_[i][j])
                out.emplace_back(i, j);
    return out;
}

std::vector<std::pair<std::size_t, std::size_t>> Poset::covering_relations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (auto [i, j] : relations()) {
        bool covered = true;
        for (std::size_t k = 0; k < size() && covered; ++k)
            if (less_[i][k] && less_[k][j])
                covered = false;
        if (covered)
            out.emplace_back(i, j);
    }
    return out;
}

int Poset::dimension() const {
    const std::size_t n = size();
    if (n == 0)
        return -1;
    // longest[i]: number of elements in the longest chain ending at i.
    std::vector<int> longest(n, 0);
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::vector<std::size_t> below_count(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (less_[j][i])
                ++below_count[i];
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return below_count[a] < below_count[b]; });
    int best = 0;
    for (std::size_t i : order) {
        int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            if (less_[j][i])
                l = std::max(l, longest[j] + 1);
        longest[i] = l;
        best = std::max(best, l);
    }
    return best - 1;
}

Poset Poset::opposite() const {
    std::vector<std::vector<bool>> rev(size(), std::vector<bool>(size(), false));
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < size(); ++j)
            rev[i][j] = less_[j][i];
    return Poset(elements_, std::move(rev));
}

Poset Poset::induced(const std::vector<std::size_t> &subset) const {
    std::vector<VertexLabel> elems;
    std::vector<std::vector<bool>> rel(subset.size(), std::vector<bool>(subset.size(), false));
    for (std::size_t a = 0; a < subset.size(); ++a) {
        elems.push_back(elements_.at(subset[a]));
        for (std::size_t b = 0; b < subset.size(); ++b)
            rel[a][b] = less_[subset[a]][subset[b]];
    }
    return Poset(std::move(elems), std::move(rel));
}

namespace {

Poset inclusion_poset(std::vector<Subspace> elems) {
    std::vector<std::vector<bool>> rel(elems.size(), std::vector<bool>(elems.size(), false));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            rel[i][j] = i != j && elems[i].rank() < elems[j].rank() && elems[j].contains(elems[i]);
    std::vector<VertexLabel> labels(elems.begin(), elems.end());
    return Poset(std::move(labels), std::move(rel));
}

void check_ambient(const std::optional<Subspace> &s, int p, std::size_t n) {
    if (s && (s->p() != p || s->ambient_rank() != n))
        throw DomainError("constraint is not a subspace of the ambient space");
}

} // namespace

Poset build_tits(RingId field, std::size_t n) {
    if (!field.is_field())
        throw DomainError("Tits buildings are built over prime fields");
    std::vector<Subspace> elems;
    for (std::size_t r = 1; r < n; ++r)
        for (Subspace &s : enumerate_subspaces(field, n, r))
            elems.push_back(std::move(s));
    return inclusion_poset(std::move(elems));
}

Poset build_relative_tits(RingId field, std::size_t n, std::size_t w) {
    if (!field.is_field())
        throw DomainError("Tits buildings are built over prime fields");
    if (w < 1 || w > n)
        throw DomainError("relative Tits building needs 1 <= w <= n");
    Subspace fixed = Subspace::standard(field.p, n, w);
    std::vector<Subspace> elems;
    for (std::size_t r = 1; r < n; ++r)
        for (Subspace &s : enumerate_subspaces(field, n, r))
            if (s.intersect(fixed).rank() == 0)
                elems.push_back(std::move(s));
    return inclusion_poset(std::move(elems));
}

Poset splitting_poset_of(const Subspace &ambient, const SplittingConstraints &constraints) {
    check_ambient(constraints.first_within, ambient.p(), ambient.ambient_rank());
    check_ambient(constraints.second_contains, ambient.p(), ambient.ambient_rank());
    std::vector<Splitting> elems;
    for (Splitting &s : enumerate_splittings_of(ambient)) {
        if (constraints.first_within && !constraints.first_within->contains(s.first))
            continue;
        if (constraints.second_contains && !s.second.contains(*constraints.second_contains))
            continue;
        elems.push_back(std::move(s));
    }
    std::vector<std::vector<bool>> rel(elems.size(), std::vector<bool>(elems.size(), false));
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (std::size_t j = 0; j < elems.size(); ++j)
            rel[i][j] = i != j && elems[j].first.contains(elems[i].first) &&
                        elems[i].second.contains(elems[j].second);
    std::vector<VertexLabel> labels(elems.begin(), elems.end());
    return Poset(std::move(labels), std::move(rel));
}

Poset build_splitting_poset(RingId field, std::size_t n, const SplittingConstraints &constraints) {
    if (!field.is_field())
        throw DomainError("splitting posets are built over prime fields");
    return splitting_poset_of(Subspace::whole(field.p, n), constraints);
}

SimplicialComplex order_complex(const Poset &p) {
    std::vector<Simplex> chains;
    std::function<void(Simplex &)> extend = [&](Simplex &chain) {
        Simplex sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        chains.push_back(std::move(sorted));
        for (std::size_t next = 0; next < p.size(); ++next)
            if (p.less(chain.back(), next)) {
                chain.push_back(next);
                extend(chain);
                chain.pop_back();
            }
    };
    for (std::size_t i = 0; i < p.size(); ++i) {
        Simplex chain{i};
        extend(chain);
    }
    ComplexInfo info;
    info.kind = "order_complex";
    return SimplicialComplex::from_simplices(p.elements(), chains, info);
}

Poset simplex_poset(const SimplicialComplex &k) {
    std::vector<Simplex> all;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex &s : k.simplices(d))
            all.push_back(s);
    std::vector<std::vector<bool>> rel(all.size(), std::vector<bool>(all.size(), false));
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j)
            rel[i][j] = all[i].size() < all[j].size() &&
                        std::includes(all[j].begin(), all[j].end(), all[i].begin(), all[i].end());
    return Poset(std::vector<VertexLabel>(all.size()), std::move(rel));
}

void check_monotone(const Poset &x, const Poset &y, const std::vector<std::size_t> &f) {
    if (f.size() != x.size())
        throw DomainError("map size does not match the source poset");
    for (std::size_t v : f)
        if (v >= y.size())
            throw DomainError("map lands outside the target poset");
    for (auto [a, b] : x.relations())
        if (!y.less_equal(f[a], f[b]))
            throw NonMonotoneError(a, b);
}

Poset poset_above(const Poset &p, std::size_t y) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.less(y, i))
            keep.push_back(i);
    return p.induced(keep);
}

Poset poset_below(const Poset &p, std::size_t y) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p.less(i, y))
            keep.push_back(i);
    return p.induced(keep);
}

Poset poset_fiber_le(const Poset &x, const Poset &y, const std::vector<std::size_t> &f, std::size_t target) {
    check_monotone(x, y, f);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (y.less_equal(f[i], target))
            keep.push_back(i);
    return x.induced(keep);
}

} // namespace framelab
