#include "framelab/identities.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace framelab {

const std::vector<std::string> &identity_registry() {
    static const std::vector<std::string> names = {
        "det_identity",       "elementary_sum",  "negation_conjugation", "unit_conjugation",
        "e1_factorization",   "s3_embedding",    "abelianization_image",
    };
    return names;
}

ExactMatrix elementary(const RingElem &a) {
    ExactMatrix e = ExactMatrix::identity(a.ring(), 2);
    e(0, 1) = a;
    return e;
}

ExactMatrix diagonal_unit(const RingElem &u) {
    ExactMatrix d = ExactMatrix::identity(u.ring(), 2);
    d(0, 0) = u;
    return d;
}

DetIdentityReport verify_det_identity() {
    const RingId zz = RingId::integers();
    DetIdentityReport r;
    r.swap_det = determinant(ExactMatrix::from_ints(zz, {{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
    r.sign_det = determinant(ExactMatrix::from_ints(zz, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    r.holds = r.swap_det == r.sign_det;
    return r;
}

bool ElementaryReport::holds() const {
    return std::all_of(cases.begin(), cases.end(), [](const IdentityCase &c) { return c.holds; });
}

namespace {

RingElem random_element(RingId ring, std::mt19937_64 &rng) {
    if (ring.is_field()) {
        std::uniform_int_distribution<long> pick(0, ring.p - 1);
        return RingElem::from_int(ring, pick(rng));
    }
    std::uniform_int_distribution<long> coord(-50, 50);
    long a = coord(rng);
    long b = ring.kind == RingKind::Integers ? 0 : coord(rng);
    return RingElem::from_int(ring, a, b);
}

} // namespace

ElementaryReport verify_elementary_relations(RingId ring, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::vector<RingElem> us = units(ring);
    std::uniform_int_distribution<std::size_t> pick_unit(0, us.size() - 1);
    const ExactMatrix flip = diagonal_unit(-RingElem::one(ring));
    const ExactMatrix e1 = elementary(RingElem::one(ring));
    ElementaryReport report;
    report.ring = ring;
    report.samples = samples;
    for (std::size_t s = 0; s < samples; ++s) {
        RingElem a = random_element(ring, rng);
        RingElem b = random_element(ring, rng);
        RingElem u = us[pick_unit(rng)];
        report.cases.push_back({"elementary_sum", ring, {a, b}, elementary(a + b) == elementary(a) * elementary(b)});
        report.cases.push_back(
            {"negation_conjugation", ring, {a}, flip * elementary(a) * inverse(flip) == elementary(-a)});
        report.cases.push_back({"unit_conjugation", ring, {u},
                                elementary(u) == diagonal_unit(u) * e1 * diagonal_unit(unit_inverse(u))});
    }
    return report;
}

namespace {

// Rows are the images of e1 and e2: row1 = x_{perm[0]}, row2 = eps * x_{perm[1]}
// with eps chosen so that row1 + row2 = +-x_{perm[2]}.
ExactMatrix s3_matrix(RingId ring, const Perm3 &perm) {
    const std::array<std::array<long, 2>, 3> x = {{{1, 0}, {0, 1}, {1, 1}}};
    const auto &r1 = x[static_cast<std::size_t>(perm[0])];
    const auto &r2 = x[static_cast<std::size_t>(perm[1])];
    const auto &r3 = x[static_cast<std::size_t>(perm[2])];
    for (long eps : {1L, -1L}) {
        long s0 = r1[0] + eps * r2[0], s1 = r1[1] + eps * r2[1];
        if ((s0 == r3[0] && s1 == r3[1]) || (s0 == -r3[0] && s1 == -r3[1]))
            return ExactMatrix::from_ints(ring, {{r1[0], r1[1]}, {eps * r2[0], eps * r2[1]}});
    }
    throw Error("no sign choice realizes the permutation");
}

Perm3 compose(const Perm3 &outer, const Perm3 &inner) {
    Perm3 out{};
    for (std::size_t i = 0; i < 3; ++i)
        out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

bool equal_up_to_sign(const ExactMatrix &a, const ExactMatrix &b) {
    if (a == b)
        return true;
    ExactMatrix neg = ExactMatrix::identity(a.ring(), a.rows());
    neg.scale_row(0, -RingElem::one(a.ring()));
    neg.scale_row(1, -RingElem::one(a.ring()));
    return neg * a == b;
}

} // namespace

S3Report verify_s3_embedding(RingId ring) {
    S3Report report;
    Perm3 p{0, 1, 2};
    do {
        report.images.emplace_back(p, s3_matrix(ring, p));
    } while (std::next_permutation(p.begin(), p.end()));

    const std::array<Vector, 3> lines = {
        Vector{RingElem::one(ring), RingElem::zero(ring)},
        Vector{RingElem::zero(ring), RingElem::one(ring)},
        Vector{RingElem::one(ring), RingElem::one(ring)},
    };
    auto row_times = [&](const Vector &v, const ExactMatrix &m) { return m.transpose() * v; };
    auto same_line = [&](const Vector &a, const Vector &b) {
        Vector nb = b;
        for (RingElem &x : nb)
            x = -x;
        return a == b || a == nb;
    };
    report.permutes_lines = true;
    for (const auto &[perm, m] : report.images)
        for (std::size_t i = 0; i < 3; ++i)
            report.permutes_lines = report.permutes_lines &&
                                    same_line(row_times(lines[i], m), lines[static_cast<std::size_t>(perm[i])]);

    // Row vectors: x M_s M_t applies s first, then t.
    report.homomorphism_up_to_sign = true;
    for (const auto &[s, ms] : report.images)
        for (const auto &[t, mt] : report.images)
            report.homomorphism_up_to_sign =
                report.homomorphism_up_to_sign && equal_up_to_sign(ms * mt, s3_matrix(ring, compose(t, s)));

    report.swap_matches = s3_matrix(ring, {1, 0, 2}) == ExactMatrix::from_ints(ring, {{0, 1}, {1, 0}});
    report.reflection_matches = s3_matrix(ring, {2, 1, 0}) == ExactMatrix::from_ints(ring, {{1, 1}, {0, -1}});
    ExactMatrix c = s3_matrix(ring, {1, 2, 0});
    report.three_cycle_order_three = !(c == ExactMatrix::identity(ring, 2)) && c * c * c == ExactMatrix::identity(ring, 2);
    return report;
}

int SmallGL2::neg(int x) const {
    for (int y = 0; y < q; ++y)
        if (add(x, y) == 0)
            return y;
    throw Error("no additive inverse");
}

int SmallGL2::inv(int x) const {
    for (int y = 1; y < q; ++y)
        if (mul(x, y) == 1)
            return y;
    throw DomainError("zero has no inverse");
}

std::array<int, 4> SmallGL2::multiply(const std::array<int, 4> &x, const std::array<int, 4> &y) const {
    return {add(mul(x[0], y[0]), mul(x[1], y[2])), add(mul(x[0], y[1]), mul(x[1], y[3])),
            add(mul(x[2], y[0]), mul(x[3], y[2])), add(mul(x[2], y[1]), mul(x[3], y[3]))};
}

std::array<int, 4> SmallGL2::invert(const std::array<int, 4> &x) const {
    int det = add(mul(x[0], x[3]), neg(mul(x[1], x[2])));
    int di = inv(det);
    return {mul(di, x[3]), mul(di, neg(x[1])), mul(di, neg(x[2])), mul(di, x[0])};
}

std::size_t SmallGL2::index_of(const std::array<int, 4> &x) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), x);
    if (it == elements.end() || *it != x)
        throw Error("matrix is not in GL_2");
    return static_cast<std::size_t>(it - elements.begin());
}

std::vector<int> SmallGL2::units() const {
    std::vector<int> out;
    for (int x = 1; x < q; ++x)
        out.push_back(x);
    return out;
}

SmallGL2 make_gl2(int q) {
    SmallGL2 g;
    g.q = q;
    const auto qs = static_cast<std::size_t>(q);
    g.add_table.resize(qs * qs);
    g.mul_table.resize(qs * qs);
    if (q == 4) {
        // Bit 0 is the constant term, bit 1 the coefficient of t; t^2 = t + 1.
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) {
                int prod = 0;
                for (int i = 0; i < 2; ++i)
                    if (y & (1 << i))
                        prod ^= x << i;
                if (prod & 4)
                    prod ^= 0b111;
                g.add_table[static_cast<std::size_t>(x * 4 + y)] = x ^ y;
                g.mul_table[static_cast<std::size_t>(x * 4 + y)] = prod;
            }
    } else if (is_prime(q) && q <= 13) {
        for (int x = 0; x < q; ++x)
            for (int y = 0; y < q; ++y) {
                g.add_table[static_cast<std::size_t>(x * q + y)] = (x + y) % q;
                g.mul_table[static_cast<std::size_t>(x * q + y)] = (x * y) % q;
            }
    } else {
        throw DomainError("GL_2(F_q) is supported for q = 4 and primes q <= 13");
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b)
            for (int c = 0; c < q; ++c)
                for (int d = 0; d < q; ++d)
                    if (g.add(g.mul(a, d), g.neg(g.mul(b, c))) != 0)
                        g.elements.push_back({a, b, c, d});
    std::sort(g.elements.begin(), g.elements.end());
    return g;
}

std::vector<std::size_t> generated_subgroup(const SmallGL2 &g, const std::vector<std::size_t> &gens) {
    std::vector<bool> in(g.elements.size(), false);
    std::deque<std::size_t> queue;
    const std::size_t id = g.index_of({1, 0, 0, 1});
    in[id] = true;
    queue.push_back(id);
    while (!queue.empty()) {
        std::size_t x = queue.front();
        queue.pop_front();
        for (std::size_t s : gens) {
            std::size_t y = g.index_of(g.multiply(g.elements[x], g.elements[s]));
            if (!in[y]) {
                in[y] = true;
                queue.push_back(y);
            }
        }
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < in.size(); ++i)
        if (in[i])
            out.push_back(i);
    return out;
}

AbelianizationReport abelianization_image_test(int q) {
    if (q != 2 && q != 3 && q != 4 && q != 5)
        throw DomainError("abelianization_image_test supports q in {2, 3, 4, 5}");
    SmallGL2 g = make_gl2(q);
    AbelianizationReport report;
    report.q = q;
    report.group_order = g.elements.size();
    std::vector<bool> seen(g.elements.size(), false);
    std::vector<std::size_t> commutators;
    for (const auto &x : g.elements)
        for (const auto &y : g.elements) {
            auto c = g.multiply(g.multiply(x, y), g.multiply(g.invert(x), g.invert(y)));
            std::size_t idx = g.index_of(c);
            if (!seen[idx]) {
                seen[idx] = true;
                commutators.push_back(idx);
            }
        }
    std::vector<std::size_t> derived = generated_subgroup(g, commutators);
    report.commutator_order = derived.size();
    std::vector<std::size_t> gens = derived;
    for (int u : g.units())
        gens.push_back(g.index_of({u, 0, 0, 1}));
    gens.push_back(g.index_of({0, 1, 1, 0}));
    report.image_order = generated_subgroup(g, gens).size();
    return report;
}

std::vector<IdentityCase> run_identity_suite(std::uint64_t seed, std::size_t samples) {
    std::vector<IdentityCase> out;
    const RingId zz = RingId::integers();
    DetIdentityReport det = verify_det_identity();
    out.push_back({"det_identity", zz, {det.swap_det, det.sign_det}, det.holds});
    const RingId rings[] = {RingId::integers(), RingId::gaussian(), RingId::eisenstein()};
    for (std::size_t i = 0; i < 3; ++i) {
        ElementaryReport r = verify_elementary_relations(rings[i], samples, seed + i);
        out.insert(out.end(), r.cases.begin(), r.cases.end());
        ExactMatrix lhs = elementary(RingElem::one(rings[i]));
        ExactMatrix rhs = ExactMatrix::from_ints(rings[i], {{1, 0}, {0, -1}});
        ExactMatrix reflection = ExactMatrix::from_ints(rings[i], {{1, 1}, {0, -1}});
        out.push_back({"e1_factorization", rings[i], {}, lhs == rhs * reflection});
        out.push_back({"s3_embedding", rings[i], {}, verify_s3_embedding(rings[i]).holds()});
    }
    for (int q : {2, 3, 4, 5}) {
        AbelianizationReport r = abelianization_image_test(q);
        out.push_back({"abelianization_image", zz, {RingElem::from_int(zz, q)}, r.surjective()});
    }
    return out;
}

} // namespace framelab
