#include "framelab/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include "framelab/actions.hpp"
#include "framelab/identities.hpp"
#include "framelab/oracles.hpp"

namespace framelab {

namespace {

/// Collects named checks; a criterion passes when all of them do.
class Checks {
  public:
    void expect(bool ok, const std::string &what) {
        if (!ok) {
            all_ = false;
            notes_.push_back("failed: " + what);
        }
    }
    void note(const std::string &s) { notes_.push_back(s); }
    bool ok() const { return all_; }
    std::vector<std::string> take_notes() { return std::move(notes_); }

  private:
    bool all_ = true;
    std::vector<std::string> notes_;
};

std::string str(const Integer &x) { return x.get_str(); }

bool free_of_rank(const HomologyResult &h, int d, std::size_t rank) {
    const DegreeHomology &dh = h.at(d);
    return dh.betti == rank && dh.torsion.empty();
}

RingId fq(int q) { return RingId::prime_field(q); }

// 1 ------------------------------------------------------------------------

void complex_sanity(Checks &c) {
    for (int q : {2, 3}) {
        SimplicialComplex k = build_B(fq(q), 2, 0);
        c.expect(k.count(0) == oracle::line_count(q, 2), "B_2(F" + std::to_string(q) + ") vertex count");
        c.expect(k.count(1) == oracle::frame_count(q, 2), "B_2(F" + std::to_string(q) + ") edge count");
        const long chi = reduced_euler_characteristic(k);
        HomologyResult h = reduced_homology(k);
        c.expect(h.at(0).vanishes(), "B_2(F" + std::to_string(q) + ") connected");
        // connected graph: H~_1 is free of rank -chi
        c.expect(free_of_rank(h, 1, static_cast<std::size_t>(-chi)), "B_2 H~_1 matches Euler characteristic");
        c.expect(free_of_rank(h, 1, q == 2 ? 1 : 3), "B_2(F" + std::to_string(q) + ") H~_1 rank");
    }
    SimplicialComplex b3 = build_B(fq(2), 3, 0);
    c.expect(b3.count(0) == oracle::line_count(2, 3), "B_3(F2) vertex count");
    c.expect(b3.count(2) == oracle::frame_count(2, 3), "B_3(F2) top simplex count");
    c.expect(b3.dimension() == 2, "B_3(F2) dimension 2");
    c.expect(is_cohen_macaulay(b3, 2), "B_3(F2) Cohen-Macaulay");
    c.note("B_3(F2): H~_2 rank " + std::to_string(reduced_homology(b3).betti(2)));
}

// 2 ------------------------------------------------------------------------

void buildings(Checks &c) {
    for (int q : {2, 3})
        for (std::size_t n : {2u, 3u}) {
            SimplicialComplex k = order_complex(build_tits(fq(q), n));
            const std::string name = "T(F" + std::to_string(q) + "^" + std::to_string(n) + ")";
            HomologyResult h = reduced_homology(k);
            c.expect(is_spherical(k, static_cast<int>(n) - 2), name + " (n-2)-spherical");
            const auto expected = oracle::steinberg_rank(q, static_cast<long>(n)).get_ui();
            c.expect(free_of_rank(h, static_cast<int>(n) - 2, expected), name + " top rank " + std::to_string(expected));
        }
}

// 3 ------------------------------------------------------------------------

void splitting_posets(Checks &c) {
    SimplicialComplex s2 = order_complex(build_splitting_poset(fq(2), 2));
    c.expect(is_spherical(s2, 0), "S(F2^2) 0-spherical");
    c.expect(free_of_rank(reduced_homology(s2), 0, 5), "S(F2^2) H~_0 rank 5");
    SimplicialComplex s3 = order_complex(build_splitting_poset(fq(2), 3));
    c.expect(is_spherical(s3, 1), "S(F2^3) 1-spherical");
    c.note("S(F2^3): H~_1 rank " + std::to_string(reduced_homology(s3).betti(1)));
}

// 4 ------------------------------------------------------------------------

std::string factors(const CoinvariantsReport &r) {
    std::string s = "[";
    for (std::size_t i = 0; i < r.invariant_factors.size(); ++i)
        s += (i ? "," : "") + str(r.invariant_factors[i]);
    return s + "]";
}

void coinvariant_vanishing(Checks &c) {
    {
        SimplicialComplex s2 = order_complex(build_splitting_poset(fq(2), 2));
        CoinvariantsReport r = coinvariants(s2, gl_fix_generators(fq(2), 0, 2));
        c.expect(r.invariant_factors == std::vector<Integer>{2}, "S(F2^2) coinvariants " + factors(r) + " = [2]");
        c.expect(r.vanishes_over_zhalf, "S(F2^2) coinvariants vanish over Z[1/2]");
    }
    for (int q : {2, 3}) {
        SimplicialComplex t = order_complex(build_tits(fq(q), 3));
        CoinvariantsReport r = coinvariants(t, gl_fix_generators(fq(q), 0, 3));
        c.expect(r.invariant_factors.empty(), "St(F" + std::to_string(q) + "^3) coinvariants " + factors(r) + " = 0");
    }
    const std::size_t cases[][3] = {{2, 0, 2}, {2, 0, 3}, {1, 1, 2}, {1, 1, 3}, {2, 1, 2}};
    for (const auto &nmq : cases) {
        const auto [n, m, q] = std::tuple(nmq[0], nmq[1], static_cast<int>(nmq[2]));
        SimplicialComplex k = build_B(fq(q), n, m);
        CoinvariantsReport r = coinvariants(k, gl_fix_generators(fq(q), m, n));
        const std::string name = "B_" + std::to_string(n) + "^" + std::to_string(m) + "(F" + std::to_string(q) + ")";
        c.expect(r.vanishes_over_zhalf, name + " coinvariants " + factors(r) + " vanish over Z[1/2]");
        c.note(name + ": " + factors(r));
    }
}

// 5 ------------------------------------------------------------------------

void generating_theorem(Checks &c) {
    const std::size_t cases[][3] = {{1, 1, 2}, {2, 0, 2}, {2, 0, 3}, {2, 1, 2}, {3, 0, 2}};
    for (const auto &nmq : cases) {
        const auto [n, m, q] = std::tuple(nmq[0], nmq[1], static_cast<int>(nmq[2]));
        SimplicialComplex k = build_B(fq(q), n, m);
        const std::string name = "B_" + std::to_string(n) + "^" + std::to_string(m) + "(F" + std::to_string(q) + ")";
        std::vector<CycleChain> gens;
        for (const SphereClassSpec &s : generating_family(k))
            gens.push_back(sphere_class(s, k));
        bool cycles = std::all_of(gens.begin(), gens.end(), [&](const CycleChain &g) { return is_cycle(k, g); });
        c.expect(cycles, name + " family consists of cycles");
        SpanTester span(k, static_cast<int>(n) - 1, gens);
        std::vector<CycleChain> basis = top_cycle_basis(k);
        std::size_t hit = 0;
        for (const CycleChain &b : basis)
            hit += span.contains(b);
        c.expect(hit == basis.size(), name + " family spans (" + std::to_string(hit) + "/" +
                                          std::to_string(basis.size()) + ")");
        c.note(name + ": " + std::to_string(gens.size()) + " classes, rank " + std::to_string(basis.size()));
    }
}

// 6 ------------------------------------------------------------------------

void sign_witnesses(Checks &c) {
    std::size_t bpid = 0;
    for (const auto &[which, params] : standard_witnesses(RingId::integers())) {
        SignWitnessResult r = sign_witness(which, params);
        std::string name = sign_case_name(which);
        if (which == SignCase::Bpid) {
            name += " r=" + std::to_string(params.r);
            ++bpid;
        }
        c.expect(r.holds && r.gc == r.c.negated(), name + " g.c = -c");
    }
    c.expect(bpid == 4, "four rank-two witnesses");
}

// 7 ------------------------------------------------------------------------

void cutting_down(Checks &c) {
    const std::pair<Subspace, Subspace> cases[] = {
        {Subspace::span(2, 3, {{1, 0, 0}}), Subspace::span(2, 3, {{0, 1, 0}})},
        {Subspace::span(2, 3, {{1, 0, 1}}), Subspace::span(2, 3, {{0, 1, 1}})},
        {Subspace::span(3, 3, {{1, 1, 0}}), Subspace::span(3, 3, {{0, 1, 2}})},
        {Subspace::span(3, 3, {{1, 0, 0}}), Subspace::span(3, 3, {{0, 0, 1}})},
    };
    for (std::size_t i = 0; i < std::size(cases); ++i) {
        CuttingDownReport r = cutting_down_iso(cases[i].first, cases[i].second);
        c.expect(r.holds() && r.source_size == r.target_size && r.source_size > 0,
                 "instance " + std::to_string(i + 1) + " (" + std::to_string(r.source_size) + " elements)");
    }
}

// 8 ------------------------------------------------------------------------

/// Simplex poset of B_n^m mapped to the relative building by taking spans.
NerveReport relative_span_map(std::size_t n, std::size_t m, int q) {
    SimplicialComplex k = build_B(fq(q), n, m);
    Poset x = simplex_poset(k);
    Poset y = build_relative_tits(fq(q), n + m, m);
    std::vector<Simplex> all;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex &s : k.simplices(d))
            all.push_back(s);
    std::vector<std::size_t> f;
    for (const Simplex &s : all) {
        Subspace span = Subspace::zero(q, n + m);
        for (std::size_t v : s)
            span = span.sum(subspace_of(std::get<Line>(k.vertex(v))));
        auto idx = y.index_of(span);
        if (!idx)
            throw Error("span of a simplex is not in the relative building");
        f.push_back(*idx);
    }
    std::vector<int> t;
    for (const VertexLabel &e : y.elements())
        t.push_back(static_cast<int>(n) - static_cast<int>(std::get<Subspace>(e).rank()));
    return nerve_rank_identity(x, y, f, t, static_cast<int>(n) - 1);
}

/// Splittings of F_2^2 mapped to lines of the opposite building by (A, B) -> B.
NerveReport splitting_to_building() {
    Poset x = build_splitting_poset(fq(2), 2);
    Poset y = build_tits(fq(2), 2).opposite();
    std::vector<std::size_t> f;
    for (const VertexLabel &e : x.elements())
        f.push_back(*y.index_of(std::get<Splitting>(e).second));
    std::vector<int> t;
    for (const VertexLabel &e : y.elements())
        t.push_back(static_cast<int>(std::get<Subspace>(e).rank()) - 1);
    return nerve_rank_identity(x, y, f, t, 0);
}

void nerve_identity(Checks &c) {
    auto record = [&](const std::string &name, const NerveReport &r) {
        for (const std::string &h : r.failed_hypotheses)
            c.note(name + ": " + h);
        c.expect(r.hypotheses_hold, name + " hypotheses");
        c.expect(r.identity_holds(), name + " rank " + std::to_string(r.x_rank) + " = " +
                                         std::to_string(r.predicted()));
        c.note(name + ": " + std::to_string(r.x_rank) + " = " + std::to_string(r.y_rank) + " + " +
               std::to_string(r.predicted() - r.y_rank));
    };
    record("B_1^1(F2) -> T(F2^2 rel F2)", relative_span_map(1, 1, 2));
    record("B_2^1(F2) -> T(F2^3 rel F2)", relative_span_map(2, 1, 2));
    record("S(F2^2) -> T(F2^2)^op", splitting_to_building());
}

// 9 ------------------------------------------------------------------------

void identity_suite(Checks &c, std::uint64_t seed) {
    DetIdentityReport det = verify_det_identity();
    const RingElem minus_one = RingElem::from_int(RingId::integers(), -1);
    c.expect(det.holds && det.swap_det == minus_one && det.sign_det == minus_one, "det identity (both -1)");
    for (RingId ring : {RingId::integers(), RingId::gaussian(), RingId::eisenstein()}) {
        ElementaryReport r = verify_elementary_relations(ring, 50, seed);
        c.expect(r.samples >= 50 && r.holds(), "elementary relations over " + ring.name());
    }
    S3Report s3 = verify_s3_embedding(RingId::integers());
    c.expect(s3.swap_matches && s3.reflection_matches, "S3 images match the displayed matrices");
    c.expect(s3.holds(), "S3 embedding");
    for (int q : {2, 3, 4}) {
        AbelianizationReport a = abelianization_image_test(q);
        c.expect(a.surjective(), "GL_2(F" + std::to_string(q) + ") abelianization image surjective");
    }
    AbelianizationReport a2 = abelianization_image_test(2);
    oracle::BruteAbelianization brute = oracle::brute_abelianization_gl2(2);
    c.expect(a2.group_order == brute.group_order && a2.commutator_order == brute.commutator_order,
             "q=2 abelianization agrees with brute force");
}

// 10 -----------------------------------------------------------------------

bool snf_contract(const ExactMatrix &a) {
    SmithForm s = smith_normal_form(a);
    if (!(s.U * a * s.V == s.D))
        return false;
    if (!determinant(s.U).is_unit() || !determinant(s.V).is_unit())
        return false;
    for (std::size_t i = 0; i < s.D.rows(); ++i)
        for (std::size_t j = 0; j < s.D.cols(); ++j)
            if (i != j && !s.D(i, j).is_zero())
                return false;
    const auto &d = s.invariant_factors;
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (!(d[i] == s.D(i, i)))
            return false;
        if (!d[i].is_zero() && !(canonical_unit(d[i]) * d[i] == d[i]))
            return false;
        if (i + 1 < d.size() && !(d[i].is_zero() ? d[i + 1].is_zero() : divides(d[i], d[i + 1])))
            return false;
    }
    return true;
}

bool boundary_squares_to_zero(const SimplicialComplex &k) {
    ChainComplex cc(k);
    for (int d = 1; d <= cc.top(); ++d) {
        const SparseBoundary &hi = cc.boundary(d);
        const SparseBoundary &lo = cc.boundary(d - 1);
        for (const auto &col : hi.columns) {
            std::map<std::size_t, long> acc;
            for (const auto &[mid, a] : col)
                for (const auto &[row, b] : lo.columns[mid])
                    acc[row] += a * b;
            for (const auto &[row, v] : acc)
                if (v != 0)
                    return false;
        }
    }
    return true;
}

void engine_properties(Checks &c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };

    for (RingId ring : {RingId::integers(), RingId::gaussian(), RingId::eisenstein(), RingId::prime_field(5)}) {
        std::size_t good = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            ExactMatrix a(ring, static_cast<std::size_t>(uniform(1, 5)), static_cast<std::size_t>(uniform(1, 5)));
            const long spread = uniform(1, 6);
            for (std::size_t i = 0; i < a.rows(); ++i)
                for (std::size_t j = 0; j < a.cols(); ++j)
                    if (uniform(0, 3))
                        a(i, j) = RingElem::from_int(ring, uniform(-spread, spread),
                                                     ring == RingId::integers() || ring.is_field()
                                                         ? 0
                                                         : uniform(-spread, spread));
            good += snf_contract(a);
        }
        c.expect(good == 1000, "SNF contract over " + ring.name() + " (" + std::to_string(good) + "/1000)");
    }

    std::vector<std::pair<std::string, SimplicialComplex>> built;
    built.emplace_back("B_2(F2)", build_B(fq(2), 2, 0));
    built.emplace_back("B_2(F3)", build_B(fq(3), 2, 0));
    built.emplace_back("B_3(F2)", build_B(fq(2), 3, 0));
    built.emplace_back("B_2^1(F2)", build_B(fq(2), 2, 1));
    built.emplace_back("BA_2(F2)", build_BA(fq(2), 2, 0));
    built.emplace_back("BA_2(F3)", build_BA(fq(3), 2, 0));
    built.emplace_back("BA_2^1(F2)", build_BA(fq(2), 2, 1));
    built.emplace_back("B_2(Z, 2)", build_B(RingId::integers(), 2, 0, NormBound(2)));
    built.emplace_back("BA_2(Z[i], 1)", build_BA(RingId::gaussian(), 2, 0, NormBound(1)));
    built.emplace_back("B_2(Z[w], 1)", build_B(RingId::eisenstein(), 2, 0, NormBound(1)));
    built.emplace_back("T(F2^3)", order_complex(build_tits(fq(2), 3)));
    built.emplace_back("T(F3^3)", order_complex(build_tits(fq(3), 3)));
    built.emplace_back("T(F2^3 rel F2)", order_complex(build_relative_tits(fq(2), 3, 1)));
    built.emplace_back("S(F2^2)", order_complex(build_splitting_poset(fq(2), 2)));
    built.emplace_back("S(F2^3)", order_complex(build_splitting_poset(fq(2), 3)));
    built.emplace_back("S(F3^2)", order_complex(build_splitting_poset(fq(3), 2)));
    for (const auto &[name, k] : built)
        c.expect(boundary_squares_to_zero(k), "d^2 = 0 on " + name);

    std::vector<VertexLabel> six(6);
    SimplicialComplex rp2 = SimplicialComplex::from_facets(
        six, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
    HomologyResult h = reduced_homology(rp2);
    c.expect(h.at(1).betti == 0 && h.at(1).torsion == std::vector<Integer>{2}, "RP^2 H~_1 = Z/2");
    c.expect(h.at(0).vanishes() && h.at(2).vanishes(), "RP^2 H~_0 = H~_2 = 0");

    std::size_t agree = 0, vanishing = 0;
    const RingId zz = RingId::integers();
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(uniform(1, 3));
        const std::size_t cols = static_cast<std::size_t>(uniform(1, 4));
        ExactMatrix a(zz, rows, cols);
        if (trial % 2 == 0) {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j)
                    a(i, j) = RingElem::from_int(zz, uniform(-4, 4));
        } else {
            // scrambled diagonal, mostly 2-power entries
            static const long diag[] = {1, 2, 4, 8, 1, 2, 3, 6, 0};
            for (std::size_t i = 0; i < std::min(rows, cols); ++i)
                a(i, i) = RingElem::from_int(zz, diag[uniform(0, 8)]);
            for (int step = 0; step < 6; ++step) {
                const RingElem k = RingElem::from_int(zz, uniform(-2, 2));
                if (rows > 1)
                    a.add_row_multiple(static_cast<std::size_t>(uniform(0, static_cast<long>(rows) - 1)), 0, k);
                if (cols > 1)
                    a.add_col_multiple(0, static_cast<std::size_t>(uniform(1, static_cast<long>(cols) - 1)), k);
            }
        }
        std::vector<Integer> module;
        std::size_t nonzero = 0;
        for (const RingElem &d : invariant_factors(a)) {
            if (d.is_zero())
                continue;
            ++nonzero;
            if (!d.is_unit())
                module.push_back(d.a());
        }
        for (std::size_t i = nonzero; i < rows; ++i)
            module.push_back(0);
        oracle::IntMatrix plain(rows, std::vector<mpz_class>(cols));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                plain[i][j] = a(i, j).a();
        const bool engine = vanishes_over_zhalf(module);
        agree += engine == oracle::cokernel_vanishes_over_zhalf(plain);
        vanishing += engine;
    }
    c.expect(agree == 100, "Z[1/2] vanishing agrees with the oracle (" + std::to_string(agree) + "/100)");
    c.note(std::to_string(vanishing) + " of 100 random cokernels vanish over Z[1/2]");
}

struct Criterion {
    int id;
    const char *name;
    double budget;
    std::function<void(Checks &, std::uint64_t)> body;
};

const std::vector<Criterion> &criteria() {
    static const std::vector<Criterion> all = {
        {1, "complex sanity", 10, [](Checks &c, std::uint64_t) { complex_sanity(c); }},
        {2, "buildings", 30, [](Checks &c, std::uint64_t) { buildings(c); }},
        {3, "splitting posets", 60, [](Checks &c, std::uint64_t) { splitting_posets(c); }},
        {4, "coinvariant vanishing", 300, [](Checks &c, std::uint64_t) { coinvariant_vanishing(c); }},
        {5, "generating family", 300, [](Checks &c, std::uint64_t) { generating_theorem(c); }},
        {6, "sign witnesses", 5, [](Checks &c, std::uint64_t) { sign_witnesses(c); }},
        {7, "cutting-down isomorphism", 30, [](Checks &c, std::uint64_t) { cutting_down(c); }},
        {8, "nerve rank identity", 120, [](Checks &c, std::uint64_t) { nerve_identity(c); }},
        {9, "identity suite", 60, identity_suite},
        {10, "engine properties", 120, engine_properties},
    };
    return all;
}

CriterionResult evaluate(const Criterion &crit, std::uint64_t seed) {
    CriterionResult r;
    r.id = crit.id;
    r.name = crit.name;
    r.budget_seconds = crit.budget;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    try {
        crit.body(checks, seed);
    } catch (const std::exception &e) {
        checks.expect(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks_passed = checks.ok();
    r.notes = checks.take_notes();
    return r;
}

} // namespace

std::set<int> parse_suite(const std::string &suite) {
    if (suite == "all")
        return {};
    if (suite.empty() || suite.back() == ',')
        throw DomainError("suite must be 'all' or criterion numbers 1..10, got '" + suite + "'");
    std::set<int> ids;
    std::stringstream in(suite);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int id = 0;
        try {
            id = std::stoi(item, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != item.size() || item.empty() || id < 1 || id > 10)
            throw DomainError("suite must be 'all' or criterion numbers 1..10, got '" + suite + "'");
        ids.insert(id);
    }
    if (ids.empty())
        throw DomainError("empty suite");
    return ids;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions &options) {
    std::vector<const Criterion *> selected;
    for (const Criterion &c : criteria())
        if (options.only.empty() || options.only.count(c.id))
            selected.push_back(&c);
    std::vector<CriterionResult> results(selected.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < selected.size(); i = next++)
            results[i] = evaluate(*selected[i], options.seed);
    };
    const std::size_t threads = std::clamp<std::size_t>(options.threads, 1, std::max<std::size_t>(1, selected.size()));
    std::vector<std::thread> pool;
    for (std::size_t i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    for (std::thread &t : pool)
        t.join();
    return results;
}

} // namespace framelab
