#include "framelab/report.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "framelab/acceptance.hpp"

namespace framelab {

Json to_json(const RingElem &x) {
    return Json{{"ring", x.ring().name()}, {"a", x.a().get_str()}, {"b", x.b().get_str()}};
}

RingElem ring_elem_from_json(const Json &j) {
    return RingElem(parse_ring(j.at("ring").get<std::string>()), Integer(j.at("a").get<std::string>()),
                    Integer(j.value("b", std::string("0"))));
}

namespace {

Json subspace_json(const Subspace &s) {
    return Json{{"type", "subspace"}, {"p", s.p()}, {"n", s.ambient_rank()}, {"basis", s.basis()}};
}

Subspace subspace_from(const Json &j) {
    return Subspace::span(j.at("p").get<int>(), j.at("n").get<std::size_t>(),
                          j.at("basis").get<std::vector<std::vector<long>>>());
}

Json simplex_json(const Simplex &s) { return Json(s); }

} // namespace

Json to_json(const VertexLabel &label) {
    if (const auto *l = std::get_if<Line>(&label)) {
        Json rep = Json::array();
        for (const RingElem &x : l->rep())
            rep.push_back(to_json(x));
        return Json{{"type", "line"}, {"rep", rep}};
    }
    if (const auto *s = std::get_if<Subspace>(&label))
        return subspace_json(*s);
    if (const auto *sp = std::get_if<Splitting>(&label))
        return Json{{"type", "splitting"}, {"first", subspace_json(sp->first)}, {"second", subspace_json(sp->second)}};
    return nullptr;
}

VertexLabel label_from_json(const Json &j) {
    if (j.is_null())
        return std::monostate{};
    const std::string type = j.at("type").get<std::string>();
    if (type == "line") {
        Vector rep;
        for (const Json &x : j.at("rep"))
            rep.push_back(ring_elem_from_json(x));
        return Line::from_vector(rep);
    }
    if (type == "subspace")
        return subspace_from(j);
    if (type == "splitting")
        return Splitting{subspace_from(j.at("first")), subspace_from(j.at("second"))};
    throw DomainError("unknown vertex label type '" + type + "'");
}

Json complex_to_json(const SimplicialComplex &k) {
    const ComplexInfo &info = k.info();
    Json j;
    j["kind"] = info.kind;
    j["ring"] = info.ring ? Json(info.ring->name()) : Json(nullptr);
    j["n"] = info.n;
    j["m"] = info.m;
    if (info.bound)
        j["bound"] = info.bound->get_str();
    j["truncated"] = info.truncated;
    Json vertices = Json::array();
    for (const VertexLabel &v : k.vertices())
        vertices.push_back(to_json(v));
    j["vertices"] = vertices;
    Json simplices = Json::object();
    for (int d = 0; d <= k.dimension(); ++d) {
        Json level = Json::array();
        for (const Simplex &s : k.simplices(d))
            level.push_back(simplex_json(s));
        simplices[std::to_string(d)] = level;
    }
    j["simplices"] = simplices;
    Json tags = Json::array();
    for (const auto &[s, tag] : k.tags()) {
        if (tag.kind == TagKind::Frame)
            continue;
        Json witnesses = Json::array();
        for (const AdditiveWitness &w : tag.witnesses)
            witnesses.push_back(Json{{"kind", tag_name(w.kind)},
                                     {"i", w.i},
                                     {"j", w.j},
                                     {"k", w.k},
                                     {"u1", to_json(w.u1)},
                                     {"u2", to_json(w.u2)}});
        tags.push_back(Json{{"simplex", simplex_json(s)},
                            {"kind", tag_name(tag.kind)},
                            {"multiple", tag.witnesses.size() > 1},
                            {"witnesses", witnesses}});
    }
    j["tags"] = tags;
    return j;
}

namespace {

TagKind parse_tag(const std::string &s) {
    if (s == "frame")
        return TagKind::Frame;
    if (s == "internal")
        return TagKind::Internal;
    if (s == "external")
        return TagKind::External;
    throw DomainError("unknown tag kind '" + s + "'");
}

} // namespace

SimplicialComplex complex_from_json(const Json &j) {
    ComplexInfo info;
    info.kind = j.value("kind", std::string("complex"));
    if (j.contains("ring") && !j.at("ring").is_null())
        info.ring = parse_ring(j.at("ring").get<std::string>());
    info.n = j.value("n", std::size_t{0});
    info.m = j.value("m", std::size_t{0});
    if (j.contains("bound"))
        info.bound = Integer(j.at("bound").get<std::string>());
    info.truncated = j.value("truncated", false);
    std::vector<VertexLabel> vertices;
    for (const Json &v : j.at("vertices"))
        vertices.push_back(label_from_json(v));
    std::vector<Simplex> simplices;
    for (const Json &level : j.at("simplices"))
        for (const Json &s : level)
            simplices.push_back(s.get<Simplex>());
    SimplicialComplex k = SimplicialComplex::from_simplices(std::move(vertices), simplices, info);
    if (j.contains("tags"))
        for (const Json &t : j.at("tags")) {
            AdditiveTag tag;
            tag.kind = parse_tag(t.at("kind").get<std::string>());
            for (const Json &w : t.at("witnesses"))
                tag.witnesses.push_back(AdditiveWitness{parse_tag(w.at("kind").get<std::string>()),
                                                        w.at("i").get<std::size_t>(), w.at("j").get<std::size_t>(),
                                                        w.at("k").get<std::size_t>(), ring_elem_from_json(w.at("u1")),
                                                        ring_elem_from_json(w.at("u2"))});
            k.set_tag(t.at("simplex").get<Simplex>(), std::move(tag));
        }
    return k;
}

Json poset_to_json(const Poset &p) {
    Json elements = Json::array();
    for (const VertexLabel &e : p.elements())
        elements.push_back(to_json(e));
    Json relations = Json::array();
    for (auto [a, b] : p.relations())
        relations.push_back(Json::array({a, b}));
    return Json{{"elements", elements}, {"relations", relations}};
}

Poset poset_from_json(const Json &j) {
    std::vector<VertexLabel> elements;
    for (const Json &e : j.at("elements"))
        elements.push_back(label_from_json(e));
    std::vector<std::vector<bool>> less(elements.size(), std::vector<bool>(elements.size(), false));
    for (const Json &r : j.at("relations")) {
        auto a = r.at(0).get<std::size_t>(), b = r.at(1).get<std::size_t>();
        if (a >= elements.size() || b >= elements.size())
            throw DomainError("relation refers to a missing element");
        less[a][b] = true;
    }
    return Poset(std::move(elements), std::move(less));
}

Json homology_to_json(const HomologyResult &h) {
    Json degrees = Json::array();
    for (const DegreeHomology &d : h.degrees) {
        Json torsion = Json::array();
        for (const Integer &t : d.torsion)
            torsion.push_back(t.get_str());
        degrees.push_back(Json{{"d", d.degree}, {"betti", d.betti}, {"torsion", torsion}});
    }
    return Json{{"coeff", h.coeff.name()}, {"degrees", degrees}};
}

Json coinvariants_to_json(const CoinvariantsReport &r, const std::string &complex_ref, const std::string &group) {
    Json factors = Json::array();
    for (const Integer &f : r.invariant_factors)
        factors.push_back(f.get_str());
    return Json{{"complex_ref", complex_ref},
                {"group", group},
                {"module_rank", r.module_rank},
                {"relation_matrix", Json::array({r.relation_rows, r.relation_cols})},
                {"invariant_factors", factors},
                {"vanishes_over_ZHalf", r.vanishes_over_zhalf}};
}

Json cycle_to_json(const CycleChain &c) {
    Json coeffs = Json::array();
    for (const auto &[i, x] : c.coefficients)
        coeffs.push_back(Json::array({i, x.get_str()}));
    return Json{{"degree", c.degree}, {"coefficients", coeffs}};
}

Json witness_to_json(SignCase which, const SignWitnessParams &p, const SignWitnessResult &r) {
    auto vectors = [](const std::vector<Vector> &vs) {
        Json out = Json::array();
        for (const Vector &v : vs) {
            Json row = Json::array();
            for (const RingElem &x : v)
                row.push_back(to_json(x));
            out.push_back(row);
        }
        return out;
    };
    Json g = Json::array();
    for (std::size_t i = 0; i < r.g.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < r.g.cols(); ++j)
            row.push_back(r.g(i, j).to_string());
        g.push_back(row);
    }
    Json params{{"ring", p.ring.name()}, {"n", p.n}, {"m", p.m}, {"bound", p.bound.get_str()},
                {"frame", vectors(p.frame)}, {"d", p.d}, {"addends", vectors(p.addends)}};
    if (which == SignCase::Bpid)
        params["r"] = p.r;
    return Json{{"case", sign_case_name(which)}, {"params", params}, {"g", g},     {"c", cycle_to_json(r.c)},
                {"gc", cycle_to_json(r.gc)},      {"holds", r.holds},   {"detail", r.detail}};
}

Json identities_to_json(const std::vector<IdentityCase> &cases) {
    Json out = Json::array();
    for (const IdentityCase &c : cases) {
        Json params = Json::array();
        for (const RingElem &x : c.params)
            params.push_back(to_json(x));
        out.push_back(Json{{"name", c.name}, {"ring", c.ring.name()}, {"params", params}, {"holds", c.holds}});
    }
    return out;
}

CsvRecord CsvRecord::from_homology(std::string record, std::string kind, const HomologyResult &h) {
    CsvRecord r{std::move(record), std::move(kind), h.coeff.name(), {}};
    for (const DegreeHomology &d : h.degrees)
        if (d.degree >= 0)
            r.rows.push_back(d);
    return r;
}

CsvRecord CsvRecord::from_coinvariants(std::string record, int degree, const CoinvariantsReport &rep) {
    DegreeHomology row;
    row.degree = degree;
    for (const Integer &f : rep.invariant_factors) {
        if (f == 0)
            ++row.betti;
        else
            row.torsion.push_back(f);
    }
    return CsvRecord{std::move(record), "coinvariants", "Z", {row}};
}

namespace {

// RFC 4180 quoting, only where needed
std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string q = "\"";
    for (char ch : s)
        q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + '"';
}

} // namespace

std::string emit_csv(const std::vector<CsvRecord> &records) {
    std::ostringstream out;
    out << "record,kind,coeff,degree,betti,torsion\n";
    for (const CsvRecord &r : records)
        for (const DegreeHomology &d : r.rows) {
            out << csv_field(r.record) << ',' << csv_field(r.kind) << ',' << r.coeff << ',' << d.degree << ',' << d.betti << ',';
            for (std::size_t i = 0; i < d.torsion.size(); ++i)
                out << (i ? ";" : "") << d.torsion[i].get_str();
            out << '\n';
        }
    return out.str();
}

void write_json(const std::string &path, const Json &j) {
    std::ofstream f(path);
    if (!f)
        throw Error("cannot open '" + path + "' for writing");
    f << j.dump(2) << '\n';
}

namespace {

const char *const kCommands[] = {"build", "homology", "coinvariants", "witnesses", "identities", "verify"};
const char *const kKinds[] = {"B", "BA", "T", "Trel", "S", "Srel"};

bool needs_target(const RunConfig &c) {
    return c.command == "build" || c.command == "coinvariants" || (c.command == "homology" && c.in.empty());
}

using Target = std::variant<SimplicialComplex, Poset>;

Target build_target(const RunConfig &c) {
    const RingId ring = *c.ring;
    std::optional<NormBound> bound;
    if (c.bound)
        bound = NormBound(*c.bound);
    if (c.kind == "B")
        return build_B(ring, c.n, c.m, bound);
    if (c.kind == "BA")
        return build_BA(ring, c.n, c.m, bound);
    if (c.kind == "T")
        return build_tits(ring, c.n);
    if (c.kind == "Trel")
        return build_relative_tits(ring, c.n + c.m, c.m);
    if (c.kind == "S")
        return build_splitting_poset(ring, c.n);
    SplittingConstraints cons;
    cons.second_contains = Subspace::standard(ring.p, c.n + c.m, c.m);
    return build_splitting_poset(ring, c.n + c.m, cons);
}

std::string target_ref(const RunConfig &c) {
    std::string ref = c.kind + "(" + c.ring->name() + ", n=" + std::to_string(c.n);
    if (c.kind == "B" || c.kind == "BA" || c.kind == "Trel" || c.kind == "Srel")
        ref += ", m=" + std::to_string(c.m);
    if (c.bound)
        ref += ", bound=" + c.bound->get_str();
    return ref + ")";
}

std::string out_path(const RunConfig &c, const std::string &fallback) { return c.out.empty() ? fallback : c.out; }

std::size_t effective_threads(const RunConfig &c) {
    if (const char *env = std::getenv("FRAMELAB_THREADS")) {
        char *end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end == env || *end != '\0' || v < 1)
            throw ConfigError("FRAMELAB_THREADS must be a positive integer");
        return static_cast<std::size_t>(v);
    }
    return c.threads;
}

int run_command(const RunConfig &c, std::ostream &log) {
    if (c.command == "build") {
        Target t = build_target(c);
        if (auto *k = std::get_if<SimplicialComplex>(&t)) {
            std::string path = out_path(c, "complex.json");
            write_json(path, complex_to_json(*k));
            log << "wrote " << path << ": " << k->vertex_count() << " vertices, dimension " << k->dimension() << '\n';
        } else {
            const Poset &p = std::get<Poset>(t);
            std::string path = out_path(c, "poset.json");
            write_json(path, poset_to_json(p));
            log << "wrote " << path << ": " << p.size() << " elements\n";
        }
        return 0;
    }
    if (c.command == "homology") {
        SimplicialComplex k;
        std::string record;
        if (!c.in.empty()) {
            std::ifstream f(c.in);
            if (!f)
                throw ConfigError("cannot read '" + c.in + "'");
            Json j = Json::parse(f);
            k = j.contains("relations") ? order_complex(poset_from_json(j)) : complex_from_json(j);
            record = c.in;
        } else {
            Target t = build_target(c);
            k = std::holds_alternative<Poset>(t) ? order_complex(std::get<Poset>(t)) : std::get<SimplicialComplex>(t);
            record = target_ref(c);
        }
        HomologyResult h = reduced_homology(k, c.coeff);
        std::string path = out_path(c, c.csv ? "homology.csv" : "homology.json");
        if (c.csv) {
            std::ofstream f(path);
            f << emit_csv({CsvRecord::from_homology(record, k.info().kind, h)});
        } else {
            write_json(path, homology_to_json(h));
        }
        log << "wrote " << path << '\n';
        return 0;
    }
    if (c.command == "coinvariants") {
        Target t = build_target(c);
        SimplicialComplex k =
            std::holds_alternative<Poset>(t) ? order_complex(std::get<Poset>(t)) : std::get<SimplicialComplex>(t);
        const std::size_t fix = c.kind == "B" ? c.m : 0;
        CoinvariantsReport r = coinvariants(k, gl_fix_generators(*c.ring, fix, c.n));
        std::string group = "GL_fix(" + std::to_string(fix) + "," + std::to_string(c.n) + ")";
        std::string path = out_path(c, "coinvariants.json");
        write_json(path, coinvariants_to_json(r, target_ref(c), group));
        log << "wrote " << path << '\n';
        return 0;
    }
    if (c.command == "witnesses") {
        const RingId ring = c.ring.value_or(RingId::integers());
        Json out = Json::array();
        bool all = true;
        for (const auto &[which, params] : standard_witnesses(ring)) {
            SignWitnessResult r = sign_witness(which, params);
            all = all && r.holds;
            out.push_back(witness_to_json(which, params, r));
        }
        std::string path = out_path(c, "witness.json");
        write_json(path, out);
        log << "wrote " << path << '\n';
        return all ? 0 : 1;
    }
    if (c.command == "identities") {
        auto cases = run_identity_suite(c.seed);
        bool all = std::all_of(cases.begin(), cases.end(), [](const IdentityCase &x) { return x.holds; });
        std::string path = out_path(c, "identities.json");
        write_json(path, identities_to_json(cases));
        log << "wrote " << path << ": " << cases.size() << " cases\n";
        return all ? 0 : 1;
    }
    // verify
    AcceptanceOptions opts;
    opts.threads = effective_threads(c);
    opts.seed = c.seed;
    opts.only = parse_suite(c.suite);
    auto results = run_acceptance(opts);
    Json criteria = Json::array();
    bool all = true;
    for (const CriterionResult &r : results) {
        all = all && r.passed();
        criteria.push_back(Json{{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed()},
                                {"checks_passed", r.checks_passed},
                                {"budget_seconds", r.budget_seconds},
                                {"notes", r.notes}});
        log << (r.passed() ? "PASS " : "FAIL ") << r.id << ' ' << r.name << '\n';
    }
    std::string path = out_path(c, "acceptance.json");
    write_json(path, Json{{"suite", c.suite}, {"seed", c.seed}, {"all_passed", all}, {"criteria", criteria}});
    log << "wrote " << path << '\n';
    return all ? 0 : 1;
}

} // namespace

void validate(const RunConfig &c) {
    if (std::find(std::begin(kCommands), std::end(kCommands), c.command) == std::end(kCommands))
        throw ConfigError("unknown command '" + c.command + "'");
    if (c.threads < 1)
        throw ConfigError("--threads must be at least 1");
    if (c.command == "verify") {
        parse_suite(c.suite);
        return;
    }
    if (!needs_target(c))
        return;
    if (std::find(std::begin(kKinds), std::end(kKinds), c.kind) == std::end(kKinds))
        throw ConfigError("unknown complex kind '" + c.kind + "'");
    if (!c.ring)
        throw ConfigError("--ring is required for " + c.command);
    if (c.n < 1)
        throw ConfigError("--n must be at least 1");
    if (!c.ring->is_field() && !c.bound)
        throw ConfigError("--bound is required over " + c.ring->name());
    if (c.bound && *c.bound < 1)
        throw ConfigError("--bound must be at least 1");
    const bool poset_kind = c.kind != "B" && c.kind != "BA";
    if (poset_kind && !c.ring->is_field())
        throw ConfigError("kind " + c.kind + " needs a prime field");
    if ((c.kind == "T" || c.kind == "S") && c.n < 2)
        throw ConfigError("kind " + c.kind + " needs n >= 2");
    if ((c.kind == "Trel" || c.kind == "Srel") && c.m < 1)
        throw ConfigError("kind " + c.kind + " needs m >= 1");
    if (c.command == "coinvariants") {
        if (!c.ring->is_field())
            throw ConfigError("coinvariants are computed over prime fields only");
        if (c.kind != "B" && c.kind != "T" && c.kind != "S")
            throw ConfigError("coinvariants support kinds B, T and S");
    }
}

int run(const RunConfig &config, std::ostream &log) {
    try {
        validate(config);
        return run_command(config, log);
    } catch (const ConfigError &e) {
        log << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const SizeGuardError &e) {
        log << "size guard: " << e.what() << " (size " << e.size() << ")\n";
        return 3;
    } catch (const DomainError &e) {
        log << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        log << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace framelab
