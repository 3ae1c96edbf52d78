// framelab: build complexes, compute homology and coinvariants, check
// witnesses and identities, or run the acceptance suite.

#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "framelab/report.hpp"

int main(int argc, char **argv) {
    using namespace framelab;
    CLI::App app{"Exact homology of frame complexes, buildings and splitting posets"};
    app.set_help_flag("-h,--help", "Print this help and exit");

    std::string command, ring, coeff = "Z", bound, kind = "B", in, out, suite = "all";
    int q = 0;
    std::size_t n = 2, m = 0, threads = 1;
    std::uint64_t seed = 1;
    bool csv = false;

    app.add_option("command", command, "build | homology | coinvariants | witnesses | identities | verify")
        ->required();
    app.add_option("--ring", ring, "Z, Z[i] (gauss), Z[w] (eis), fq (with --q) or F<p>");
    app.add_option("--q", q, "prime for --ring fq");
    app.add_option("--n", n, "rank n");
    app.add_option("--m", m, "number of fixed standard lines (or fixed subspace rank)");
    app.add_option("--bound", bound, "norm bound for infinite rings");
    app.add_option("--kind", kind, "B, BA, T, Trel, S or Srel");
    app.add_option("--coeff", coeff, "Z, ZHalf, Q or F<p>");
    app.add_option("--in", in, "input complex or poset JSON");
    app.add_option("--out", out, "output path");
    app.add_option("--threads", threads, "worker threads (FRAMELAB_THREADS overrides)");
    app.add_option("--seed", seed, "seed for sampled checks");
    app.add_option("--suite", suite, "'all' or a comma list of criteria");
    app.add_flag("--csv", csv, "homology: write CSV instead of JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunConfig config;
    config.command = command;
    config.n = n;
    config.m = m;
    config.kind = kind;
    config.in = in;
    config.out = out;
    config.threads = threads;
    config.seed = seed;
    config.suite = suite;
    config.csv = csv;
    try {
        if (ring == "fq") {
            if (q == 0)
                throw ConfigError("--ring fq needs --q");
            config.ring = RingId::prime_field(q);
        } else if (!ring.empty()) {
            if (q != 0)
                throw ConfigError("--q only applies to --ring fq");
            config.ring = parse_ring(ring);
        }
        config.coeff = parse_coeff(coeff);
        if (!bound.empty()) {
            Integer b;
            if (b.set_str(bound, 10) != 0)
                throw ConfigError("--bound must be an integer");
            config.bound = b;
        }
    } catch (const Error &e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    }
    return run(config, std::cerr);
}
