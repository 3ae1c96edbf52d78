#pragma once

// JSON and CSV artifacts, command-line configuration and the command runner.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "framelab/actions.hpp"
#include "framelab/identities.hpp"

namespace framelab {

using Json = nlohmann::ordered_json;

/// Invalid command-line configuration (exit code 2).
class ConfigError : public Error {
  public:
    using Error::Error;
};

Json to_json(const RingElem &x);
RingElem ring_elem_from_json(const Json &j);
Json to_json(const VertexLabel &label);
VertexLabel label_from_json(const Json &j);

Json complex_to_json(const SimplicialComplex &k);
SimplicialComplex complex_from_json(const Json &j);
Json poset_to_json(const Poset &p);
Poset poset_from_json(const Json &j);
Json homology_to_json(const HomologyResult &h);
Json coinvariants_to_json(const CoinvariantsReport &r, const std::string &complex_ref, const std::string &group);
Json witness_to_json(SignCase which, const SignWitnessParams &params, const SignWitnessResult &r);
Json identities_to_json(const std::vector<IdentityCase> &cases);
Json cycle_to_json(const CycleChain &c);

/// One CSV source: a named homology computation or a coinvariant module.
struct CsvRecord {
    std::string record;
    std::string kind;
    std::string coeff;
    /// Rows are emitted for these degrees, in order.
    std::vector<DegreeHomology> rows;

    /// Degrees 0..dim of a homology result.
    static CsvRecord from_homology(std::string record, std::string kind, const HomologyResult &h);
    /// A single row: free rank and finite invariant factors of M_G.
    static CsvRecord from_coinvariants(std::string record, int degree, const CoinvariantsReport &r);
};

/// Columns: record,kind,coeff,degree,betti,torsion (torsion joined by ';').
std::string emit_csv(const std::vector<CsvRecord> &records);

struct RunConfig {
    std::string command;
    std::optional<RingId> ring;
    std::size_t n = 2;
    std::size_t m = 0;
    std::optional<Integer> bound;
    std::string kind = "B";
    CoeffRing coeff = CoeffRing::integers();
    std::string in;
    std::string out;
    std::size_t threads = 1;
    std::uint64_t seed = 1;
    std::string suite = "all";
    bool csv = false;
};

/// Checks the cross-field invariants; throws ConfigError.
void validate(const RunConfig &config);

/// Executes one command, writing artifacts; returns the process exit code
/// (0 ok, 1 a check failed, 2 invalid configuration, 3 size guard).
int run(const RunConfig &config, std::ostream &log);

/// Writes `j` with two-space indentation and a trailing newline.
void write_json(const std::string &path, const Json &j);

} // namespace framelab
