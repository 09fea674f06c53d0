#ifndef QCADD_TABLES_HPP
#define QCADD_TABLES_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcadd/additive.hpp"
#include "qcadd/bounds.hpp"
#include "qcadd/codes.hpp"
#include "qcadd/duality.hpp"

namespace qcadd {

/// Run-length polynomial notation: "101^{3}" = 1,0,1,1,1 = 1 + x^2 + x^3 + x^4.
/// Tokens are '0' or '1', optionally followed by ^{count} (or ^count).
Gf2Poly parse_runlength(std::string_view s);
/// Canonical maximal-run encoding; parse_runlength inverse.
std::string format_runlength(const Gf2Poly& p);

struct ClaimedParams {
    int n = 0;
    int k2 = 0;  // twice the GF(4) dimension
    int d = 0;
};
/// Parses "(21,10.5,8)" into n = 21, k2 = 21, d = 8.
ClaimedParams parse_params(std::string_view s);
std::string params_to_string(const ClaimedParams& p);

/// One verifiable claim: either a table row's base code or a derived entry.
struct TableClaim {
    std::string table;
    int no = 0;
    std::string chain;  // "" for the base code, else e.g. "Au", "ExD", "D", "X"
    std::string xargs;  // extra data for X derivations, "w=124,aux=gaux11"
    ClaimedParams base;
    ClaimedParams claimed;
    int ell = 0;
    int circulant_n = 0;  // inferred from the base length and index
    Gf2Poly g;
    std::vector<Gf2Poly> fs;
};

struct RangeRow {
    int no = 0;
    int t = 0;  // codes (n, 3.5, n-t)
    int n_min = 0, n_max = 0;
    std::string construction;
};

struct CompareRow {
    int no = 0;
    ClaimedParams ours;
    std::string derivation;  // "-" or "S"
    std::vector<LinearRef> linear;
    std::string source;  // how to rebuild: "V:3", "VI:4:S", or a named build
};

struct NamedQcSpec {
    int n = 0;
    std::vector<QcGeneratorTuple> gens;
};

struct Gf4Matrix {
    std::vector<Gf4Word> rows;
    bool linear = false;  // adjoin w times each row when spanning
};

struct Dataset {
    std::vector<TableClaim> table5, table6;
    std::vector<RangeRow> table1;
    std::vector<CompareRow> table2, table3, table4;
    std::map<std::string, NamedQcSpec> example_codes;
    std::map<std::string, Gf4Matrix> gf4_matrices;
    std::vector<LinearRef> linear_reference, lcd_reference;
};

std::filesystem::path default_data_dir();
Dataset load_dataset(const std::filesystem::path& data_dir);

/// Splits a concatenated derivation tag ("ExAu") into primitive ops and
/// returns them in application order (rightmost op first: Au then Ex).
std::vector<std::string> parse_chain(const std::string& chain);

struct ChainContext {
    const Dataset* data = nullptr;
    std::uint64_t budget = std::uint64_t(1) << 24;
    std::string xargs;
    bool acd = false;  // shorten ops go through the hull-restoring path
};
AdditiveCode apply_chain_op(const AdditiveCode& c, const std::string& op, const ChainContext& ctx);
AdditiveCode apply_chain(const AdditiveCode& c, const std::string& chain, const ChainContext& ctx);

/// Builds the additive code of a named entry from the example dataset.
AdditiveCode build_example_code(const Dataset& data, const std::string& name);
/// Rebuilds a compare-row source ("VI:4:S", "V:2:D", or a named build).
AdditiveCode build_source(const Dataset& data, const std::string& source,
                          std::uint64_t budget = std::uint64_t(1) << 24);
/// Maximum-length optimal 3.5-dimensional code of a combination-table row.
AdditiveCode build_range_code(const Dataset& data, int t,
                              std::map<int, AdditiveCode>& memo);

enum class Verdict { confirmed, bound_consistent, mismatch, budget_exceeded };
std::string to_string(Verdict v);

struct VerificationReport {
    std::string table;
    int no = 0;
    std::string chain;
    std::string claimed;
    std::string measured;
    Verdict verdict = Verdict::mismatch;
    std::string diagnostic;
    DistanceReport distance;
    bool acd_checked = false;
    bool acd = false;
    bool lcd_poly_checked = false;
    bool lcd_poly_agrees = false;
};

struct VerifyOptions {
    std::uint64_t budget = std::uint64_t(1) << 24;
    int dim_cap = 24;
    int workers = 1;
    std::uint64_t sample_trials = 200000;
    std::uint64_t seed = 1;
};

VerificationReport verify_claim(const Dataset& data, const TableClaim& claim,
                                const VerifyOptions& opts);
std::vector<VerificationReport> verify_table(const Dataset& data, const std::string& table_id,
                                             const VerifyOptions& opts);

}  // namespace qcadd

#endif
