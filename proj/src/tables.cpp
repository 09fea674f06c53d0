#include "qcadd/tables.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qcadd/errors.hpp"

namespace qcadd {

Gf2Poly parse_runlength(std::string_view s) {
    std::vector<int> coeffs;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (c != '0' && c != '1')
            fail("parse-error", "unexpected '" + std::string(1, c) + "' at position " +
                                    std::to_string(i) + " in run-length string");
        ++i;
        long count = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            bool braced = i < s.size() && s[i] == '{';
            if (braced) ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i == start)
                fail("parse-error", "missing repeat count at position " + std::to_string(start));
            count = std::strtol(std::string(s.substr(start, i - start)).c_str(), nullptr, 10);
            if (braced) {
                if (i >= s.size() || s[i] != '}')
                    fail("parse-error", "unclosed repeat count at position " + std::to_string(i));
                ++i;
            }
            if (count < 1) fail("parse-error", "repeat count must be positive");
        }
        for (long r = 0; r < count; ++r) coeffs.push_back(c == '1');
    }
    if (coeffs.empty()) fail("parse-error", "empty run-length string");
    std::string bits(coeffs.size(), '0');
    for (std::size_t k = 0; k < coeffs.size(); ++k)
        if (coeffs[k]) bits[k] = '1';
    return Gf2Poly::from_coeffs(bits);
}

std::string format_runlength(const Gf2Poly& p) {
    const std::string bits = p.to_coeff_string();
    std::string out;
    std::size_t i = 0;
    while (i < bits.size()) {
        std::size_t j = i;
        while (j < bits.size() && bits[j] == bits[i]) ++j;
        out += bits[i];
        if (j - i > 1) out += "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return out;
}

ClaimedParams parse_params(std::string_view s) {
    std::string t(s);
    std::erase_if(t, [](char c) { return c == '(' || c == ')' || c == ' '; });
    std::istringstream ss(t);
    std::string part;
    std::vector<std::string> parts;
    while (std::getline(ss, part, ',')) parts.push_back(part);
    if (parts.size() != 3) fail("parse-error", "parameters must be (n,k,d): " + std::string(s));
    ClaimedParams p;
    p.n = std::atoi(parts[0].c_str());
    const auto dot = parts[1].find('.');
    if (dot == std::string::npos) {
        p.k2 = 2 * std::atoi(parts[1].c_str());
    } else {
        if (parts[1].substr(dot) != ".5")
            fail("parse-error", "dimension must be integer or half-integer: " + parts[1]);
        p.k2 = 2 * std::atoi(parts[1].substr(0, dot).c_str()) + 1;
    }
    p.d = std::atoi(parts[2].c_str());
    return p;
}

std::string params_to_string(const ClaimedParams& p) {
    return params_string(p.n, std::size_t(p.k2), std::uint64_t(p.d));
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::confirmed: return "confirmed";
        case Verdict::bound_consistent: return "bound-consistent";
        case Verdict::mismatch: return "mismatch";
        case Verdict::budget_exceeded: return "budget-exceeded";
    }
    return "mismatch";
}

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("QCADD_DATA_DIR")) return env;
#ifdef QCADD_SOURCE_DATA_DIR
    return QCADD_SOURCE_DATA_DIR;
#else
    return "data";
#endif
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> read_tsv_lines(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) fail("invalid-input", "cannot open dataset file " + file.string());
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

// Polynomial list spec: comma-separated exponents, or q(...) for the
// quotient of x^n-1 by the listed polynomial.
Gf2Poly parse_poly_spec(const std::string& spec, int n) {
    std::string s = strip(spec);
    bool quotient = false;
    if (s.rfind("q(", 0) == 0 && s.back() == ')') {
        quotient = true;
        s = s.substr(2, s.size() - 3);
    }
    std::vector<int> powers;
    for (const auto& tok : split(s, ','))
        if (!strip(tok).empty()) powers.push_back(std::atoi(strip(tok).c_str()));
    Gf2Poly p = Gf2Poly::from_powers(powers);
    if (quotient) p = cyclotomic_quotient(p, n);
    return p;
}

// Infers the circulant size from the base additive length and index, trying
// the declared index first and then the other plausible one.
int infer_circulant(int additive_n, int ell, const Gf2Poly& g,
                    const std::vector<Gf2Poly>& fs) {
    auto try_ell = [&](int l) -> int {
        if (l < 1 || (2 * additive_n) % l != 0) return 0;
        const int n = 2 * additive_n / l;
        if (g.degree() >= n) return 0;
        for (const auto& f : fs)
            if (f.degree() >= n) return 0;
        if (!poly_divides(g, Gf2Poly::xn_minus_one(n))) return 0;
        return n;
    };
    if (int n = try_ell(ell)) return n;
    for (int l : {2, 4})
        if (l != ell)
            if (int n = try_ell(l)) return n;
    return 0;
}

void load_generator_table(const std::filesystem::path& file, const std::string& table_id,
                          std::vector<TableClaim>& out) {
    for (const auto& line : read_tsv_lines(file)) {
        const auto cols = split(line, '\t');
        if (cols.size() < 7)
            fail("parse-error", "generator table rows need 7 columns: " + line);
        TableClaim base;
        base.table = table_id;
        base.no = std::atoi(cols[0].c_str());
        base.base = parse_params(cols[1]);
        base.claimed = base.base;
        base.ell = std::atoi(cols[2].c_str());
        base.g = parse_runlength(strip(cols[3]));
        base.fs.push_back(parse_runlength(strip(cols[4])));
        base.fs.push_back(parse_runlength(strip(cols[5])));
        base.circulant_n = infer_circulant(base.base.n, base.ell, base.g, base.fs);
        out.push_back(base);
        const std::string derived = strip(cols[6]);
        if (derived == "-" || derived.empty()) continue;
        for (const auto& entry : split(derived, ';')) {
            TableClaim d = base;
            std::string e = strip(entry);
            const auto colon = e.find(':');
            if (colon == std::string::npos)
                fail("parse-error", "derived entry needs chain:(params): " + e);
            d.chain = e.substr(0, colon);
            std::string rest = e.substr(colon + 1);
            const auto bracket = rest.find('[');
            if (bracket != std::string::npos) {
                d.xargs = rest.substr(bracket + 1, rest.find(']') - bracket - 1);
                rest = rest.substr(0, bracket);
            }
            d.claimed = parse_params(rest);
            out.push_back(d);
        }
    }
}

std::vector<CompareRow> load_compare_table(const std::filesystem::path& file, int linear_cols,
                                           bool with_derivation, bool with_source) {
    std::vector<CompareRow> rows;
    for (const auto& line : read_tsv_lines(file)) {
        const auto cols = split(line, '\t');
        CompareRow r;
        std::size_t c = 0;
        r.no = std::atoi(cols.at(c++).c_str());
        r.ours = parse_params(cols.at(c++));
        if (with_derivation) r.derivation = strip(cols.at(c++));
        for (int i = 0; i < linear_cols; ++i) {
            const ClaimedParams lp = parse_params(cols.at(c++));
            r.linear.push_back(LinearRef{lp.n, lp.k2 / 2, lp.d});
        }
        if (with_source && c < cols.size()) {
            r.source = strip(cols.at(c++));
            if (r.source == "-") r.source.clear();
        }
        rows.push_back(r);
    }
    return rows;
}

}  // namespace

Dataset load_dataset(const std::filesystem::path& dir) {
    Dataset d;
    load_generator_table(dir / "table5.tsv", "V", d.table5);
    load_generator_table(dir / "table6.tsv", "VI", d.table6);

    for (const auto& line : read_tsv_lines(dir / "table1.tsv")) {
        const auto cols = split(line, '\t');
        RangeRow r;
        r.no = std::atoi(cols.at(0).c_str());
        r.t = std::atoi(cols.at(1).c_str());
        r.n_min = std::atoi(cols.at(2).c_str());
        r.n_max = std::atoi(cols.at(3).c_str());
        r.construction = strip(cols.at(4));
        d.table1.push_back(r);
    }
    d.table2 = load_compare_table(dir / "table2.tsv", 1, false, true);
    d.table3 = load_compare_table(dir / "table3.tsv", 2, false, true);
    d.table4 = load_compare_table(dir / "table4.tsv", 1, true, true);

    for (const auto& line : read_tsv_lines(dir / "example_codes.tsv")) {
        const auto cols = split(line, '\t');
        NamedQcSpec spec;
        const std::string name = strip(cols.at(0));
        spec.n = std::atoi(cols.at(1).c_str());
        for (const auto& block : split(cols.at(2), '|')) {
            QcGeneratorTuple tuple;
            for (const auto& item : split(block, ';')) {
                const std::string it = strip(item);
                const auto eq = it.find('=');
                if (eq == std::string::npos) fail("parse-error", "bad generator item: " + it);
                const std::string key = it.substr(0, eq);
                const Gf2Poly p = parse_poly_spec(it.substr(eq + 1), spec.n);
                if (key == "g")
                    tuple.g = p;
                else if (key == "f")
                    tuple.fs.push_back(p);
                else
                    fail("parse-error", "unknown generator key: " + key);
            }
            spec.gens.push_back(std::move(tuple));
        }
        d.example_codes[name] = std::move(spec);
    }

    {
        std::ifstream in(dir / "gf4_matrices.txt");
        if (!in) fail("invalid-input", "cannot open gf4_matrices.txt");
        std::string line, name;
        Gf4Matrix cur;
        auto flush = [&]() {
            if (!name.empty()) d.gf4_matrices[name] = cur;
            name.clear();
            cur = Gf4Matrix{};
        };
        while (std::getline(in, line)) {
            const std::string t = strip(line);
            if (t.empty() || t[0] == '#') continue;
            if (t.front() == '[' && t.back() == ']') {
                flush();
                std::string header = t.substr(1, t.size() - 2);
                const auto sp = header.find(' ');
                if (sp != std::string::npos) {
                    cur.linear = header.substr(sp + 1) == "linear";
                    header = header.substr(0, sp);
                }
                name = header;
            } else {
                cur.rows.push_back(parse_gf4_word(t));
            }
        }
        flush();
    }

    d.linear_reference = load_reference_file(dir / "linear_reference.txt");
    d.lcd_reference = load_reference_file(dir / "lcd_reference.txt");
    return d;
}

std::vector<std::string> parse_chain(const std::string& chain) {
    if (chain.find(',') != std::string::npos) {
        auto toks = split(chain, ',');
        for (auto& t : toks) t = strip(t);
        return toks;  // explicit comma chains apply left to right as written
    }
    static const std::vector<std::string> known = {"DoubleAu", "Au", "Ex0", "Ex", "D", "X", "S", "P"};
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < chain.size()) {
        bool matched = false;
        for (const auto& k : known) {
            if (chain.compare(i, k.size(), k) == 0) {
                toks.push_back(k);
                i += k.size();
                matched = true;
                break;
            }
        }
        if (!matched) fail("parse-error", "unknown derivation tag in '" + chain + "'");
    }
    // concatenated paper tags name the ops outermost first: ExD is Ex(D(code))
    std::reverse(toks.begin(), toks.end());
    return toks;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> kv;
    for (const auto& item : split(s, ',')) {
        const auto eq = item.find('=');
        if (eq != std::string::npos) kv[strip(item.substr(0, eq))] = strip(item.substr(eq + 1));
    }
    return kv;
}

AdditiveCode gf4_matrix_code(const Dataset& data, const std::string& name) {
    const auto it = data.gf4_matrices.find(name);
    if (it == data.gf4_matrices.end()) fail("invalid-input", "unknown matrix " + name);
    return span_gf4_rows(it->second.rows, it->second.linear);
}

}  // namespace

AdditiveCode apply_chain_op(const AdditiveCode& c, const std::string& op,
                            const ChainContext& ctx) {
    if (op == "D") return make_additive(dual_code(c.preimage, DualForm::symplectic));
    if (op == "Au") return augment(c, AugmentMode::half);
    if (op == "DoubleAu") return augment(c, AugmentMode::full);
    if (op == "Ex") return extend(c, ExtendMode::even_like, 1);
    if (op == "Ex0") return extend(c, ExtendMode::zero_pad, 1);
    if (op == "P") {
        const int pos[1] = {c.n - 1};
        return puncture(c, pos);
    }
    if (op == "S") {
        if (ctx.acd) return acd_shorten(c, 0).code;
        const int pos[1] = {0};
        return shorten(c, pos);
    }
    if (op == "X") {
        const auto kv = parse_kv(ctx.xargs);
        if (!kv.count("w") || !kv.count("aux"))
            fail("invalid-input", "X derivation needs w=<weight>,aux=<matrix>");
        const std::uint64_t w = std::strtoull(kv.at("w").c_str(), nullptr, 10);
        const BinaryMatrix words =
            codewords_of_weight(c.preimage, WeightMode::symplectic, w, ctx.budget);
        const AdditiveCode sub = span_subcode(words, c.n);
        return construction_x(c, sub, gf4_matrix_code(*ctx.data, kv.at("aux")));
    }
    fail("invalid-input", "unknown derivation op " + op);
}

AdditiveCode apply_chain(const AdditiveCode& c, const std::string& chain,
                         const ChainContext& ctx) {
    AdditiveCode cur = c;
    for (const auto& op : parse_chain(chain)) cur = apply_chain_op(cur, op, ctx);
    return cur;
}

AdditiveCode build_example_code(const Dataset& data, const std::string& name) {
    const auto it = data.example_codes.find(name);
    if (it == data.example_codes.end()) fail("invalid-input", "unknown example code " + name);
    return make_additive(build_qc_multi(it->second.n, it->second.gens));
}

static AdditiveCode scalar_subcode(int n);

/// Rebuilds a table claim: base generators, then either the dual resolution
/// (when the printed parameters describe the dual of the printed generators)
/// or the derivation chain.
static AdditiveCode build_claim_code(const Dataset& data, const TableClaim& claim,
                                     std::uint64_t budget, std::string* diagnostic) {
    if (claim.circulant_n == 0)
        fail("not-a-generator", "no circulant size fits the printed polynomials");
    AdditiveCode code = make_additive(build_qc_1gen({claim.circulant_n, claim.g, claim.fs}));
    if (claim.chain.empty()) {
        if (int(code.k2()) != claim.claimed.k2 &&
            int(2 * std::size_t(code.n) - code.k2()) == claim.claimed.k2) {
            code = make_additive(dual_code(code.preimage, DualForm::symplectic));
            if (diagnostic)
                *diagnostic += "claim matches the symplectic dual of the printed generators; ";
        }
        return code;
    }
    ChainContext ctx{&data, budget, claim.xargs, claim.table == "VI"};
    return apply_chain(code, claim.chain, ctx);
}

AdditiveCode build_source(const Dataset& data, const std::string& source, std::uint64_t budget) {
    const auto parts = split(source, ':');
    if (parts[0] == "V" || parts[0] == "VI") {
        const auto& table = parts[0] == "V" ? data.table5 : data.table6;
        const int no = std::atoi(parts.at(1).c_str());
        const std::string chain = parts.size() >= 3 ? parts[2] : "";
        // prefer the matching derived claim (it carries any X arguments)
        for (const auto& claim : table)
            if (claim.no == no && claim.chain == chain)
                return build_claim_code(data, claim, budget, nullptr);
        for (const auto& claim : table) {
            if (claim.no != no || !claim.chain.empty()) continue;
            AdditiveCode base = build_claim_code(data, claim, budget, nullptr);
            ChainContext ctx{&data, budget, "", parts[0] == "VI"};
            return apply_chain(base, chain, ctx);
        }
        fail("invalid-input", "no such table row " + source);
    }
    if (parts[0] == "ex") {
        AdditiveCode code = build_example_code(data, parts.at(1));
        if (parts.size() >= 3) {
            ChainContext ctx{&data, budget, "", false};
            code = apply_chain(code, parts[2], ctx);
        }
        return code;
    }
    if (parts[0] == "xr2") {
        // second combination route: all-one/all-w subcode of the length-128
        // extension, auxiliary taken from the combination table
        const AdditiveCode c1 = build_source(data, "ex:ex127:DoubleAu,Ex", budget);
        std::map<int, AdditiveCode> memo;
        const AdditiveCode aux = build_range_code(data, std::atoi(parts.at(1).c_str()), memo);
        return construction_x(c1, scalar_subcode(c1.n), aux);
    }
    if (parts[0] == "acd26") return build_example_code(data, "ex13acd");
    if (parts[0] == "acd29")
        return acd_juxtapose(build_example_code(data, "ex12lcd"),
                             build_example_code(data, "ex17so"));
    if (parts[0] == "acd27")
        return acd_juxtapose(build_example_code(data, "ex10lcd"),
                             build_example_code(data, "ex17so"));
    if (parts[0] == "acd30") {
        // the weight-22 words span more than the printed two-row subcode, so
        // the construction uses the pasted matrix itself
        const AdditiveCode c1 = build_example_code(data, "ex24acd");
        const AdditiveCode sub = gf4_matrix_code(data, "gsub24");
        return acd_construction_x(c1, sub, gf4_matrix_code(data, "hexa6"));
    }
    fail("invalid-input", "unknown source " + source);
}

// All-one and all-w subcode used by the combination-table X constructions.
static AdditiveCode scalar_subcode(int n) {
    BinaryMatrix m{std::size_t(2 * n)};
    BitVec ones{std::size_t(2 * n)}, ws{std::size_t(2 * n)};
    for (int i = 0; i < n; ++i) {
        ones.set(std::size_t(i), true);
        ws.set(std::size_t(n + i), true);
    }
    m.rows.push_back(ones);
    m.rows.push_back(ws);
    return span_subcode(m, n);
}

AdditiveCode build_range_code(const Dataset& data, int t, std::map<int, AdditiveCode>& memo) {
    if (auto it = memo.find(t); it != memo.end()) return it->second;
    const RangeRow* row = nullptr;
    for (const auto& r : data.table1)
        if (r.t == t) row = &r;
    if (!row) fail("invalid-input", "no combination row with t=" + std::to_string(t));
    const ChainContext ctx{&data, std::uint64_t(1) << 24, "", false};
    AdditiveCode result;
    const std::string& c = row->construction;
    if (c == "Remark 2" && t == 8) {
        result = apply_chain(build_example_code(data, "ex31"), "ExDoubleAu", ctx);
    } else if (c == "Remark 2" && t == 11) {
        const AdditiveCode c8 = build_range_code(data, 8, memo);
        result = construction_x(c8, scalar_subcode(c8.n), gf4_matrix_code(data, "gaux11"));
    } else if (c == "Example 4" && t == 9) {
        result = build_example_code(data, "ex35");
    } else if (c == "Example 4" && t == 10) {
        const AdditiveCode base = build_example_code(data, "ex35");
        const BinaryMatrix words =
            codewords_of_weight(base.preimage, WeightMode::symplectic, 30, ctx.budget);
        result = construction_x(base, span_subcode(words, base.n),
                                gf4_matrix_code(data, "aux524"));
    } else if (c == "Example 2") {
        result = build_example_code(data, "ex127");
    } else if (c.rfind("Extend C_", 0) == 0) {
        const int tt = std::atoi(c.substr(9).c_str());
        result = extend(build_range_code(data, tt, memo), ExtendMode::even_like, 1);
    } else if (c.front() == '(' && c.find('|') != std::string::npos) {
        const auto bar = c.find('|');
        auto parse_t = [](std::string s) {
            std::erase_if(s, [](char ch) { return !std::isdigit(static_cast<unsigned char>(ch)); });
            return std::atoi(s.c_str());
        };
        const int t1 = parse_t(c.substr(1, bar - 1));
        const int t2 = parse_t(c.substr(bar + 1));
        result = juxtapose(build_range_code(data, t1, memo), build_range_code(data, t2, memo));
    } else {
        fail("external-construction",
             "construction '" + c + "' is outside the embedded dataset");
    }
    memo.emplace(t, result);
    return result;
}

namespace {

// Cyclic seed distance when small enough to enumerate; 0 otherwise.
std::uint64_t seed_distance(const TableClaim& claim, const VerifyOptions& opts) {
    const int dim = claim.circulant_n - claim.g.degree();
    if (dim < 1 || dim > 24) return 0;
    const BinaryCode cyclic = build_cyclic(claim.circulant_n, claim.g);
    DistanceOptions dopts;
    dopts.budget = std::uint64_t(1) << 24;
    dopts.workers = opts.workers;
    return min_distance(cyclic, WeightMode::hamming, dopts).value;
}

}  // namespace

VerificationReport verify_claim(const Dataset& data, const TableClaim& claim,
                                const VerifyOptions& opts) {
    VerificationReport rep;
    rep.table = claim.table;
    rep.no = claim.no;
    rep.chain = claim.chain;
    rep.claimed = params_to_string(claim.claimed);

    if (claim.table == "VI" && claim.circulant_n != 0) {
        rep.lcd_poly_checked = true;
        const auto crit = qc_lcd_criterion(claim.circulant_n, claim.g, claim.fs);
        const AdditiveCode base =
            make_additive(build_qc_1gen({claim.circulant_n, claim.g, claim.fs}));
        rep.lcd_poly_agrees = crit.lcd == is_acd(base).acd;
    }

    AdditiveCode code;
    try {
        code = build_claim_code(data, claim, opts.budget, &rep.diagnostic);
    } catch (const Error& e) {
        rep.verdict = Verdict::mismatch;
        rep.diagnostic += e.what();
        return rep;
    }

    const std::size_t k2m = code.k2();
    if (int(k2m) != claim.claimed.k2 || code.n != claim.claimed.n) {
        rep.verdict = Verdict::mismatch;
        rep.measured = params_string(code.n, k2m, 0);
        rep.diagnostic += "dimension or length differs from the claim";
        return rep;
    }

    if (claim.table == "VI") {
        const auto check = is_acd(code);
        rep.acd_checked = true;
        rep.acd = check.acd;
    }

    const std::uint64_t total =
        k2m >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << k2m) - 1;
    DistanceOptions dopts;
    dopts.budget = opts.budget;
    dopts.workers = opts.workers;

    if (int(k2m) <= opts.dim_cap) {
        if (total > opts.budget) {
            rep.verdict = Verdict::budget_exceeded;
            rep.diagnostic += "exact verification needs " + std::to_string(total) +
                              " codewords, budget is " + std::to_string(opts.budget);
            return rep;
        }
        rep.distance = additive_distance(code, dopts);
        rep.measured = params_string(code.n, k2m, rep.distance.value);
        rep.verdict = rep.distance.value == std::uint64_t(claim.claimed.d) ? Verdict::confirmed
                                                                           : Verdict::mismatch;
        if (rep.verdict == Verdict::mismatch) rep.diagnostic += "measured distance differs";
        if (rep.acd_checked && !rep.acd) {
            rep.verdict = Verdict::mismatch;
            rep.diagnostic += "; hull is nonzero";
        }
        return rep;
    }

    // sampled mode: upper bound must not contradict the claim, and the
    // quasi-cyclic lower bound (when its hypotheses hold) must stay below it
    rep.distance = sampled_upper_bound(code.preimage, WeightMode::symplectic,
                                       opts.sample_trials, opts.seed, opts.workers);
    std::uint64_t lower = 1;
    if (claim.chain.empty()) {
        const std::uint64_t d_g = seed_distance(claim, opts);
        if (d_g > 0) {
            const auto cond = qc_bound_conditions(claim.circulant_n, claim.g, claim.fs, d_g);
            if (cond.hypotheses_hold) lower = cond.bound_value;
        }
    }
    rep.measured = params_string(code.n, k2m, rep.distance.value);
    if (rep.distance.value < std::uint64_t(claim.claimed.d)) {
        rep.verdict = Verdict::mismatch;
        rep.diagnostic += "sampling found a word lighter than the claim";
    } else if (lower > std::uint64_t(claim.claimed.d)) {
        rep.verdict = Verdict::mismatch;
        rep.diagnostic += "lower bound exceeds the claim";
    } else {
        rep.verdict = Verdict::bound_consistent;
        rep.diagnostic += "sampled upper bound " + std::to_string(rep.distance.value) +
                          ", lower bound " + std::to_string(lower);
    }
    return rep;
}

namespace {

VerificationReport verify_range_row(const Dataset& data, const RangeRow& row,
                                    const VerifyOptions& opts,
                                    std::map<int, AdditiveCode>& memo) {
    VerificationReport rep;
    rep.table = "I";
    rep.no = row.no;
    rep.claimed = "(" + std::to_string(row.n_min) + ".." + std::to_string(row.n_max) + ",3.5,n-" +
                  std::to_string(row.t) + ")";

    for (int n = row.n_min; n <= row.n_max; ++n) {
        if (griesmer_concat_max_d(std::uint64_t(n), 7) != std::uint64_t(n - row.t)) {
            rep.verdict = Verdict::mismatch;
            rep.diagnostic = "distance ceiling at n=" + std::to_string(n) +
                             " is not n-" + std::to_string(row.t);
            return rep;
        }
    }

    AdditiveCode code;
    try {
        code = build_range_code(data, row.t, memo);
    } catch (const Error& e) {
        if (e.code() == "external-construction") {
            rep.verdict = Verdict::bound_consistent;
            rep.diagnostic = "optimality ceilings verified; " + std::string(e.what());
            return rep;
        }
        rep.verdict = Verdict::mismatch;
        rep.diagnostic = e.what();
        return rep;
    }

    DistanceOptions dopts;
    dopts.budget = opts.budget;
    dopts.workers = 1;  // dimension 3.5 codes enumerate in microseconds
    for (int n = row.n_max; n >= row.n_min; --n) {
        if (code.n != n || code.k2() != 7) {
            rep.verdict = Verdict::mismatch;
            rep.diagnostic = "built code has wrong shape at n=" + std::to_string(n);
            return rep;
        }
        const DistanceReport dist = additive_distance(code, dopts);
        if (dist.value != std::uint64_t(n - row.t)) {
            rep.verdict = Verdict::mismatch;
            rep.diagnostic = "distance at n=" + std::to_string(n) + " is " +
                             std::to_string(dist.value) + ", expected " +
                             std::to_string(n - row.t);
            return rep;
        }
        if (n == row.n_max) rep.measured = params_string(n, 7, dist.value);
        if (n > row.n_min) {
            const int pos[1] = {code.n - 1};
            code = puncture(code, pos);
        }
    }
    rep.verdict = Verdict::confirmed;
    rep.diagnostic = "ceilings and punctured chain verified across the range";
    return rep;
}

VerificationReport verify_compare_row(const Dataset& data, const CompareRow& row,
                                      const std::string& table_id, const VerifyOptions& opts) {
    VerificationReport rep;
    rep.table = table_id;
    rep.no = row.no;
    rep.chain = row.derivation;
    rep.claimed = params_to_string(row.ours);

    const auto& reference = table_id == "IV" ? data.lcd_reference : data.linear_reference;
    const Classification cls =
        classify_vs_reference(row.ours.n, row.ours.k2, row.ours.d, reference);
    const bool better = cls == Classification::strong_sense_better ||
                        cls == Classification::higher_rate || cls == Classification::gap_filler;
    rep.diagnostic = to_string(cls);
    if (!better) {
        rep.verdict = Verdict::mismatch;
        return rep;
    }

    if (row.source.empty()) {
        rep.verdict = Verdict::bound_consistent;
        rep.diagnostic += "; construction not in the embedded dataset";
        return rep;
    }

    AdditiveCode code;
    try {
        code = build_source(data, row.source, opts.budget);
    } catch (const Error& e) {
        rep.verdict = Verdict::mismatch;
        rep.diagnostic += std::string("; ") + e.what();
        return rep;
    }
    if (code.n != row.ours.n || int(code.k2()) != row.ours.k2) {
        rep.verdict = Verdict::mismatch;
        rep.diagnostic += "; rebuilt code is " + params_string(code.n, code.k2(), 0);
        return rep;
    }
    if (table_id == "IV") {
        const auto check = is_acd(code);
        rep.acd_checked = true;
        rep.acd = check.acd;
        if (!check.acd) {
            // shortened entries reproduce the printed parameters, but for
            // some rows the shortened code keeps a 2-dimensional hull; the
            // parameters verify while the complementary-dual label does not
            if (row.derivation == "S") {
                rep.diagnostic += "; shortened code has hull dimension " +
                                  std::to_string(check.gram.hull_dim) +
                                  ", complementary-dual label not certified";
            } else {
                rep.verdict = Verdict::mismatch;
                rep.diagnostic += "; hull is nonzero";
                return rep;
            }
        }
    }
    const std::uint64_t total =
        code.k2() >= 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << code.k2()) - 1;
    DistanceOptions dopts;
    dopts.budget = opts.budget;
    dopts.workers = opts.workers;
    if (int(code.k2()) <= opts.dim_cap && total <= opts.budget) {
        rep.distance = additive_distance(code, dopts);
        rep.measured = params_string(code.n, code.k2(), rep.distance.value);
        rep.verdict = rep.distance.value == std::uint64_t(row.ours.d) ? Verdict::confirmed
                                                                      : Verdict::mismatch;
    } else {
        rep.distance = sampled_upper_bound(code.preimage, WeightMode::symplectic,
                                           opts.sample_trials, opts.seed, opts.workers);
        rep.measured = params_string(code.n, code.k2(), rep.distance.value);
        rep.verdict = rep.distance.value >= std::uint64_t(row.ours.d) ? Verdict::bound_consistent
                                                                      : Verdict::mismatch;
    }
    return rep;
}

}  // namespace

std::vector<VerificationReport> verify_table(const Dataset& data, const std::string& table_id,
                                             const VerifyOptions& opts) {
    std::vector<VerificationReport> reports;
    if (table_id == "I") {
        std::map<int, AdditiveCode> memo;
        for (const auto& row : data.table1)
            reports.push_back(verify_range_row(data, row, opts, memo));
    } else if (table_id == "II" || table_id == "III" || table_id == "IV") {
        const auto& rows = table_id == "II"   ? data.table2
                           : table_id == "III" ? data.table3
                                               : data.table4;
        for (const auto& row : rows)
            reports.push_back(verify_compare_row(data, row, table_id, opts));
    } else if (table_id == "V" || table_id == "VI") {
        const auto& claims = table_id == "V" ? data.table5 : data.table6;
        for (const auto& claim : claims) reports.push_back(verify_claim(data, claim, opts));
    } else if (!table_id.empty()) {
        fail("invalid-input", "unknown table id " + table_id);
    }
    return reports;
}

}  // namespace qcadd
