#include "qcadd/report.hpp"

namespace qcadd {

json to_json(const Gf2Poly& p) {
    return json{{"coeffs", p.to_coeff_string()},
                {"runlength", format_runlength(p)},
                {"powers", p.powers()},
                {"pretty", p.to_power_string()},
                {"degree", p.degree()}};
}

json to_json(const BinaryCode& c) {
    json rows = json::array();
    for (const auto& row : c.generators.rows) rows.push_back(row.to_string());
    return json{{"length", c.length},
                {"rank", c.rank},
                {"symplectic", c.symplectic_view},
                {"rows", rows}};
}

json to_json(const AdditiveCode& c) {
    json j = to_json(c.preimage);
    j["n"] = c.n;
    j["k2"] = c.k2();
    j["dimension"] = dim_string(c.k2());
    j["gf4_rows"] = gf4_generator_strings(c);
    return j;
}

json to_json(const DistanceReport& r) {
    return json{{"value", r.value},
                {"certainty", to_string(r.certainty)},
                {"upper_bound", r.upper_bound},
                {"enumerated", r.enumerated},
                {"budget", r.budget},
                {"elapsed_seconds", r.elapsed_seconds}};
}

json to_json(const BoundReport& r) {
    json j{{"bound", r.bound_value}, {"hypotheses_hold", r.hypotheses_hold}};
    j["failed_condition"] = r.hypotheses_hold ? json() : json(r.failed_condition);
    return j;
}

json to_json(const GramReport& r) {
    return json{{"gram_rank", r.gram_rank},
                {"hull_dim", r.hull_dim},
                {"verdict", to_string(r.verdict)}};
}

json to_json(const QcLcdCriterion& r) {
    return json{{"lcd", r.lcd},
                {"palindromic_seed", r.palindromic_seed},
                {"lambda_coprime", r.lambda_coprime},
                {"lambda", r.lambda.to_coeff_string()},
                {"lambda_gcd", r.lambda_gcd.to_coeff_string()}};
}

json to_json(const VerificationReport& r) {
    json j{{"table", r.table},
           {"no", r.no},
           {"chain", r.chain.empty() ? "-" : r.chain},
           {"claimed", r.claimed},
           {"measured", r.measured},
           {"verdict", to_string(r.verdict)},
           {"diagnostic", r.diagnostic}};
    if (r.acd_checked) j["acd"] = r.acd;
    if (r.lcd_poly_checked) j["lcd_poly_agrees"] = r.lcd_poly_agrees;
    j["distance"] = to_json(r.distance);
    return j;
}

json to_json(const SearchHit& h) {
    json fs = json::array();
    for (const auto& f : h.fs) fs.push_back(format_runlength(f));
    return json{{"trial", h.trial},
                {"fs", fs},
                {"rank", h.rank},
                {"distance", to_json(h.distance)}};
}

}  // namespace qcadd
