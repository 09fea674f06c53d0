#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "qcadd/errors.hpp"
#include "qcadd/report.hpp"
#include "qcadd/search.hpp"

namespace py = pybind11;
using namespace qcadd;

namespace {

py::object json_to_py(const json& j) {
    const auto mod = py::module_::import("json");
    return mod.attr("loads")(j.dump());
}

Gf2Poly poly_from_any(const std::string& s) { return parse_runlength(s); }

DistanceOptions make_opts(std::uint64_t budget, int workers) {
    DistanceOptions o;
    o.budget = budget;
    o.workers = workers;
    return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quasi-cyclic constructions of quaternary additive codes";

    py::register_exception<Error>(m, "QcaddError");

    py::class_<Gf2Poly>(m, "Gf2Poly")
        .def(py::init([](const std::string& s) { return poly_from_any(s); }))
        .def_static("from_powers",
                    [](const std::vector<int>& p) { return Gf2Poly::from_powers(p); })
        .def_property_readonly("degree", &Gf2Poly::degree)
        .def_property_readonly("coeffs", &Gf2Poly::to_coeff_string)
        .def_property_readonly("runlength", [](const Gf2Poly& p) { return format_runlength(p); })
        .def_property_readonly("powers", &Gf2Poly::powers)
        .def("__add__", [](const Gf2Poly& a, const Gf2Poly& b) { return a + b; })
        .def("__mul__", [](const Gf2Poly& a, const Gf2Poly& b) { return a * b; })
        .def("__eq__", [](const Gf2Poly& a, const Gf2Poly& b) { return a == b; })
        .def("__repr__", [](const Gf2Poly& p) { return "Gf2Poly(" + p.to_power_string() + ")"; });

    m.def("poly_mul_mod", &poly_mul_mod);
    m.def("poly_gcd", [](const Gf2Poly& a, const Gf2Poly& b) { return poly_gcd(a, b); });
    m.def("poly_divrem", &poly_divrem);
    m.def("poly_reciprocal", &poly_reciprocal);
    m.def("ring_conjugate", &ring_conjugate);
    m.def("cyclotomic_quotient", &cyclotomic_quotient);
    m.def("parse_runlength", &parse_runlength);
    m.def("format_runlength", &format_runlength);

    py::class_<BinaryCode>(m, "BinaryCode")
        .def_readonly("length", &BinaryCode::length)
        .def_readonly("rank", &BinaryCode::rank)
        .def_readonly("symplectic_view", &BinaryCode::symplectic_view)
        .def_property_readonly(
            "rows",
            [](const BinaryCode& c) {
                std::vector<std::string> rows;
                for (const auto& r : c.generators.rows) rows.push_back(r.to_string());
                return rows;
            })
        .def("to_dict", [](const BinaryCode& c) { return json_to_py(to_json(c)); })
        .def("__repr__", [](const BinaryCode& c) {
            return "BinaryCode(length=" + std::to_string(c.length) +
                   ", rank=" + std::to_string(c.rank) + ")";
        });

    py::class_<AdditiveCode>(m, "AdditiveCode")
        .def_readonly("n", &AdditiveCode::n)
        .def_readonly("preimage", &AdditiveCode::preimage)
        .def_property_readonly("k2", &AdditiveCode::k2)
        .def_property_readonly("gf4_rows",
                               [](const AdditiveCode& c) { return gf4_generator_strings(c); })
        .def("to_dict", [](const AdditiveCode& c) { return json_to_py(to_json(c)); })
        .def("__repr__", [](const AdditiveCode& c) {
            return "AdditiveCode" + params_string(c.n, c.k2(), 0);
        });

    m.def("build_cyclic", &build_cyclic);
    m.def(
        "build_qc",
        [](int n, const Gf2Poly& g, const std::vector<Gf2Poly>& fs) {
            return build_qc_1gen({n, g, fs});
        },
        py::arg("n"), py::arg("g"), py::arg("fs"));
    m.def(
        "build_qc_multi",
        [](int n, const std::vector<std::pair<Gf2Poly, std::vector<Gf2Poly>>>& gens) {
            std::vector<QcGeneratorTuple> tuples;
            for (const auto& [g, fs] : gens) tuples.push_back({g, fs});
            return build_qc_multi(n, tuples);
        },
        py::arg("n"), py::arg("gens"));
    m.def(
        "double_index",
        [](int n, const Gf2Poly& g, const std::vector<Gf2Poly>& fs, const Gf2Poly& fl,
           const Gf2Poly& fr) {
            BoundReport conditions;
            const BinaryCode code = double_index({n, g, fs}, fl, fr, &conditions);
            return py::make_tuple(code, json_to_py(to_json(conditions)));
        },
        py::arg("n"), py::arg("g"), py::arg("fs"), py::arg("fl"), py::arg("fr"));
    m.def("dual_code", [](const BinaryCode& c, const std::string& form) {
        return dual_code(c, form == "euclidean" ? DualForm::euclidean : DualForm::symplectic);
    });
    m.def("make_additive", &make_additive);

    m.def(
        "min_distance",
        [](const BinaryCode& c, const std::string& mode, std::uint64_t budget, int workers) {
            const auto rep = min_distance(
                c, mode == "hamming" ? WeightMode::hamming : WeightMode::symplectic,
                make_opts(budget, workers));
            return json_to_py(to_json(rep));
        },
        py::arg("code"), py::arg("mode") = "symplectic",
        py::arg("budget") = std::uint64_t(1) << 24, py::arg("workers") = 1);
    m.def(
        "sampled_upper_bound",
        [](const BinaryCode& c, const std::string& mode, std::uint64_t trials, std::uint64_t seed,
           int workers) {
            const auto rep = sampled_upper_bound(
                c, mode == "hamming" ? WeightMode::hamming : WeightMode::symplectic, trials, seed,
                workers);
            return json_to_py(to_json(rep));
        },
        py::arg("code"), py::arg("mode"), py::arg("trials"), py::arg("seed"),
        py::arg("workers") = 1);

    m.def("phi", [](const std::string& bits) {
        return gf4_word_string(phi_map(BitVec::from_string(bits)));
    });
    m.def("phi_inverse",
          [](const std::string& word) { return phi_inverse(parse_gf4_word(word)).to_string(); });

    m.def("extend", [](const AdditiveCode& c, const std::string& mode, int count) {
        return extend(c, mode == "zero-pad" ? ExtendMode::zero_pad : ExtendMode::even_like,
                      count);
    });
    m.def("puncture",
          [](const AdditiveCode& c, const std::vector<int>& pos) { return puncture(c, pos); });
    m.def("shorten",
          [](const AdditiveCode& c, const std::vector<int>& pos) { return shorten(c, pos); });
    m.def("augment", [](const AdditiveCode& c, const std::string& mode) {
        return augment(c, mode == "full" ? AugmentMode::full : AugmentMode::half);
    });
    m.def("construction_x", &construction_x);
    m.def("juxtapose", &juxtapose);
    m.def("is_acd", [](const AdditiveCode& c) {
        const auto res = is_acd(c);
        return py::make_tuple(res.acd, json_to_py(to_json(res.gram)));
    });
    m.def("is_trace_hermitian_self_orthogonal", &is_trace_hermitian_self_orthogonal);
    m.def("acd_juxtapose", &acd_juxtapose);
    m.def("acd_construction_x", &acd_construction_x);
    m.def("acd_shorten", [](const AdditiveCode& c, int position) {
        const auto res = acd_shorten(c, position);
        return py::make_tuple(res.code, res.hull_removed, res.hull_dim_after_shorten);
    });
    m.def("qc_lcd_criterion",
          [](int n, const Gf2Poly& g, const std::vector<Gf2Poly>& fs) {
              return json_to_py(to_json(qc_lcd_criterion(n, g, fs)));
          });

    m.def("qc_distance_lower_bound", &qc_distance_lower_bound);
    m.def(
        "qc_bound_conditions",
        [](int n, const Gf2Poly& g, const std::vector<Gf2Poly>& fs, std::uint64_t d_g) {
            return json_to_py(to_json(qc_bound_conditions(n, g, fs, d_g)));
        },
        py::arg("n"), py::arg("g"), py::arg("fs"), py::arg("d_g") = 0);
    m.def("griesmer_concat_check", &griesmer_concat_check);
    m.def("griesmer_concat_max_d", &griesmer_concat_max_d);

    m.def("default_data_dir", []() { return default_data_dir().string(); });
    m.def(
        "verify_table",
        [](const std::string& table, const std::string& data_dir, std::uint64_t budget,
           int dim_cap, int workers, std::uint64_t trials, std::uint64_t seed) {
            const Dataset data =
                load_dataset(data_dir.empty() ? default_data_dir()
                                            : std::filesystem::path(data_dir));
            VerifyOptions opts;
            opts.budget = budget;
            opts.dim_cap = dim_cap;
            opts.workers = workers;
            opts.sample_trials = trials;
            opts.seed = seed;
            py::list out;
            for (const auto& rep : verify_table(data, table, opts))
                out.append(json_to_py(to_json(rep)));
            return out;
        },
        py::arg("table"), py::arg("data_dir") = "", py::arg("budget") = std::uint64_t(1) << 24,
        py::arg("dim_cap") = 24, py::arg("workers") = 1, py::arg("trials") = 200000,
        py::arg("seed") = 1);
    m.def(
        "build_example_code",
        [](const std::string& name, const std::string& data_dir) {
            const Dataset data =
                load_dataset(data_dir.empty() ? default_data_dir()
                                            : std::filesystem::path(data_dir));
            return build_example_code(data, name);
        },
        py::arg("name"), py::arg("data_dir") = "");

    m.def(
        "search_f_polynomials",
        [](int n, const Gf2Poly& g, int ell, std::uint64_t trials, std::uint64_t seed,
           std::uint64_t budget, std::size_t keep, bool filter, bool divisor_sampling,
           int workers) {
            SearchConfig cfg;
            cfg.n = n;
            cfg.g = g;
            cfg.ell = ell;
            cfg.trials = trials;
            cfg.seed = seed;
            cfg.budget = budget;
            cfg.keep = keep;
            cfg.filter_conditions = filter;
            cfg.divisor_sampling = divisor_sampling;
            cfg.workers = workers;
            py::list out;
            for (const auto& hit : search_f_polynomials(cfg)) out.append(json_to_py(to_json(hit)));
            return out;
        },
        py::arg("n"), py::arg("g"), py::arg("ell") = 2, py::arg("trials") = 100,
        py::arg("seed") = 0, py::arg("budget") = std::uint64_t(1) << 20, py::arg("keep") = 10,
        py::arg("filter") = true, py::arg("divisor_sampling") = false, py::arg("workers") = 1);
}
