#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "zcz/catalog.hpp"
#include "zcz/construct.hpp"
#include "zcz/correlate.hpp"
#include "zcz/generators.hpp"
#include "zcz/interleave.hpp"
#include "zcz/setfile.hpp"

namespace py = pybind11;
using namespace zcz;

namespace {

CorrMethod method_from(const std::string& name) {
    if (name == "auto") return CorrMethod::Auto;
    if (name == "direct") return CorrMethod::Direct;
    if (name == "fft") return CorrMethod::Fft;
    throw ParseError("unknown method '" + name + "' (auto, direct or fft)");
}

T5Condition condition_from(const std::string& name) {
    if (name == "mod_m") return T5Condition::DistinctModM;
    if (name == "mod_n") return T5Condition::DistinctModN;
    throw ParseError("unknown condition '" + name + "' (mod_m or mod_n)");
}

py::dict claim_dict(const TheoremClaim& c) {
    py::dict out;
    out["tag"] = theorem_tag_name(c.tag);
    out["m"] = c.m;
    out["n"] = c.n;
    if (c.d) out["d"] = *c.d;
    if (c.l) out["l"] = *c.l;
    if (c.zcz) out["zcz"] = *c.zcz;
    if (c.delta) out["delta"] = *c.delta;
    return out;
}

py::dict report_dict(const ZczReport& r) {
    py::dict out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["measured_zcz"] = r.measured_zcz;
    out["bound"] = r.bound.str();
    out["bound_floor"] = r.bound.floor();
    out["achieves_bound"] = r.achieves_bound;
    if (r.delta) out["delta"] = *r.delta;
    out["tolerance"] = r.tolerance;
    out["exact"] = r.exact;
    out["exhaustive"] = r.exhaustive;
    out["pairs_checked"] = r.pairs_checked;
    out["peak_ok"] = r.peak_ok;
    if (r.claim) {
        out["claim_kind"] = r.claim->kind == SetClaim::Kind::Zcz ? "zcz" : "delta";
        out["claim_value"] = r.claim->kind == SetClaim::Kind::Zcz ? py::cast(r.claim->zcz) : py::cast(r.claim->delta);
    }
    if (r.claim_satisfied) out["claim_satisfied"] = *r.claim_satisfied;
    return out;
}

py::tuple build_tuple(BuildResult&& b) { return py::make_tuple(std::move(b.set), claim_dict(b.claim)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Sequence sets with zero-correlation zones or low cross-correlation";

    py::register_exception<HypothesisError>(m, "HypothesisError");
    py::register_exception<ParseError>(m, "ParseError");

    py::class_<Sequence>(m, "Sequence")
        .def_static("from_digits", &Sequence::from_digits, py::arg("digits"), py::arg("order"))
        .def_static("from_ternary", &Sequence::from_ternary, py::arg("trits"))
        .def_static("from_complex", &Sequence::from_complex, py::arg("entries"))
        .def_static(
            "from_unit_digits",
            [](std::vector<int> digits, int order) { return Sequence::from_unit_digits(std::move(digits), order); },
            py::arg("digits"), py::arg("order"))
        .def("__len__", &Sequence::length)
        .def_property_readonly("entries", [](const Sequence& s) { return s.entries(); })
        .def_property_readonly("digits", [](const Sequence& s) { return s.digits(); })
        .def_property_readonly("root_order", &Sequence::root_order)
        .def_property_readonly("exact", &Sequence::is_exact)
        .def("equals", &Sequence::equals, py::arg("other"), py::arg("eps") = kEntryEps)
        .def("__repr__", [](const Sequence& s) {
            return "<Sequence length " + std::to_string(s.length()) + ", " + s.alphabet().str() + ">";
        });

    py::class_<SetClaim>(m, "SetClaim")
        .def_static("zcz", &SetClaim::zcz_claim, py::arg("zcz"))
        .def_static("delta", &SetClaim::delta_claim, py::arg("delta"))
        .def_property_readonly("kind",
                               [](const SetClaim& c) { return c.kind == SetClaim::Kind::Zcz ? "zcz" : "delta"; })
        .def_property_readonly("value", [](const SetClaim& c) {
            return c.kind == SetClaim::Kind::Zcz ? py::cast(c.zcz) : py::cast(c.delta);
        });

    py::class_<SequenceSet>(m, "SequenceSet")
        .def(py::init<std::vector<Sequence>, std::optional<SetClaim>>(), py::arg("members"),
             py::arg("claim") = std::nullopt)
        .def("__len__", &SequenceSet::size)
        .def("__getitem__",
             [](const SequenceSet& s, std::size_t i) {
                 if (i >= s.size()) throw py::index_error();
                 return s[i];
             })
        .def_property_readonly("length", &SequenceSet::length)
        .def_property_readonly("members", &SequenceSet::members)
        .def_property_readonly("claim", [](const SequenceSet& s) { return s.claim(); })
        .def("with_claim", &SequenceSet::with_claim, py::arg("claim"))
        .def("__repr__", [](const SequenceSet& s) {
            return "<SequenceSet N=" + std::to_string(s.length()) + " M=" + std::to_string(s.size()) + ">";
        });

    py::class_<ShiftSequence>(m, "ShiftSequence")
        .def(py::init<std::vector<long long>, long long>(), py::arg("entries"), py::arg("modulus"))
        .def("__len__", &ShiftSequence::size)
        .def_property_readonly("entries", &ShiftSequence::entries)
        .def_property_readonly("modulus", &ShiftSequence::modulus)
        .def("at", &ShiftSequence::at, py::arg("i"));

    m.def("left_shift", &left_shift, py::arg("s"), py::arg("i"));
    m.def("shift_equivalent", &shift_equivalent, py::arg("a"), py::arg("b"), py::arg("eps") = kEntryEps);
    m.def("sets_shift_equivalent", &sets_shift_equivalent, py::arg("a"), py::arg("b"), py::arg("eps") = kEntryEps);

    m.def("energy", &energy, py::arg("s"));
    m.def(
        "cross_correlation",
        [](const Sequence& a, const Sequence& b, const std::string& method) {
            return cross_correlation(a, b, method_from(method)).values;
        },
        py::arg("a"), py::arg("b"), py::arg("method") = "auto");
    m.def(
        "is_perfect", [](const Sequence& s, const std::string& method) { return is_perfect(s, method_from(method)); },
        py::arg("s"), py::arg("method") = "auto");
    m.def(
        "is_complete_orthogonal",
        [](const SequenceSet& b, const std::string& method) {
            return is_complete_orthogonal(b, method_from(method));
        },
        py::arg("b"), py::arg("method") = "auto");
    m.def(
        "measure_zcz",
        [](const SequenceSet& s, const std::string& method) { return measure_zcz(s, method_from(method)); },
        py::arg("s"), py::arg("method") = "auto");
    m.def(
        "max_correlation",
        [](const SequenceSet& s, const std::string& method) { return max_correlation(s, method_from(method)); },
        py::arg("s"), py::arg("method") = "auto");
    m.def("zcz_bound", [](long long n, long long m) { return zcz_bound(n, m).floor(); }, py::arg("n"), py::arg("m"));
    m.def(
        "verify",
        [](const SequenceSet& s, const std::string& method, std::optional<long long> sample_pairs,
           unsigned long long seed, bool compute_delta) {
            VerifyOptions options;
            options.method = method_from(method);
            options.sample_pairs = sample_pairs;
            options.seed = seed;
            options.compute_delta = compute_delta;
            return report_dict(verify(s, options));
        },
        py::arg("s"), py::arg("method") = "auto", py::arg("sample_pairs") = std::nullopt, py::arg("seed") = 0,
        py::arg("compute_delta") = true);

    m.def("associate", &associate, py::arg("a"));
    m.def("interleave", &interleave, py::arg("a"), py::arg("b"));
    m.def("prop1_correlation", &prop1_correlation, py::arg("a"), py::arg("b"), py::arg("h"), py::arg("k"),
          py::arg("tau"));

    m.def("builtin_perfect", [](const std::string& name) { return builtin_perfect(name); }, py::arg("name"));
    m.def("chu_perfect", &chu_perfect, py::arg("n"), py::arg("u") = 1);
    m.def("sylvester_set", [](int t) { return orthogonal_set(sylvester(t)); }, py::arg("t"));
    m.def("paley_set", [](int q) { return orthogonal_set(paley(q)); }, py::arg("q"));
    m.def("hadamard12_set", []() { return orthogonal_set(hadamard12()); });

    m.def(
        "theorem1_build",
        [](const Sequence& a, const SequenceSet& b, const ShiftSequence& e) {
            return build_tuple(theorem1_build(a, b, e));
        },
        py::arg("a"), py::arg("b"), py::arg("e"));
    m.def(
        "t1_canonical_shift",
        [](long long m, long long n, const std::string& variant, long long i) {
            if (variant == "case1") return t1_canonical_shift(m, n, T1Variant::Case1, i);
            if (variant == "case2") return t1_canonical_shift(m, n, T1Variant::Case2, i);
            throw ParseError("unknown variant '" + variant + "' (case1 or case2)");
        },
        py::arg("m"), py::arg("n"), py::arg("variant"), py::arg("i") = 0);
    m.def("t1_r0", &t1_r0, py::arg("e"));
    m.def("t1_case2_condition", &t1_case2_condition, py::arg("e"), py::arg("m"), py::arg("n"));
    m.def(
        "theorem2_build",
        [](const Sequence& a, const SequenceSet& b) { return build_tuple(theorem2_build(a, b)); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "theorem3_build",
        [](const SequenceSet& c, const SequenceSet& b, long long d) { return build_tuple(theorem3_build(c, b, d)); },
        py::arg("c"), py::arg("b"), py::arg("d"));
    m.def(
        "theorem4_build",
        [](const SequenceSet& a, const SequenceSet& b, bool trust_claim) {
            return build_tuple(theorem4_build(a, b, trust_claim));
        },
        py::arg("a"), py::arg("b"), py::arg("trust_claim") = false);
    m.def(
        "theorem5_build",
        [](const Sequence& a, const SequenceSet& b, const ShiftSequence& e) {
            return build_tuple(theorem5_build(a, b, e));
        },
        py::arg("a"), py::arg("b"), py::arg("e"));
    m.def("t5_N0", &t5_N0, py::arg("e"), py::arg("m"), py::arg("n"));
    m.def(
        "t5_condition_holds",
        [](const ShiftSequence& e, long long m, long long n, const std::string& cond) {
            return t5_condition_holds(e, m, n, condition_from(cond));
        },
        py::arg("e"), py::arg("m"), py::arg("n"), py::arg("condition"));
    m.def(
        "search_shift_sequence",
        [](long long m, long long n, const std::string& cond) {
            return search_shift_sequence(m, n, condition_from(cond));
        },
        py::arg("m"), py::arg("n"), py::arg("condition"));

    m.def("parse_setfile", &parse_setfile, py::arg("content"));
    m.def("write_setfile", &write_setfile, py::arg("s"));
    m.def("load_setfile", &load_setfile, py::arg("path"));
    m.def("save_setfile", &save_setfile, py::arg("s"), py::arg("path"));

    m.def("catalog_rows", []() {
        py::list out;
        for (const CatalogRow& row : catalog_rows()) {
            py::dict d;
            d["n"] = row.n;
            d["m"] = row.m;
            d["zcz"] = row.zcz;
            d["exclusive"] = row.exclusive;
            d["constructible"] = row.constructible;
            d["recipe"] = row.recipe;
            out.append(std::move(d));
        }
        return out;
    });
    m.def("catalog_witness", [](std::size_t row) { return build_tuple(catalog_witness(row)); }, py::arg("row"));
}
