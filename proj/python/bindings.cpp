// Python bindings.  The exchange format is the same JSON used by the CLI
// and the file formats: functions take and return JSON strings, and the
// pure-Python wrapper in tensorforge/__init__.py turns them into dicts.

#include "tf/apolarity.hpp"
#include "tf/asymptotic.hpp"
#include "tf/castling.hpp"
#include "tf/degeneration.hpp"
#include "tf/json_io.hpp"
#include "tf/matmul.hpp"
#include "tf/multilinear.hpp"
#include "tf/orbit222.hpp"
#include "tf/strassen.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tf;

namespace {

RatTensor tensor_of(const std::string& json) { return parse_rat_tensor_text(json); }

std::string dump(const Json& j) { return j.dump(); }

} // namespace

PYBIND11_MODULE(_tensorforge, m)
{
    m.doc() = "exact tensor rank / matrix multiplication toolkit";

    py::register_exception<ParseError>(m, "TfParseError", PyExc_ValueError);
    py::register_exception<StructuralError>(m, "TfStructuralError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "TfDomainError", PyExc_ArithmeticError);

    m.def("matmul_tensor", [](long n, bool transposed) {
        return dump(serialize_tensor(matmul_tensor({n, transposed})));
    }, py::arg("n"), py::arg("transposed_third") = false);

    m.def("unit_tensor", [](long r) { return dump(serialize_tensor(unit_tensor(r))); });

    m.def("multilinear_rank", [](const std::string& t) { return multilinear_rank(tensor_of(t)); });

    m.def("kronecker", [](const std::string& a, const std::string& b) {
        return dump(serialize_tensor(kronecker(tensor_of(a), tensor_of(b))));
    });

    m.def("symmetrize", [](const std::string& t) {
        return dump(serialize_tensor(symmetrize(tensor_of(t))));
    });

    m.def("expand_decomposition", [](const std::string& d) {
        auto dec = parse_decomposition_text(d);
        return dump(serialize_tensor(tensor_from_terms(dec.shape, dec, Rational(0))));
    });

    m.def("verify_decomposition", [](const std::string& t, const std::string& d) {
        return verify_decomposition(tensor_of(t), parse_decomposition_text(d)).valid;
    });

    m.def("omega_bound", [](long n, long r, const std::string& kind) {
        return omega_bound(n, r, kind == "rank" ? BoundKind::Rank : BoundKind::BorderRank).bound;
    }, py::arg("n"), py::arg("r"), py::arg("kind") = "rank");

    m.def("chilo_check", [](long n) { return chilo_restriction_check(n); });

    m.def("classify_222", [](const std::string& t) {
        auto cls = classify_222(tensor_of(t));
        Json j{{"class", to_string(cls.label)},
               {"multilinear_rank", cls.mlrank},
               {"complex_rank", cls.complex_rank},
               {"real_rank", cls.real_rank},
               {"det", rat_str(cls.det)}};
        return dump(j);
    });

    m.def("hyperdeterminant", [](const std::string& t) {
        return rat_str(hyperdeterminant(tensor_of(t)));
    });

    m.def("verify_degeneration", [](const std::string& w, const std::string& t) {
        return verify_degeneration(make_witness(tensor_of(t), parse_witness_text(w))).valid;
    });

    m.def("degeneration_to_rank", [](const std::string& w, const std::string& t) {
        return dump(serialize_decomposition(
            degeneration_to_rank(make_witness(tensor_of(t), parse_witness_text(w)))));
    });

    m.def("classify_castling", [](const DimTuple& dims) {
        auto rep = classify(dims);
        Json j{{"input", rep.input},
               {"N", rep.N.get_str()},
               {"minimal", rep.minimal},
               {"prehomogeneous", to_string(rep.prehomogeneous)},
               {"finite_orbits", to_string(rep.finite_orbits)},
               {"rule", rep.rule}};
        return dump(j);
    });

    m.def("hilbert_function", [](const std::string& f) {
        return hilbert_function(parse_poly_text(f));
    });

    m.def("waring_rank_monomial", [](const std::vector<long>& alpha) {
        return waring_rank_monomial(alpha).rank;
    });

    m.def("waring_rank_binary", [](const std::string& f) {
        return waring_rank_binary(parse_poly_text(f)).rank;
    });

    m.def("is_concise", [](const std::string& t) { return is_concise(tensor_of(t)); });

    m.def("find_tight", [](const std::string& t) -> py::object {
        auto w = find_tight(tensor_of(t));
        if (!w)
            return py::none();
        return py::cast(w->labels);
    });

    m.def("verify_tight", [](const std::string& t, const std::vector<std::vector<long>>& labels) {
        return verify_tight(tensor_of(t), TightnessWitness{labels});
    });

    m.def("fekete_bound", [](const std::vector<std::pair<long, long>>& samples) {
        std::vector<std::pair<long, Integer>> s;
        for (auto [k, r] : samples)
            s.push_back({k, Integer(r)});
        return asymptotic_rank_bound(s).approx;
    });

    m.def("benchmark_slope", [](const std::string& alg, const std::vector<long>& sizes, bool transposed) {
        auto d = parse_decomposition_text(alg);
        long n2 = d.shape.at(0);
        long n = 1;
        while (n * n < n2)
            ++n;
        auto a = compile(d, {n, transposed});
        return benchmark(a, sizes).slope;
    }, py::arg("alg"), py::arg("sizes"), py::arg("transposed_third") = false);
}
