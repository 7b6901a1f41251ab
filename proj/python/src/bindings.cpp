// Python extension module: exposes the exact-inverse workbench to Python.
//
// Conventions of the binding layer:
//   - ring elements cross the boundary as their canonical strings, so the
//     Python surface needs no Element type and every value round-trips
//     through the same parser/formatter the command line uses;
//   - report-shaped results (certificates, classification tables, sweep
//     reports) cross as the exact JSON documents the command line prints,
//     byte for byte; the pure-Python wrapper decodes them into dicts.
//     One serializer, every front end.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/desk_suite.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/exact_matrix.hpp"
#include "ringlab/identities.hpp"
#include "ringlab/inverses.hpp"
#include "ringlab/json_io.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace py = pybind11;

namespace {

using namespace ringlab;

// shared_ptr<const FiniteRing> is not a usable pybind11 holder, so the
// Python Ring is a small value wrapper around it.
struct PyRing {
    RingPtr R;

    const FiniteRing& ring() const { return *R; }
    Element parse(const std::string& s) const { return R->parse_element(s); }
    std::string fmt(Element e) const { return R->format_element(e); }
};

PyRing build_ring(const std::string& expression, std::uint64_t cap) {
    BuildOptions opts;
    opts.cap = cap;
    return PyRing{FiniteRing::build(expression, opts)};
}

const std::vector<Element>& named_set(const FiniteRing& R,
                                      const std::string& name) {
    const StructuralCache& S = structural_cache(R);
    if (name == "U") return S.units;
    if (name == "N") return S.nilpotents;
    if (name == "J") return S.radical;
    if (name == "sqrtJ") return S.radical_root;
    if (name == "idem") return S.idempotents;
    throw std::invalid_argument("set: " + name +
                                " not in {U,N,J,sqrtJ,idem}");
}

SweepReport run_theorem(const PyRing& r, const std::string& theorem,
                        const SweepOptions& opts) {
    using Driver =
        std::function<SweepReport(const RingPtr&, const SweepOptions&)>;
    static const std::map<std::string, Driver> drivers = {
        {"cline", sweep_cline},
        {"jacobson", sweep_jacobson},
        {"equiv", sweep_equivalences},
        {"unique", uniqueness_sweep},
        {"reduction", verify_radical_reduction},
        {"zhou-cline", sweep_zhou_cline},
        {"zhou-jacobson", sweep_zhou_jacobson},
    };
    auto it = drivers.find(theorem);
    if (it == drivers.end())
        throw std::invalid_argument(
            "theorem: " + theorem +
            " not in {cline,jacobson,equiv,unique,reduction,zhou-cline,"
            "zhou-jacobson}");
    return it->second(r.R, opts);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() =
        "exact workbench for generalized inverses in finite rings and "
        "rational matrix algebras (C++ core)";

    // The loud failure mode: a theorem-shaped statement did not survive
    // contact with an exhaustive check.  Everything else that goes wrong is
    // a plain ValueError (bad expressions, bad names, cap violations).
    py::register_exception<falsification_error>(m, "FalsificationError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const parse_error& e) {
            std::string msg = "parse error at offset " +
                              std::to_string(e.offset()) + ": " + e.what();
            py::set_error(PyExc_ValueError, msg.c_str());
        } catch (const cap_error& e) {
            py::set_error(PyExc_ValueError, e.what());
        }
    });

    static const SweepOptions kDefaults{};

    py::class_<PyRing>(m, "Ring")
        .def(py::init(&build_ring), py::arg("expression"),
             py::arg("cap") = BuildOptions{}.cap,
             "Build an enumerable ring from an expression such as 'Z12', "
             "'M2(Z2)', 'T2(Z3)' or 'Z4 x Z2'.")
        .def_property_readonly(
            "label", [](const PyRing& r) { return r.R->label(); })
        .def_property_readonly(
            "cardinality",
            [](const PyRing& r) { return r.R->cardinality(); })
        .def("zero", [](const PyRing& r) { return r.fmt(r.R->zero()); })
        .def("one", [](const PyRing& r) { return r.fmt(r.R->one()); })
        .def("elements",
             [](const PyRing& r) {
                 std::vector<std::string> out;
                 out.reserve(r.R->cardinality());
                 for (code_t c = 0; c < r.R->cardinality(); ++c)
                     out.push_back(r.fmt(r.R->element(c)));
                 return out;
             })
        .def("add",
             [](const PyRing& r, const std::string& x, const std::string& y) {
                 return r.fmt(r.R->add(r.parse(x), r.parse(y)));
             })
        .def("sub",
             [](const PyRing& r, const std::string& x, const std::string& y) {
                 return r.fmt(r.R->sub(r.parse(x), r.parse(y)));
             })
        .def("neg",
             [](const PyRing& r, const std::string& x) {
                 return r.fmt(r.R->neg(r.parse(x)));
             })
        .def("mul",
             [](const PyRing& r, const std::string& x, const std::string& y) {
                 return r.fmt(r.R->mul(r.parse(x), r.parse(y)));
             })
        .def("pow",
             [](const PyRing& r, const std::string& x, std::uint64_t k) {
                 return r.fmt(r.R->pow(r.parse(x), k));
             })
        .def("table",
             [](const PyRing& r, const std::string& set_name) {
                 std::vector<std::string> out;
                 for (Element e : named_set(r.ring(), set_name))
                     out.push_back(r.fmt(e));
                 return out;
             },
             py::arg("set"),
             "Sorted canonical strings of a structural subset: U (units), "
             "N (nilpotents), J (Jacobson radical), sqrtJ (elements with a "
             "power in J), idem (idempotents).")
        .def("inverse_json",
             [](const PyRing& r, const std::string& element,
                const std::string& kind) {
                 InverseKind k = inverse_kind_from_name(kind);
                 Element a = r.parse(element);
                 auto cert = inverse_bruteforce(r.ring(), a, k);
                 if (!cert)
                     throw falsification_error(
                         "no " + kind + " inverse in " + r.R->label() +
                         " for a=" + element +
                         "; existence fails in a finite ring");
                 return render_json(certificate_json(r.ring(), *cert));
             },
             py::arg("element"), py::arg("kind") = "gzhou",
             "Certificate document (JSON text) for one inverse, replayed "
             "check by check.")
        .def("classify_json",
             [](const PyRing& r) {
                 return render_json(classify_json(r.ring()));
             },
             "Per-element table document (JSON text): membership flags, "
             "all four inverses, witnesses n and p.")
        .def("verify_json",
             [](const PyRing& r, const std::string& theorem, bool exhaustive,
                std::uint64_t samples, std::uint64_t seed,
                std::optional<std::uint64_t> bound, std::uint64_t budget,
                std::uint64_t power_k, unsigned jobs, bool timings) {
                 SweepOptions opts;
                 opts.exhaustive = exhaustive;
                 opts.samples = samples;
                 opts.seed = seed;
                 opts.bound = bound;
                 opts.budget = budget;
                 opts.power_k = power_k;
                 opts.jobs = jobs;
                 opts.timings = timings;
                 return render_json(
                     sweep_report_json(run_theorem(r, theorem, opts)));
             },
             py::arg("theorem"), py::arg("exhaustive") = kDefaults.exhaustive,
             py::arg("samples") = kDefaults.samples,
             py::arg("seed") = kDefaults.seed,
             py::arg("bound") = std::nullopt,
             py::arg("budget") = kDefaults.budget,
             py::arg("power_k") = kDefaults.power_k,
             py::arg("jobs") = kDefaults.jobs,
             py::arg("timings") = kDefaults.timings,
             "Sweep report document (JSON text) for one theorem id: cline, "
             "jacobson, equiv, unique, reduction, zhou-cline, "
             "zhou-jacobson.")
        .def("__repr__", [](const PyRing& r) {
            return "Ring('" + r.R->label() + "', cardinality=" +
                   std::to_string(r.R->cardinality()) + ")";
        });

    m.def(
        "matrix_inverse_json",
        [](const std::string& literal, const std::string& kind) {
            RationalMatrix A = RationalMatrix::parse(literal);
            return render_json(
                matrix_inverse_json(A, inverse_kind_from_name(kind)));
        },
        py::arg("matrix"), py::arg("kind") = "gzhou",
        "Certificate document (JSON text) for a square rational matrix "
        "literal like '[[0,-1],[1,0]]'; reports conclusive non-existence "
        "with its bound when no exponent can work.");

    m.def(
        "desk_report_json",
        [](unsigned jobs) {
            return render_json(desk_suite_json(run_desk_suite(jobs)));
        },
        py::arg("jobs") = 0,
        "Run the bundled verification suite and return its report "
        "document (JSON text).  Takes tens of seconds.");

    m.attr("default_seed") = py::int_(kDefaults.seed);
}
