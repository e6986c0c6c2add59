// Python bindings for the skeinlab core: invariant evaluation, Temperley-Lieb
// data, fusion-side matrices and the verification suites.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "skeinlab/fusion.hpp"
#include "skeinlab/skein.hpp"
#include "skeinlab/tl.hpp"
#include "skeinlab/verify.hpp"

namespace py = pybind11;
using namespace skeinlab;

namespace {

MorseDiagram diagram_from_text(const std::string& text) {
    // Braid inputs carry the "Bn:" header; anything else is a Morse word.
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == 'B' && text.find(':') != std::string::npos)
        return braid_closure(parse_braid(text));
    return parse_morse(text);
}

std::string evaluate(const std::string& invariant, const std::string& diagram,
                     std::optional<long> cap, std::optional<unsigned> seed) {
    MorseDiagram d = diagram_from_text(diagram);
    SkeinOptions opts;
    if (cap && *cap > 0) opts.cap = static_cast<std::size_t>(*cap);
    opts.shuffle_seed = seed;
    if (invariant == "bracket")
        return format_poly(two_term_state_sum(d, BracketParams::bracket()));
    if (invariant == "bracket-twin")
        return format_poly(two_term_state_sum(d, BracketParams::bracket_twin()));
    if (invariant == "homfly-framed")
        return format_poly(two_term_state_sum(d, BracketParams::homfly_framed()));
    if (invariant.rfind("trivial:", 0) == 0) {
        const std::string which = invariant.substr(8);
        GaussInt alpha = which == "+1"   ? GaussInt(1)
                         : which == "-1" ? GaussInt(-1)
                         : which == "+i" ? GaussInt::i()
                         : which == "-i" ? GaussInt(0, -1)
                                         : throw SkeinError("unknown trivial evaluator");
        std::ostringstream out;
        out << trivial_eval(d, alpha);
        return out.str();
    }
    return format_poly(kauffman_poly(d, variant_from_name(invariant), opts));
}

py::dict suite_to_dict(const SuiteResult& r) {
    py::dict out;
    out["suite"] = r.suite;
    out["pass"] = r.all_pass();
    py::list checks;
    for (const auto& c : r.checks) {
        py::dict e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.append(e);
    }
    out["checks"] = checks;
    return out;
}

}  // namespace

PYBIND11_MODULE(_skeinlab, m) {
    m.doc() = "Exact framed link invariants, Temperley-Lieb representations and "
              "fusion-category F-matrix verification";

    py::register_exception<ParseError>(m, "PolyParseError", PyExc_ValueError);
    py::register_exception<DiagramError>(m, "DiagramError", PyExc_ValueError);
    py::register_exception<TLError>(m, "TLError", PyExc_ValueError);
    py::register_exception<SkeinError>(m, "SkeinError", PyExc_RuntimeError);
    py::register_exception<FusionError>(m, "FusionError", PyExc_ValueError);

    // --- skein ---
    m.def("evaluate", &evaluate, py::arg("invariant"), py::arg("diagram"),
          py::arg("cap") = std::nullopt, py::arg("seed") = std::nullopt,
          "Evaluate an invariant (bracket, bracket-twin, homfly-framed, dubrovnik, "
          "kauffman, dubrovnik-twin, kauffman-twin, trivial:+1|-1|+i|-i) of a braid "
          "word (\"B3: 1 -2\", closure taken) or Morse word; returns canonical text.");
    m.def(
        "lickorish_ok",
        [](const std::string& diagram) { return lickorish_check(diagram_from_text(diagram)).ok; },
        py::arg("diagram"),
        "Check Dubrovnik(a,z) = i^-w (-1)^c Kauffman(ia,-iz) on one diagram.");
    m.def(
        "local_writhe",
        [](const std::string& diagram) { return local_writhe(diagram_from_text(diagram)); },
        py::arg("diagram"));
    m.def(
        "oriented_writhe",
        [](const std::string& diagram) { return oriented_writhe(diagram_from_text(diagram)); },
        py::arg("diagram"));
    m.def(
        "component_count",
        [](const std::string& diagram) { return component_count(diagram_from_text(diagram)); },
        py::arg("diagram"));

    // --- polynomials ---
    m.def(
        "poly_canonical",
        [](const std::string& text) { return format_poly(parse_poly(text)); }, py::arg("text"),
        "Parse a polynomial expression and return its canonical text form.");
    m.def(
        "poly_json",
        [](const std::string& text) { return poly_to_json(parse_poly(text)); }, py::arg("text"));

    // --- Temperley-Lieb ---
    m.def(
        "tl_trace",
        [](const std::string& braid) {
            const LaurentPoly a = LaurentPoly::monomial("a", 1);
            const LaurentPoly b = LaurentPoly::monomial("b", 1);
            return format_poly(trace_closure(zeta(parse_braid(braid), a, b), tl_delta(a, b)));
        },
        py::arg("braid"), "Markov trace of the TL image of a braid, symbolic in a, b.");
    m.def("tl_dim", [](int n) { return tl_dim(n); }, py::arg("n"));
    m.def(
        "tl_check_representation",
        [](int n) {
            const LaurentPoly a = LaurentPoly::monomial("a", 1);
            const LaurentPoly b = LaurentPoly::monomial("b", 1);
            auto rep = braid_relation_check(n, a, b);
            py::dict out;
            out["braid_relations"] = rep.braid_relations;
            out["commuting_relations"] = rep.commuting_relations;
            out["inverses"] = rep.inverses;
            out["hecke"] = rep.hecke;
            out["pass"] = rep.all();
            return out;
        },
        py::arg("n"));

    // --- fusion ---
    m.def(
        "qdims",
        [](const std::string& ring_json, int q) {
            return qdims(FusionRingData::from_json(ring_json), q).d;
        },
        py::arg("ring_json"), py::arg("q"),
        "Quantum dimensions of a fusion ring given as JSON {labels, dual, N}.");
    m.def("fibonacci_ring", []() { return FusionRingData::fibonacci().to_json(); });
    m.def("ising_ring", []() { return FusionRingData::ising().to_json(); });
    m.def(
        "f_matrix",
        [](double d_q, const std::vector<double>& dims, int kappa, const std::string& variant) {
            FusionVariant v = variant == "kauffman" ? FusionVariant::Kauffman
                                                    : FusionVariant::Dubrovnik;
            return f_matrix(d_q, dims, kappa, v).M;
        },
        py::arg("d_q"), py::arg("dims"), py::arg("kappa") = 1,
        py::arg("variant") = "dubrovnik");
    m.def(
        "verify_f_matrix",
        [](double d_q, const std::vector<double>& dims, int kappa, const std::string& variant) {
            FusionVariant v = variant == "kauffman" ? FusionVariant::Kauffman
                                                    : FusionVariant::Dubrovnik;
            const FIdentityReport r = verify_f_identities(f_matrix(d_q, dims, kappa, v));
            py::dict out;
            out["pass"] = r.ok();
            out["trace"] = r.trace;
            out["multiplicity_plus"] = r.mult_plus;
            out["multiplicity_minus"] = r.mult_minus;
            out["max_residual"] =
                std::max({r.first_row, r.column_sum, r.symmetry, r.involution, r.orthogonality,
                          r.eigen_residual});
            return out;
        },
        py::arg("d_q"), py::arg("dims"), py::arg("kappa") = 1,
        py::arg("variant") = "dubrovnik");
    m.def(
        "skein_consistency_k1",
        [](std::complex<double> beta, int kappa) {
            const K1Report r = skein_consistency_k1(beta, kappa);
            py::dict out;
            out["alpha"] = r.alpha;
            out["theta"] = r.theta;
            out["d_q"] = r.d_q;
            out["twist_residual"] = r.twist_residual;
            return out;
        },
        py::arg("beta"), py::arg("kappa") = 1);
    m.def(
        "skein_consistency_k2",
        [](std::complex<double> alpha, std::complex<double> beta, std::complex<double> gamma,
           int kappa) {
            const K2Report r = skein_consistency_k2(alpha, beta, gamma, kappa);
            py::dict out;
            out["variant"] = fusion_variant_name(r.variant);
            out["degenerate"] = r.degenerate;
            if (r.degenerate) out["degenerate_class"] = r.degenerate_class;
            out["d_q"] = r.d_q;
            out["residual"] = r.residual;
            return out;
        },
        py::arg("alpha"), py::arg("beta"), py::arg("gamma"), py::arg("kappa") = 1);
    m.def(
        "new_bases",
        [](double d_q, const std::vector<double>& dims, const std::string& variant) {
            FusionVariant v = variant == "kauffman" ? FusionVariant::Kauffman
                                                    : FusionVariant::Dubrovnik;
            const NewBasesReport r = new_bases(f_matrix(d_q, dims, 1, v));
            py::dict out;
            out["pass"] = r.ok();
            out["dim_v1"] = r.dim_v1;
            out["dim_vm1"] = r.dim_vm1;
            out["gram_det"] = r.gram_det;
            out["rotate_plus_residual"] = r.rotate_plus_residual;
            return out;
        },
        py::arg("d_q"), py::arg("dims"), py::arg("variant") = "dubrovnik");

    // --- verification suites ---
    m.def(
        "run_suite",
        [](const std::string& name) {
            py::list out;
            for (const auto& r : run_suites(name)) out.append(suite_to_dict(r));
            return out;
        },
        py::arg("name"), "Run a verification suite: laurent, tl, skein, fusion, lickorish, all.");
}
