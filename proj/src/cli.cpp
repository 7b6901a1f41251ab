#include "ringlab/cli.hpp"

#include <functional>
#include <map>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "ringlab/desk_suite.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/exact_matrix.hpp"
#include "ringlab/identities.hpp"
#include "ringlab/inverses.hpp"
#include "ringlab/json_io.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

// The exact-matrix backends are addressed as Q<dimension>; they are not
// enumerable, so only the inverse verb accepts them.
std::optional<std::uint32_t> matrix_ring_dimension(const std::string& expr) {
    if (expr.size() == 2 && expr[0] == 'Q' && expr[1] >= '1' &&
        expr[1] <= '3')
        return static_cast<std::uint32_t>(expr[1] - '0');
    return std::nullopt;
}

RingPtr build_enumerable(const std::string& expr, std::uint64_t cap) {
    if (matrix_ring_dimension(expr))
        throw std::invalid_argument(
            "ring '" + expr +
            "' is not enumerable; this verb needs a finite ring expression");
    BuildOptions opts;
    opts.cap = cap;
    return FiniteRing::build(expr, opts);
}

int cmd_table(std::ostream& out, const std::string& ring_expr,
              const std::string& set, const std::string& format,
              std::uint64_t cap) {
    RingPtr R = build_enumerable(ring_expr, cap);
    std::vector<Element> elems;
    if (set == "U")
        elems = units(*R);
    else if (set == "N")
        elems = nilpotents(*R);
    else if (set == "J")
        elems = jacobson_radical(*R);
    else if (set == "sqrtJ")
        elems = sqrt_jacobson(*R);
    else
        elems = idempotents(*R);
    if (format == "csv")
        out << element_set_csv(*R, std::move(elems));
    else
        out << render_json(element_set_json(*R, std::move(elems)));
    return 0;
}

int cmd_inverse(std::ostream& out, const std::string& ring_expr,
                const std::string& elem_expr, const std::string& kind_name,
                const std::string& format, std::uint64_t cap) {
    InverseKind kind = inverse_kind_from_name(kind_name);
    if (auto dim = matrix_ring_dimension(ring_expr)) {
        RationalMatrix A = RationalMatrix::parse(elem_expr);
        if (A.dim() != *dim)
            throw std::invalid_argument(
                "element is " + std::to_string(A.dim()) + "x" +
                std::to_string(A.dim()) + " but ring " + ring_expr +
                " expects " + std::to_string(*dim) + "x" +
                std::to_string(*dim));
        if (format == "csv")
            out << matrix_inverse_csv(A, kind);
        else
            out << render_json(matrix_inverse_json(A, kind));
        return 0;
    }
    RingPtr R = build_enumerable(ring_expr, cap);
    Element a = R->parse_element(elem_expr);
    auto cert = inverse_bruteforce(*R, a, kind);
    if (!cert)
        throw falsification_error(
            "no " + std::string(inverse_kind_name(kind)) + " inverse in " +
            R->label() + " for a=" + R->format_element(a) +
            "; existence fails in a finite ring");
    if (format == "csv")
        out << certificate_csv(*R, *cert);
    else
        out << render_json(certificate_json(*R, *cert));
    return 0;
}

int cmd_classify(std::ostream& out, const std::string& ring_expr,
                 const std::string& format, std::uint64_t cap) {
    RingPtr R = build_enumerable(ring_expr, cap);
    json doc = classify_json(*R);

    if (format == "csv") {
        std::string text =
            "a,unit,nilpotent,in_J,in_sqrtJ,idempotent,drazin,pdrazin,zhou,"
            "gzhou,n,p\n";
        auto flag = [](const json& v) { return v.get<bool>() ? "true" : "false"; };
        for (const json& r : doc["rows"]) {
            text += csv_escape(r["a"].get<std::string>());
            text += std::string(",") + flag(r["unit"]) + "," +
                    flag(r["nilpotent"]) + "," + flag(r["in_J"]) + "," +
                    flag(r["in_sqrtJ"]) + "," + flag(r["idempotent"]) + ",";
            text += csv_escape(r["drazin"].get<std::string>()) + "," +
                    csv_escape(r["pdrazin"].get<std::string>()) + "," +
                    csv_escape(r["zhou"].get<std::string>()) + "," +
                    csv_escape(r["gzhou"].get<std::string>()) + "," +
                    std::to_string(r["n"].get<std::uint64_t>()) + "," +
                    csv_escape(r["p"].get<std::string>()) + "\n";
        }
        out << text;
        return 0;
    }
    out << render_json(doc);
    return 0;
}

int cmd_verify(std::ostream& out, const std::string& theorem,
               const std::string& ring_expr, const SweepOptions& opts,
               const std::string& format, std::uint64_t cap) {
    RingPtr R = build_enumerable(ring_expr, cap);
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
    SweepReport rep = drivers.at(theorem)(R, opts);
    if (format == "csv")
        out << sweep_report_csv(rep);
    else
        out << render_json(sweep_report_json(rep));
    return rep.fails > 0 ? 2 : 0;
}

int cmd_report(std::ostream& out, const std::string& suite_name,
               unsigned jobs, const std::string& format) {
    (void)suite_name;  // only "desk" is accepted by the option check
    DeskSuiteResult suite = run_desk_suite(jobs);
    if (format == "csv") {
        std::string text = "id,name,pass,duration_ms,limit_ms,detail\n";
        for (const auto& c : suite.criteria)
            text += csv_escape(c.id) + "," + csv_escape(c.name) + "," +
                    (c.pass ? "true" : "false") + "," +
                    std::to_string(c.duration_ms) + "," +
                    std::to_string(c.limit_ms) + "," +
                    csv_escape(c.detail) + "\n";
        out << text;
    } else {
        out << render_json(desk_suite_json(suite));
    }
    return suite.pass ? 0 : 2;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{
        "exact workbench for generalized inverses in finite rings and "
        "rational matrix algebras"};
    app.require_subcommand(1);

    struct Common {
        std::string format = "json";
        std::uint64_t cap = 65536;
    };
    auto add_common = [&](CLI::App* cmd, Common& c) {
        cmd->add_option("--format", c.format, "output format")
            ->check(CLI::IsMember({"json", "csv"}));
        cmd->add_option("--cap", c.cap,
                        "largest constructible ring cardinality");
    };

    auto* table = app.add_subcommand(
        "table", "list a structural subset of a finite ring");
    std::string table_ring, table_set;
    Common table_common;
    table->add_option("ring", table_ring, "ring expression")->required();
    table
        ->add_option("--set", table_set,
                     "U=units, N=nilpotents, J=radical, sqrtJ=radical root, "
                     "idem=idempotents")
        ->required()
        ->check(CLI::IsMember({"U", "N", "J", "sqrtJ", "idem"}));
    add_common(table, table_common);

    auto* inverse = app.add_subcommand(
        "inverse", "compute one generalized inverse with its certificate");
    std::string inv_ring, inv_elem, inv_kind = "gzhou";
    Common inv_common;
    inverse->add_option("ring", inv_ring, "ring expression or Q1/Q2/Q3")
        ->required();
    inverse->add_option("element", inv_elem, "element literal")->required();
    inverse->add_option("--kind", inv_kind, "inverse notion")
        ->check(CLI::IsMember({"drazin", "pdrazin", "zhou", "gzhou"}));
    add_common(inverse, inv_common);

    auto* classify = app.add_subcommand(
        "classify", "per-element table of inverses and memberships");
    std::string cls_ring;
    Common cls_common;
    classify->add_option("ring", cls_ring, "ring expression")->required();
    add_common(classify, cls_common);

    auto* verify = app.add_subcommand(
        "verify", "sweep one theorem over a finite ring");
    std::string ver_theorem, ver_ring;
    Common ver_common;
    SweepOptions sweep;
    std::uint64_t ver_bound = 0;
    unsigned ver_jobs = 0;
    verify->add_option("theorem", ver_theorem, "theorem to sweep")
        ->required()
        ->check(CLI::IsMember({"cline", "jacobson", "equiv", "unique",
                               "reduction", "zhou-cline", "zhou-jacobson"}));
    verify->add_option("ring", ver_ring, "ring expression")->required();
    verify->add_flag("--exhaustive", sweep.exhaustive,
                     "force exhaustive scans regardless of ring size");
    verify->add_option("--samples", sweep.samples,
                       "rejection-sampling attempts on large rings");
    verify->add_option("--seed", sweep.seed, "sampling seed");
    auto* bound_opt = verify->add_option(
        "--bound", ver_bound, "override the existential exponent bound");
    verify->add_option("--budget", sweep.budget,
                       "cap on generated quadruple cases (0 = no cap)");
    verify->add_option("--jobs", ver_jobs, "worker threads (0 = hardware)");
    verify->add_flag("--timings", sweep.timings,
                     "record wall-clock duration in the report");
    add_common(verify, ver_common);

    auto* report = app.add_subcommand(
        "report", "run a bundled verification suite");
    std::string rep_suite = "desk";
    unsigned rep_jobs = 0;
    Common rep_common;
    report->add_option("--suite", rep_suite, "suite name")
        ->check(CLI::IsMember({"desk"}));
    report->add_option("--jobs", rep_jobs, "worker threads (0 = hardware)");
    add_common(report, rep_common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (table->parsed())
            return cmd_table(out, table_ring, table_set, table_common.format,
                             table_common.cap);
        if (inverse->parsed())
            return cmd_inverse(out, inv_ring, inv_elem, inv_kind,
                               inv_common.format, inv_common.cap);
        if (classify->parsed())
            return cmd_classify(out, cls_ring, cls_common.format,
                                cls_common.cap);
        if (verify->parsed()) {
            sweep.jobs = ver_jobs;
            if (bound_opt->count() > 0) sweep.bound = ver_bound;
            return cmd_verify(out, ver_theorem, ver_ring, sweep,
                              ver_common.format, ver_common.cap);
        }
        return cmd_report(out, rep_suite, rep_jobs, rep_common.format);
    } catch (const parse_error& e) {
        err << "parse error at offset " << e.offset() << ": " << e.what()
            << "\n";
        return 1;
    } catch (const cap_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const falsification_error& e) {
        err << "FALSIFICATION: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ringlab
