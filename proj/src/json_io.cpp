#include "ringlab/json_io.hpp"

#include <algorithm>
#include <utility>

#include "ringlab/errors.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

json opt_u64(const std::optional<std::uint64_t>& v) {
    return v ? json(*v) : json(nullptr);
}

json checks_json(const std::vector<std::pair<std::string, bool>>& conds) {
    json checks = json::object();
    for (const auto& [name, ok] : conds) checks[name] = ok;
    return checks;
}

// Exact-matrix replay: the four kinds share the fixed-point/commutation/
// idempotent conditions and differ in the residual requirement.
struct MatrixCertificate {
    bool exists = false;
    RationalMatrix b, p, w;
    std::optional<std::uint64_t> n;
    std::optional<std::uint64_t> w_pow;
    std::uint64_t conclusive_bound = 0;  // set when exists is false
    std::vector<std::pair<std::string, bool>> checks;
};

MatrixCertificate matrix_certificate(const RationalMatrix& A,
                                     InverseKind kind) {
    MatrixCertificate cert;
    const std::uint32_t k = A.dim();

    if (kind == InverseKind::zhou || kind == InverseKind::g_zhou) {
        auto gz = gzhou_matrix(A);  // the two kinds coincide here: J = 0
        if (!gz) {
            cert.conclusive_bound = period_bound(k);
            return cert;
        }
        cert.exists = true;
        cert.b = gz->inverse;
        cert.n = gz->n;
        cert.w = mat_sub(mat_pow(A, gz->n), mat_mul(A, cert.b));
    } else {
        cert.exists = true;
        cert.b = drazin_matrix(A);
        if (kind == InverseKind::drazin) {
            // index: smallest n >= 1 with A^n = A^{n+1} b; n <= dim + 1
            for (std::uint64_t n = 1; n <= k + 1; ++n)
                if (mat_pow(A, n) ==
                    mat_mul(mat_pow(A, n + 1), cert.b)) {
                    cert.n = n;
                    break;
                }
            cert.w = mat_sub(mat_pow(A, *cert.n),
                             mat_mul(mat_pow(A, *cert.n + 1), cert.b));
        } else {
            // a - a^2 b: the nil part of A, nilpotent for every A
            cert.w = mat_sub(A, mat_mul(mat_pow(A, 2), cert.b));
        }
    }

    auto wexp = is_nilpotent_matrix(cert.w);
    if (wexp) cert.w_pow = *wexp;
    RationalMatrix ab = mat_mul(A, cert.b);
    cert.p = ab;
    cert.checks.emplace_back(
        "b_eq_bab", mat_mul(cert.b, mat_mul(A, cert.b)) == cert.b);
    cert.checks.emplace_back("ab_eq_ba", ab == mat_mul(cert.b, A));
    cert.checks.emplace_back("p_eq_ab", cert.p == ab);
    cert.checks.emplace_back("p_idempotent",
                             mat_mul(cert.p, cert.p) == cert.p);
    if (kind == InverseKind::drazin)
        cert.checks.emplace_back("residual", cert.w.is_zero());
    else
        cert.checks.emplace_back("residual_nilpotent", wexp.has_value());
    return cert;
}

}  // namespace

std::string render_json(const json& doc) { return doc.dump(2) + "\n"; }

json certificate_json(const FiniteRing& R, const InverseCertificate& cert) {
    json doc = json::object();
    doc["kind"] = inverse_kind_name(cert.kind);
    doc["a"] = R.format_element(cert.a);
    doc["b"] = R.format_element(cert.b);
    doc["n"] = opt_u64(cert.n);
    doc["p"] = R.format_element(cert.p);
    doc["w"] = R.format_element(cert.w);
    doc["witness_exponents"] = {{"n", opt_u64(cert.n)},
                                {"w_pow", opt_u64(cert.witness_exponent)}};
    doc["checks"] = checks_json(verify_certificate(R, cert).conditions);
    return doc;
}

json element_set_json(const FiniteRing& R, std::vector<Element> elems) {
    std::sort(elems.begin(), elems.end(),
              [](Element x, Element y) { return x.code < y.code; });
    json arr = json::array();
    for (Element e : elems) arr.push_back(R.format_element(e));
    return arr;
}

json sweep_report_json(const SweepReport& rep) {
    json doc = json::object();
    doc["theorem"] = rep.theorem;
    doc["ring"] = rep.ring;
    doc["population"] = rep.population;
    doc["passes"] = rep.passes;
    doc["fails"] = rep.fails;
    doc["counterexamples"] = rep.counterexamples;
    doc["notes"] = rep.notes;
    doc["duration_ms"] = rep.duration_ms;
    doc["seed"] = rep.seed;
    return doc;
}

json desk_suite_json(const DeskSuiteResult& suite) {
    json doc = json::object();
    doc["suite"] = "desk";
    doc["pass"] = suite.pass;
    json arr = json::array();
    for (const auto& c : suite.criteria) {
        json jc = json::object();
        jc["id"] = c.id;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        jc["duration_ms"] = c.duration_ms;
        jc["limit_ms"] = c.limit_ms;
        arr.push_back(std::move(jc));
    }
    doc["criteria"] = std::move(arr);
    return doc;
}

json classify_json(const FiniteRing& R) {
    const StructuralCache& S = structural_cache(R);
    json rows = json::array();
    for (code_t c = 0; c < R.cardinality(); ++c) {
        Element a = R.element(c);
        auto pick = [&](InverseKind kind) {
            auto cert = inverse_bruteforce(R, a, kind);
            if (!cert)
                throw falsification_error(
                    "no " + std::string(inverse_kind_name(kind)) +
                    " inverse in " + R.label() + " for a=" +
                    R.format_element(a) +
                    "; existence fails in a finite ring");
            return *cert;
        };
        InverseCertificate gz = pick(InverseKind::g_zhou);
        json row = json::object();
        row["a"] = R.format_element(a);
        row["unit"] = S.is_unit[c] != 0;
        row["nilpotent"] = S.is_nilpotent[c] != 0;
        row["in_J"] = S.in_radical[c] != 0;
        row["in_sqrtJ"] = S.in_radical_root[c] != 0;
        row["idempotent"] = S.is_idempotent[c] != 0;
        row["drazin"] = R.format_element(pick(InverseKind::drazin).b);
        row["pdrazin"] = R.format_element(pick(InverseKind::p_drazin).b);
        row["zhou"] = R.format_element(pick(InverseKind::zhou).b);
        row["gzhou"] = R.format_element(gz.b);
        row["n"] = gz.n.value_or(0);
        row["p"] = R.format_element(gz.p);
        rows.push_back(std::move(row));
    }
    json doc = json::object();
    doc["ring"] = R.label();
    doc["rows"] = std::move(rows);
    return doc;
}

json matrix_inverse_json(const RationalMatrix& A, InverseKind kind) {
    MatrixCertificate cert = matrix_certificate(A, kind);
    json doc = json::object();
    doc["kind"] = inverse_kind_name(kind);
    doc["a"] = A.to_string();
    doc["exists"] = cert.exists;
    if (!cert.exists) {
        doc["conclusive_bound"] = cert.conclusive_bound;
        return doc;
    }
    doc["b"] = cert.b.to_string();
    doc["n"] = opt_u64(cert.n);
    doc["p"] = cert.p.to_string();
    doc["w"] = cert.w.to_string();
    doc["witness_exponents"] = {{"n", opt_u64(cert.n)},
                                {"w_pow", opt_u64(cert.w_pow)}};
    doc["checks"] = checks_json(cert.checks);
    return doc;
}

std::string csv_escape(const std::string& field) {
    bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string::npos ||
        (!field.empty() && (field.front() == ' ' || field.back() == ' '));
    if (!needs_quotes) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

namespace {

std::string field_rows(
    const std::vector<std::pair<std::string, std::string>>& rows) {
    std::string out = "field,value\n";
    for (const auto& [k, v] : rows)
        out += csv_escape(k) + "," + csv_escape(v) + "\n";
    return out;
}

std::string opt_text(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

std::string element_set_csv(const FiniteRing& R,
                            std::vector<Element> elems) {
    std::sort(elems.begin(), elems.end(),
              [](Element x, Element y) { return x.code < y.code; });
    std::string out = "element\n";
    for (Element e : elems) out += csv_escape(R.format_element(e)) + "\n";
    return out;
}

std::string certificate_csv(const FiniteRing& R,
                            const InverseCertificate& cert) {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("kind", inverse_kind_name(cert.kind));
    rows.emplace_back("a", R.format_element(cert.a));
    rows.emplace_back("b", R.format_element(cert.b));
    rows.emplace_back("n", opt_text(cert.n));
    rows.emplace_back("p", R.format_element(cert.p));
    rows.emplace_back("w", R.format_element(cert.w));
    rows.emplace_back("w_pow", opt_text(cert.witness_exponent));
    for (const auto& [name, ok] :
         verify_certificate(R, cert).conditions)
        rows.emplace_back("check:" + name, ok ? "true" : "false");
    return field_rows(rows);
}

std::string sweep_report_csv(const SweepReport& rep) {
    std::string out = "theorem,ring,population,passes,fails,duration_ms,seed\n";
    out += csv_escape(rep.theorem) + "," + csv_escape(rep.ring) + "," +
           std::to_string(rep.population) + "," +
           std::to_string(rep.passes) + "," + std::to_string(rep.fails) +
           "," + std::to_string(rep.duration_ms) + "," +
           std::to_string(rep.seed) + "\n";
    return out;
}

std::string matrix_inverse_csv(const RationalMatrix& A, InverseKind kind) {
    MatrixCertificate cert = matrix_certificate(A, kind);
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("kind", inverse_kind_name(kind));
    rows.emplace_back("a", A.to_string());
    rows.emplace_back("exists", cert.exists ? "true" : "false");
    if (!cert.exists) {
        rows.emplace_back("conclusive_bound",
                          std::to_string(cert.conclusive_bound));
        return field_rows(rows);
    }
    rows.emplace_back("b", cert.b.to_string());
    rows.emplace_back("n", opt_text(cert.n));
    rows.emplace_back("p", cert.p.to_string());
    rows.emplace_back("w", cert.w.to_string());
    rows.emplace_back("w_pow", opt_text(cert.w_pow));
    for (const auto& [name, ok] : cert.checks)
        rows.emplace_back("check:" + name, ok ? "true" : "false");
    return field_rows(rows);
}

}  // namespace ringlab
