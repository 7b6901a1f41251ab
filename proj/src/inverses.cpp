#include "ringlab/inverses.hpp"

#include <stdexcept>
#include <utility>

#include "ringlab/errors.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

const char* inverse_kind_name(InverseKind k) {
    switch (k) {
        case InverseKind::drazin: return "drazin";
        case InverseKind::p_drazin: return "pdrazin";
        case InverseKind::zhou: return "zhou";
        case InverseKind::g_zhou: return "gzhou";
    }
    throw std::logic_error("unreachable inverse kind");
}

InverseKind inverse_kind_from_name(const std::string& name) {
    if (name == "drazin") return InverseKind::drazin;
    if (name == "pdrazin") return InverseKind::p_drazin;
    if (name == "zhou") return InverseKind::zhou;
    if (name == "gzhou") return InverseKind::g_zhou;
    throw std::invalid_argument("unknown inverse kind: " + name);
}

namespace {

// powers[i] = a^i for i in [0, top]; powers[0] = 1
std::vector<Element> power_table(const FiniteRing& R, Element a,
                                 std::uint64_t top) {
    std::vector<Element> p;
    p.reserve(top + 1);
    p.push_back(R.one());
    for (std::uint64_t i = 1; i <= top; ++i) p.push_back(R.mul(p.back(), a));
    return p;
}

// smallest e >= 1 with w^e = 0, scanning the distinct powers of w
std::optional<std::uint64_t> zero_witness(const FiniteRing& R, Element w) {
    PowerOrbit o = R.power_orbit(w);
    for (std::uint64_t e = 0; e < o.orbit.size(); ++e)
        if (R.is_zero(o.orbit[e])) return e + 1;
    return std::nullopt;
}

std::optional<std::uint64_t> residual_witness(const FiniteRing& R, Element w,
                                              InverseKind kind) {
    switch (kind) {
        case InverseKind::drazin:
        case InverseKind::zhou:
            return zero_witness(R, w);
        case InverseKind::p_drazin:
        case InverseKind::g_zhou:
            return in_sqrt_jacobson(R, w);
    }
    return std::nullopt;
}

}  // namespace

CertificateCheck verify_certificate(const FiniteRing& R,
                                    const InverseCertificate& cert) {
    CertificateCheck out;
    Element a = cert.a, b = cert.b;
    Element ab = R.mul(a, b);
    auto push = [&](const char* name, bool holds) {
        out.conditions.emplace_back(name, holds);
    };

    push("b_eq_bab", R.mul(b, ab) == b);
    push("ab_eq_ba", ab == R.mul(b, a));
    push("b_in_comm2", commutes_with_all(R, b, commutant(R, a)));

    bool needs_n = cert.kind != InverseKind::p_drazin;
    push("n_present", !needs_n || cert.n.has_value());

    Element residual = R.zero();
    bool residual_ok = false;
    std::uint64_t n = cert.n.value_or(1);
    switch (cert.kind) {
        case InverseKind::drazin:
            residual = R.sub(R.pow(a, n), R.mul(R.pow(a, n + 1), b));
            residual_ok = R.is_zero(residual);
            break;
        case InverseKind::p_drazin:
            residual = R.sub(a, R.mul(R.mul(a, a), b));
            residual_ok = in_sqrt_jacobson(R, residual).has_value();
            break;
        case InverseKind::zhou:
            residual = R.sub(R.pow(a, n), ab);
            residual_ok = is_nilpotent(R, residual);
            break;
        case InverseKind::g_zhou:
            residual = R.sub(R.pow(a, n), ab);
            residual_ok = in_sqrt_jacobson(R, residual).has_value();
            break;
    }
    push("residual", residual_ok);
    push("w_eq_residual", cert.w == residual);
    push("p_eq_ab", cert.p == ab);
    push("p_idempotent", R.mul(cert.p, cert.p) == cert.p);

    bool wexp_ok = cert.witness_exponent == residual_witness(R, cert.w,
                                                             cert.kind);
    push("witness_exponent", wexp_ok);

    out.ok = true;
    for (auto& [name, holds] : out.conditions) out.ok = out.ok && holds;
    return out;
}

namespace {

InverseCertificate finish_certificate(const FiniteRing& R, InverseKind kind,
                                      Element a, Element b,
                                      std::optional<std::uint64_t> n) {
    InverseCertificate cert;
    cert.kind = kind;
    cert.a = a;
    cert.b = b;
    cert.n = n;
    cert.p = R.mul(a, b);
    switch (kind) {
        case InverseKind::drazin:
            cert.w = R.sub(R.pow(a, *n), R.mul(R.pow(a, *n + 1), b));
            break;
        case InverseKind::p_drazin:
            cert.w = R.sub(a, R.mul(R.mul(a, a), b));
            break;
        case InverseKind::zhou:
        case InverseKind::g_zhou:
            cert.w = R.sub(R.pow(a, *n), cert.p);
            break;
    }
    cert.witness_exponent = residual_witness(R, cert.w, kind);

    CertificateCheck check = verify_certificate(R, cert);
    if (!check.ok) {
        std::string what = "certificate self-check failed in " + R.label() +
                           " for a=" + R.format_element(a) + " kind=" +
                           inverse_kind_name(kind) + ":";
        for (auto& [name, holds] : check.conditions)
            if (!holds) what += " " + name;
        throw falsification_error(what);
    }
    return cert;
}

}  // namespace

std::optional<InverseCertificate> inverse_bruteforce(const FiniteRing& R,
                                                     Element a,
                                                     InverseKind kind) {
    PowerOrbit orbit = R.power_orbit(a);
    std::uint64_t bound = orbit.index + orbit.period;
    std::vector<Element> pows = power_table(R, a, bound + 1);

    std::vector<Element> candidates = kind == InverseKind::drazin
                                          ? commutant(R, a)
                                          : double_commutant(R, a);

    std::optional<Element> found_b;
    std::optional<std::uint64_t> found_n;
    for (Element b : candidates) {
        Element ab = R.mul(a, b);
        if (R.mul(b, ab) != b) continue;
        if (ab != R.mul(b, a)) continue;

        std::optional<std::uint64_t> n;
        switch (kind) {
            case InverseKind::drazin:
                for (std::uint64_t i = 1; i <= bound && !n; ++i)
                    if (pows[i] == R.mul(pows[i + 1], b)) n = i;
                if (!n) continue;
                break;
            case InverseKind::p_drazin:
                if (!in_sqrt_jacobson(R, R.sub(a, R.mul(R.mul(a, a), b))))
                    continue;
                break;
            case InverseKind::zhou:
                for (std::uint64_t i = 1; i <= bound && !n; ++i)
                    if (is_nilpotent(R, R.sub(pows[i], ab))) n = i;
                if (!n) continue;
                break;
            case InverseKind::g_zhou:
                for (std::uint64_t i = 1; i <= bound && !n; ++i)
                    if (in_sqrt_jacobson(R, R.sub(pows[i], ab))) n = i;
                if (!n) continue;
                break;
        }

        if (found_b && *found_b != b)
            throw falsification_error(
                "uniqueness violated in " + R.label() + ": a=" +
                R.format_element(a) + " kind=" + inverse_kind_name(kind) +
                " admits b=" + R.format_element(*found_b) + " and b=" +
                R.format_element(b));
        if (!found_b) {
            found_b = b;
            found_n = n;
        }
    }

    if (!found_b) return std::nullopt;
    return finish_certificate(R, kind, a, *found_b, found_n);
}

InverseCertificate gzhou_constructive(const FiniteRing& R, Element a) {
    PowerOrbit orbit = R.power_orbit(a);
    std::uint64_t k = orbit.index, l = orbit.period;
    std::uint64_t m = l * ((k + l - 1) / l);  // smallest multiple of l >= k
    Element p = R.pow(a, m);                  // idempotent: a^{m+l} = a^m
    Element u = R.add(R.pow(a, m), R.sub(R.one(), p));  // = 1 here, by n = m
    Element b = R.mul(unit_inverse(R, u), p);
    Element inv = R.mul(R.pow(a, m - 1), b);
    return finish_certificate(R, InverseKind::g_zhou, a, inv, m);
}

std::optional<std::uint64_t> characterization_n(const FiniteRing& R, Element a,
                                                RadicalKind radical) {
    PowerOrbit orbit = R.power_orbit(a);
    std::uint64_t bound = orbit.index + orbit.period;
    std::vector<Element> pows = power_table(R, a, bound + 1);
    for (std::uint64_t n = 1; n <= bound; ++n) {
        Element r = R.sub(a, pows[n + 1]);
        bool in = radical == RadicalKind::nilpotents
                      ? is_nilpotent(R, r)
                      : in_sqrt_jacobson(R, r).has_value();
        if (in) return n;
    }
    return std::nullopt;
}

Element times_int(const FiniteRing& R, const bigint& n, Element x) {
    if (n < 0) return times_int(R, -n, R.neg(x));
    Element acc = R.zero();
    Element base = x;
    bigint k = n;
    while (k > 0) {
        if (boost::multiprecision::bit_test(k, 0)) acc = R.add(acc, base);
        k >>= 1;
        if (k > 0) base = R.add(base, base);
    }
    return acc;
}

namespace {

// sum_{i=0..m} C(2m, i) q^{2m-i} r^i for commuting q, r
Element binomial_partial_sum(const FiniteRing& R, Element q, Element r,
                             std::uint64_t m) {
    std::vector<Element> qp = power_table(R, q, 2 * m);
    std::vector<Element> rp = power_table(R, r, m);
    Element sum = R.zero();
    bigint coeff = 1;  // C(2m, 0)
    for (std::uint64_t i = 0; i <= m; ++i) {
        Element term = R.mul(qp[2 * m - i], rp[i]);
        sum = R.add(sum, times_int(R, coeff, term));
        coeff = coeff * bigint(2 * m - i) / bigint(i + 1);
    }
    return sum;
}

}  // namespace

BinomialLift lift_idempotent_binomial(const FiniteRing& R, Element a,
                                      bool alternate_factor) {
    auto n = characterization_n(R, a, RadicalKind::radical_root);
    if (!n)
        throw std::invalid_argument(
            "no n with a - a^{n+1} inside sqrt J(R); nothing to lift");
    Element residual = R.sub(a, R.pow(a, *n + 1));
    auto m = in_sqrt_jacobson(R, residual);
    if (!m) throw std::logic_error("characterization_n returned a bad n");

    BinomialLift out;
    out.n = *n;
    out.m = *m;
    Element an = R.pow(a, *n);
    out.e = binomial_partial_sum(R, an, R.sub(R.one(), an), *m);
    Element defect = R.sub(R.mul(out.e, out.e), out.e);
    out.defect_in_radical = in_jacobson_radical(R, defect);
    if (!out.defect_in_radical)
        throw falsification_error("binomial partial sum defect e^2 - e "
                                  "escaped J(R) in " +
                                  R.label() + " at a=" + R.format_element(a));

    // cubic nil-lifting: each step squares the defect, and J(R) is nilpotent
    Element f = out.e;
    for (int guard = 0; R.mul(f, f) != f; ++guard) {
        if (guard > 64)
            throw falsification_error("idempotent lifting failed to settle");
        Element f2 = R.mul(f, f);
        Element f3 = R.mul(f2, f);
        f = R.sub(times_int(R, 3, f2), times_int(R, 2, f3));
    }
    out.f = f;
    if (!in_jacobson_radical(R, R.sub(f, out.e)))
        throw falsification_error("lifted idempotent drifted outside e + J(R)");

    if (alternate_factor) {
        // alternate reading of the expansion factor: (a - a^n)^i; its defect
        // membership is reported, never assumed
        out.alternate_e =
            binomial_partial_sum(R, an, R.sub(a, an), *m);
        Element alt = *out.alternate_e;
        out.alternate_defect_in_radical =
            in_jacobson_radical(R, R.sub(R.mul(alt, alt), alt));
    }
    return out;
}

CertificateTable::CertificateTable(const FiniteRing& R, InverseKind kind,
                                   unsigned jobs)
    : ring_(&R), kind_(kind), certs_(R.cardinality()) {
    structural_cache(R);  // prime shared caches before fanning out
    parallel_chunks(R.cardinality(), jobs,
                    [&](unsigned, std::uint64_t begin, std::uint64_t end) {
                        for (code_t c = begin; c < end; ++c) {
                            auto cert = inverse_bruteforce(R, R.element(c), kind);
                            if (!cert)
                                throw falsification_error(
                                    "no " +
                                    std::string(inverse_kind_name(kind)) +
                                    " inverse in " + R.label() + " for a=" +
                                    R.format_element(R.element(c)) +
                                    "; existence fails in a finite ring");
                            certs_[c] = std::move(*cert);
                        }
                    });
}

const InverseCertificate& CertificateTable::at(Element a) const {
    if (a.ring_id != ring_->id() || a.code >= certs_.size())
        throw std::invalid_argument("element is not from this table's ring");
    return certs_[a.code];
}

}  // namespace ringlab
