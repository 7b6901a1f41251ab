#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ringlab/desk_suite.hpp"
#include "ringlab/exact_matrix.hpp"
#include "ringlab/identities.hpp"
#include "ringlab/inverses.hpp"
#include "ringlab/ring.hpp"

namespace ringlab {

// Field order is part of the output contract (reports must be byte-stable),
// so everything serializes through the order-preserving document type.
using json = nlohmann::ordered_json;

// Renders a document the way every front end prints it: two-space indent
// and a trailing newline, one document per invocation.
std::string render_json(const json& doc);

// {kind, a, b, n, p, w, witness_exponents, checks}.  n is null for kinds
// without an exponent; witness_exponents bundles the existential exponent n
// with the witness power w_pow (smallest e with w^e = 0, resp. w^e in J);
// checks replays every definitional condition through verify_certificate,
// in replay order.
json certificate_json(const FiniteRing& R, const InverseCertificate& cert);

// Sorted (by enumeration code) list of canonical element strings; the whole
// document for the `table` verb.
json element_set_json(const FiniteRing& R, std::vector<Element> elems);

// {theorem, ring, population, passes, fails, counterexamples, notes,
//  duration_ms, seed}.
json sweep_report_json(const SweepReport& rep);

// {ring, rows: [...]}: one row per element in enumeration order with its
// membership flags (unit/nilpotent/in_J/in_sqrtJ/idempotent), the four
// brute-force inverse values, and the existential witnesses (n, p) of the
// radical-relaxed power inverse.  Throws falsification_error if any element
// of the finite ring lacks an inverse (impossible unless the library is
// wrong — finite rings are periodic).
json classify_json(const FiniteRing& R);

// {suite: "desk", pass, criteria: [{id, name, pass, detail, duration_ms,
//  limit_ms}, ...]}.
json desk_suite_json(const DeskSuiteResult& suite);

// Exact-matrix analog of certificate_json for the kinds that may not exist
// over the rationals: on success the same shape plus "exists": true; when
// no inverse exists, {kind, a, exists: false, conclusive_bound} where the
// bound makes the negative conclusive (no exponent beyond it can work).
json matrix_inverse_json(const RationalMatrix& A, InverseKind kind);

// CSV renderings (RFC-style quoting).  They carry the scalar content of the
// corresponding JSON document; transcripts and notes stay JSON-only.
std::string element_set_csv(const FiniteRing& R, std::vector<Element> elems);
std::string certificate_csv(const FiniteRing& R,
                            const InverseCertificate& cert);
std::string sweep_report_csv(const SweepReport& rep);
std::string matrix_inverse_csv(const RationalMatrix& A, InverseKind kind);
std::string csv_escape(const std::string& field);

}  // namespace ringlab
