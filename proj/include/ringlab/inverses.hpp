#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringlab/ring.hpp"

namespace ringlab {

enum class InverseKind { drazin, p_drazin, zhou, g_zhou };

const char* inverse_kind_name(InverseKind k);       // "drazin", "pdrazin", ...
InverseKind inverse_kind_from_name(const std::string& name);

// A self-contained, replayable witness that b is the requested inverse of a:
//   all kinds:  b = bab, ab = ba, b in comm2(a), p = ab with p^2 = p;
//   drazin:     a^n = a^{n+1} b (n = index), w = a^n - a^{n+1} b = 0;
//   p-drazin:   w = a - a^2 b lies in sqrt J(R) (no n);
//   zhou:       w = a^n - ab is nilpotent;
//   gzhou:      w = a^n - ab lies in sqrt J(R).
// witness_exponent is the smallest e with w^e = 0 (zhou/drazin) or
// w^e in J(R) (p-drazin/gzhou).
struct InverseCertificate {
    InverseKind kind = InverseKind::g_zhou;
    Element a, b;
    std::optional<std::uint64_t> n;
    Element p;
    Element w;
    std::optional<std::uint64_t> witness_exponent;
};

struct CertificateCheck {
    bool ok = false;
    // condition name -> holds; ok is the conjunction
    std::vector<std::pair<std::string, bool>> conditions;
};

// Replays every definitional condition of the certificate using only ring
// arithmetic; never throws on a bad certificate (the breakdown tells).
CertificateCheck verify_certificate(const FiniteRing& R,
                                    const InverseCertificate& cert);

// Definitional scan: candidates b over comm2(a) (comm(a) for drazin), the
// existential n over [1, index+period]; reports the smallest satisfying n.
// Exactly one b may satisfy the predicate; a second one falsifies the
// uniqueness results and aborts loudly (falsification_error).
std::optional<InverseCertificate> inverse_bruteforce(const FiniteRing& R,
                                                     Element a,
                                                     InverseKind kind);

// Constructive route: p := a^m for the smallest multiple m of the period
// with m >= index (an idempotent power), n := m, b := (a^n + 1 - p)^{-1} p,
// inverse := a^{n-1} b.  The returned certificate is verified before return.
InverseCertificate gzhou_constructive(const FiniteRing& R, Element a);

enum class RadicalKind { nilpotents, radical_root };

// Smallest n in [1, index+period] with a - a^{n+1} in N(R) (nilpotents) or
// in sqrt J(R) (radical_root); nullopt when no n in the bound works.
std::optional<std::uint64_t> characterization_n(const FiniteRing& R, Element a,
                                                RadicalKind radical);

// Idempotent from the binomial partial sum
//   e := sum_{i=0..m} C(2m, i) (a^n)^{2m-i} (1 - a^n)^i,
// with n the smallest exponent for which a - a^{n+1} lies in sqrt J(R) and m
// that residual's witness exponent; e^2 - e lands in J(R) and the cubic
// iteration f <- 3f^2 - 2f^3 lifts e to an honest idempotent congruent to it
// mod J(R).  When alternate_factor is set, the variant replacing (1 - a^n)^i
// by (a - a^n)^i is computed as well and its defect membership is reported,
// not assumed.
struct BinomialLift {
    Element e;  // partial sum
    Element f;  // lifted idempotent, f^2 = f, f - e in J(R)
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    bool defect_in_radical = false;  // e^2 - e in J(R)
    std::optional<Element> alternate_e;
    std::optional<bool> alternate_defect_in_radical;
};

BinomialLift lift_idempotent_binomial(const FiniteRing& R, Element a,
                                      bool alternate_factor = false);

// n * x in the ring's additive group, for arbitrary-precision n.
Element times_int(const FiniteRing& R, const bigint& n, Element x);

// Certificates of one kind for every element of a ring, computed once (in
// parallel) and then shared by sweeps that would otherwise re-derive the
// same inverses per case.  Every element of a finite ring has each of the
// four inverses, so a missing certificate is a falsification and aborts.
class CertificateTable {
public:
    CertificateTable(const FiniteRing& R, InverseKind kind, unsigned jobs = 0);

    InverseKind kind() const { return kind_; }
    const InverseCertificate& at(Element a) const;

private:
    const FiniteRing* ring_;
    InverseKind kind_;
    std::vector<InverseCertificate> certs_;  // indexed by element code
};

}  // namespace ringlab
