#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringlab/inverses.hpp"
#include "ringlab/ring.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

inline constexpr std::uint64_t kDefaultSweepSeed = 20250817;

// ---------------------------------------------------------------------------
// Transfer quadruples
// ---------------------------------------------------------------------------

// A quadruple (a, b, c, d) in one ring satisfying the transfer hypothesis
//     b d b = b a c   and   d b d = a c d,
// under which generalized invertibility moves from ac to bd (Cline-style)
// and from 1 - ac to 1 - bd (Jacobson-style).  The canonical family
// (x, y, y, x) satisfies the hypothesis for every pair x, y.
struct ClineQuadruple {
    Element a, b, c, d;
};

bool quadruple_hypothesis_holds(const FiniteRing& R, Element a, Element b,
                                Element c, Element d);

// Validates the hypothesis; throws std::invalid_argument when it fails.
ClineQuadruple make_quadruple(const FiniteRing& R, Element a, Element b,
                              Element c, Element d);

// Deterministic quadruple generator: the canonical family (x, y, y, x) comes
// first (all pairs when |R|^2 <= 65536, otherwise seeded sample), followed by
// non-canonical hypothesis-satisfying quadruples -- found by exhaustive
// 4-tuple scan for rings with at most 32 elements (hypothesis solutions are
// sparse, so larger rings fall back to `samples` seeded rejection attempts;
// force_exhaustive overrides both thresholds).  budget > 0 caps the returned
// count, canonical entries first.
std::vector<ClineQuadruple> cline_quadruples(const FiniteRing& R,
                                             std::uint64_t budget = 0,
                                             std::uint64_t seed =
                                                 kDefaultSweepSeed,
                                             std::uint64_t samples = 65536,
                                             bool force_exhaustive = false);

// ---------------------------------------------------------------------------
// Per-case verdicts
// ---------------------------------------------------------------------------

// One verified case: the pass flag is the conjunction of every condition in
// the transcript, and the transcript names each condition with its outcome
// (the counterexample text when a sweep records a failure).
struct CaseResult {
    bool pass = false;
    std::string transcript;
};

// Tally of the candidate readings of the closed-form expression for
// (1 - bd)^z.  The printed source of that expression is ambiguous
// (unbalanced parentheses and a suspect 1+ac factor), so every reading is
// compared against the brute-force inverse and reported, never assumed.
// A reading can be non-evaluable on a case when its auxiliary factor fails
// to invert; `evaluable` counts the cases where it could be computed.
struct ReadingTally {
    static constexpr std::size_t kCount = 4;
    // "tail_product"     1 + b[1 - z - pi s]d
    // "grouped_bracket"  1 + b[(1 - z - pi) s]d
    // "core_difference"  1 + b[(z - pi) s]d
    // "one_plus_core"    1 + b[1 - z - pi' s']d   (pi' built from 1 + ac)
    // with alpha = 1 - ac, z = alpha^z, pi = 1 - alpha z,
    // s = (1 - pi alpha)^{-1}.
    static const char* name(std::size_t i);
    std::array<std::uint64_t, kCount> matched{};
    std::array<std::uint64_t, kCount> evaluable{};
    void merge(const ReadingTally& other);
};

// Cline formula: bd inherits the generalized Zhou inverse from ac, with the
// exact witness (bd)^z = b ((ac)^z)^2 d.  Both certificates are replayed.
CaseResult verify_cline(const FiniteRing& R, const ClineQuadruple& q,
                        const CertificateTable* gzhou = nullptr);

// Power transfer: (ab)^k and (ba)^k are both generalized-Zhou invertible,
// and (ba)^k = (b (ab)^{k-1}) a exactly.
CaseResult verify_cline_power(const FiniteRing& R, Element a, Element b,
                              std::uint64_t k,
                              const CertificateTable* gzhou = nullptr);

// Jacobson-style transfer: 1 - bd inherits the generalized Zhou inverse from
// alpha = 1 - ac.  The gating check is the product identity
//     (1 - bd)(1 - bd)^z = 1 - b pi (1 - pi alpha)^{-1} d,
// with pi = 1 - alpha alpha^z; non-invertibility of (1 - pi alpha) is a
// theorem falsification and aborts.  Candidate closed-form readings are
// tallied (never gating) when `tally` is given.
CaseResult verify_jacobson(const FiniteRing& R, const ClineQuadruple& q,
                           const CertificateTable* gzhou = nullptr,
                           ReadingTally* tally = nullptr);

// Power transfer: (1-ab)^k and (1-ba)^k are both generalized-Zhou
// invertible, after replaying the expansion b (1-ab)^m = (1-ba)^m b for
// every m <= k.
CaseResult verify_jacobson_power(const FiniteRing& R, Element a, Element b,
                                 std::uint64_t k,
                                 const CertificateTable* gzhou = nullptr);

// Zhou variant of the Cline transfer: ac Zhou-invertible => bd
// Zhou-invertible, replaying the nilpotency chain at the smallest n with
// ac - (ac)^{n+1} nilpotent:
//     db [ac - (ac)^{n+1}] in N(R),
//     bd [bd - (bd)^{n+1}] = b [ac - (ac)^{n+1}] d,
//     [bd - (bd)^{n+1}]^2 in N(R),
//     bd - (bd)^{n+1} in N(R).
CaseResult verify_zhou_cline(const FiniteRing& R, const ClineQuadruple& q,
                             const CertificateTable* zhou = nullptr);

// Complement form of the Zhou transfer: 1 - ac Zhou-invertible => 1 - bd
// Zhou-invertible, with the analogous nilpotency chain for u = 1 - ac,
// v = 1 - bd at the smallest n with u - u^{n+1} nilpotent.  (The plain
// product form bd is covered by verify_zhou_cline; this sweep verifies what
// the complement-form argument establishes.)
CaseResult verify_zhou_jacobson(const FiniteRing& R, const ClineQuadruple& q,
                                const CertificateTable* zhou = nullptr);

// ---------------------------------------------------------------------------
// Whole-ring sweeps
// ---------------------------------------------------------------------------

struct SweepOptions {
    bool exhaustive = false;     // force exhaustive scans regardless of size
    std::uint64_t samples = 65536;  // rejection attempts on large rings
    std::uint64_t seed = kDefaultSweepSeed;
    std::uint64_t budget = 0;    // cap on quadruple cases (0 = no cap)
    std::uint64_t power_k = 3;   // power-transfer cases run k = 1..power_k
    std::optional<std::uint64_t> bound;  // override for "exists n" searches
    unsigned jobs = 0;           // worker threads (0 = hardware default)
    bool timings = false;        // record wall-clock duration in reports
};

// Machine-checkable outcome of one theorem sweep.  counterexamples must
// stay empty: any entry is a refutation of the swept statement (the CLI
// exits 2 on it).  duration_ms stays 0 unless timings was requested, so
// reports are byte-stable for a fixed seed.
struct SweepReport {
    std::string theorem;
    std::string ring;
    std::uint64_t population = 0;  // cases verified; passes + fails
    std::uint64_t passes = 0;
    std::uint64_t fails = 0;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;
    std::uint64_t duration_ms = 0;
    std::uint64_t seed = 0;
};

// Cline formula + power transfer over generated quadruples and pairs.
SweepReport sweep_cline(const RingPtr& R, const SweepOptions& opts = {});

// Jacobson-style transfer (product identity gating), candidate-reading
// disambiguation notes, and the (1-ab)^k / (1-ba)^k power transfer.
SweepReport sweep_jacobson(const RingPtr& R, const SweepOptions& opts = {});

// Zhou variants over the same quadruple population.
SweepReport sweep_zhou_cline(const RingPtr& R, const SweepOptions& opts = {});
SweepReport sweep_zhou_jacobson(const RingPtr& R,
                                const SweepOptions& opts = {});

// For every element, evaluates five independent characterizations of
// generalized-Zhou invertibility and demands they agree:
//   (i)   a definitional certificate exists,
//   (ii)  some idempotent p in comm2(a) has a^n - p in sqrt J(R),
//   (iii) some x in comm2(a) has x = xax and a - a^{n+2} x in sqrt J(R),
//   (iv)  some idempotent p in comm(a) has a^n - p in N(R),
//   (v)   a - a^{n+1} lies in sqrt J(R) (and, independently, in N(R)).
SweepReport sweep_equivalences(const RingPtr& R, const SweepOptions& opts = {});

// For every element, enumerates every b with b = bab, b in comm2(a) and
// a^n - ab in sqrt J(R), and every idempotent p in comm2(a) with
// a^n - p in sqrt J(R), n within the orbit bound; exactly one b and one p
// may exist (a second one aborts with falsification_error).  The unique
// pair is then replayed through the two constructive identities
//     (a^n + 1 - p)^{-1} p = b^n   and   b = [(a^n + 1 - p)^{-1} p] a^{n-1},
//     c := (a - 1 + p)^{-1} p satisfies cac = c, a^n - ac = a^n - p, c = b.
SweepReport uniqueness_sweep(const RingPtr& R, const SweepOptions& opts = {});

// Builds Q = R / J(R) and checks, for every a, that the generalized Zhou
// inverse in R projects onto the Zhou inverse of the projection in Q.
SweepReport verify_radical_reduction(const RingPtr& R,
                                     const SweepOptions& opts = {});

}  // namespace ringlab
