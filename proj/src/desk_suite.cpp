#include "ringlab/desk_suite.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "ringlab/errors.hpp"
#include "ringlab/exact_matrix.hpp"
#include "ringlab/identities.hpp"
#include "ringlab/inverses.hpp"
#include "ringlab/parallel.hpp"
#include "ringlab/structure.hpp"

namespace ringlab {

namespace {

struct CriterionBody {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& on_failure) {
        if (ok) return;
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += on_failure;
    }
    void summary(const std::string& text) {
        if (pass) detail = text;
    }
};

template <typename Fn>
CriterionResult timed_criterion(std::string id, std::string name,
                                std::uint64_t limit_ms, Fn&& body) {
    CriterionResult res;
    res.id = std::move(id);
    res.name = std::move(name);
    res.limit_ms = limit_ms;
    CriterionBody b;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(b);
    } catch (const std::exception& e) {
        b.pass = false;
        b.detail = std::string("exception: ") + e.what();
    }
    res.duration_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - t0)
            .count());
    if (limit_ms > 0 && res.duration_ms > limit_ms) {
        b.pass = false;
        b.detail += (b.detail.empty() ? "" : "; ");
        b.detail += "exceeded " + std::to_string(limit_ms) + " ms budget";
    }
    res.pass = b.pass;
    res.detail = b.detail;
    return res;
}

std::vector<code_t> codes_of(const std::vector<Element>& elems) {
    std::vector<code_t> codes;
    codes.reserve(elems.size());
    for (Element e : elems) codes.push_back(e.code);
    std::sort(codes.begin(), codes.end());
    return codes;
}

std::string sweep_fail_text(const SweepReport& rep) {
    std::string out = rep.theorem + " on " + rep.ring + ": " +
                      std::to_string(rep.fails) + " failing cases";
    if (!rep.counterexamples.empty())
        out += " (first: " + rep.counterexamples.front() + ")";
    return out;
}

RationalMatrix random_rational_matrix(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick_dim(1, 3);
    std::uniform_int_distribution<int> numerator(-3, 3);
    std::uniform_int_distribution<int> denominator(1, 3);
    const std::uint32_t k = static_cast<std::uint32_t>(pick_dim(rng));
    RationalMatrix A(k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j)
            A.at(i, j) = rational(numerator(rng), denominator(rng));
    return A;
}

}  // namespace

const std::vector<std::string>& desk_suite_rings() {
    static const std::vector<std::string> rings = {
        "Z2",  "Z3",  "Z4",  "Z5",     "Z6",     "Z7",
        "Z8",  "Z9",  "Z10", "Z11",    "Z12",    "M2(Z2)",
        "T2(Z2)", "T2(Z3)", "Z4 x Z2"};
    return rings;
}

DeskSuiteResult run_desk_suite(unsigned jobs) {
    DeskSuiteResult suite;
    SweepOptions opts;
    opts.jobs = jobs;

    // c01: in the five-element field every inverse notion collapses to the
    // cube map, and the brute-force and constructive routes agree on it.
    suite.criteria.push_back(timed_criterion(
        "c01", "cube-rule inverses in the five-element field", 1000,
        [&](CriterionBody& b) {
            auto z5 = FiniteRing::build("Z5");
            for (code_t c = 0; c < z5->cardinality(); ++c) {
                Element a = z5->element(c);
                auto cert = inverse_bruteforce(*z5, a, InverseKind::g_zhou);
                b.require(cert.has_value(),
                          "missing inverse at a=" + z5->format_element(a));
                if (!cert) continue;
                Element cube = z5->pow(a, 3);
                b.require(cert->b == cube,
                          "brute-force inverse differs from a^3 at a=" +
                              z5->format_element(a));
                b.require(verify_certificate(*z5, *cert).ok,
                          "certificate replay failed at a=" +
                              z5->format_element(a));
                auto built = gzhou_constructive(*z5, a);
                b.require(built.b == cube,
                          "constructive inverse differs from a^3 at a=" +
                              z5->format_element(a));
            }
            b.summary("5 elements; brute-force and constructive inverses "
                      "both equal a^3");
        }));

    // c02: pinned rational-matrix outcomes, exact and conclusive.
    suite.criteria.push_back(timed_criterion(
        "c02", "pinned rational matrix inverses", 1000,
        [&](CriterionBody& b) {
            auto scalar2 = RationalMatrix::parse("[[2]]");
            b.require(!decide_gzhou_matrix(scalar2).has_value(),
                      "[[2]] unexpectedly has an inverse");
            b.require(period_bound(1) == 2,
                      "conclusive exponent bound for 1x1 is not 2");

            auto jordan = RationalMatrix::parse("[[0,1],[0,0]]");
            auto gj = gzhou_matrix(jordan);
            b.require(gj.has_value() && gj->inverse.is_zero(),
                      "nilpotent Jordan block inverse is not 0");

            auto rot = RationalMatrix::parse("[[0,-1],[1,0]]");
            auto gr = gzhou_matrix(rot);
            b.require(gr.has_value(), "rotation matrix has no inverse");
            if (gr) {
                b.require(gr->inverse ==
                              RationalMatrix::parse("[[0,1],[-1,0]]"),
                          "rotation inverse mismatch");
                b.require(gr->n == 4, "rotation exponent is not 4");
            }
            b.summary("[[2]]: none with conclusive bound 2; Jordan block: 0; "
                      "rotation: transpose with n=4");
        }));

    // c03: the five existence characterizations agree element-wise.
    suite.criteria.push_back(timed_criterion(
        "c03", "five-way existence agreement", 300000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const auto& expr : desk_suite_rings()) {
                auto rep = sweep_equivalences(FiniteRing::build(expr), opts);
                population += rep.population;
                b.require(rep.fails == 0, sweep_fail_text(rep));
            }
            b.summary(std::to_string(desk_suite_rings().size()) + " rings, " +
                      std::to_string(population) +
                      " elements, all five verdicts agree everywhere");
        }));

    // c04: exactly one inverse and one idempotent per element, replayed
    // through both constructive identities.
    suite.criteria.push_back(timed_criterion(
        "c04", "unique inverse and unique idempotent", 300000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const auto& expr : desk_suite_rings()) {
                auto rep = uniqueness_sweep(FiniteRing::build(expr), opts);
                population += rep.population;
                b.require(rep.fails == 0, sweep_fail_text(rep));
            }
            b.summary(std::to_string(population) +
                      " elements, one (b, p) pair each, constructive "
                      "replays exact");
        }));

    // c05: product-transfer witness equality over every generated quadruple
    // (exhaustive on all suite rings, which are small enough to scan).
    suite.criteria.push_back(timed_criterion(
        "c05", "product-transfer witness equality", 600000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const auto& expr : desk_suite_rings()) {
                auto rep = sweep_cline(FiniteRing::build(expr), opts);
                population += rep.population;
                b.require(rep.fails == 0, sweep_fail_text(rep));
            }
            b.summary(std::to_string(population) +
                      " quadruple and power cases, witness equality exact "
                      "everywhere");
        }));

    // c06: unit-complement transfer (gating product identity) plus the
    // k = 1..3 power equivalence on all pairs.
    suite.criteria.push_back(timed_criterion(
        "c06", "unit-complement transfer and k-th power equivalence", 600000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const auto& expr : desk_suite_rings()) {
                auto rep = sweep_jacobson(FiniteRing::build(expr), opts);
                population += rep.population;
                b.require(rep.fails == 0, sweep_fail_text(rep));
            }
            b.summary(std::to_string(population) +
                      " cases; product identity and power equivalence hold "
                      "everywhere");
        }));

    // c07: inverses commute with projection onto the radical quotient.
    suite.criteria.push_back(timed_criterion(
        "c07", "radical-quotient projection", 300000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const char* expr : {"Z12", "Z8", "T2(Z2)"}) {
                auto rep =
                    verify_radical_reduction(FiniteRing::build(expr), opts);
                population += rep.population;
                b.require(rep.fails == 0, sweep_fail_text(rep));
            }
            b.summary(std::to_string(population) +
                      " elements across three rings project exactly");
        }));

    // c08: structural invariants -- radical-root equals nilpotents, two
    // pinned subsets, and the absorption laws on every ring up to 100
    // elements in the reference set.
    suite.criteria.push_back(timed_criterion(
        "c08", "radical and nilpotent structure with absorption laws",
        300000, [&](CriterionBody& b) {
            for (const auto& expr : desk_suite_rings()) {
                auto R = FiniteRing::build(expr);
                b.require(codes_of(sqrt_jacobson(*R)) ==
                              codes_of(nilpotents(*R)),
                          "sqrt J(R) != N(R) in " + R->label());
            }

            auto z12 = FiniteRing::build("Z12");
            b.require(codes_of(jacobson_radical(*z12)) ==
                          std::vector<code_t>({0, 6}),
                      "J(Z12) is not {0, 6}");
            auto z8 = FiniteRing::build("Z8");
            b.require(codes_of(nilpotents(*z8)) ==
                          std::vector<code_t>({0, 2, 4, 6}),
                      "N(Z8) is not {0, 2, 4, 6}");

            // absorption laws, exhaustive on rings up to 100 elements
            std::vector<std::string> lemma_rings = desk_suite_rings();
            lemma_rings.push_back("Z96");
            std::uint64_t idem_cases = 0, pair_cases = 0;
            for (const auto& expr : lemma_rings) {
                auto R = FiniteRing::build(expr);
                if (R->cardinality() > 100) continue;
                const StructuralCache& S = structural_cache(*R);

                // commuting idempotent absorbs a radical-root element
                for (Element a : S.radical_root)
                    for (Element e : S.idempotents) {
                        if (R->mul(a, e) != R->mul(e, a)) continue;
                        ++idem_cases;
                        b.require(
                            S.in_radical_root[R->mul(a, e).code] != 0,
                            "idempotent absorption fails in " + R->label() +
                                " at a=" + R->format_element(a) + " e=" +
                                R->format_element(e));
                    }

                // commuting pairs: sums of two radical-root elements and
                // products with at least one radical-root factor stay inside
                for (code_t x = 0; x < R->cardinality(); ++x)
                    for (code_t y = 0; y < R->cardinality(); ++y) {
                        Element a = R->element(x), c = R->element(y);
                        if (R->mul(a, c) != R->mul(c, a)) continue;
                        bool ra = S.in_radical_root[x] != 0;
                        bool rc = S.in_radical_root[y] != 0;
                        if (!ra && !rc) continue;
                        ++pair_cases;
                        if (ra && rc)
                            b.require(
                                S.in_radical_root[R->add(a, c).code] != 0,
                                "commuting sum escapes in " + R->label() +
                                    " at a=" + R->format_element(a) + " b=" +
                                    R->format_element(c));
                        b.require(
                            S.in_radical_root[R->mul(a, c).code] != 0,
                            "commuting product escapes in " + R->label() +
                                " at a=" + R->format_element(a) + " b=" +
                                R->format_element(c));
                    }
            }
            b.summary("sqrt J = N on all rings; pinned subsets match; "
                      "absorption laws hold on " +
                      std::to_string(idem_cases) + " idempotent and " +
                      std::to_string(pair_cases) + " commuting-pair cases");
        }));

    // c09: the binomial lift and the power-orbit construction produce the
    // same idempotent for every element.
    suite.criteria.push_back(timed_criterion(
        "c09", "binomial lift matches power-orbit idempotent", 300000,
        [&](CriterionBody& b) {
            std::uint64_t population = 0;
            for (const auto& expr : desk_suite_rings()) {
                auto R = FiniteRing::build(expr);
                for (code_t c = 0; c < R->cardinality(); ++c) {
                    Element a = R->element(c);
                    auto lift = lift_idempotent_binomial(*R, a);
                    auto built = gzhou_constructive(*R, a);
                    ++population;
                    b.require(lift.defect_in_radical,
                              "partial-sum defect escaped J(R) in " +
                                  R->label() + " at a=" +
                                  R->format_element(a));
                    b.require(lift.f == built.p,
                              "idempotent routes disagree in " + R->label() +
                                  " at a=" + R->format_element(a) + ": " +
                                  R->format_element(lift.f) + " vs " +
                                  R->format_element(built.p));
                }
            }
            b.summary(std::to_string(population) +
                      " elements, both idempotent routes agree");
        }));

    // c10: seeded random rational matrices -- every certificate replays, and
    // the conclusive exponent bound agrees with a 10x-extended scan.
    suite.criteria.push_back(timed_criterion(
        "c10", "random rational matrices: replay and bound consistency",
        120000, [&](CriterionBody& b) {
            constexpr std::uint64_t kSamples = 500;
            std::mt19937_64 rng(kDefaultSweepSeed);
            std::vector<RationalMatrix> samples;
            samples.reserve(kSamples);
            for (std::uint64_t i = 0; i < kSamples; ++i)
                samples.push_back(random_rational_matrix(rng));

            struct Tally {
                std::uint64_t with_inverse = 0, without = 0;
                std::vector<std::string> faults;
            };
            unsigned njobs = jobs == 0 ? default_jobs() : jobs;
            if (njobs > kSamples) njobs = kSamples;
            std::vector<Tally> tallies(njobs);
            parallel_chunks(
                kSamples, njobs,
                [&](unsigned chunk, std::uint64_t begin, std::uint64_t end) {
                    Tally& t = tallies[chunk];
                    for (std::uint64_t i = begin; i < end; ++i) {
                        const RationalMatrix& A = samples[i];
                        auto fault = [&](const std::string& why) {
                            t.faults.push_back("sample " + std::to_string(i) +
                                               " " + A.to_string() + ": " +
                                               why);
                        };
                        auto gz = gzhou_matrix(A);
                        if (gz) {
                            ++t.with_inverse;
                            const RationalMatrix& x = gz->inverse;
                            RationalMatrix ax = mat_mul(A, x);
                            if (mat_mul(x, ax) != x)
                                fault("fixed point fails");
                            if (ax != mat_mul(x, A))
                                fault("commutation fails");
                            if (!is_nilpotent_matrix(
                                    mat_sub(mat_pow(A, gz->n), ax)))
                                fault("residual not nilpotent");
                        } else {
                            ++t.without;
                        }

                        // extended scan: 10x the conclusive bound
                        auto bounded = decide_gzhou_matrix(A);
                        std::optional<std::uint64_t> extended;
                        const std::uint64_t top = 10 * period_bound(A.dim());
                        RationalMatrix power = A;  // A^{n} before the loop
                        for (std::uint64_t n = 1; n <= top; ++n) {
                            power = mat_mul(power, A);  // now A^{n+1}
                            if (is_nilpotent_matrix(mat_sub(A, power))) {
                                extended = n;
                                break;
                            }
                        }
                        if (bounded != extended)
                            fault("bounded scan disagrees with extended "
                                  "scan");
                        if (gz.has_value() != bounded.has_value())
                            fault("certificate and decision disagree");
                    }
                });
            std::uint64_t with_inverse = 0, without = 0;
            for (const Tally& t : tallies) {
                with_inverse += t.with_inverse;
                without += t.without;
                for (const auto& f : t.faults) b.require(false, f);
            }
            b.summary(std::to_string(kSamples) + " samples (" +
                      std::to_string(with_inverse) + " with inverse, " +
                      std::to_string(without) +
                      " conclusively without); replays exact, bounds agree "
                      "with the 10x scan");
        }));

    suite.pass = true;
    for (const auto& c : suite.criteria) suite.pass = suite.pass && c.pass;
    return suite;
}

}  // namespace ringlab
