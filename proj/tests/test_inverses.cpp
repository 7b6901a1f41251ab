#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/errors.hpp"
#include "ringlab/inverses.hpp"
#include "ringlab/structure.hpp"

using namespace ringlab;

namespace {

const char* const kSmallRings[] = {"Z2", "Z3", "Z4",      "Z5",     "Z6",
                                   "Z8", "Z9", "Z12",     "M2(Z2)", "T2(Z2)",
                                   "T2(Z3)", "Z4 x Z2"};

}  // namespace

TEST_CASE("brute force certificates on pinned examples") {
    auto z5 = FiniteRing::build("Z5");
    auto cert = inverse_bruteforce(*z5, z5->element(2), InverseKind::g_zhou);
    REQUIRE(cert.has_value());
    CHECK(cert->b == z5->element(3));
    CHECK(cert->n == 4);
    CHECK(cert->p == z5->one());
    CHECK(z5->is_zero(cert->w));
    CHECK(verify_certificate(*z5, *cert).ok);

    auto z6 = FiniteRing::build("Z6");
    cert = inverse_bruteforce(*z6, z6->element(2), InverseKind::g_zhou);
    REQUIRE(cert.has_value());
    CHECK(cert->b == z6->element(2));
    CHECK(cert->n == 2);
    CHECK(cert->p == z6->element(4));
    CHECK(z6->is_zero(cert->w));

    auto z4 = FiniteRing::build("Z4");
    cert = inverse_bruteforce(*z4, z4->element(2), InverseKind::zhou);
    REQUIRE(cert.has_value());
    CHECK(cert->b == z4->zero());
    // smallest satisfying n: already at n=1 the residual 2 - 0 is nilpotent
    CHECK(cert->n == 1);
    CHECK(cert->w == z4->element(2));
    CHECK(cert->witness_exponent == 2);

    cert = inverse_bruteforce(*z4, z4->element(2), InverseKind::drazin);
    REQUIRE(cert.has_value());
    CHECK(cert->b == z4->zero());
    CHECK(cert->n == 2);  // index: 2^2 = 2^3 * 0 needs n = 2
    CHECK(z4->is_zero(cert->w));

    for (InverseKind kind : {InverseKind::drazin, InverseKind::p_drazin,
                             InverseKind::zhou, InverseKind::g_zhou}) {
        auto c1 = inverse_bruteforce(*z5, z5->one(), kind);
        REQUIRE(c1.has_value());
        CHECK(c1->b == z5->one());
        if (kind != InverseKind::p_drazin) CHECK(c1->n == 1);
    }
}

TEST_CASE("every element of a finite ring has all four inverses") {
    for (const char* expr : kSmallRings) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            for (InverseKind kind :
                 {InverseKind::drazin, InverseKind::p_drazin,
                  InverseKind::zhou, InverseKind::g_zhou}) {
                auto cert = inverse_bruteforce(*R, a, kind);
                REQUIRE_MESSAGE(cert.has_value(),
                                R->label() << " a=" << R->format_element(a));
                CHECK(verify_certificate(*R, *cert).ok);
            }
        }
    }
}

TEST_CASE("the four inverse values coincide elementwise") {
    for (const char* expr : {"Z12", "M2(Z2)", "T2(Z3)", "Z4 x Z2"}) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            auto dz = inverse_bruteforce(*R, a, InverseKind::drazin);
            auto pd = inverse_bruteforce(*R, a, InverseKind::p_drazin);
            auto zh = inverse_bruteforce(*R, a, InverseKind::zhou);
            auto gz = inverse_bruteforce(*R, a, InverseKind::g_zhou);
            REQUIRE(dz.has_value());
            CHECK(dz->b == pd->b);
            CHECK(dz->b == zh->b);
            CHECK(dz->b == gz->b);
        }
    }
}

TEST_CASE("constructive route equals the brute-force oracle") {
    auto z5 = FiniteRing::build("Z5");
    auto cert = gzhou_constructive(*z5, z5->element(2));
    CHECK(cert.b == z5->element(3));
    CHECK(cert.n == 4);
    CHECK(cert.p == z5->one());

    auto z4 = FiniteRing::build("Z4");
    cert = gzhou_constructive(*z4, z4->element(2));
    CHECK(cert.b == z4->zero());
    CHECK(cert.n == 2);
    CHECK(cert.p == z4->zero());

    cert = gzhou_constructive(*z4, z4->zero());
    CHECK(cert.b == z4->zero());
    CHECK(cert.p == z4->zero());

    for (const char* expr : kSmallRings) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            auto brute = inverse_bruteforce(*R, a, InverseKind::g_zhou);
            InverseCertificate cons = gzhou_constructive(*R, a);
            REQUIRE(brute.has_value());
            CHECK_MESSAGE(brute->b == cons.b,
                          R->label() << " a=" << R->format_element(a));
            CHECK(verify_certificate(*R, cons).ok);
            // the constructive n makes a^n itself the idempotent, so w = 0
            CHECK(R->is_zero(cons.w));
        }
    }
}

TEST_CASE("gzhou inverse satisfies the p-drazin and auxiliary residuals") {
    for (const char* expr : {"Z8", "Z12", "M2(Z2)", "T2(Z2)", "Z4 x Z2"}) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            auto cert = inverse_bruteforce(*R, a, InverseKind::g_zhou);
            REQUIRE(cert.has_value());
            Element b = cert->b;
            // same b passes the p-drazin residual a - a^2 b in sqrt J
            CHECK(in_sqrt_jacobson(
                      *R, R->sub(a, R->mul(R->mul(a, a), b)))
                      .has_value());
            // and the companion form a - a^{n+2} b in sqrt J at the same n
            CHECK(in_sqrt_jacobson(
                      *R, R->sub(a, R->mul(R->pow(a, *cert->n + 2), b)))
                      .has_value());
        }
    }
}

TEST_CASE("repeated runs return identical certificates") {
    auto R = FiniteRing::build("Z12");
    for (code_t c = 0; c < R->cardinality(); ++c) {
        Element a = R->element(c);
        auto c1 = inverse_bruteforce(*R, a, InverseKind::g_zhou);
        auto c2 = inverse_bruteforce(*R, a, InverseKind::g_zhou);
        REQUIRE(c1.has_value());
        CHECK(c1->b == c2->b);
        CHECK(c1->n == c2->n);
        CHECK(c1->w == c2->w);
        CHECK(c1->witness_exponent == c2->witness_exponent);
    }
}

TEST_CASE("verify_certificate flags tampering") {
    auto z5 = FiniteRing::build("Z5");
    auto cert = *inverse_bruteforce(*z5, z5->element(2), InverseKind::g_zhou);
    CHECK(verify_certificate(*z5, cert).ok);

    InverseCertificate bad = cert;
    bad.b = z5->add(bad.b, z5->one());
    CertificateCheck check = verify_certificate(*z5, bad);
    CHECK(!check.ok);
    bool saw_bab = false;
    for (auto& [name, holds] : check.conditions)
        if (name == "b_eq_bab") {
            saw_bab = true;
            CHECK(!holds);
        }
    CHECK(saw_bab);

    bad = cert;
    bad.w = z5->one();
    check = verify_certificate(*z5, bad);
    CHECK(!check.ok);

    bad = cert;
    bad.n = 1;
    check = verify_certificate(*z5, bad);
    CHECK(!check.ok);
}

TEST_CASE("characterization exponents") {
    auto z5 = FiniteRing::build("Z5");
    CHECK(characterization_n(*z5, z5->element(2), RadicalKind::nilpotents) ==
          4);
    auto z6 = FiniteRing::build("Z6");
    CHECK(characterization_n(*z6, z6->element(2), RadicalKind::nilpotents) ==
          2);
    CHECK(characterization_n(*z6, z6->one(), RadicalKind::nilpotents) == 1);
    // both radical choices agree on finite rings (sqrt J = N)
    for (const char* expr : kSmallRings) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            CHECK(characterization_n(*R, a, RadicalKind::nilpotents) ==
                  characterization_n(*R, a, RadicalKind::radical_root));
        }
    }
}

TEST_CASE("binomial idempotent lifting") {
    auto z5 = FiniteRing::build("Z5");
    BinomialLift lift = lift_idempotent_binomial(*z5, z5->element(2), true);
    CHECK(lift.f == z5->one());
    CHECK(lift.defect_in_radical);
    CHECK(lift.n == 4);
    CHECK(lift.m == 1);
    // the alternate factor produces e = 3 in Z5, whose defect escapes J
    REQUIRE(lift.alternate_e.has_value());
    CHECK(*lift.alternate_e == z5->element(3));
    CHECK(lift.alternate_defect_in_radical == false);

    auto z4 = FiniteRing::build("Z4");
    CHECK(lift_idempotent_binomial(*z4, z4->element(2)).f == z4->zero());

    // an idempotent lifts to itself
    auto z6 = FiniteRing::build("Z6");
    CHECK(lift_idempotent_binomial(*z6, z6->element(3)).f == z6->element(3));
    CHECK(lift_idempotent_binomial(*z6, z6->element(4)).f == z6->element(4));

    // dual route: lifted idempotent equals the constructive spectral power
    for (const char* expr : kSmallRings) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            BinomialLift bl = lift_idempotent_binomial(*R, a);
            InverseCertificate cons = gzhou_constructive(*R, a);
            CHECK_MESSAGE(bl.f == cons.p,
                          R->label() << " a=" << R->format_element(a));
            CHECK(R->mul(bl.f, bl.f) == bl.f);
            CHECK(in_jacobson_radical(*R, R->sub(bl.f, bl.e)));
        }
    }
}

TEST_CASE("scalar multiples by big integers") {
    auto z7 = FiniteRing::build("Z7");
    CHECK(times_int(*z7, bigint(10), z7->element(3)) == z7->element(2));
    CHECK(times_int(*z7, bigint(-1), z7->one()) == z7->element(6));
    CHECK(times_int(*z7, bigint("123456789123456789123456789"), z7->one()) ==
          z7->element(1));
}

TEST_CASE("trivial ring certificates") {
    auto z1 = FiniteRing::build("Z1");
    for (InverseKind kind : {InverseKind::drazin, InverseKind::p_drazin,
                             InverseKind::zhou, InverseKind::g_zhou}) {
        auto cert = inverse_bruteforce(*z1, z1->zero(), kind);
        REQUIRE(cert.has_value());
        CHECK(cert->b == z1->zero());
        CHECK(verify_certificate(*z1, *cert).ok);
    }
    CHECK(gzhou_constructive(*z1, z1->zero()).b == z1->zero());
}
