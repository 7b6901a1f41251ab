#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ringlab/errors.hpp"
#include "ringlab/exact_matrix.hpp"

using namespace ringlab;

namespace {

RationalMatrix companion_of_t_pow_minus_one(std::uint32_t m) {
    RationalMatrix c(m);
    for (std::uint32_t i = 0; i + 1 < m; ++i) c.at(i + 1, i) = 1;
    c.at(0, m - 1) = 1;
    return c;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::uint32_t k) {
    std::uniform_int_distribution<int> entry(-3, 3);
    RationalMatrix a(k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) a.at(i, j) = entry(rng);
    return a;
}

}  // namespace

TEST_CASE("matrix literals round-trip and normalize") {
    RationalMatrix a = RationalMatrix::parse("[[1/2,-3],[0,4/6]]");
    CHECK(a.to_string() == "[[1/2,-3],[0,2/3]]");
    CHECK(RationalMatrix::parse(a.to_string()) == a);
    CHECK(RationalMatrix::parse("[[2]]").dim() == 1);
    CHECK(RationalMatrix::parse(" [ [ 0 , -1 ] , [ 1 , 0 ] ] ").dim() == 2);
    CHECK_THROWS_AS(RationalMatrix::parse("[[1,2]]"), parse_error);
    CHECK_THROWS_AS(RationalMatrix::parse("[[1/0]]"), parse_error);
    CHECK_THROWS_AS(RationalMatrix::parse("[[1],[2]] junk"), parse_error);
}

TEST_CASE("exact matrix arithmetic") {
    RationalMatrix nil = RationalMatrix::parse("[[0,1],[0,0]]");
    CHECK(mat_mul(nil, nil).is_zero());
    RationalMatrix rot = RationalMatrix::parse("[[0,-1],[1,0]]");
    CHECK(mat_inverse(rot) == RationalMatrix::parse("[[0,1],[-1,0]]"));
    CHECK(mat_pow(RationalMatrix::identity(3), 100).is_identity());
    CHECK(mat_pow(rot, 4).is_identity());
    CHECK_THROWS_AS(mat_inverse(nil), std::domain_error);
    CHECK(!mat_inverse_opt(RationalMatrix(2)).has_value());

    RationalMatrix third = mat_scale(rational(1, 3), RationalMatrix::identity(2));
    CHECK(mat_mul(third, mat_scale(rational(3), RationalMatrix::identity(2)))
              .is_identity());
}

TEST_CASE("nilpotency detection") {
    CHECK(is_nilpotent_matrix(RationalMatrix::parse("[[0,1],[0,0]]")) == 2);
    CHECK(is_nilpotent_matrix(RationalMatrix::parse("[[2,4],[-1,-2]]")) == 2);
    CHECK(!is_nilpotent_matrix(RationalMatrix::identity(2)));
    CHECK(is_nilpotent_matrix(RationalMatrix(3)) == 1);
    CHECK(is_nilpotent_matrix(
              RationalMatrix::parse("[[0,1,0],[0,0,1],[0,0,0]]")) == 3);
}

TEST_CASE("polynomial arithmetic and extended euclid") {
    PolynomialExact f({rational(-1), rational(0), rational(1)});  // t^2 - 1
    PolynomialExact g({rational(-1), rational(1)});               // t - 1
    auto [q, r] = poly_divmod(f, g);
    CHECK(q == PolynomialExact({rational(1), rational(1)}));
    CHECK(r.is_zero());

    PolynomialExact ts = PolynomialExact::t_power(1);
    PolynomialExact gm({rational(-3), rational(1)});  // t - 3
    PolyXgcd bez = poly_xgcd(ts, gm);
    CHECK(bez.d == PolynomialExact({rational(1)}));
    CHECK(poly_add(poly_mul(bez.u, ts), poly_mul(bez.v, gm)) == bez.d);

    CHECK(PolynomialExact({rational(1), rational(0), rational(1)}).to_string()
          == "t^2+1");
    CHECK(PolynomialExact({rational(3), rational(-1, 2), rational(0),
                           rational(1)})
              .to_string() == "t^3-1/2t+3");
    CHECK(PolynomialExact().to_string() == "0");
}

TEST_CASE("minimal polynomials") {
    CHECK(minimal_polynomial(RationalMatrix::identity(2)).to_string() ==
          "t-1");
    CHECK(minimal_polynomial(RationalMatrix::parse("[[0,-1],[1,0]]"))
              .to_string() == "t^2+1");
    CHECK(minimal_polynomial(RationalMatrix::parse("[[2,0],[0,2]]"))
              .to_string() == "t-2");
    CHECK(minimal_polynomial(RationalMatrix::parse("[[0,0],[0,3]]"))
              .to_string() == "t^2-3t");
    CHECK(minimal_polynomial(RationalMatrix(3)).to_string() == "t");
    // nonderogatory example: full jordan block at 0
    CHECK(minimal_polynomial(
              RationalMatrix::parse("[[0,1,0],[0,0,1],[0,0,0]]"))
              .to_string() == "t^3");
}

TEST_CASE("period bound from the totient table") {
    CHECK(period_bound(1) == 2);
    CHECK(period_bound(2) == 12);
    CHECK(period_bound(3) == 12);
    CHECK(period_bound(4) == 120);
}

TEST_CASE("gzhou decision over rational matrices") {
    CHECK(!decide_gzhou_matrix(RationalMatrix::parse("[[2]]")));
    CHECK(decide_gzhou_matrix(RationalMatrix::parse("[[0,-1],[1,0]]")) == 4);
    CHECK(decide_gzhou_matrix(RationalMatrix::parse("[[0,1],[0,0]]")) == 1);
    CHECK(decide_gzhou_matrix(RationalMatrix::parse("[[1]]")) == 1);

    for (std::uint32_t m = 1; m <= 6; ++m)
        CHECK(decide_gzhou_matrix(companion_of_t_pow_minus_one(m)) == m);
}

TEST_CASE("spectral idempotent at zero") {
    CHECK(spectral_idempotent_at_zero(RationalMatrix::parse("[[0,1],[0,0]]"))
              .is_identity());
    CHECK(spectral_idempotent_at_zero(RationalMatrix::parse("[[0,-1],[1,0]]"))
              .is_zero());
    CHECK(spectral_idempotent_at_zero(RationalMatrix::parse("[[0,0],[0,3]]")) ==
          RationalMatrix::parse("[[1,0],[0,0]]"));
}

TEST_CASE("drazin inverses of rational matrices") {
    RationalMatrix rot = RationalMatrix::parse("[[0,-1],[1,0]]");
    CHECK(drazin_matrix(rot) == mat_inverse(rot));
    CHECK(drazin_matrix(RationalMatrix::parse("[[0,1],[0,0]]")).is_zero());
    CHECK(drazin_matrix(RationalMatrix::parse("[[0,0],[0,3]]")) ==
          RationalMatrix::parse("[[0,0],[0,1/3]]"));
}

TEST_CASE("gzhou matrix certificates") {
    auto res = gzhou_matrix(RationalMatrix::parse("[[0,-1],[1,0]]"));
    REQUIRE(res.has_value());
    CHECK(res->inverse == RationalMatrix::parse("[[0,1],[-1,0]]"));
    CHECK(res->n == 4);

    CHECK(!gzhou_matrix(RationalMatrix::parse("[[2]]")));

    res = gzhou_matrix(RationalMatrix(2));
    REQUIRE(res.has_value());
    CHECK(res->inverse.is_zero());
    CHECK(res->n == 1);

    // jordan block at 0 has inverse 0
    res = gzhou_matrix(RationalMatrix::parse("[[0,1],[0,0]]"));
    REQUIRE(res.has_value());
    CHECK(res->inverse.is_zero());
}

TEST_CASE("random matrix property sample") {
    // Smaller cousin of the acceptance-suite sweep: certificates replay,
    // the spectral idempotent behaves, and the totient bound agrees with a
    // 10x-extended brute scan.
    std::mt19937_64 rng(20250817);
    for (int trial = 0; trial < 120; ++trial) {
        std::uint32_t k = 1 + static_cast<std::uint32_t>(rng() % 3);
        RationalMatrix a = random_matrix(rng, k);

        RationalMatrix e = spectral_idempotent_at_zero(a);
        CHECK(mat_mul(e, e) == e);
        CHECK(mat_mul(e, a) == mat_mul(a, e));
        CHECK(mat_inverse_opt(mat_add(a, e)).has_value());

        RationalMatrix x = drazin_matrix(a);
        CHECK(mat_mul(mat_mul(x, a), x) == x);
        CHECK(mat_mul(a, x) == mat_mul(x, a));
        CHECK(is_nilpotent_matrix(mat_sub(a, mat_mul(mat_mul(a, a), x)))
                  .has_value());

        // drazin inverse commutes with polynomials in a
        for (int p = 0; p < 5; ++p) {
            std::vector<rational> cs;
            for (int d = 0; d <= 3; ++d)
                cs.emplace_back(static_cast<int>(rng() % 7) - 3);
            RationalMatrix pa = PolynomialExact(cs).evaluate(a);
            CHECK(mat_mul(x, pa) == mat_mul(pa, x));
        }

        std::uint64_t bound = period_bound(k);
        auto n = decide_gzhou_matrix(a);
        if (n) {
            GzhouMatrixResult res = *gzhou_matrix(a);
            CHECK(is_nilpotent_matrix(
                      mat_sub(mat_pow(a, res.n), mat_mul(a, res.inverse)))
                      .has_value());
            // reported n is minimal
            for (std::uint64_t i = 1; i < *n; ++i)
                CHECK(!is_nilpotent_matrix(mat_sub(a, mat_pow(a, i + 1))));
        } else {
            // the bound is conclusive: scan 10x further and find nothing
            bool any = false;
            RationalMatrix p = mat_mul(a, a);
            for (std::uint64_t i = 1; i <= 10 * bound && !any; ++i) {
                if (is_nilpotent_matrix(mat_sub(a, p))) any = true;
                p = mat_mul(p, a);
            }
            CHECK(!any);
        }
    }
}
