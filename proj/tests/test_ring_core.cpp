#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ringlab/descriptor.hpp"
#include "ringlab/errors.hpp"
#include "ringlab/ring.hpp"

using namespace ringlab;

TEST_CASE("ring expression parsing and printing") {
    auto d = parse_ring_expr("Z5");
    CHECK(d->kind == RingDescriptor::Kind::zmod);
    CHECK(d->modulus == 5);
    CHECK(format_descriptor(*d) == "Z5");

    d = parse_ring_expr("M2(Z2)");
    CHECK(d->kind == RingDescriptor::Kind::matrix);
    CHECK(d->dim == 2);
    CHECK(d->base->modulus == 2);
    CHECK(descriptor_cardinality(*d) == 16);

    d = parse_ring_expr("T2(Z3) x Z4");
    CHECK(d->kind == RingDescriptor::Kind::product);
    CHECK(d->left->kind == RingDescriptor::Kind::uppertri);
    CHECK(d->right->kind == RingDescriptor::Kind::zmod);
    CHECK(descriptor_cardinality(*d) == 108);
    CHECK(format_descriptor(*d) == "T2(Z3) x Z4");

    // x is left associative; whitespace is insignificant
    auto chain = parse_ring_expr("Z2xZ3 x  Z5");
    CHECK(chain->kind == RingDescriptor::Kind::product);
    CHECK(chain->left->kind == RingDescriptor::Kind::product);
    CHECK(format_descriptor(*chain) == "Z2 x Z3 x Z5");
    CHECK(descriptor_equal(*chain, *parse_ring_expr("(Z2 x Z3) x Z5")));
    CHECK(!descriptor_equal(*chain, *parse_ring_expr("Z2 x (Z3 x Z5)")));
    CHECK(format_descriptor(*parse_ring_expr("Z2 x (Z3 x Z5)")) ==
          "Z2 x (Z3 x Z5)");

    // round-trip: parse(format(d)) is structurally equal
    for (const char* expr :
         {"Z1", "Z12", "M2(Z2)", "T3(Z2)", "T2(Z3) x Z4", "M2(Z2 x Z3)",
          "Z2 x (Z3 x Z5) x Z2"}) {
        auto a = parse_ring_expr(expr);
        CHECK(descriptor_equal(*a, *parse_ring_expr(format_descriptor(*a))));
    }
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse_ring_expr(text);
        } catch (const parse_error& e) {
            return e.offset();
        }
        return SIZE_MAX;
    };
    CHECK(offset_of("Z") == 1);
    CHECK(offset_of("Q5") == 0);
    CHECK(offset_of("M2(Z2") == 5);
    CHECK(offset_of("Z5 x") == 4);
    CHECK(offset_of("Z5 ) ") == 3);
    CHECK(offset_of("Z0") == 1);
    CHECK(offset_of("Z99999999999999999999") == 1);
}

TEST_CASE("cardinality cap") {
    // |M3(M2(Z4))| = 256^9 = 2^72, far outside any machine integer cap.
    auto d = parse_ring_expr("M3(M2(Z4))");
    CHECK(descriptor_cardinality(*d).str() == "4722366482869645213696");
    try {
        FiniteRing::build(d);
        FAIL("cap_error expected");
    } catch (const cap_error& e) {
        CHECK(e.cardinality() == "4722366482869645213696");
    }
    // the cap is configurable
    BuildOptions small;
    small.cap = 100;
    CHECK_THROWS_AS(FiniteRing::build("T2(Z3) x Z4", small), cap_error);
    BuildOptions big;
    big.cap = 200000;
    CHECK(FiniteRing::build("Z70000", big)->cardinality() == 70000);
}

TEST_CASE("modular arithmetic") {
    auto z5 = FiniteRing::build("Z5");
    CHECK(z5->cardinality() == 5);
    CHECK(z5->one().code == 1);
    CHECK(z5->mul(z5->element(2), z5->element(3)) == z5->one());
    CHECK(z5->pow(z5->element(2), 4) == z5->one());
    CHECK(z5->pow(z5->element(2), 0) == z5->one());
    CHECK(z5->from_int(-1) == z5->element(4));
    CHECK(z5->from_int(7) == z5->element(2));

    auto z4 = FiniteRing::build("Z4");
    CHECK(z4->pow(z4->element(2), 2) == z4->zero());
    CHECK(z4->sub(z4->element(1), z4->element(3)) == z4->element(2));

    auto z1 = FiniteRing::build("Z1");
    CHECK(z1->cardinality() == 1);
    CHECK(z1->zero() == z1->one());
    CHECK(z1->mul(z1->zero(), z1->zero()) == z1->zero());
}

TEST_CASE("cross-ring mixing is rejected") {
    auto z5 = FiniteRing::build("Z5");
    auto z7 = FiniteRing::build("Z7");
    CHECK_THROWS_AS(z5->add(z5->element(1), z7->element(1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(z5->element(5), std::invalid_argument);
}

TEST_CASE("matrix ring arithmetic") {
    auto m = FiniteRing::build("M2(Z2)");
    CHECK(m->cardinality() == 16);
    Element u = m->parse_element("[[1,1],[0,1]]");
    CHECK(m->format_element(u) == "[[1,1],[0,1]]");
    CHECK(m->mul(u, u) == m->one());
    CHECK(m->format_element(m->one()) == "[[1,0],[0,1]]");
    Element nil = m->parse_element("[[0,1],[0,0]]");
    CHECK(m->mul(nil, nil) == m->zero());

    auto t = FiniteRing::build("T2(Z2)");
    CHECK(t->cardinality() == 8);
    Element v = t->parse_element("[[1,1],[0,1]]");
    CHECK(t->mul(v, v) == t->one());
    CHECK(t->format_element(t->parse_element("[[0,1],[0,0]]")) ==
          "[[0,1],[0,0]]");
    CHECK_THROWS_AS(t->parse_element("[[1,0],[1,1]]"), parse_error);

    auto t3 = FiniteRing::build("T2(Z3)");
    CHECK(t3->cardinality() == 27);
    Element w = t3->parse_element("[[1,2],[0,2]]");
    CHECK(t3->format_element(t3->mul(w, w)) == "[[1,0],[0,1]]");
}

TEST_CASE("product ring arithmetic") {
    auto r = FiniteRing::build("Z4 x Z2");
    CHECK(r->cardinality() == 8);
    Element a = r->parse_element("(3,1)");
    Element b = r->parse_element("(1,1)");
    CHECK(r->add(a, b) == r->zero());
    CHECK(r->format_element(r->one()) == "(1,1)");
    CHECK(r->format_element(a) == "(3,1)");

    auto nested = FiniteRing::build("Z2 x Z3 x Z2");
    CHECK(nested->format_element(nested->one()) == "((1,1),1)");
    CHECK(nested->parse_element("((1,2),0)").code ==
          nested->parse_element("((1,2),0)").code);
}

TEST_CASE("element parse rejects out-of-range and trailing input") {
    auto z5 = FiniteRing::build("Z5");
    CHECK_THROWS_AS(z5->parse_element("7"), parse_error);
    CHECK_THROWS_AS(z5->parse_element("3 junk"), parse_error);
    CHECK_THROWS_AS(z5->parse_element("-1"), parse_error);
    auto m = FiniteRing::build("M2(Z2)");
    CHECK_THROWS_AS(m->parse_element("[[1,1],[0]]"), parse_error);
    CHECK_THROWS_AS(m->parse_element("[[2,0],[0,0]]"), parse_error);
}

TEST_CASE("element format round-trips over whole rings") {
    for (const char* expr : {"Z1", "Z12", "M2(Z2)", "T2(Z3)", "Z4 x Z2",
                             "Z2 x Z3 x Z2"}) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element e = R->element(c);
            CHECK(R->parse_element(R->format_element(e)) == e);
        }
    }
}

TEST_CASE("power orbits") {
    auto z5 = FiniteRing::build("Z5");
    PowerOrbit po = z5->power_orbit(z5->element(2));
    CHECK(po.index == 1);
    CHECK(po.period == 4);
    REQUIRE(po.orbit.size() == 4);
    CHECK(po.orbit[0] == z5->element(2));
    CHECK(po.orbit[1] == z5->element(4));
    CHECK(po.orbit[2] == z5->element(3));
    CHECK(po.orbit[3] == z5->element(1));

    auto z4 = FiniteRing::build("Z4");
    po = z4->power_orbit(z4->element(2));
    CHECK(po.index == 2);
    CHECK(po.period == 1);

    po = z4->power_orbit(z4->one());
    CHECK(po.index == 1);
    CHECK(po.period == 1);

    // pow(a, k+l) = pow(a, k) exhaustively on small rings
    for (const char* expr : {"Z12", "M2(Z2)", "T2(Z3)", "Z4 x Z2"}) {
        auto R = FiniteRing::build(expr);
        for (code_t c = 0; c < R->cardinality(); ++c) {
            Element a = R->element(c);
            PowerOrbit o = R->power_orbit(a);
            CHECK(R->pow(a, o.index + o.period) == R->pow(a, o.index));
            CHECK(o.index + o.period <= R->cardinality() + 1);
        }
    }
}

TEST_CASE("table arithmetic agrees with structural arithmetic") {
    BuildOptions no_tables;
    no_tables.table_threshold = 0;
    for (const char* expr : {"M2(Z2)", "T2(Z3) x Z4"}) {
        auto rt = FiniteRing::build(expr);
        auto rs = FiniteRing::build(expr, no_tables);
        REQUIRE(rt->has_tables());
        REQUIRE(!rs->has_tables());
        for (code_t x = 0; x < rt->cardinality(); ++x)
            for (code_t y = 0; y < rt->cardinality(); ++y) {
                CHECK(rt->add(rt->element(x), rt->element(y)).code ==
                      rs->add(rs->element(x), rs->element(y)).code);
                CHECK(rt->mul(rt->element(x), rt->element(y)).code ==
                      rs->mul(rs->element(x), rs->element(y)).code);
            }
    }
}

TEST_CASE("ring axioms hold on the test suite") {
    for (const char* expr :
         {"Z1", "Z2", "Z12", "M2(Z2)", "T2(Z2)", "T2(Z3)", "Z4 x Z2"}) {
        auto R = FiniteRing::build(expr);
        AxiomCheck res = check_ring_axioms(*R);
        CHECK(res.exhaustive);
        CHECK(res.triples_checked ==
              R->cardinality() * R->cardinality() * R->cardinality());
    }
    // big ring goes through the sampled path
    auto big = FiniteRing::build("Z2025");
    AxiomCheck res = check_ring_axioms(*big);
    CHECK(!res.exhaustive);
    CHECK(res.triples_checked == 10000);
}
