#include "doctest.h"
#include "nchodge/scalar.hpp"
#include "nchodge/useries.hpp"

using namespace nchodge;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("rational arithmetic is exact") {
    FieldTag q = field_q();
    Scalar a = Scalar::parse(q, "1/3");
    Scalar b = Scalar::parse(q, "1/6");
    CHECK((a + b) == Scalar::parse(q, "1/2"));
    CHECK((a - b) == b);
    CHECK((a * b) == Scalar::parse(q, "1/18"));
    CHECK((a / b) == Scalar::integer(q, 2));
    CHECK((-a).str() == "-1/3");
    CHECK(Scalar::zero(q).is_zero());
    CHECK_FALSE(a.is_zero());
}

TEST_CASE("finite field canonical residues and inverses") {
    FieldTag f = field_gf(32003);
    Scalar a = Scalar::integer(f, -1);
    CHECK(a.as_gf() == 32002);
    Scalar b = Scalar::integer(f, 12345);
    CHECK((b * b.inv()) == Scalar::one(f));
    CHECK((Scalar::integer(f, 32003)).is_zero());
    // embedding a rational reduces the denominator mod p
    Scalar h = Scalar::parse(f, "1/2");
    CHECK((h + h) == Scalar::one(f));
}

TEST_CASE("rational functions canonicalize") {
    FieldTag r = field_ratfun();
    // (t^2-1)/(t-1) reduces to t+1
    Scalar a = Scalar::parse(r, "ratfun:(t^2-1)/(t-1)");
    Scalar b = Scalar::parse(r, "ratfun:t+1");
    CHECK(a == b);
    // denominators stay monic
    Scalar c = Scalar::parse(r, "ratfun:(1)/(2*t)");
    CHECK(c.str() == "ratfun: (1/2)/(t)");
    // field operations
    Scalar t = Scalar::t(r);
    CHECK((t * t - Scalar::one(r)) == Scalar::parse(r, "ratfun:t^2-1"));
    CHECK((Scalar::one(r) / (t + Scalar::one(r))) == Scalar::parse(r, "ratfun:(1)/(t+1)"));
}

TEST_CASE("formal derivative") {
    FieldTag r = field_ratfun();
    Scalar t = Scalar::t(r);
    CHECK((t * t).derive() == (Scalar::integer(r, 2) * t));
    // quotient rule: d/dt (1/t) = -1/t^2
    CHECK(t.inv().derive() == Scalar::parse(r, "ratfun:(-1)/(t^2)"));
    CHECK(Scalar::one(r).derive().is_zero());
    CHECK_THROWS(Scalar::one(field_q()).derive());
}

TEST_CASE("string round trips") {
    FieldTag q = field_q();
    for (const char* s : {"0", "1", "-3/4", "22/7"}) {
        Scalar v = Scalar::parse(q, s);
        CHECK(Scalar::parse(q, v.str()) == v);
    }
    FieldTag r = field_ratfun();
    for (const char* s : {"ratfun:t", "ratfun:(t^3-2*t)/(t^2+1)", "ratfun:-5"}) {
        Scalar v = Scalar::parse(r, s);
        CHECK(Scalar::parse(r, v.str()) == v);
    }
    FieldTag f = field_gf(7);
    Scalar v = Scalar::parse(f, "gf(7):13");
    CHECK(v.as_gf() == 6);
    CHECK(Scalar::parse(f, v.str()) == v);
}

TEST_CASE("parse rejects malformed input") {
    CHECK_THROWS(Scalar::parse(field_q(), "1/0"));
    CHECK_THROWS(Scalar::parse(field_q(), "x"));
    CHECK_THROWS(Scalar::parse(field_ratfun(), "ratfun:(1)/(t-t)"));
    CHECK_THROWS(parse_field_tag("gf:0"));
    CHECK(parse_field_tag("gf:32003") == field_gf(32003));
    CHECK(parse_field_tag("gf(32003)") == field_gf(32003));
    CHECK(parse_field_tag("q") == field_q());
    CHECK(parse_field_tag("ratfun") == field_ratfun());
}

TEST_CASE("polynomial gcd and division") {
    Poly a = poly_parse("t^3-1");
    Poly b = poly_parse("t^2-1");
    Poly g = poly_gcd(a, b);
    CHECK(poly_to_string(g) == "t-1");
    Poly quot, rem;
    poly_divmod(a, b, quot, rem);
    CHECK(poly_eq(poly_add(poly_mul(quot, b), rem), a));
    CHECK(rem.degree() < b.degree());
}

TEST_CASE("u-series ring operations") {
    FieldTag q = field_q();
    USeries a = USeries::zero(q, 3);
    a.c[0] = Scalar::integer(q, 1);
    a.c[1] = Scalar::integer(q, 2);
    USeries b = USeries::zero(q, 3);
    b.c[1] = Scalar::integer(q, 1);
    b.c[3] = Scalar::integer(q, 5);
    USeries p = a * b; // (1+2u)(u+5u^3) = u + 2u^2 + 5u^3 + O(u^4)
    CHECK(p.coeff(0).is_zero());
    CHECK(p.coeff(1) == Scalar::integer(q, 1));
    CHECK(p.coeff(2) == Scalar::integer(q, 2));
    CHECK(p.coeff(3) == Scalar::integer(q, 5));
    // star flips odd coefficients only
    USeries s = a.star();
    CHECK(s.coeff(0) == a.coeff(0));
    CHECK(s.coeff(1) == -a.coeff(1));
    CHECK(a.star().star() == a);
    // shift truncates
    USeries sh = b.shift(1);
    CHECK(sh.coeff(2) == Scalar::integer(q, 1));
    CHECK(sh.coeff(3).is_zero()); // u^4 term fell off
    CHECK((a - a).is_zero());
}

TEST_CASE("u-series coefficientwise derivative") {
    FieldTag r = field_ratfun();
    USeries a = USeries::zero(r, 2);
    a.c[0] = Scalar::parse(r, "ratfun:t^2");
    a.c[2] = Scalar::t(r);
    USeries d = a.derive();
    CHECK(d.coeff(0) == Scalar::parse(r, "ratfun:2*t"));
    CHECK(d.coeff(1).is_zero());
    CHECK(d.coeff(2) == Scalar::one(r));
}

TEST_SUITE_END();
