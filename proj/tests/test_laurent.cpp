#include "clasp/laurent.hpp"

#include <doctest.h>

#include "support.hpp"

using namespace clasp;
using clasp_test::Rng;

namespace {

LaurentPoly P(const std::string& s, int nv) { return LaurentPoly::parse(s, nv); }

LaurentMatrix trefoil_alexander() {
    // V^T - t V with V = [[-1, 1], [0, -1]]
    LaurentMatrix m(2, 2, 1);
    m.at(0, 0) = P("t1 - 1", 1);
    m.at(0, 1) = P("-t1", 1);
    m.at(1, 0) = P("1", 1);
    m.at(1, 1) = P("t1 - 1", 1);
    return m;
}

}  // namespace

TEST_CASE("determinant: 0x0 is the empty product") {
    LaurentMatrix m(0, 0, 2);
    CHECK(m.det() == LaurentPoly::constant(2, BigInt(1)));
}

TEST_CASE("determinant: 1x1 is the entry") {
    LaurentMatrix m(1, 1, 2);
    m.at(0, 0) = P("-1 - t1*t2", 2);
    CHECK(m.det() == P("-1 - t1*t2", 2));
}

TEST_CASE("determinant: trefoil 2x2 gives t^2 - t + 1") {
    LaurentMatrix m = trefoil_alexander();
    CHECK(m.det() == P("t1^2 - t1 + 1", 1));
    CHECK(m.det() == clasp_test::det_cofactor(m));
}

TEST_CASE("determinant: non-square input is rejected") {
    LaurentMatrix m(2, 3, 1);
    CHECK_THROWS_AS(m.det(), std::invalid_argument);
}

TEST_CASE("determinant agrees with cofactor expansion up to 4x4") {
    Rng rng(0xdecaf001);
    for (int n = 0; n <= 4; ++n) {
        for (int rep = 0; rep < 12; ++rep) {
            LaurentMatrix m = clasp_test::random_matrix(rng, n, 2, 2);
            CHECK(m.det() == clasp_test::det_cofactor(m));
        }
    }
}

TEST_CASE("determinant is multiplicative and transpose-invariant") {
    Rng rng(0xdecaf002);
    for (int rep = 0; rep < 25; ++rep) {
        int n = static_cast<int>(rng.range(1, 3));
        LaurentMatrix a = clasp_test::random_matrix(rng, n, 2, 1);
        LaurentMatrix b = clasp_test::random_matrix(rng, n, 2, 1);
        CHECK((a * b).det() == a.det() * b.det());
        CHECK(a.transpose().det() == a.det());
    }
}

TEST_CASE("normalize_unit canonical examples") {
    CHECK(P("-1 - t1*t2", 2).normalize_unit() == P("1 + t1*t2", 2));
    CHECK(LaurentPoly(1).normalize_unit() == LaurentPoly(1));
    // -t^-1 (t^2 - t + 1) = -t + 1 - t^-1
    CHECK(P("-t1 + 1 - t1^-1", 1).normalize_unit() == P("t1^2 - t1 + 1", 1));
}

TEST_CASE("normalize_unit is idempotent and unit-invariant") {
    Rng rng(0xdecaf003);
    for (int rep = 0; rep < 200; ++rep) {
        LaurentPoly p = clasp_test::random_poly(rng, 2, 4, 3);
        LaurentPoly n = p.normalize_unit();
        CHECK(n.normalize_unit() == n);
        // multiply by a random unit +/- t1^a t2^b
        ExpVec shift = {static_cast<int>(2 * rng.range(-3, 3)),
                        static_cast<int>(2 * rng.range(-3, 3))};
        LaurentPoly unit =
            LaurentPoly::term_doubled(2, shift, BigInt(rng.range(0, 1) ? 1 : -1));
        CHECK((p * unit).normalize_unit() == n);
    }
}

TEST_CASE("bar involution") {
    CHECK(P("t1*t2", 2).bar() == P("t1^-1*t2^-1", 2));
    CHECK(P("1 + t1*t2", 2).bar() == P("1 + t1^-1*t2^-1", 2));
    Rng rng(0xdecaf004);
    for (int rep = 0; rep < 100; ++rep) {
        LaurentPoly p = clasp_test::random_poly(rng, 3, 4, 2);
        LaurentPoly q = clasp_test::random_poly(rng, 3, 4, 2);
        CHECK(p.bar().bar() == p);
        CHECK((p * q).bar() == p.bar() * q.bar());
        CHECK((p + q).bar() == p.bar() + q.bar());
    }
}

TEST_CASE("ring axioms on random triples") {
    Rng rng(0xdecaf005);
    for (int rep = 0; rep < 1000; ++rep) {
        LaurentPoly a = clasp_test::random_poly(rng, 2, 3, 2);
        LaurentPoly b = clasp_test::random_poly(rng, 2, 3, 2);
        LaurentPoly c = clasp_test::random_poly(rng, 2, 3, 2);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("printing round-trips through parsing") {
    Rng rng(0xdecaf006);
    for (int rep = 0; rep < 200; ++rep) {
        LaurentPoly p = clasp_test::random_poly(rng, 2, 5, 3, /*half_exponents=*/true);
        CHECK(LaurentPoly::parse(p.to_string(), 2) == p);
    }
    CHECK(P("t1^(1/2) - t1^(-1/2)", 1).to_string() == "t1^(1/2) - t1^(-1/2)");
    CHECK(P("-3*t1^2*t2^-1 + 7", 2).to_string() == "-3*t1^2*t2^-1 + 7");
    CHECK(LaurentPoly(2).to_string() == "0");
}

TEST_CASE("exact division") {
    LaurentPoly a = P("t1^2 - t1 + 1", 1);
    LaurentPoly b = P("t1 - t1^-1", 1);
    auto q = (a * b).divide_exact(b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    CHECK_FALSE(a.divide_exact(b).has_value());
    // coefficient divisibility matters too
    CHECK_FALSE(P("3*t1", 1).divide_exact(P("2", 1)).has_value());
    CHECK(P("4*t1", 1).divide_exact(P("2", 1)).value() == P("2*t1", 1));
}

TEST_CASE("half substitution halves integer exponents") {
    LaurentPoly p = P("t1^2 - 1 + t1^-2", 1);
    CHECK(p.half_substitution() == P("t1 - 1 + t1^-1", 1));
    CHECK_THROWS_AS(P("t1^(1/2)", 1).half_substitution(), std::domain_error);
}

TEST_CASE("fractions compare by cross-multiplication and reduce") {
    // (t - t^-1) / (t - t^-1) == 1
    LaurentFraction f(sqrt_diff_factor(1, 0), {1});
    CHECK(f == LaurentFraction::from_poly(P("1", 1)));
    CHECK(f.reduced().denominator_powers() == std::vector<int>{0});
    CHECK(f.reduced().numerator() == P("1", 1));

    LaurentFraction g(P("t1^2 - 1 + t1^-2", 1), {1});
    CHECK(g != LaurentFraction::from_poly(P("1", 1)));
    LaurentFraction gr = g.reduced();  // numerator not divisible: unchanged
    CHECK(gr.denominator_powers() == std::vector<int>{1});
    CHECK(g == gr);
}
