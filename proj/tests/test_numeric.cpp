#include <doctest.h>

#include <cmath>

#include "clasp/cyclotomic.hpp"
#include "clasp/eval.hpp"
#include "clasp/fixedpoint.hpp"
#include "clasp/hermitian.hpp"
#include "clasp/torus.hpp"
#include "oracle.hpp"
#include "support.hpp"

using namespace clasp;
using clasp_test::Rng;

namespace {

Cyc rational_cyc(const std::shared_ptr<const CycField>& f, long long num, long long den = 1) {
    return Cyc::from_rational(f, Rational(num, den));
}

// random element with small rational coordinates
Cyc random_cyc(Rng& rng, const std::shared_ptr<const CycField>& f) {
    std::vector<Rational> c(static_cast<size_t>(f->degree()));
    for (auto& x : c) x = Rational(rng.range(-2, 2), rng.range(1, 2));
    return Cyc(f, std::move(c));
}

HermitianExact random_hermitian(Rng& rng, const std::shared_ptr<const CycField>& f, int n) {
    HermitianExact h(f, n);
    for (int i = 0; i < n; ++i) {
        Cyc d = random_cyc(rng, f);
        h.at(i, i) = d + d.conj();
        for (int j = i + 1; j < n; ++j) {
            Cyc z = random_cyc(rng, f);
            h.at(i, j) = z;
            h.at(j, i) = z.conj();
        }
    }
    return h;
}

}  // namespace

TEST_CASE("fixed point: pi and the quarter turn") {
    FixedPrec ctx(128);
    FBound pi = ctx.pi();
    double val = pi.v.to_double() / std::pow(2.0, 128);
    CHECK(std::abs(val - 3.14159265358979323846) < 1e-30);
    CHECK(pi.e < BigInt(1000));

    auto [c, s] = ctx.cos_sin_turn(1, 4);
    CHECK(c.v.abs() <= c.e + BigInt(1000));  // cos(pi/2) encloses 0
    CHECK(std::abs(s.v.to_double() / std::pow(2.0, 128) - 1.0) < 1e-30);
}

TEST_CASE("cyclotomic: vanishing sums and conjugation") {
    auto f3 = CycField::get(3);
    Cyc x = Cyc::zeta_power(f3, 0) + Cyc::zeta_power(f3, 1) + Cyc::zeta_power(f3, 2);
    CHECK(x.is_zero());

    auto f12 = CycField::get(12);
    Rng rng(0xc0ffee01);
    for (int rep = 0; rep < 50; ++rep) {
        Cyc a = random_cyc(rng, f12);
        Cyc b = random_cyc(rng, f12);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        if (!a.is_zero()) CHECK(a * a.inverse() == rational_cyc(f12, 1));
        CHECK((a + a.conj()).is_real());
    }
}

TEST_CASE("cyclotomic: embeddings respect the root tower") {
    auto f3 = CycField::get(3);
    auto f12 = CycField::get(12);
    CHECK(Cyc::zeta_power(f3, 1).embed(f12) == Cyc::zeta_power(f12, 4));
    Rng rng(0xc0ffee02);
    for (int rep = 0; rep < 30; ++rep) {
        Cyc a = random_cyc(rng, f3);
        Cyc b = random_cyc(rng, f3);
        CHECK((a * b).embed(f12) == a.embed(f12) * b.embed(f12));
    }
}

TEST_CASE("certified sign of real cyclotomic values") {
    auto f5 = CycField::get(5);
    Cyc two_cos72 = Cyc::zeta_power(f5, 1) + Cyc::zeta_power(f5, 4);
    CHECK(certified_sign(two_cos72) == 1);

    Cyc two_cos144 = Cyc::zeta_power(f5, 2) + Cyc::zeta_power(f5, 3);
    CHECK(certified_sign(two_cos144) == -1);

    auto f3 = CycField::get(3);
    Cyc minus_one = Cyc::zeta_power(f3, 1) + Cyc::zeta_power(f3, 2);
    CHECK(certified_sign(minus_one) == -1);
    CHECK(certified_sign(rational_cyc(f3, 0)) == 0);

    // 2cos(2pi/7) - 2cos(4pi/7): small positive value, needs the interval path
    auto f7 = CycField::get(7);
    Cyc x = Cyc::zeta_power(f7, 1) + Cyc::zeta_power(f7, 6) - Cyc::zeta_power(f7, 2) -
            Cyc::zeta_power(f7, 5);
    CHECK(certified_sign(x) == 1);
}

TEST_CASE("torus points: construction, classification, half point") {
    CHECK_THROWS_AS(TorusPoint::exact({{0, 5}}), std::domain_error);
    CHECK_THROWS_AS(TorusPoint::exact({{10, 5}}), std::domain_error);

    Classification c1 = classify(TorusPoint::exact({{1, 2}, {1, 4}}));
    CHECK(c1.in_T_star);
    CHECK(c1.in_T_Q);
    CHECK(c1.in_T_P);
    CHECK(c1.conductor == 4);

    Classification c2 = classify(TorusPoint::exact({{1, 2}, {1, 3}}));
    CHECK(c2.in_T_Q);
    CHECK_FALSE(c2.in_T_P);

    Classification c3 = classify(TorusPoint::exact({{1, 6}}));
    CHECK(c3.in_T_Q);
    CHECK_FALSE(c3.in_T_P);

    Classification c4 = classify(TorusPoint::parse("~0.7853981"));
    CHECK(c4.in_T_star);
    CHECK_FALSE(c4.in_T_Q);
    CHECK_FALSE(c4.conductor.has_value());

    // conjugation invariance of classification
    Rng rng(0xc0ffee03);
    for (int rep = 0; rep < 40; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2);
        Classification a = classify(w);
        Classification b = classify(w.conjugate());
        CHECK(a.in_T_Q == b.in_T_Q);
        CHECK(a.in_T_P == b.in_T_P);
        CHECK(a.conductor == b.conductor);
    }

    // half point: -1 -> i, 1/3 -> 1/6
    TorusPoint h1 = TorusPoint::exact({{1, 2}}).half();
    CHECK(std::get<ExactCoord>(h1.coord(0)).k == 1);
    CHECK(std::get<ExactCoord>(h1.coord(0)).q == 4);
    TorusPoint h2 = TorusPoint::exact({{1, 3}}).half();
    CHECK(std::get<ExactCoord>(h2.coord(0)).k == 1);
    CHECK(std::get<ExactCoord>(h2.coord(0)).q == 6);

    // half(w) squared recovers w exactly
    for (int rep = 0; rep < 40; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 1);
        TorusPoint h = w.half();
        LaurentPoly t = LaurentPoly::monomial(1, 0, 1);
        Cyc hv = eval_exact(t, h);
        Cyc wv = eval_exact(t, w).embed(hv.field());
        CHECK(hv * hv == wv);
    }
}

TEST_CASE("torus point parsing round trips") {
    TorusPoint p = TorusPoint::parse("1/2,1/4");
    CHECK(p.to_string() == "1/2,1/4");
    CHECK(p.mu() == 2);
    CHECK_THROWS_AS(TorusPoint::parse("2/2"), std::domain_error);
    CHECK_THROWS_AS(TorusPoint::parse("nonsense"), std::invalid_argument);
}

TEST_CASE("eval_at: ring homomorphism with frozen values") {
    LaurentPoly p = LaurentPoly::parse("1 + t1*t2", 2);
    TorusPoint ii = TorusPoint::exact({{1, 4}, {1, 4}});
    CHECK(eval_exact(p, ii).is_zero());

    TorusPoint mm = TorusPoint::exact({{1, 2}, {1, 2}});
    Cyc two = eval_exact(p, mm);
    CHECK(two.is_rational());
    CHECK(two.rational_value() == Rational(2));

    LaurentPoly tre = LaurentPoly::parse("t1 - 1 + t1^-1", 1);
    CHECK(eval_exact(tre, TorusPoint::exact({{1, 6}})).is_zero());

    Rng rng(0xc0ffee04);
    for (int rep = 0; rep < 50; ++rep) {
        LaurentPoly a = clasp_test::random_poly(rng, 2, 3, 2, true);
        LaurentPoly b = clasp_test::random_poly(rng, 2, 3, 2, true);
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 12);
        auto f = CycField::get(eval_conductor(w));
        CHECK(eval_exact(a * b, w, f) == eval_exact(a, w, f) * eval_exact(b, w, f));
        CHECK(eval_exact(a + b, w, f) == eval_exact(a, w, f) + eval_exact(b, w, f));
    }
}

TEST_CASE("signature engine: frozen small cases") {
    auto f1 = CycField::get(1);
    HermitianExact m1(f1, 1);
    m1.at(0, 0) = rational_cyc(f1, -8);
    CHECK(m1.signature_nullity() == SigNull{-1, 0});

    // [[0, 1-i], [1+i, 0]] has eigenvalues +sqrt(2), -sqrt(2)
    auto f4 = CycField::get(4);
    HermitianExact m2(f4, 2);
    Cyc i = Cyc::zeta_power(f4, 1);
    m2.at(0, 1) = rational_cyc(f4, 1) - i;
    m2.at(1, 0) = rational_cyc(f4, 1) + i;
    REQUIRE(m2.is_hermitian());
    CHECK(m2.signature_nullity() == SigNull{0, 0});

    // [[5, 1], [1, 0]] has determinant -1
    HermitianExact m3(f1, 2);
    m3.at(0, 0) = rational_cyc(f1, 5);
    m3.at(0, 1) = rational_cyc(f1, 1);
    m3.at(1, 0) = rational_cyc(f1, 1);
    CHECK(m3.signature_nullity() == SigNull{0, 0});

    HermitianExact zero2(f1, 2);
    CHECK(zero2.signature_nullity() == SigNull{0, 2});
}

TEST_CASE("signature engine agrees with the eigenvalue oracle") {
    Rng rng(0xc0ffee05);
    static const long long conductors[] = {1, 3, 4, 5, 8, 9, 12};
    for (int rep = 0; rep < 60; ++rep) {
        auto f = CycField::get(conductors[rng.range(0, 6)]);
        int n = static_cast<int>(rng.range(1, 6));
        HermitianExact h = random_hermitian(rng, f, n);
        REQUIRE(h.is_hermitian());
        SigNull engine = h.signature_nullity();
        SigNull oracle = clasp_test::oracle_signature_nullity(h);
        CHECK(engine == oracle);
        // signature + nullity = n (mod 2)
        CHECK((engine.sigma + engine.nullity - n) % 2 == 0);
    }
}

TEST_CASE("determinant positivity matches the mod-4 signature residue") {
    // for nonsingular H: sigma = n (mod 4) iff det(H) > 0
    Rng rng(0xc0ffee06);
    int checked = 0;
    while (checked < 30) {
        auto f = CycField::get(static_cast<long long>(rng.range(0, 1) ? 4 : 8));
        int n = static_cast<int>(rng.range(1, 4));
        HermitianExact h = random_hermitian(rng, f, n);
        SigNull sn = h.signature_nullity();
        if (sn.nullity != 0) continue;
        ++checked;
        Cyc det = clasp_test::det_cofactor_cyc(h);
        int det_sign = certified_sign(det);
        bool residue = ((sn.sigma - n) % 4 + 4) % 4 == 0;
        CHECK((det_sign > 0) == residue);
    }
}

TEST_CASE("hermitian moves: enlargement block and invariance") {
    auto f1 = CycField::get(1);
    HermitianExact h(f1, 1);
    h.at(0, 0) = rational_cyc(f1, -8);

    HermitianMoveSpec spec;
    spec.kind = HermitianMoveSpec::Kind::enlargement;
    spec.xi = {Cyc(f1)};
    spec.lambda = Rational(5);
    spec.alpha = rational_cyc(f1, 1);
    HermitianExact big = apply_hermitian_move(h, spec);
    CHECK(big.size() == 3);
    CHECK(big.signature_nullity() == SigNull{-1, 0});

    // enlargement of the empty matrix is a hyperbolic pair
    HermitianExact empty(f1, 0);
    HermitianMoveSpec spec0 = spec;
    spec0.xi.clear();
    HermitianExact pair = apply_hermitian_move(empty, spec0);
    CHECK(pair.size() == 2);
    CHECK(pair.signature_nullity() == SigNull{0, 0});

    // reduction undoes enlargement
    HermitianMoveSpec red;
    red.kind = HermitianMoveSpec::Kind::reduction;
    HermitianExact back = apply_hermitian_move(big, red);
    REQUIRE(back.size() == 1);
    CHECK(back.at(0, 0) == h.at(0, 0));

    CHECK_THROWS_AS(apply_hermitian_move(h, red), std::invalid_argument);

    // random enlargements preserve signature and nullity
    Rng rng(0xc0ffee07);
    auto f12 = CycField::get(12);
    for (int rep = 0; rep < 40; ++rep) {
        HermitianExact m = random_hermitian(rng, f12, static_cast<int>(rng.range(0, 3)));
        SigNull before = m.signature_nullity();
        HermitianMoveSpec s;
        s.kind = HermitianMoveSpec::Kind::enlargement;
        for (int i = 0; i < m.size(); ++i) s.xi.push_back(random_cyc(rng, f12));
        s.lambda = Rational(rng.range(-4, 4));
        s.alpha = Cyc::zeta_power(f12, rng.range(0, 11)).scaled(Rational(rng.range(1, 3)));
        HermitianExact big2 = apply_hermitian_move(m, s);
        REQUIRE(big2.is_hermitian());
        SigNull after = big2.signature_nullity();
        CHECK(before == after);
        HermitianExact back2 = apply_hermitian_move(big2, red);
        CHECK(back2.signature_nullity() == before);
    }
}

TEST_CASE("approximate engine: eigenvalue counts and the gray band") {
    HermitianApprox m(2);
    m.at(0, 0) = {-2.0, 0.0};
    m.at(0, 1) = {1.0, -1.0};
    m.at(1, 0) = {1.0, 1.0};
    m.at(1, 1) = {-2.0, 0.0};
    REQUIRE(m.is_hermitian(1e-12));
    // eigenvalues -2 +/- sqrt(2): both negative
    CHECK(m.signature_nullity(1e-9) == SigNull{-2, 0});

    HermitianApprox tiny(1);
    tiny.at(0, 0) = {1e-9, 0.0};
    CHECK_THROWS_AS(tiny.signature_nullity(1e-9), indeterminate_error);

    HermitianApprox zero(1);
    zero.at(0, 0) = {0.0, 0.0};
    CHECK(zero.signature_nullity(1e-9) == SigNull{0, 1});
}

TEST_CASE("integer symmetric signature helper") {
    CHECK(integer_symmetric_signature({{2}}) == SigNull{1, 0});
    CHECK(integer_symmetric_signature({{0, 1}, {1, 0}}) == SigNull{0, 0});
    CHECK(integer_symmetric_signature({}) == SigNull{0, 0});
}
