#include "clasp/obstructions.hpp"

#include <doctest.h>

#include <numeric>

#include "support.hpp"

using namespace clasp;
using clasp_test::Rng;

TEST_CASE("murasugi-tristram inequality checker") {
    CHECK(murasugi_tristram_ok(-2, 0, 1, {2, 0, 0}));
    CHECK_FALSE(murasugi_tristram_ok(-2, 0, 1, {1, 0, 0}));
    CHECK(murasugi_tristram_ok(0, 2, 3, {0, 0, 0}));  // |0| + |2-3+1| = 0
    // fox as a 3-colored link at (1/2,1/2,1/2): needs beta1 + c >= 3
    CHECK(murasugi_tristram_ok(-1, 0, 3, {1, 2, 0}));
    CHECK_FALSE(murasugi_tristram_ok(-1, 0, 3, {1, 1, 0}));

    // monotone in the budget
    Rng rng(0x0b01);
    for (int rep = 0; rep < 200; ++rep) {
        long long s = rng.range(-5, 5), e = rng.range(0, 4);
        int mu = static_cast<int>(rng.range(1, 4));
        SurfaceBudget small{rng.range(0, 5), rng.range(0, 5), 0};
        SurfaceBudget large{small.beta1 + rng.range(0, 3), small.c + rng.range(0, 3), 0};
        if (murasugi_tristram_ok(s, e, mu, small)) CHECK(murasugi_tristram_ok(s, e, mu, large));
    }
}

TEST_CASE("slice genus lower bound") {
    std::vector<TorusPoint> pts = {TorusPoint::exact({{1, 2}}), TorusPoint::exact({{1, 4}}),
                                   TorusPoint::exact({{3, 4}})};
    CHECK(slice_genus_lower_bound(bundled_model("trefoil"), pts) == 2);

    CHECK_THROWS_AS(slice_genus_lower_bound(bundled_model("hopf2"),
                                            {TorusPoint::exact({{1, 2}, {1, 2}})}),
                    std::domain_error);

    ColoredLinkModel unlink2 = disjoint_sum(bundled_model("unknot"), bundled_model("unknot"));
    CHECK(slice_genus_lower_bound(unlink2, {TorusPoint::exact({{1, 2}, {1, 2}})}) == 0);

    // points outside T^mu_P are skipped with a warning
    std::vector<std::string> skipped;
    long long b = slice_genus_lower_bound(bundled_model("trefoil"),
                                          {TorusPoint::exact({{1, 6}})}, &skipped);
    CHECK(b == 0);
    REQUIRE(skipped.size() == 1);
    CHECK(skipped[0].find("1/6") != std::string::npos);

    // monotone in the point set
    std::vector<TorusPoint> fewer = {TorusPoint::exact({{1, 4}})};
    CHECK(slice_genus_lower_bound(bundled_model("trefoil"), fewer) <=
          slice_genus_lower_bound(bundled_model("trefoil"), pts));
}

TEST_CASE("slice obstruction scans") {
    // fox as a 3-colored link: a witness certifies it is not slice
    auto ws = slice_obstruction(bundled_model("fox"), 4);
    REQUIRE_FALSE(ws.empty());
    bool found = false;
    for (const auto& w : ws) {
        if (w.point.to_string() == "1/2,1/2,1/2") {
            CHECK(w.sigma == -1);
            CHECK(w.violated == "sigma-nonzero");
            found = true;
        }
    }
    CHECK(found);

    // the underlying 1-colored link is slice in the ordinary sense: no witness
    CHECK(slice_obstruction_diagonal(bundled_model("fox"), 8).empty());

    // trefoil: immediate witness at -1
    auto tw = slice_obstruction(bundled_model("trefoil"), 2);
    REQUIRE(tw.size() == 1);
    CHECK(tw[0].point.to_string() == "1/2");
    CHECK(tw[0].sigma == -2);

    // every witness satisfies the mod-2 congruence of its model
    ColoredLinkModel fox = bundled_model("fox");
    long long rhs = fox.nu + fox.total_cross_color_linking() + 1;
    for (const auto& w : ws) CHECK(((w.sigma + w.eta - rhs) % 2 + 2) % 2 == 0);

    // witness serialization
    std::string json = witnesses_to_json_text(tw);
    CHECK(json.find("\"point\": \"1/2\"") != std::string::npos);
    CHECK(json.find("\"violated\": \"sigma-nonzero\"") != std::string::npos);
}

TEST_CASE("casson-gordon surgery formula") {
    // with a zero framing matrix the invariant is sigma itself
    Rng rng(0x0b02);
    for (int rep = 0; rep < 100; ++rep) {
        int nu = static_cast<int>(rng.range(1, 4));
        long long q = rng.range(2, 12);
        SurgeryData s;
        s.nu = nu;
        s.framed_linking.assign(static_cast<size_t>(nu),
                                std::vector<long long>(static_cast<size_t>(nu), 0));
        s.q = q;
        for (int i = 0; i < nu; ++i) {
            long long n = rng.range(1, q - 1);
            while (std::gcd(n, q) != 1) n = rng.range(1, q - 1);
            s.n.push_back(n);
        }
        long long sigma = rng.range(-6, 6);
        CHECK(casson_gordon(s, sigma) == Rational(sigma));
    }

    SurgeryData a{1, {{2}}, 2, {1}};
    CHECK(casson_gordon(a, 0) == Rational(0));
    SurgeryData b{1, {{1}}, 2, {1}};
    CHECK(casson_gordon(b, 0) == Rational(-1, 2));

    SurgeryData bad{1, {{1}}, 4, {2}};
    CHECK_THROWS_AS(casson_gordon(bad, 0), std::invalid_argument);
    SurgeryData asym{2, {{0, 1}, {2, 0}}, 2, {1, 1}};
    CHECK_THROWS_AS(casson_gordon(asym, 0), std::invalid_argument);
}

TEST_CASE("concordance domain flag") {
    CHECK(concordance_domain(TorusPoint::exact({{1, 2}, {1, 4}})));
    CHECK_FALSE(concordance_domain(TorusPoint::exact({{1, 2}, {1, 3}})));
    CHECK_FALSE(concordance_domain(TorusPoint::exact({{1, 6}})));
}
