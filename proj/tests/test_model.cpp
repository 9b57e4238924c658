#include "clasp/model.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "clasp/invariants.hpp"
#include "clasp/conway.hpp"
#include "support.hpp"

using namespace clasp;
using clasp_test::Rng;

TEST_CASE("bundled models validate cleanly") {
    for (const std::string& name : bundled_model_names()) {
        INFO(name);
        CHECK(validate(bundled_model(name)).empty());
    }
}

TEST_CASE("validate reports broken transpose symmetry") {
    ColoredLinkModel m = bundled_model("clasp2");
    m.seifert.matrices["+-"] = {{1}};  // no longer the transpose of A^-+
    auto bad = validate(m);
    REQUIRE_FALSE(bad.empty());
    bool mentions = false;
    for (const std::string& s : bad)
        if (s.find("transpose") != std::string::npos) mentions = true;
    CHECK(mentions);
}

TEST_CASE("validate reports non-surjective colors") {
    ColoredLinkModel m = bundled_model("clasp2");
    m.colors = {1, 1};
    auto bad = validate(m);
    REQUIRE_FALSE(bad.empty());
    bool mentions = false;
    for (const std::string& s : bad)
        if (s.find("surjective") != std::string::npos) mentions = true;
    CHECK(mentions);
}

TEST_CASE("mirror negates the signature") {
    ColoredLinkModel tref = bundled_model("trefoil");
    TorusPoint minus1 = TorusPoint::exact({{1, 2}});
    CHECK(signature(mirror(tref), minus1).sigma == 2);
    CHECK(signature(tref, minus1).sigma == -2);

    // mirror of the contractible-complex model is still zero
    ColoredLinkModel h2 = bundled_model("hopf2");
    TorusPoint w = TorusPoint::exact({{1, 3}, {2, 5}});
    CHECK(signature(mirror(h2), w).sigma == 0);

    // involution
    ColoredLinkModel twice = mirror(mirror(tref));
    CHECK(twice.seifert.matrices == tref.seifert.matrices);
    CHECK(twice.linking == tref.linking);
}

TEST_CASE("reverse_color re-keys the family") {
    ColoredLinkModel c2 = bundled_model("clasp2");
    ColoredLinkModel rev = reverse_color(c2, 1);
    CHECK(validate(rev).empty());

    // H'(w1, w2) = H(w1^-1, w2): compare sigma/eta at sample points
    Rng rng(0xab01);
    for (int rep = 0; rep < 20; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 16);
        const auto& c0 = std::get<ExactCoord>(w.coord(0));
        TorusPoint w_conj1({make_exact_coord(c0.q - c0.k, c0.q), w.coord(1)});
        SignatureResult a = signature(rev, w);
        SignatureResult b = signature(c2, w_conj1);
        CHECK(a.sigma == b.sigma);
        CHECK(a.eta == b.eta);
    }

    // reversing twice restores the model
    ColoredLinkModel twice = reverse_color(rev, 1);
    CHECK(twice.seifert.matrices == c2.seifert.matrices);
    CHECK(twice.linking == c2.linking);

    // mu = 1: orientation reversal leaves sigma and eta unchanged
    ColoredLinkModel tref = bundled_model("trefoil");
    ColoredLinkModel tref_rev = reverse_color(tref, 1);
    for (int rep = 0; rep < 10; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 1, 20);
        SignatureResult a = signature(tref_rev, w);
        SignatureResult b = signature(tref, w);
        CHECK(a.sigma == b.sigma);
        CHECK(a.eta == b.eta);
    }

    CHECK_THROWS_AS(reverse_color(c2, 3), std::invalid_argument);
}

TEST_CASE("connected sum adds signatures") {
    ColoredLinkModel tref = bundled_model("trefoil");
    ColoredLinkModel two = connected_sum(tref, tref, 1, 1);
    CHECK(validate(two).empty());
    CHECK(signature(two, TorusPoint::exact({{1, 2}})).sigma == -4);

    // neutral element
    ColoredLinkModel with_unknot = connected_sum(bundled_model("clasp2"), bundled_model("unknot"), 2, 1);
    CHECK(validate(with_unknot).empty());
    Rng rng(0xab02);
    for (int rep = 0; rep < 10; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 12);
        SignatureResult a = signature(with_unknot, w);
        SignatureResult b = signature(bundled_model("clasp2"), w);
        CHECK(a.sigma == b.sigma);
        CHECK(a.eta == b.eta);
    }

    // clasp2 # trefoil on color 2 at (i, -1)
    ColoredLinkModel mix = connected_sum(bundled_model("clasp2"), tref, 2, 1);
    CHECK(validate(mix).empty());
    SignatureResult s = signature(mix, TorusPoint::exact({{1, 4}, {1, 2}}));
    CHECK(s.sigma == -3);
}

TEST_CASE("disjoint sum block-sums and shifts eta") {
    ColoredLinkModel u2 = disjoint_sum(bundled_model("unknot"), bundled_model("unknot"));
    CHECK(validate(u2).empty());
    CHECK(u2.mu == 2);
    Rng rng(0xab03);
    for (int rep = 0; rep < 10; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 20);
        SignatureResult s = signature(u2, w);
        CHECK(s.sigma == 0);
        CHECK(s.eta == 1);
    }

    ColoredLinkModel tt = disjoint_sum(bundled_model("trefoil"), bundled_model("trefoil"));
    CHECK(validate(tt).empty());
    for (int rep = 0; rep < 10; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 16);
        SignatureResult s = signature(tt, w);
        long long s1 = signature(bundled_model("trefoil"), TorusPoint({w.coord(0)})).sigma;
        long long s2 = signature(bundled_model("trefoil"), TorusPoint({w.coord(1)})).sigma;
        CHECK(s.sigma == s1 + s2);
    }

    // commutativity up to permuting coordinates
    ColoredLinkModel ab = disjoint_sum(bundled_model("trefoil"), bundled_model("hopf1"));
    ColoredLinkModel ba = disjoint_sum(bundled_model("hopf1"), bundled_model("trefoil"));
    for (int rep = 0; rep < 10; ++rep) {
        TorusPoint w = clasp_test::random_exact_point(rng, 2, 16);
        TorusPoint wswap({w.coord(1), w.coord(0)});
        CHECK(signature(ab, w).sigma == signature(ba, wswap).sigma);
        CHECK(signature(ab, w).eta == signature(ba, wswap).eta);
    }
}

TEST_CASE("json round trip over the bundled library") {
    for (const std::string& name : bundled_model_names()) {
        INFO(name);
        ColoredLinkModel m = bundled_model(name);
        ColoredLinkModel back = model_from_json_text(model_to_json_text(m));
        CHECK(back.mu == m.mu);
        CHECK(back.nu == m.nu);
        CHECK(back.colors == m.colors);
        CHECK(back.linking == m.linking);
        CHECK(back.beta0_S == m.beta0_S);
        CHECK(back.clasp_count == m.clasp_count);
        CHECK(back.chi_complement == m.chi_complement);
        CHECK(back.basis_split == m.basis_split);
        CHECK(back.seifert.matrices == m.seifert.matrices);
        // and byte-stable serialization
        CHECK(model_to_json_text(back) == model_to_json_text(m));
    }
}

TEST_CASE("json schema errors carry the offending path") {
    // a mu = 2 model whose family lacks the "--" sign vector
    std::string broken = R"({
      "mu": 2, "nu": 2, "colors": [1, 2],
      "linking_matrix": [[0, 2], [2, 0]],
      "beta0_S": 1, "clasp_count": 2,
      "chi_complement": null, "basis_split": null,
      "seifert": {"++": [[-1]], "+-": [[0]], "-+": [[0]]}
    })";
    try {
        model_from_json_text(broken);
        FAIL("expected a schema error");
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find("--") != std::string::npos);
        CHECK(std::string(e.what()).find("/seifert") != std::string::npos);
    }

    CHECK_THROWS_AS(model_from_json_text("{"), std::runtime_error);
    CHECK_THROWS_AS(model_from_json_text("{\"mu\": 1}"), std::runtime_error);
}

TEST_CASE("clasp2 file content matches the published family") {
    std::string path = "clasp2_roundtrip_test.json";
    save_model(bundled_model("clasp2"), path);
    ColoredLinkModel m = load_model(path);
    CHECK(m.seifert.at("--") == IntMatrix{{-1}});
    CHECK(m.seifert.at("++") == IntMatrix{{-1}});
    CHECK(m.seifert.at("+-") == IntMatrix{{0}});
    CHECK(m.seifert.at("-+") == IntMatrix{{0}});
    std::remove(path.c_str());
}

TEST_CASE("family-level enlargement generators preserve the invariants") {
    Rng rng(0xab77);
    // T1 on the trefoil: sigma, eta and the potential are unchanged
    {
        ColoredLinkModel tref = bundled_model("trefoil");
        std::map<std::string, std::vector<long long>> u = {{"+", {1, -2}}, {"-", {0, 3}}};
        ColoredLinkModel big = family_enlargement_t1(tref, 1, u, -4);
        CHECK(validate(big).empty());
        CHECK(big.size() == 4);
        for (int rep = 0; rep < 10; ++rep) {
            TorusPoint w = clasp_test::random_exact_point(rng, 1, 20);
            SignatureResult a = signature(big, w);
            SignatureResult b = signature(tref, w);
            CHECK(a.sigma == b.sigma);
            CHECK(a.eta == b.eta);
        }
        CHECK(clasp::potential(big) == clasp::potential(tref));
    }
    // T2 on clasp2: two clasps are added, everything else is stable
    {
        ColoredLinkModel c2 = bundled_model("clasp2");
        std::map<std::string, std::vector<long long>> u = {{"++", {2}}, {"-+", {-1}}};
        ColoredLinkModel big = family_enlargement_t2(c2, 1, 2, u, 1);
        CHECK(validate(big).empty());
        CHECK(big.clasp_count == c2.clasp_count + 2);
        for (int rep = 0; rep < 10; ++rep) {
            TorusPoint w = clasp_test::random_exact_point(rng, 2, 16);
            SignatureResult a = signature(big, w);
            SignatureResult b = signature(c2, w);
            CHECK(a.sigma == b.sigma);
            CHECK(a.eta == b.eta);
        }
        CHECK(clasp::potential(big) == clasp::potential(c2));
    }
    CHECK_THROWS_AS(family_enlargement_t1(bundled_model("trefoil"), 2, {}, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(family_enlargement_t2(bundled_model("clasp2"), 1, 1, {}, 0),
                    std::invalid_argument);
}
