#include <doctest.h>

#include <algorithm>

#include "nakct/cluster.hpp"
#include "nakct/errors.hpp"

using namespace nakct;

namespace {

const KupischSeries glued = KupischSeries::validate({1, 2, 3, 3, 3, 3, 3, 3, 2, 2, 2, 2, 2}, false);
const KupischSeries a38s = KupischSeries::validate({1, 2, 3, 3, 3, 3, 3, 3}, false);
const KupischSeries a26s = KupischSeries::validate({1, 2, 2, 2, 2, 2}, false);
const KupischSeries selfinj = KupischSeries::validate({5, 5, 5}, true);

ModuleSet proj_inj(const ModCat& mc) {
    ModuleSet c;
    for (const Coords& x : mc.modules())
        if (mc.is_projective(x) || mc.is_injective(x)) c.insert(x);
    return c;
}

ModuleSet projectives_only(const ModCat& mc) {
    ModuleSet c;
    for (const Coords& x : mc.modules())
        if (mc.is_projective(x)) c.insert(x);
    return c;
}

// the worked six-periodic subcategory: all projectives plus both orbits
ModuleSet selfinj_example_set(const ModCat& mc) {
    ModuleSet c = projectives_only(mc);
    for (const Coords& x :
         {Coords{1, 2, 3}, {1, 5, 6}, {1, 2, 6}, {1, 2, 4}, {2, 5, 6}, {1, 3, 6}})
        c.insert(x);
    return c;
}

}  // namespace

TEST_CASE("rigidity") {
    ModCat mc(a38s, 2);
    ModuleSet projs = projectives_only(mc);
    for (int n = 2; n <= 6; n++) CHECK(rigidity(mc, projs, n).accepted);

    ModCat gm(glued, 2);
    Classification c5 = classify(glued, 2, 5);
    REQUIRE(c5.exists());
    CHECK(rigidity(gm, *c5.subcategory, 5).accepted);
    Verdict v6 = rigidity(gm, *c5.subcategory, 6);
    CHECK_FALSE(v6.accepted);
    REQUIRE(v6.failures.size() == 1);
    CHECK(v6.failures[0].tag == "RigidityFail");
    CHECK(v6.failures[0].k == 5);
}

TEST_CASE("check_partial accepts the worked examples") {
    ModCat mc(a38s, 2);
    CHECK(check_partial(mc, ModuleSet(mc.modules()), 1).accepted);

    ModCat sc(selfinj, 2);
    ModuleSet c = selfinj_example_set(sc);
    CHECK(check_partial(sc, c, 3).accepted);

    // dropping one orbit member breaks the translation bijection at its source
    ModuleSet broken;
    for (const Coords& x : c.mods())
        if (x != Coords{1, 5, 6}) broken.insert(x);
    Verdict v = check_partial(sc, broken, 3);
    CHECK_FALSE(v.accepted);
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0].tag == "TauBijectionFail");
    CHECK(v.failures[0].modules[0] == Coords{1, 2, 3});
}

TEST_CASE("end algebra") {
    ModCat mc(a38s, 2);
    ModuleSet c = proj_inj(mc);
    FinAlg end = end_algebra(mc, c);
    int pairs = 0;
    for (const Coords& x : c.mods())
        for (const Coords& y : c.mods())
            if (precedes(x, y)) pairs++;
    CHECK(end.dim() == pairs);
    CHECK(end.associative());
    CHECK(end.radical_closed());

    ModCat sc(selfinj, 2);
    FinAlg send = end_algebra(sc, selfinj_example_set(sc));
    CHECK(send.associative());
    CHECK(send.radical_closed());
    CHECK(send.radical_nilpotency_index() <= send.dim());
}

TEST_CASE("check_full certifies the worked examples") {
    ModCat mc(a38s, 2);
    CHECK(check_full(mc, proj_inj(mc), 5).accepted);
    CHECK(check_full(mc, ModuleSet(mc.modules()), 1).accepted);

    ModCat gm(glued, 2);
    Classification c5 = classify(glued, 2, 5);
    REQUIRE(c5.exists());
    CHECK(check_full(gm, *c5.subcategory, 5).accepted);

    // dropping an injective breaks the cogenerator condition
    ModuleSet broken;
    for (const Coords& x : c5.subcategory->mods())
        if (x != Coords{11, 12, 13}) broken.insert(x);
    Verdict v = check_full(gm, broken, 5);
    CHECK_FALSE(v.accepted);
    CHECK(v.failures[0].tag == "NotCogenerator");

    ModCat sc(selfinj, 2);
    CHECK(check_full(sc, selfinj_example_set(sc), 3).accepted);
}

TEST_CASE("search reproduces the glued example") {
    ModCat gm(glued, 2);
    auto r5 = search(gm, 5);
    REQUIRE(r5.size() == 1);
    Classification c5 = classify(glued, 2, 5);
    CHECK(r5[0] == *c5.subcategory);
    CHECK(search(gm, 3).empty());
}

TEST_CASE("search finds the self-injective example") {
    ModCat sc(selfinj, 2);
    auto r3 = search(sc, 3);
    ModuleSet expected = selfinj_example_set(sc);
    CHECK(std::find(r3.begin(), r3.end(), expected) != r3.end());
    for (const ModuleSet& r : r3) CHECK(check_full(sc, r, 3).accepted);
}

TEST_CASE("classify on the homogeneous cases") {
    Classification c = classify(a38s, 2, 5);
    REQUIRE(c.exists());
    ModCat mc(a38s, 2);
    CHECK(*c.subcategory == proj_inj(mc));
    CHECK(c.admissible_n == std::vector<int>{5});
    CHECK_FALSE(classify(a38s, 2, 4).exists());

    Classification tiny = classify(KupischSeries::validate({1, 2}, false), 1, 7);
    CHECK_FALSE(tiny.exists());

    Classification necessary = classify(selfinj, 2, 3);
    CHECK(necessary.kind == Classification::Kind::NecessaryOnly);
    CHECK(necessary.necessary_passes);
    Classification necessary2 = classify(selfinj, 2, 2);
    CHECK_FALSE(necessary2.necessary_passes);  // 2 divides neither 3 nor 3
}

TEST_CASE("classify emits the bridge for the glued example") {
    Classification c = classify(glued, 2, 5);
    REQUIRE(c.exists());
    CHECK(c.subcategory->contains({8, 9, 10}));
    ModCat gm(glued, 2);
    ModuleSet expected = proj_inj(gm);
    expected.insert({8, 9, 10});
    CHECK(*c.subcategory == expected);
}

TEST_CASE("classified subcategories pass the full certification") {
    // acyclic families
    for (auto [text, d, n] : {std::tuple{std::string("1,2,2,2"), 1, 3}, {std::string("1,2,2,2,2,2,2"), 1, 2},
                              {std::string("1,2,3,3"), 2, 2}, {std::string("1,2,2,2"), 2, 3}}) {
        KupischSeries s = KupischSeries::parse(text);
        Classification c = classify(s, d, n);
        if (!c.exists()) continue;
        ModCat mc(s, d);
        CHECK(check_full(mc, *c.subcategory, n).accepted);
    }
    // cyclic: l = 2 homogeneous and a decomposable case
    {
        KupischSeries s = KupischSeries::validate({2, 2, 2, 2}, true);
        Classification c = classify(s, 1, 2);
        REQUIRE(c.exists());
        ModCat mc(s, 1);
        CHECK(check_full(mc, *c.subcategory, 2).accepted);
    }
    {
        KupischSeries s = self_glue(glue(KupischSeries::validate({1, 2, 3, 3}, false),
                                         KupischSeries::validate({1, 2, 2}, false)));
        Classification c = classify(s, 2, 2);
        REQUIRE(c.exists());
        ModCat mc(s, 2);
        CHECK(check_full(mc, *c.subcategory, 2).accepted);
    }
}

TEST_CASE("glue_subcats reproduces the glued example") {
    Classification ca = classify(a38s, 2, 5);
    Classification cb = classify(a26s, 2, 5);
    REQUIRE(ca.exists());
    REQUIRE(cb.exists());
    GluedSubcats g = glue_subcats(a38s, *ca.subcategory, a26s, *cb.subcategory, 2, 5);
    CHECK(g.series == glued);
    CHECK(g.verdict.accepted);
    Classification whole = classify(glued, 2, 5);
    CHECK(g.subcat == *whole.subcategory);

    // intersecting with the pieces recovers the inputs
    ModuleSet back_a, back_b;
    for (const Coords& x : g.subcat.mods()) {
        if (member(a38s, 3, x)) back_a.insert(x);
        Coords shifted = shift_by(x, -(a38s.width() - 1));
        if (shifted.front() >= 1 && member(a26s, 3, shifted)) back_b.insert(shifted);
    }
    CHECK(back_a == *ca.subcategory);
    CHECK(back_b == *cb.subcategory);

    ModuleSet no_bridge;
    for (const Coords& x : ca.subcategory->mods())
        if (x != Coords{8, 9, 10}) no_bridge.insert(x);
    CHECK_THROWS_AS(glue_subcats(a38s, no_bridge, a26s, *cb.subcategory, 2, 5), nakct_error);
}

TEST_CASE("gluing the distinguished subcategories gives the distinguished subcategory") {
    KupischSeries a = KupischSeries::validate({1, 2, 3, 3}, false);
    KupischSeries b = KupischSeries::validate({1, 2, 3, 4}, false);
    ModCat ma(a, 2), mb(b, 2);
    GluedSubcats g = glue_subcats(a, ModuleSet(ma.modules()), b, ModuleSet(mb.modules()), 2, 1);
    ModCat mg(g.series, 2);
    CHECK(g.subcat == ModuleSet(mg.modules()));
    CHECK(g.verdict.accepted);
}

TEST_CASE("d = 1 regression against the classical rule") {
    for (int m = 1; m <= 12; m++) {
        std::vector<int> e(m);
        for (int i = 0; i < m; i++) e[i] = std::min(i + 1, 2);
        KupischSeries s = KupischSeries::validate(e, false);
        for (int n = 2; n <= 6; n++) {
            Classification c = classify(s, 1, n);
            bool expected = (m == 1) || ((m - 1) % n == 0);
            CHECK(c.exists() == expected);
            if (c.exists() && m >= 2) {
                ModCat mc(s, 1);
                ModuleSet want = projectives_only(mc);
                for (int k = 1; k <= (m - 1) / n; k++) want.insert({1 + k * n, 2 + k * n});
                CHECK(*c.subcategory == want);
            }
        }
    }
}

TEST_CASE("more-modules closure on accepted sets") {
    // accepted subcategories with l >= 3 contain the four listed indices at
    // every doubled boundary position
    for (auto [s, d, n] : {std::tuple{glued, 2, 5}, {a38s, 2, 5}}) {
        ModCat mc(s, d);
        auto results = search(mc, n);
        for (const ModuleSet& c : results)
            for (const Coords& x : mc.modules()) {
                auto f1 = f_map(s, d, x.back());
                auto f2 = f_map(s, d, x.back() + 1);
                if (!f1 || !f2 || *f1 != x.front() || *f2 != x.front()) continue;
                Coords lower = x, upper = x;
                lower.back() -= 1;
                upper.back() += 1;
                for (const Coords& y : {lower, x, upper})
                    if (mc.is_module_index(y)) CHECK(c.contains(mc.canonical(y)));
                Coords z;
                z.push_back(x.front());
                for (int i = 0; i < d; i++) z.push_back(x[i] + 1);
                if (mc.is_module_index(z)) CHECK(c.contains(mc.canonical(z)));
            }
    }
}
