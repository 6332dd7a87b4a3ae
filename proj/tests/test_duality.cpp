#include "doctest.h"

#include "clfi/duality.hpp"
#include "clfi/explore.hpp"

using namespace clfi;
using PC = PowerCategory;

TEST_CASE("label action table") {
    // Columns FC PD AD FI.
    const PC neg[4] = {PC::FC, PC::AD, PC::PD, PC::FI};
    const PC comp[4] = {PC::FI, PC::PD, PC::AD, PC::FC};
    const PC both[4] = {PC::FI, PC::AD, PC::PD, PC::FC};
    for (std::size_t i = 0; i < 4; ++i) {
        PC c = kCategories[i];
        CHECK(klein_action(Transform::Id, c) == c);
        CHECK(klein_action(Transform::Neg, c) == neg[i]);
        CHECK(klein_action(Transform::Comp, c) == comp[i]);
        CHECK(klein_action(Transform::Both, c) == both[i]);
    }
}

TEST_CASE("group laws") {
    for (Transform t : kTransforms) {
        CHECK(compose(t, Transform::Id) == t);
        CHECK(compose(t, t) == Transform::Id);
        for (PC c : kCategories) CHECK(klein_action(t, klein_action(t, c)) == c);
        for (Transform u : kTransforms) {
            CHECK(compose(t, u) == compose(u, t));
            for (PC c : kCategories) CHECK(klein_action(compose(t, u), c) == klein_action(t, klein_action(u, c)));
        }
    }
    CHECK(compose(Transform::Neg, Transform::Comp) == Transform::Both);
}

TEST_CASE("apply_transform") {
    Formula p = Formula::atom("p");
    auto [c1, f1] = apply_transform(Transform::Neg, AgentSet{0}, p, 3);
    CHECK(c1 == AgentSet{0});
    CHECK(f1 == Formula::negate(p));
    auto [c2, f2] = apply_transform(Transform::Comp, AgentSet{0}, p, 3);
    CHECK(c2 == AgentSet{1, 2});
    CHECK(f2 == p);
    auto [c3, f3] = apply_transform(Transform::Both, AgentSet{0}, p, 3);
    CHECK(c3 == AgentSet{1, 2});
    CHECK(f3 == Formula::negate(p));
}

TEST_CASE("klein table on alpha-dual fixtures") {
    for (const char* name : {"dictator", "veto"}) {
        Fixture fx = fixture(name);
        Formula f = Formula::atom(fx.model.valuation().begin()->first);
        for (State w = 0; w < fx.model.num_states(); ++w)
            for (unsigned cb = 0; cb < fx.model.num_coalitions(); ++cb) {
                KleinTable t = klein_table_check(fx.model, w, AgentSet(static_cast<AgentSet::word_type>(cb)), f);
                CHECK(t.pass());
                REQUIRE(t.rows.size() == 4);
                CHECK(t.rows[0].transform == Transform::Id);
                CHECK(t.rows[0].observed == t.base);
            }
    }
}

TEST_CASE("klein table refuses a model that is not alpha-dual") {
    Fixture mp = fixture("matching-pennies");
    CHECK_THROWS_AS(klein_table_check(mp.model, 0, AgentSet{0}, Formula::atom("p")), PreconditionError);
    std::vector<Formula> fs{Formula::atom("p")};
    CHECK_THROWS_AS(check_conditional_duality(mp.model, fs), PreconditionError);
}

TEST_CASE("matching pennies breaks complementation") {
    Fixture mp = fixture("matching-pennies");
    std::vector<Formula> fs{Formula::atom("p")};
    auto vs = check_conditional_duality(mp.model, fs, false);
    REQUIRE_FALSE(vs.empty());
    CHECK(vs.front().own == PC::FI);
    CHECK(vs.front().complement == PC::FI);
    // The weaker playable constraints still hold.
    CHECK(complement_constraints(mp.model, fs).empty());
}

TEST_CASE("conditional duality on random alpha-dual models") {
    Rng frng(4);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        AlphaDualModel ad = random_alpha_dual(seed, 3, 3);
        REQUIRE(is_alpha_dual(ad.model));
        std::vector<Formula> fs;
        FormulaOptions fo;
        fo.num_agents = 3;
        fo.max_depth = 3;
        for (int i = 0; i < 8; ++i) fs.push_back(random_formula(frng, fo));
        CHECK(check_conditional_duality(ad.model, fs).empty());
        CHECK(complement_constraints(ad.model, fs).empty());
    }
}

TEST_CASE("complement constraint table") {
    CHECK(complement_category_allowed(PC::FC, PC::FI));
    CHECK_FALSE(complement_category_allowed(PC::FC, PC::PD));
    CHECK(complement_category_allowed(PC::PD, PC::PD));
    CHECK(complement_category_allowed(PC::PD, PC::FI));
    CHECK_FALSE(complement_category_allowed(PC::PD, PC::AD));
    CHECK(complement_category_allowed(PC::AD, PC::AD));
    CHECK_FALSE(complement_category_allowed(PC::AD, PC::FC));
    for (PC c : kCategories) CHECK(complement_category_allowed(PC::FI, c));
}

TEST_CASE("negation label action holds on every model") {
    Rng frng(8);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        unsigned s = rng.between(1, 4), n = rng.between(1, 3);
        CoalitionModel m = random_model(seed, s, n, 2, {"p", "q"}).model;
        FormulaOptions fo;
        fo.num_agents = n;
        Formula f = random_formula(frng, fo);
        for (State w = 0; w < s; ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                CHECK(classify(m, w, c, Formula::negate(f)) == klein_action(Transform::Neg, classify(m, w, c, f)));
            }
    }
}
