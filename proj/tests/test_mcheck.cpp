#include "doctest.h"

#include "clfi/explore.hpp"
#include "clfi/mcheck.hpp"
#include "oracles.hpp"

using namespace clfi;

namespace {

PowerCategory cat(const Fixture& fx, State w, AgentSet c, const char* f) { return classify(fx.model, w, c, parse(f)); }

}  // namespace

TEST_CASE("category encoding") {
    CHECK((StrategicValue{true, true}.category()) == PowerCategory::FC);
    CHECK((StrategicValue{true, false}.category()) == PowerCategory::PD);
    CHECK((StrategicValue{false, true}.category()) == PowerCategory::AD);
    CHECK((StrategicValue{false, false}.category()) == PowerCategory::FI);
    for (PowerCategory c : kCategories) {
        CHECK(StrategicValue::of(c).category() == c);
        CHECK(category_from_string(to_string(c)) == c);
    }
    CHECK_FALSE(category_from_string("XX").has_value());
}

TEST_CASE("bilattice orders") {
    using PC = PowerCategory;
    CHECK(leq_k(PC::FI, PC::FC));
    CHECK(leq_k(PC::FI, PC::PD));
    CHECK_FALSE(leq_k(PC::PD, PC::AD));
    CHECK(leq_t(PC::AD, PC::PD));
    CHECK(leq_t(PC::AD, PC::FI));
    CHECK(leq_t(PC::FI, PC::PD));
    CHECK(leq_t(PC::FC, PC::PD));
    CHECK_FALSE(leq_t(PC::FI, PC::FC));
    CHECK_FALSE(leq_t(PC::PD, PC::AD));
    for (PC a : kCategories) {
        CHECK(leq_k(a, a));
        CHECK(leq_t(a, a));
    }
}

TEST_CASE("fixture classifications") {
    Fixture mp = fixture("matching-pennies");
    for (State w : {0u, 1u}) {
        CHECK(cat(mp, w, AgentSet{0}, "p") == PowerCategory::FI);
        CHECK(cat(mp, w, AgentSet{1}, "p") == PowerCategory::FI);
        CHECK(cat(mp, w, AgentSet{0, 1}, "p") == PowerCategory::FC);
    }
    Fixture dict = fixture("dictator");
    CHECK(cat(dict, 0, AgentSet{0}, "p") == PowerCategory::FC);
    CHECK(cat(dict, 0, AgentSet{1}, "p") == PowerCategory::FI);
    Fixture veto = fixture("veto");
    for (unsigned i = 0; i < 3; ++i) CHECK(cat(veto, 0, AgentSet::singleton(i), "pass") == PowerCategory::AD);
    CHECK(cat(veto, 0, AgentSet{0, 1, 2}, "pass") == PowerCategory::FC);
    Fixture sd = fixture("shutdown");
    CHECK(cat(sd, 0, AgentSet{0}, "p") == PowerCategory::PD);
    CHECK(cat(sd, 0, AgentSet{1}, "p") == PowerCategory::PD);
}

TEST_CASE("FI is satisfiable on matching pennies") {
    Fixture mp = fixture("matching-pennies");
    CHECK(satisfies(mp.model, 0, parse("FI[{1}](p)")));
    CHECK(truth_set(mp.model, parse("FI[{0}](p)")) == StateSet{0, 1});
}

TEST_CASE("coalition exceeding the model is rejected") {
    Fixture mp = fixture("matching-pennies");
    CHECK_THROWS_AS(truth_set(mp.model, parse("[{2}](p)")), ModelError);
    CHECK_THROWS_AS(classify(mp.model, 0, AgentSet{3}, parse("p")), ModelError);
}

TEST_CASE("truth sets agree with the naive evaluator") {
    Rng frng(5);
    for (std::uint64_t seed = 0; seed < 80; ++seed) {
        Rng rng(seed);
        unsigned s = rng.between(1, 4), n = rng.between(1, 3), a = rng.between(1, 3);
        CoalitionModel m = random_model(seed, s, n, a, {"p", "q"}).model;
        FormulaOptions fo;
        fo.num_agents = n;
        for (int i = 0; i < 10; ++i) {
            Formula f = random_formula(frng, fo);
            CAPTURE(print(f));
            CHECK(truth_set(m, f) == oracle::extension(m, f));
        }
    }
}

TEST_CASE("category formulas pick out exactly one category") {
    Rng frng(9);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        unsigned s = rng.between(1, 4), n = rng.between(1, 3);
        CoalitionModel m = random_model(seed, s, n, 2, {"p", "q"}).model;
        FormulaOptions fo;
        fo.num_agents = n;
        fo.max_depth = 3;
        Formula f = random_formula(frng, fo);
        for (State w = 0; w < s; ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                PowerCategory got = classify(m, w, c, f);
                for (PowerCategory k : kCategories) CHECK(satisfies(m, w, category_formula(k, c, f)) == (k == got));
            }
    }
}

TEST_CASE("migration tables") {
    using PC = PowerCategory;
    CHECK(outcome_migration_allowed(PC::AD, PC::FC));
    CHECK(outcome_migration_allowed(PC::FI, PC::PD));
    CHECK_FALSE(outcome_migration_allowed(PC::FI, PC::AD));
    CHECK_FALSE(outcome_migration_allowed(PC::PD, PC::FI));
    CHECK_FALSE(outcome_migration_allowed(PC::FC, PC::FI));
    CHECK(coalition_migration_allowed(PC::FI, PC::AD));
    CHECK(coalition_migration_allowed(PC::PD, PC::FC));
    CHECK_FALSE(coalition_migration_allowed(PC::PD, PC::AD));
    CHECK_FALSE(coalition_migration_allowed(PC::FC, PC::PD));
    CHECK_FALSE(coalition_migration_allowed(PC::AD, PC::FI));
}

TEST_CASE("bimonotonicity holds on induced models and fails on a crafted one") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Rng rng(seed);
        CoalitionModel m = random_model(seed, rng.between(1, 4), rng.between(1, 3), 2, {"p"}).model;
        CHECK(check_bimonotonicity(m).empty());
        CHECK(tally_migrations(m).conforms());
    }
    // Coalition {0} forces {0}; the grand coalition forces only W.
    CoalitionModel bad(2, 1);
    for (State w = 0; w < 2; ++w) {
        bad.set_eff(w, AgentSet{}, EffFamily({StateSet{0}}));
        bad.set_eff(w, AgentSet{0}, EffFamily({StateSet{0, 1}}));
    }
    auto vs = check_bimonotonicity(bad);
    REQUIRE_FALSE(vs.empty());
    CHECK(vs.front().clause == BimonotonicityViolation::Clause::CoalitionInclusion);
    CHECK_FALSE(tally_migrations(bad).conforms());
}

TEST_CASE("migration tally merge") {
    MigrationTally a, b;
    a.outcome[0][2] = 3;
    b.outcome[0][2] = 2;
    b.coalition[1][3] = 1;
    a.merge(b);
    CHECK(a.outcome[0][2] == 5);
    CHECK(a.coalition[1][3] == 1);
}
