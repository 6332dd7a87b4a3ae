#include "doctest.h"

#include "clfi/explore.hpp"
#include "clfi/regions.hpp"
#include "oracles.hpp"

using namespace clfi;

TEST_CASE("co-effectivity is the complement dual") {
    EffFamily fam({StateSet{0}, StateSet{1, 2}});
    CoEffFamily co = co_effectivity(fam, 3);
    for (unsigned x = 0; x < 8; ++x) {
        StateSet xs(x);
        CHECK(coeff_contains(co, xs) == eff_contains(fam, xs.complement(3)));
    }
    CHECK(co.maximal == std::vector<StateSet>{StateSet{0}, StateSet{1, 2}});
    CHECK(co_effectivity(EffFamily{}, 3).maximal.empty());
}

TEST_CASE("matching pennies regions") {
    Fixture mp = fixture("matching-pennies");
    RegionReport r = power_regions(mp.model, 0, AgentSet{0});
    CHECK(r.count(PowerCategory::PD) == 1);
    CHECK(r.count(PowerCategory::AD) == 1);
    CHECK(r.count(PowerCategory::FI) == 2);
    CHECK(r.count(PowerCategory::FC) == 0);
    CHECK(r.members(PowerCategory::PD) == std::vector<StateSet>{StateSet{0, 1}});
    RegionReport g = power_regions(mp.model, 0, AgentSet{0, 1});
    CHECK(g.members(PowerCategory::FC) == std::vector<StateSet>{StateSet{0}, StateSet{1}});
    CHECK(g.all_convex());
}

TEST_CASE("partition, closure, convexity, region agreement on induced models") {
    Rng frng(21);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Rng rng(seed);
        unsigned s = rng.between(1, 5), n = rng.between(1, 3);
        CoalitionModel m = random_model(seed, s, n, 3, {"p", "q"}).model;
        FormulaOptions fo;
        fo.num_agents = n;
        fo.max_depth = 3;
        Formula f = random_formula(frng, fo);
        StateSet x = truth_set(m, f);
        for (State w = 0; w < s; ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                RegionReport r = power_regions(m, w, c);
                std::size_t total = 0;
                for (PowerCategory k : kCategories) total += r.count(k);
                CHECK(total == subset_count(s));
                CHECK(verify_closure(r));
                CHECK(r.monotone_certificate);
                CHECK(r.all_convex());
                for (PowerCategory k : kCategories) {
                    std::vector<bool> in(r.labels.size());
                    for (std::size_t i = 0; i < in.size(); ++i) in[i] = r.labels[i] == k;
                    CHECK(oracle::convex(in, s));
                    CHECK(satisfies(m, w, category_formula(k, c, f)) == (r.labels[x.bits()] == k));
                }
            }
    }
}

TEST_CASE("convexity verdict matches the chain oracle on a non-playable model") {
    // The empty coalition forces two disjoint sets.
    CoalitionModel m(3, 1);
    for (State w = 0; w < 3; ++w) {
        m.set_eff(w, AgentSet{}, EffFamily({StateSet{0}, StateSet{1, 2}}));
        m.set_eff(w, AgentSet{0}, EffFamily({StateSet{0}, StateSet{1, 2}}));
    }
    RegionReport r = power_regions(m, 0, AgentSet{});
    ConvexityVerdict v = verify_convexity(r);
    auto chains = convexity_by_chains(r.labels, 3);
    for (unsigned k = 0; k < 4; ++k) CHECK(v.convex[k] == chains[k]);
}

TEST_CASE("convexity checkers agree on arbitrary label arrays") {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        unsigned n = rng.between(1, 4);
        RegionReport r;
        r.num_states = n;
        r.labels.resize(1u << n);
        for (auto& l : r.labels) l = static_cast<PowerCategory>(rng.below(4));
        ConvexityVerdict v = verify_convexity(r);
        auto chains = convexity_by_chains(r.labels, n);
        for (unsigned k = 0; k < 4; ++k) {
            std::vector<bool> in(r.labels.size());
            for (std::size_t i = 0; i < in.size(); ++i) in[i] = static_cast<unsigned>(r.labels[i]) == k;
            CHECK(chains[k] == oracle::convex(in, n));
            CHECK(v.convex[k] == chains[k]);
        }
    }
}

TEST_CASE("minimal and maximal members") {
    std::vector<StateSet> fam{StateSet{0}, StateSet{0, 1}, StateSet{2}, StateSet{0, 1, 2}};
    CHECK(minimal_members(fam) == std::vector<StateSet>{StateSet{0}, StateSet{2}});
    CHECK(maximal_members(fam) == std::vector<StateSet>{StateSet{0, 1, 2}});
    CHECK(minimal_members({}).empty());
}
