#include "clfi/explore.hpp"

#include <algorithm>
#include <stdexcept>

#include "clfi/mcheck.hpp"

namespace clfi {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: zero bound");
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t r = engine_();
        if (r >= threshold) return r % bound;
    }
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    // splitmix64 finalizer over the pair.
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

GameForm self_loop(unsigned num_states, StateForm form) {
    return GameForm(num_states, static_cast<unsigned>(form.actions.size()),
                    std::vector<StateForm>(num_states, std::move(form)));
}

Fixture make_fixture(std::string name, GameForm form, std::map<std::string, StateSet> valuation,
                     std::vector<std::string> labels) {
    CoalitionModel model = induce_model(form, valuation);
    return Fixture{std::move(name), std::move(form), std::move(model), std::move(labels)};
}

}  // namespace

std::vector<std::string> fixture_names() { return {"matching-pennies", "dictator", "veto", "shutdown"}; }

Fixture fixture(std::string_view name) {
    if (name == "matching-pennies") {
        // States: 0 = m (coins match), 1 = n. Actions: 0 = H, 1 = T.
        return make_fixture("matching-pennies", self_loop(2, {{2, 2}, {0, 1, 1, 0}}), {{"p", StateSet{0}}},
                            {"m", "n"});
    }
    if (name == "dictator") {
        // Agent 0 picks the successor directly; agent 1's two actions are idle.
        return make_fixture("dictator", self_loop(2, {{2, 2}, {0, 1, 0, 1}}), {{"p", StateSet{0}}}, {"w0", "w1"});
    }
    if (name == "veto") {
        // States: 0 = pass, 1 = fail. Actions: 0 = yes, 1 = no; pass iff all vote yes.
        return make_fixture("veto", self_loop(2, {{2, 2, 2}, {0, 1, 1, 1, 1, 1, 1, 1}}), {{"pass", StateSet{0}}},
                            {"pass", "fail"});
    }
    if (name == "shutdown") {
        // States: 0 = shutdown, 1 = running. Actions: 0 = trigger, 1 = idle.
        return make_fixture("shutdown", self_loop(2, {{2, 2}, {0, 0, 0, 1}}), {{"p", StateSet{0}}},
                            {"shutdown", "running"});
    }
    throw ModelError("unknown fixture '" + std::string(name) + "'");
}

// ---------------------------------------------------------------------------
// Random generators

GameForm random_game_form(std::uint64_t seed, unsigned num_states, unsigned num_agents, unsigned max_actions) {
    if (max_actions == 0) throw ModelError("max_actions must be positive");
    Rng rng(seed);
    std::vector<StateForm> forms(num_states);
    for (StateForm& f : forms) {
        f.actions.resize(num_agents);
        std::uint64_t profiles = 1;
        for (unsigned& a : f.actions) {
            a = rng.between(1, max_actions);
            profiles *= a;
            if (profiles > GameForm::kMaxProfiles) throw CapError("random game form exceeds the profile cap");
        }
        f.outcomes.resize(profiles);
        for (State& o : f.outcomes) o = static_cast<State>(rng.below(num_states));
    }
    return GameForm(num_states, num_agents, std::move(forms));
}

std::map<std::string, StateSet> random_valuation(Rng& rng, unsigned num_states,
                                                 const std::vector<std::string>& atoms) {
    std::map<std::string, StateSet> v;
    for (const std::string& a : atoms)
        v[a] = StateSet(static_cast<StateSet::word_type>(rng.below(subset_count(num_states))));
    return v;
}

RandomModel random_model(std::uint64_t seed, unsigned num_states, unsigned num_agents, unsigned max_actions,
                         const std::vector<std::string>& atoms) {
    GameForm form = random_game_form(seed, num_states, num_agents, max_actions);
    Rng rng(derive_seed(seed, 0xa70d));
    CoalitionModel model = induce_model(form, random_valuation(rng, num_states, atoms));
    return RandomModel{std::move(form), std::move(model)};
}

namespace {

EffFamily random_upward_family(Rng& rng, unsigned num_states, bool empty_coalition) {
    const StateSet all = StateSet::full(num_states);
    unsigned roll = rng.below(8);
    if (empty_coalition ? roll < 6 : roll < 2) return EffFamily({all});
    if (roll < (empty_coalition ? 7u : 4u)) {
        std::vector<StateSet> singles;
        for (unsigned s = 0; s < num_states; ++s) singles.push_back(StateSet::singleton(s));
        return EffFamily(std::move(singles));
    }
    std::vector<StateSet> gens;
    unsigned k = rng.between(1, 3);
    for (unsigned j = 0; j < k; ++j)
        gens.emplace_back(static_cast<StateSet::word_type>(1 + rng.below(subset_count(num_states) - 1)));
    return EffFamily(std::move(gens));
}

// {Y : complement(Y) not in fam}
EffFamily dual_family(const EffFamily& fam, unsigned num_states) {
    std::vector<StateSet> members;
    for (std::uint64_t yb = 0; yb < subset_count(num_states); ++yb) {
        StateSet y(static_cast<StateSet::word_type>(yb));
        if (!eff_contains(fam, y.complement(num_states))) members.push_back(y);
    }
    return EffFamily(std::move(members));
}

void set_dictator_state(CoalitionModel& m, State w, Agent dictator) {
    const unsigned n = m.num_states();
    std::vector<StateSet> singles;
    for (unsigned s = 0; s < n; ++s) singles.push_back(StateSet::singleton(s));
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        m.set_eff(w, c, c.contains(dictator) ? EffFamily(singles) : EffFamily({m.all_states()}));
    }
}

}  // namespace

AlphaDualModel random_alpha_dual(std::uint64_t seed, unsigned num_states, unsigned num_agents,
                                 unsigned retry_budget) {
    if (num_states == 0 || num_states > 4) throw CapError("random_alpha_dual: num_states must be in 1..4");
    if (num_agents == 0 || num_agents > 3) throw CapError("random_alpha_dual: num_agents must be in 1..3");
    Rng rng(seed);
    AlphaDualModel out{CoalitionModel(num_states, num_agents), false, 0};
    CoalitionModel& m = out.model;
    const unsigned full = (1u << num_agents) - 1;

    for (State w = 0; w < num_states; ++w) {
        bool accepted = false;
        for (unsigned attempt = 0; attempt < retry_budget && !accepted; ++attempt) {
            ++out.attempts;
            for (unsigned cb = 0; cb <= full; ++cb) {
                unsigned partner = full & ~cb;
                if (cb > partner) continue;
                EffFamily fam = random_upward_family(rng, num_states, cb == 0);
                EffFamily derived = dual_family(fam, num_states);
                m.set_eff(w, AgentSet(static_cast<AgentSet::word_type>(cb)), fam);
                m.set_eff(w, AgentSet(static_cast<AgentSet::word_type>(partner)), derived);
            }
            accepted = check_playability_at(m, w).empty() && check_alpha_duality(m, w);
        }
        if (!accepted) {
            set_dictator_state(m, w, static_cast<Agent>(rng.below(num_agents)));
            out.fallback_used = true;
        }
    }
    for (const auto& [atom, states] : random_valuation(rng, num_states, {"p", "q"})) m.set_valuation(atom, states);
    return out;
}

Formula random_formula(Rng& rng, const FormulaOptions& o) {
    if (o.atoms.empty()) throw std::invalid_argument("random_formula: no atoms");
    auto coalition = [&] {
        return AgentSet(static_cast<AgentSet::word_type>(rng.below(subset_count(o.num_agents))));
    };
    auto go = [&](auto& self, unsigned depth) -> Formula {
        unsigned choices = o.allow_fi ? 5 : 4;
        unsigned pick = depth == 0 ? 0 : static_cast<unsigned>(rng.below(choices));
        switch (pick) {
            case 1: return Formula::negate(self(self, depth - 1));
            case 2: {
                Formula l = self(self, depth - 1);
                return Formula::conj(l, self(self, depth - 1));
            }
            case 3: {
                AgentSet c = coalition();
                return Formula::eff(c, self(self, depth - 1));
            }
            case 4: {
                AgentSet c = coalition();
                return Formula::fi(c, self(self, depth - 1));
            }
            default: return Formula::atom(o.atoms[rng.below(o.atoms.size())]);
        }
    };
    return go(go, o.max_depth);
}

// ---------------------------------------------------------------------------
// Bounded satisfiability

namespace {

constexpr std::uint64_t kSaturated = std::uint64_t(1) << 62;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a >= kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp && r < kSaturated; ++i) r = sat_mul(r, base);
    return r;
}

struct ActionShape {
    std::vector<unsigned> actions;
    std::uint64_t profiles;
    std::uint64_t tables;  // num_states ^ profiles
};

std::vector<ActionShape> action_shapes(unsigned agents, unsigned max_actions, unsigned num_states) {
    std::vector<ActionShape> shapes;
    std::vector<unsigned> a(agents, 1);
    for (;;) {
        std::uint64_t p = 1;
        for (unsigned x : a) p *= x;
        shapes.push_back({a, p, sat_pow(num_states, p)});
        unsigned i = 0;
        while (i < agents && a[i] == max_actions) a[i++] = 1;
        if (i == agents) break;
        ++a[i];
    }
    return shapes;
}

StateForm decode_form(const std::vector<ActionShape>& shapes, std::uint64_t option, unsigned num_states) {
    for (const ActionShape& s : shapes) {
        if (option >= s.tables) {
            option -= s.tables;
            continue;
        }
        StateForm f{s.actions, std::vector<State>(s.profiles)};
        for (State& o : f.outcomes) {
            o = static_cast<State>(option % num_states);
            option /= num_states;
        }
        return f;
    }
    throw std::logic_error("form option out of range");
}

std::map<std::string, StateSet> decode_valuation(const std::vector<std::string>& atoms, std::uint64_t index,
                                                 unsigned num_states) {
    std::map<std::string, StateSet> v;
    const std::uint64_t per = subset_count(num_states);
    for (const std::string& a : atoms) {
        v[a] = StateSet(static_cast<StateSet::word_type>(index % per));
        index /= per;
    }
    return v;
}

std::optional<State> first_satisfying(const CoalitionModel& m, const Formula& f) {
    StateSet t = truth_set(m, f);
    if (t.empty()) return std::nullopt;
    return t.members().front();
}

}  // namespace

SatResult bounded_sat(const Formula& f, const SatOptions& options) {
    const AgentSet mentioned = mentioned_agents(f);
    unsigned needed = 0;
    for (Agent i : mentioned.members()) needed = std::max(needed, i + 1);
    unsigned agents = options.agents != 0 ? options.agents : std::max(needed, 2u);
    if (agents < needed) throw ModelError("formula mentions agent " + std::to_string(needed - 1) + " but only " +
                                          std::to_string(agents) + " agents were requested");
    if (agents > 4) throw CapError("bounded_sat supports at most 4 agents");
    if (options.max_states == 0 || options.max_states > 8) throw CapError("bounded_sat: max_states must be in 1..8");
    if (options.max_actions == 0) throw ModelError("bounded_sat: max_actions must be positive");
    if (sat_pow(options.max_actions, agents) > GameForm::kMaxProfiles)
        throw CapError("bounded_sat: joint profile space exceeds the cap");

    const std::vector<std::string> names = atoms(f);
    const Formula translated = translate(f);

    SatResult result;
    result.agents = agents;

    auto accept = [&](GameForm form, CoalitionModel model, State w) {
        // Independent re-verification: native semantics, FI-free translation, playability.
        if (!satisfies(model, w, f) || !satisfies(model, w, translated) || !is_playable(model))
            throw std::logic_error("bounded_sat produced an unverified witness");
        result.status = SatResult::Status::Witness;
        result.witness = SatWitness{std::move(form), std::move(model), w};
    };

    // Size of the whole candidate space, block by block.
    std::vector<std::vector<ActionShape>> shapes(options.max_states + 1);
    std::vector<std::uint64_t> per_state_options(options.max_states + 1), forms(options.max_states + 1),
        valuations(options.max_states + 1);
    std::uint64_t total = 0;
    for (unsigned s = 1; s <= options.max_states; ++s) {
        shapes[s] = action_shapes(agents, options.max_actions, s);
        std::uint64_t opts = 0;
        for (const ActionShape& sh : shapes[s]) opts = std::min(kSaturated, opts + sh.tables);
        per_state_options[s] = opts;
        forms[s] = sat_pow(opts, s);
        valuations[s] = sat_pow(subset_count(s), names.size());
        total = std::min(kSaturated, total + sat_mul(forms[s], valuations[s]));
    }

    if (total <= options.samples) {
        result.exhaustive = true;
        for (unsigned s = 1; s <= options.max_states; ++s) {
            for (std::uint64_t fi = 0; fi < forms[s]; ++fi) {
                std::vector<StateForm> per_state;
                std::uint64_t rest = fi;
                for (unsigned w = 0; w < s; ++w) {
                    per_state.push_back(decode_form(shapes[s], rest % per_state_options[s], s));
                    rest /= per_state_options[s];
                }
                GameForm form(s, agents, std::move(per_state));
                CoalitionModel base = induce_model(form, {});
                for (std::uint64_t vi = 0; vi < valuations[s]; ++vi) {
                    ++result.examined;
                    CoalitionModel m = base;
                    for (const auto& [a, states] : decode_valuation(names, vi, s)) m.set_valuation(a, states);
                    if (auto w = first_satisfying(m, f)) {
                        accept(std::move(form), std::move(m), *w);
                        return result;
                    }
                }
            }
        }
        return result;
    }

    Rng rng(options.seed);
    for (std::uint64_t k = 0; k < options.samples; ++k) {
        ++result.examined;
        unsigned s = rng.between(1, options.max_states);
        std::vector<StateForm> per_state(s);
        for (StateForm& sf : per_state) {
            sf.actions.resize(agents);
            std::uint64_t profiles = 1;
            for (unsigned& a : sf.actions) {
                a = rng.between(1, options.max_actions);
                profiles *= a;
            }
            sf.outcomes.resize(profiles);
            for (State& o : sf.outcomes) o = static_cast<State>(rng.below(s));
        }
        GameForm form(s, agents, std::move(per_state));
        CoalitionModel m = induce_model(form, random_valuation(rng, s, names));
        if (auto w = first_satisfying(m, f)) {
            accept(std::move(form), std::move(m), *w);
            return result;
        }
    }
    return result;
}

}  // namespace clfi
