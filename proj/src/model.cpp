#include "clfi/model.hpp"

#include <algorithm>
#include <unordered_set>

namespace clfi {

std::vector<StateSet> minimize_antichain(std::vector<StateSet> sets) {
    std::sort(sets.begin(), sets.end(), [](StateSet a, StateSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<StateSet> kept;
    for (StateSet s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](StateSet k) { return k.subset_of(s); });
        if (!dominated) kept.push_back(s);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

EffFamily::EffFamily(std::vector<StateSet> generators) : minimal_(minimize_antichain(std::move(generators))) {}

EffFamily EffFamily::from_explicit(const std::vector<StateSet>& members, unsigned num_states) {
    std::unordered_set<StateSet::word_type> present;
    for (StateSet x : members) {
        if (!x.fits(num_states)) throw ModelError("explicit family member " + x.str() + " exceeds the state space");
        present.insert(x.bits());
    }
    for (StateSet x : members) {
        for (unsigned u = 0; u < num_states; ++u) {
            if (x.contains(u)) continue;
            if (!present.count(x.with(u).bits()))
                throw ModelError("explicit family is not upward closed: " + x.str() + " is a member but " +
                                 x.with(u).str() + " is not");
        }
    }
    return EffFamily(members);
}

bool eff_contains(const EffFamily& fam, StateSet x) {
    for (StateSet m : fam.minimal())
        if (m.subset_of(x)) return true;
    return false;
}

CoalitionModel::CoalitionModel(unsigned num_states, unsigned num_agents)
    : num_states_(num_states), num_agents_(num_agents) {
    if (num_states == 0 || num_states > kMaxStates)
        throw ModelError("state count must be in 1.." + std::to_string(kMaxStates));
    if (num_agents == 0 || num_agents > kMaxAgents)
        throw ModelError("agent count must be in 1.." + std::to_string(kMaxAgents));
    table_.resize(std::size_t(num_states) << num_agents);
}

std::size_t CoalitionModel::index(State w, AgentSet c) const {
    if (w >= num_states_) throw ModelError("state " + std::to_string(w) + " out of range");
    if (!c.fits(num_agents_)) throw ModelError("coalition " + c.str() + " exceeds the agent set");
    return (std::size_t(w) << num_agents_) | c.bits();
}

void CoalitionModel::set_eff(State w, AgentSet c, EffFamily fam) {
    for (StateSet x : fam.minimal())
        if (!x.fits(num_states_)) throw ModelError("effectivity set " + x.str() + " exceeds the state space");
    table_[index(w, c)] = std::move(fam);
}

StateSet CoalitionModel::valuation(const std::string& atom) const {
    auto it = valuation_.find(atom);
    return it == valuation_.end() ? StateSet{} : it->second;
}

void CoalitionModel::set_valuation(const std::string& atom, StateSet states) {
    if (!states.fits(num_states_)) throw ModelError("valuation of '" + atom + "' exceeds the state space");
    valuation_[atom] = states;
}

const char* to_string(ViolationKind k) {
    switch (k) {
        case ViolationKind::Liveness: return "Liveness";
        case ViolationKind::Safety: return "Safety";
        case ViolationKind::OutcomeMonotonicity: return "OutcomeMonotonicity";
        case ViolationKind::Superadditivity: return "Superadditivity";
        case ViolationKind::NMaximality: return "NMaximality";
    }
    return "?";
}

bool PlayabilityReport::playable() const {
    return std::all_of(per_state.begin(), per_state.end(), [](const auto& v) { return v.empty(); });
}

std::vector<PlayabilityViolation> PlayabilityReport::all() const {
    std::vector<PlayabilityViolation> out;
    for (const auto& v : per_state) out.insert(out.end(), v.begin(), v.end());
    return out;
}

std::vector<PlayabilityViolation> check_playability_at(const CoalitionModel& m, State w, const Limits& limits) {
    limits.require_states(m.num_states(), "N-maximality sweep");
    limits.require_agents(m.num_agents(), "superadditivity sweep");
    if (w >= m.num_states()) throw ModelError("state " + std::to_string(w) + " out of range");
    const unsigned n = m.num_states();
    const unsigned coalitions = m.num_coalitions();
    const AgentSet everyone = m.all_agents();

    std::vector<PlayabilityViolation> out;
    for (unsigned cb = 0; cb < coalitions; ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        if (eff_contains(m.eff(w, c), StateSet{})) out.push_back({ViolationKind::Liveness, w, c, {}, StateSet{}, {}});
    }
    for (unsigned cb = 0; cb < coalitions; ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        if (m.eff(w, c).empty()) out.push_back({ViolationKind::Safety, w, c, {}, m.all_states(), {}});
    }
    for (unsigned cb = 0; cb < coalitions; ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        // Unordered disjoint pairs: D ranges over subsets of the complement with D >= C.
        const auto rest = c.complement(m.num_agents()).bits();
        for (unsigned db = rest;; db = (db - 1) & rest) {
            AgentSet d(static_cast<AgentSet::word_type>(db));
            if (d.bits() >= c.bits()) {
                const EffFamily& joint = m.eff(w, c | d);
                for (StateSet x : m.eff(w, c).minimal())
                    for (StateSet y : m.eff(w, d).minimal())
                        if (!eff_contains(joint, x & y)) out.push_back({ViolationKind::Superadditivity, w, c, d, x, y});
            }
            if (db == 0) break;
        }
    }
    const EffFamily& nobody = m.eff(w, AgentSet{});
    const EffFamily& grand = m.eff(w, everyone);
    for (std::uint64_t xb = 0; xb < subset_count(n); ++xb) {
        StateSet x(static_cast<StateSet::word_type>(xb));
        if (!eff_contains(nobody, x) != eff_contains(grand, x.complement(n)))
            out.push_back({ViolationKind::NMaximality, w, AgentSet{}, everyone, x, x.complement(n)});
    }
    return out;
}

PlayabilityReport check_playability(const CoalitionModel& m, const Limits& limits) {
    PlayabilityReport report;
    report.per_state.reserve(m.num_states());
    for (State w = 0; w < m.num_states(); ++w) report.per_state.push_back(check_playability_at(m, w, limits));
    return report;
}

bool is_playable(const CoalitionModel& m, const Limits& limits) { return check_playability(m, limits).playable(); }

std::vector<RegularityViolation> check_regularity(const CoalitionModel& m) {
    std::vector<RegularityViolation> out;
    const unsigned n = m.num_states();
    for (State w = 0; w < n; ++w) {
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            AgentSet c(static_cast<AgentSet::word_type>(cb));
            const EffFamily& opp = m.eff(w, c.complement(m.num_agents()));
            for (StateSet x : m.eff(w, c).minimal())
                if (eff_contains(opp, x.complement(n))) out.push_back({w, c, x});
        }
    }
    return out;
}

std::vector<MonotonicityViolation> check_coalition_monotonicity(const CoalitionModel& m, const Limits& limits) {
    limits.require_agents(m.num_agents(), "coalition-monotonicity sweep");
    std::vector<MonotonicityViolation> out;
    for (State w = 0; w < m.num_states(); ++w) {
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            AgentSet c(static_cast<AgentSet::word_type>(cb));
            const auto rest = c.complement(m.num_agents()).bits();
            // Proper supersets D = C | s, s a non-empty subset of the complement, by increasing D.
            std::vector<AgentSet> supers;
            for (unsigned sb = rest; sb != 0; sb = (sb - 1) & rest)
                supers.push_back(c | AgentSet(static_cast<AgentSet::word_type>(sb)));
            std::sort(supers.begin(), supers.end());
            for (AgentSet d : supers)
                for (StateSet x : m.eff(w, c).minimal())
                    if (!eff_contains(m.eff(w, d), x)) out.push_back({w, c, d, x});
        }
    }
    return out;
}

std::optional<AlphaDualityWitness> alpha_duality_witness(const CoalitionModel& m, State w, const Limits& limits) {
    limits.require_states(m.num_states(), "alpha-duality sweep");
    limits.require_agents(m.num_agents(), "alpha-duality sweep");
    const unsigned n = m.num_states();
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        const EffFamily& own = m.eff(w, c);
        const EffFamily& opp = m.eff(w, c.complement(m.num_agents()));
        for (std::uint64_t xb = 0; xb < subset_count(n); ++xb) {
            StateSet x(static_cast<StateSet::word_type>(xb));
            if (eff_contains(own, x) == eff_contains(opp, x.complement(n))) return AlphaDualityWitness{c, x};
        }
    }
    return std::nullopt;
}

bool is_alpha_dual(const CoalitionModel& m, const Limits& limits) {
    for (State w = 0; w < m.num_states(); ++w)
        if (!check_alpha_duality(m, w, limits)) return false;
    return true;
}

}  // namespace clfi
