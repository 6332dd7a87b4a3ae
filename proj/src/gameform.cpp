#include "clfi/gameform.hpp"

#include <algorithm>

namespace clfi {

std::uint64_t StateForm::profile_count() const {
    std::uint64_t total = 1;
    for (unsigned a : actions) {
        total *= a;
        if (total > GameForm::kMaxProfiles) return GameForm::kMaxProfiles + 1;
    }
    return total;
}

GameForm::GameForm(unsigned num_states, unsigned num_agents, std::vector<StateForm> forms)
    : num_states_(num_states), num_agents_(num_agents), forms_(std::move(forms)) {
    if (num_states == 0 || num_states > kMaxStates)
        throw ModelError("state count must be in 1.." + std::to_string(kMaxStates));
    if (num_agents == 0 || num_agents > kMaxAgents)
        throw ModelError("agent count must be in 1.." + std::to_string(kMaxAgents));
    if (forms_.size() != num_states)
        throw ModelError("expected one game form per state (" + std::to_string(num_states) + "), got " +
                         std::to_string(forms_.size()));
    for (State w = 0; w < num_states; ++w) {
        const StateForm& f = forms_[w];
        const std::string where = "game form at state " + std::to_string(w);
        if (f.actions.size() != num_agents)
            throw ModelError(where + ": expected " + std::to_string(num_agents) + " action counts");
        for (unsigned a : f.actions)
            if (a == 0) throw ModelError(where + ": action counts must be positive");
        std::uint64_t profiles = f.profile_count();
        if (profiles > kMaxProfiles)
            throw CapError(where + ": joint profile space exceeds " + std::to_string(kMaxProfiles));
        if (f.outcomes.size() != profiles)
            throw ModelError(where + ": outcome table has " + std::to_string(f.outcomes.size()) +
                             " entries, expected " + std::to_string(profiles));
        for (State o : f.outcomes)
            if (o >= num_states) throw ModelError(where + ": outcome " + std::to_string(o) + " out of range");
    }
}

std::vector<StateSet> outcome_cells(const GameForm& g, State w, AgentSet c) {
    if (!c.fits(g.num_agents())) throw ModelError("coalition " + c.str() + " exceeds the agent set");
    const StateForm& f = g.at(w);
    const unsigned agents = g.num_agents();

    // Mixed-radix stride of each coalition member within the coalition's own
    // strategy index.
    std::vector<std::uint64_t> stride(agents, 0);
    std::uint64_t strategies = 1;
    for (unsigned i = 0; i < agents; ++i) {
        if (!c.contains(i)) continue;
        stride[i] = strategies;
        strategies *= f.actions[i];
    }

    std::vector<StateSet> cells(strategies);
    std::vector<unsigned> digit(agents, 0);
    std::uint64_t own = 0;
    for (State o : f.outcomes) {
        cells[own] = cells[own].with(o);
        for (unsigned i = 0; i < agents; ++i) {
            if (++digit[i] < f.actions[i]) {
                own += stride[i];
                break;
            }
            own -= stride[i] * (digit[i] - 1);
            digit[i] = 0;
        }
    }
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return cells;
}

std::vector<EffFamily> induce_effectivity(const GameForm& g, State w, const Limits& limits) {
    limits.require_agents(g.num_agents(), "effectivity induction");
    std::vector<EffFamily> out;
    out.reserve(std::size_t(1) << g.num_agents());
    for (unsigned cb = 0; cb < (1u << g.num_agents()); ++cb)
        out.emplace_back(outcome_cells(g, w, AgentSet(static_cast<AgentSet::word_type>(cb))));
    return out;
}

CoalitionModel induce_model(const GameForm& g, const std::map<std::string, StateSet>& valuation,
                            const Limits& limits) {
    CoalitionModel m(g.num_states(), g.num_agents());
    for (State w = 0; w < g.num_states(); ++w) {
        auto fams = induce_effectivity(g, w, limits);
        for (unsigned cb = 0; cb < fams.size(); ++cb)
            m.set_eff(w, AgentSet(static_cast<AgentSet::word_type>(cb)), std::move(fams[cb]));
    }
    for (const auto& [atom, states] : valuation) m.set_valuation(atom, states);
    return m;
}

PowerCategory classify_by_cells(const std::vector<StateSet>& cells, StateSet x, unsigned num_states) {
    if (cells.empty()) throw ModelError("empty cell set");
    const StateSet xc = x.complement(num_states);
    bool inside = false;
    bool outside = false;
    for (StateSet cell : cells) {
        if (cell.empty()) throw ModelError("empty outcome cell");
        inside = inside || cell.subset_of(x);
        outside = outside || cell.subset_of(xc);
    }
    return StrategicValue{inside, outside}.category();
}

}  // namespace clfi
