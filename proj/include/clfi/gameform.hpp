#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"

namespace clfi {

/// Strategic game form played at one state.
///
/// Joint action profiles are laid out as a mixed-radix number with agent 0 as
/// the fastest digit: profile index = a0 + |A0| * (a1 + |A1| * (a2 + ...)).
struct StateForm {
    std::vector<unsigned> actions;   // |Act_i| per agent, each >= 1
    std::vector<State> outcomes;     // one successor state per joint profile

    std::uint64_t profile_count() const;
    bool operator==(const StateForm&) const = default;
};

/// One game form per state, producing next-state outcomes.
class GameForm {
public:
    static constexpr std::uint64_t kMaxProfiles = 1'000'000;

    /// Validates table sizes and outcome ranges; throws ModelError.
    GameForm(unsigned num_states, unsigned num_agents, std::vector<StateForm> forms);

    unsigned num_states() const { return num_states_; }
    unsigned num_agents() const { return num_agents_; }
    const StateForm& at(State w) const { return forms_.at(w); }
    const std::vector<StateForm>& forms() const { return forms_; }

    bool operator==(const GameForm&) const = default;

private:
    unsigned num_states_;
    unsigned num_agents_;
    std::vector<StateForm> forms_;
};

/// Distinct outcome cells O_w(s_C) = {o(s_C, s_rest) : s_rest}, sorted by bit
/// value. For C empty there is a single cell: the reachable set.
std::vector<StateSet> outcome_cells(const GameForm& g, State w, AgentSet c);

/// Minimal antichain of the family a coalition can force, for every coalition
/// (indexed by coalition bits).
std::vector<EffFamily> induce_effectivity(const GameForm& g, State w, const Limits& limits = {});

/// Model with the induced effectivity at every state.
CoalitionModel induce_model(const GameForm& g, const std::map<std::string, StateSet>& valuation,
                            const Limits& limits = {});

/// Category read off the cells: can some cell stay inside x, can some cell stay
/// inside its complement. Throws ModelError on an empty cell list or an empty
/// cell.
PowerCategory classify_by_cells(const std::vector<StateSet>& cells, StateSet x, unsigned num_states);

}  // namespace clfi
