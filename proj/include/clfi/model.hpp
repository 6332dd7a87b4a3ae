#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clfi/error.hpp"
#include "clfi/sets.hpp"

namespace clfi {

using State = unsigned;
using Agent = unsigned;

/// Upward-closed family of outcome sets, stored as its antichain of minimal
/// members (sorted by bit value).
class EffFamily {
public:
    EffFamily() = default;
    /// Any generating list; supersets and duplicates are pruned.
    explicit EffFamily(std::vector<StateSet> generators);

    /// Validates that `members` is upward closed within `num_states` and
    /// compresses it. Throws ModelError naming the first missing superset.
    static EffFamily from_explicit(const std::vector<StateSet>& members, unsigned num_states);

    const std::vector<StateSet>& minimal() const { return minimal_; }
    bool empty() const { return minimal_.empty(); }

    bool operator==(const EffFamily&) const = default;

private:
    std::vector<StateSet> minimal_;
};

/// X is enforceable iff some minimal member is a subset of X.
bool eff_contains(const EffFamily& fam, StateSet x);

/// Prunes supersets and duplicates; result sorted by bit value.
std::vector<StateSet> minimize_antichain(std::vector<StateSet> sets);

/// Finite coalition model: states, agents, valuation, and a total effectivity
/// table indexed by (state, coalition).
class CoalitionModel {
public:
    CoalitionModel(unsigned num_states, unsigned num_agents);

    unsigned num_states() const { return num_states_; }
    unsigned num_agents() const { return num_agents_; }
    StateSet all_states() const { return StateSet::full(num_states_); }
    AgentSet all_agents() const { return AgentSet::full(num_agents_); }
    unsigned num_coalitions() const { return 1u << num_agents_; }

    const EffFamily& eff(State w, AgentSet c) const { return table_[index(w, c)]; }
    void set_eff(State w, AgentSet c, EffFamily fam);

    /// Unknown atoms denote the empty set.
    StateSet valuation(const std::string& atom) const;
    const std::map<std::string, StateSet>& valuation() const { return valuation_; }
    void set_valuation(const std::string& atom, StateSet states);

    bool operator==(const CoalitionModel&) const = default;

private:
    std::size_t index(State w, AgentSet c) const;

    unsigned num_states_;
    unsigned num_agents_;
    std::map<std::string, StateSet> valuation_;
    std::vector<EffFamily> table_;
};

enum class ViolationKind { Liveness, Safety, OutcomeMonotonicity, Superadditivity, NMaximality };

const char* to_string(ViolationKind k);

struct PlayabilityViolation {
    ViolationKind kind;
    State state;
    AgentSet c;  // coalition (Superadditivity: first operand)
    AgentSet d;  // Superadditivity: second operand
    StateSet x;  // witness outcome set
    StateSet y;  // Superadditivity: second witness set

    bool operator==(const PlayabilityViolation&) const = default;
};

struct PlayabilityReport {
    /// Indexed by state; violations in lexicographic witness order.
    std::vector<std::vector<PlayabilityViolation>> per_state;

    bool playable() const;
    bool playable_at(State w) const { return per_state.at(w).empty(); }
    std::vector<PlayabilityViolation> all() const;
};

/// All five playability conditions at every state. Outcome monotonicity holds
/// by representation (explicit families are validated at load time), so it
/// never appears here.
PlayabilityReport check_playability(const CoalitionModel& m, const Limits& limits = {});

/// Violations at a single state, in the same order as check_playability.
std::vector<PlayabilityViolation> check_playability_at(const CoalitionModel& m, State w, const Limits& limits = {});

bool is_playable(const CoalitionModel& m, const Limits& limits = {});

/// X in E(C) together with complement(X) in E(complement C).
struct RegularityViolation {
    State state;
    AgentSet c;
    StateSet x;
    bool operator==(const RegularityViolation&) const = default;
};

std::vector<RegularityViolation> check_regularity(const CoalitionModel& m);

/// C subset of D, X in E(C) (minimal), X not in E(D).
struct MonotonicityViolation {
    State state;
    AgentSet c;
    AgentSet d;
    StateSet x;
    bool operator==(const MonotonicityViolation&) const = default;
};

std::vector<MonotonicityViolation> check_coalition_monotonicity(const CoalitionModel& m,
                                                                const Limits& limits = {});

struct AlphaDualityWitness {
    AgentSet c;
    StateSet x;
    bool operator==(const AlphaDualityWitness&) const = default;
};

/// First (C, X) at w, by bit value, where X in E(C) disagrees with
/// complement(X) not in E(complement C); nullopt when alpha-duality holds.
std::optional<AlphaDualityWitness> alpha_duality_witness(const CoalitionModel& m, State w,
                                                         const Limits& limits = {});

inline bool check_alpha_duality(const CoalitionModel& m, State w, const Limits& limits = {}) {
    return !alpha_duality_witness(m, w, limits).has_value();
}

bool is_alpha_dual(const CoalitionModel& m, const Limits& limits = {});

}  // namespace clfi
