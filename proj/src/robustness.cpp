#include "clfi/robustness.hpp"

#include <algorithm>
#include <stdexcept>

namespace clfi {

namespace {

void require_agent(const CoalitionModel& m, Agent i) {
    if (i >= m.num_agents()) throw ModelError("agent " + std::to_string(i) + " out of range");
}

bool forces(const CoalitionModel& m, State w, AgentSet c, StateSet x) { return eff_contains(m.eff(w, c), x); }

}  // namespace

DummyResult is_dummy(const CoalitionModel& m, State w, Agent i, const Formula& f, const Limits& limits) {
    limits.require_agents(m.num_agents(), "dummy sweep");
    require_agent(m, i);
    if (w >= m.num_states()) throw ModelError("state " + std::to_string(w) + " out of range");
    StateSet x = truth_set(m, f);
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        if (c.contains(i)) continue;
        if (forces(m, w, c.with(i), x) != forces(m, w, c, x)) return {false, c};
    }
    return {true, std::nullopt};
}

const char* to_string(DummyFiVerdict::Outcome o) {
    switch (o) {
        case DummyFiVerdict::Outcome::Confirmed: return "confirmed";
        case DummyFiVerdict::Outcome::Vacuous: return "vacuous";
        case DummyFiVerdict::Outcome::Refuted: return "refuted";
    }
    return "?";
}

DummyFiVerdict dummy_fi_check(const CoalitionModel& m, State w, Agent i, const Formula& f, const Limits& limits) {
    DummyFiVerdict v;
    v.dummy_for_f = is_dummy(m, w, i, f, limits).dummy;
    v.dummy_for_not_f = is_dummy(m, w, i, Formula::negate(f), limits).dummy;
    StateSet x = truth_set(m, f);
    v.empty_coalition_undetermined = classify_set(m, w, AgentSet{}, x) == PowerCategory::FI;
    v.singleton_category = classify_set(m, w, AgentSet::singleton(i), x);
    if (!(v.dummy_for_f && v.dummy_for_not_f && v.empty_coalition_undetermined))
        v.outcome = DummyFiVerdict::Outcome::Vacuous;
    else
        v.outcome = v.singleton_category == PowerCategory::FI ? DummyFiVerdict::Outcome::Confirmed
                                                              : DummyFiVerdict::Outcome::Refuted;
    return v;
}

bool is_antichain(const std::vector<AgentSet>& family) {
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = 0; b < family.size(); ++b)
            if (a != b && family[a].subset_of(family[b])) return false;
    return true;
}

ThresholdReport inability_threshold(const CoalitionModel& m, State w, const Formula& f, const Limits& limits) {
    limits.require_agents(m.num_agents(), "inability-threshold sweep");
    if (w >= m.num_states()) throw ModelError("state " + std::to_string(w) + " out of range");
    if (!is_playable(m, limits)) throw PreconditionError("inability threshold requires a playable model");

    StateSet x = truth_set(m, f);
    std::vector<char> escapes(m.num_coalitions());
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb)
        escapes[cb] = classify_set(m, w, AgentSet(static_cast<AgentSet::word_type>(cb)), x) != PowerCategory::FI;

    // Escape is upward closed on playable models, so immediate subsets suffice.
    ThresholdReport report;
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        if (!escapes[cb]) continue;
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        bool minimal = true;
        for (Agent i : c.members()) minimal = minimal && !escapes[c.without(i).bits()];
        if (minimal) report.minimal_escaping.push_back(c);
    }
    std::sort(report.minimal_escaping.begin(), report.minimal_escaping.end(), [](AgentSet a, AgentSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    if (!report.minimal_escaping.empty()) report.degree = report.minimal_escaping.front().size();

    if (!is_antichain(report.minimal_escaping)) throw std::logic_error("threshold family is not an antichain");
    if (!report.degree) throw std::logic_error("grand coalition failed to escape full inability in a playable model");
    return report;
}

bool is_k_robust(const CoalitionModel& m, State w, const Formula& f, unsigned k, const Limits& limits) {
    ThresholdReport r = inability_threshold(m, w, f, limits);
    return !r.degree || *r.degree > k;
}

bool is_k_robust_exhaustive(const CoalitionModel& m, State w, const Formula& f, unsigned k, const Limits& limits) {
    limits.require_agents(m.num_agents(), "k-robustness sweep");
    StateSet x = truth_set(m, f);
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        if (c.size() <= k && classify_set(m, w, c, x) != PowerCategory::FI) return false;
    }
    return true;
}

std::vector<ShiftViolation> coalitional_shift_check(const CoalitionModel& m, std::span<const Formula> formulas,
                                                    const Limits& limits) {
    limits.require_agents(m.num_agents(), "coalitional-shift sweep");
    using Clause = ShiftViolation::Clause;
    std::vector<ShiftViolation> out;
    for (const Formula& f : formulas) {
        StateSet x = truth_set(m, f);
        for (State w = 0; w < m.num_states(); ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                PowerCategory small = classify_set(m, w, c, x);
                for (Agent i = 0; i < m.num_agents(); ++i) {
                    if (c.contains(i)) continue;
                    PowerCategory large = classify_set(m, w, c.with(i), x);
                    if (large == PowerCategory::FI && small != PowerCategory::FI)
                        out.push_back({Clause::FiAntiMonotone, w, c, c.with(i), f});
                    if (small == PowerCategory::FC && large != PowerCategory::FC)
                        out.push_back({Clause::FcMonotone, w, c, c.with(i), f});
                }
            }
    }
    return out;
}

std::array<std::size_t, 4> strategic_profile(const CoalitionModel& m, Agent i, const Formula& f) {
    require_agent(m, i);
    StateSet x = truth_set(m, f);
    std::array<std::size_t, 4> counts{};
    for (State w = 0; w < m.num_states(); ++w) {
        switch (classify_set(m, w, AgentSet::singleton(i), x)) {
            case PowerCategory::FC: ++counts[0]; break;
            case PowerCategory::PD: ++counts[1]; break;
            case PowerCategory::AD: ++counts[2]; break;
            case PowerCategory::FI: ++counts[3]; break;
        }
    }
    return counts;
}

}  // namespace clfi
