#include "clfi/duality.hpp"

#include <algorithm>

namespace clfi {

const char* to_string(Transform t) {
    switch (t) {
        case Transform::Id: return "id";
        case Transform::Neg: return "f_neg";
        case Transform::Comp: return "f_comp";
        case Transform::Both: return "f_both";
    }
    return "?";
}

std::pair<AgentSet, Formula> apply_transform(Transform t, AgentSet c, const Formula& f, unsigned num_agents) {
    switch (t) {
        case Transform::Id: return {c, f};
        case Transform::Neg: return {c, Formula::negate(f)};
        case Transform::Comp: return {c.complement(num_agents), f};
        case Transform::Both: return {c.complement(num_agents), Formula::negate(f)};
    }
    return {c, f};
}

PowerCategory klein_action(Transform t, PowerCategory c) {
    using PC = PowerCategory;
    // Rows of the action table; columns in the order FC, PD, AD, FI.
    static constexpr PC neg[] = {PC::FC, PC::AD, PC::PD, PC::FI};
    static constexpr PC comp[] = {PC::FI, PC::PD, PC::AD, PC::FC};
    static constexpr PC both[] = {PC::FI, PC::AD, PC::PD, PC::FC};
    std::size_t col = 0;
    switch (c) {
        case PC::FC: col = 0; break;
        case PC::PD: col = 1; break;
        case PC::AD: col = 2; break;
        case PC::FI: col = 3; break;
    }
    switch (t) {
        case Transform::Id: return c;
        case Transform::Neg: return neg[col];
        case Transform::Comp: return comp[col];
        case Transform::Both: return both[col];
    }
    return c;
}

Transform compose(Transform outer, Transform inner) {
    // Z2 x Z2 with Neg and Comp as generators.
    auto bits = [](Transform t) {
        switch (t) {
            case Transform::Id: return 0u;
            case Transform::Neg: return 1u;
            case Transform::Comp: return 2u;
            case Transform::Both: return 3u;
        }
        return 0u;
    };
    static constexpr Transform by_bits[] = {Transform::Id, Transform::Neg, Transform::Comp, Transform::Both};
    return by_bits[bits(outer) ^ bits(inner)];
}

bool KleinTable::pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const KleinRow& r) { return r.observed == r.expected; });
}

KleinTable klein_table_check(const CoalitionModel& m, State w, AgentSet c, const Formula& f, const Limits& limits) {
    if (auto witness = alpha_duality_witness(m, w, limits))
        throw PreconditionError("model is not alpha-dual at state " + std::to_string(w) + " (witness C=" +
                                witness->c.str() + ", X=" + witness->x.str() + ")");
    KleinTable table;
    table.base = classify(m, w, c, f);
    for (Transform t : kTransforms) {
        auto [tc, tf] = apply_transform(t, c, f, m.num_agents());
        table.rows.push_back({t, tc, tf, classify(m, w, tc, tf), klein_action(t, table.base)});
    }
    return table;
}

std::vector<DualityViolation> check_conditional_duality(const CoalitionModel& m, std::span<const Formula> formulas,
                                                        bool require_alpha_dual, const Limits& limits) {
    limits.require_agents(m.num_agents(), "conditional-duality sweep");
    if (require_alpha_dual) {
        for (State w = 0; w < m.num_states(); ++w)
            if (!check_alpha_duality(m, w, limits))
                throw PreconditionError("model is not alpha-dual at state " + std::to_string(w));
    }
    std::vector<DualityViolation> out;
    for (const Formula& f : formulas) {
        StateSet x = truth_set(m, f);
        for (State w = 0; w < m.num_states(); ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                PowerCategory own = classify_set(m, w, c, x);
                PowerCategory comp = classify_set(m, w, c.complement(m.num_agents()), x);
                bool fi_iff_fc = (own == PowerCategory::FI) == (comp == PowerCategory::FC);
                bool fc_iff_fi = (own == PowerCategory::FC) == (comp == PowerCategory::FI);
                if (!fi_iff_fc || !fc_iff_fi) out.push_back({w, c, f, own, comp});
            }
    }
    return out;
}

bool complement_category_allowed(PowerCategory own, PowerCategory complement) {
    using PC = PowerCategory;
    switch (own) {
        case PC::FC: return complement == PC::FI;
        case PC::PD: return complement == PC::PD || complement == PC::FI;
        case PC::AD: return complement == PC::AD || complement == PC::FI;
        case PC::FI: return true;
    }
    return true;
}

std::vector<DualityViolation> complement_constraints(const CoalitionModel& m, std::span<const Formula> formulas,
                                                     const Limits& limits) {
    limits.require_agents(m.num_agents(), "complement-constraint sweep");
    std::vector<DualityViolation> out;
    for (const Formula& f : formulas) {
        StateSet x = truth_set(m, f);
        for (State w = 0; w < m.num_states(); ++w)
            for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
                AgentSet c(static_cast<AgentSet::word_type>(cb));
                PowerCategory own = classify_set(m, w, c, x);
                PowerCategory comp = classify_set(m, w, c.complement(m.num_agents()), x);
                if (!complement_category_allowed(own, comp)) out.push_back({w, c, f, own, comp});
            }
    }
    return out;
}

}  // namespace clfi
