#include "clfi/mcheck.hpp"

#include <functional>
#include <unordered_map>

namespace clfi {

const char* to_string(PowerCategory c) {
    switch (c) {
        case PowerCategory::FC: return "FC";
        case PowerCategory::PD: return "PD";
        case PowerCategory::AD: return "AD";
        case PowerCategory::FI: return "FI";
    }
    return "?";
}

std::optional<PowerCategory> category_from_string(std::string_view s) {
    for (PowerCategory c : kCategories)
        if (s == to_string(c)) return c;
    return std::nullopt;
}

StateSet truth_set(const CoalitionModel& m, const Formula& f) {
    const unsigned n = m.num_states();
    const StateSet all = m.all_states();
    std::unordered_map<const void*, StateSet> memo;

    std::function<StateSet(const Formula&)> eval = [&](const Formula& g) -> StateSet {
        if (auto it = memo.find(g.node_id()); it != memo.end()) return it->second;
        StateSet r;
        switch (g.kind()) {
            case FormulaKind::Atom: r = m.valuation(g.name()); break;
            case FormulaKind::Not: r = eval(g.sub()).complement(n); break;
            case FormulaKind::And: r = eval(g.left()) & eval(g.right()); break;
            case FormulaKind::Eff:
            case FormulaKind::Fi: {
                if (!g.coalition().fits(m.num_agents()))
                    throw ModelError("coalition " + g.coalition().str() + " exceeds the model's " +
                                     std::to_string(m.num_agents()) + " agents");
                StateSet x = eval(g.sub());
                StateSet xc = x.complement(n);
                for (State w = 0; w < n; ++w) {
                    const EffFamily& fam = m.eff(w, g.coalition());
                    bool holds = g.kind() == FormulaKind::Eff ? eff_contains(fam, x)
                                                              : !eff_contains(fam, x) && !eff_contains(fam, xc);
                    if (holds) r = r.with(w);
                }
                break;
            }
        }
        r = r & all;
        memo.emplace(g.node_id(), r);
        return r;
    };
    return eval(f);
}

bool satisfies(const CoalitionModel& m, State w, const Formula& f) {
    if (w >= m.num_states()) throw ModelError("state " + std::to_string(w) + " out of range");
    return truth_set(m, f).contains(w);
}

StrategicValue strategic_value(const CoalitionModel& m, State w, AgentSet c, StateSet x) {
    const EffFamily& fam = m.eff(w, c);
    return {eff_contains(fam, x), eff_contains(fam, x.complement(m.num_states()))};
}

PowerCategory classify_set(const CoalitionModel& m, State w, AgentSet c, StateSet x) {
    return strategic_value(m, w, c, x).category();
}

PowerCategory classify(const CoalitionModel& m, State w, AgentSet c, const Formula& f) {
    // Evaluated through the formula pair so the coalition check and the
    // semantics are exactly those of [C]f and [C]~f.
    bool forces = satisfies(m, w, Formula::eff(c, f));
    bool forces_not = satisfies(m, w, Formula::eff(c, Formula::negate(f)));
    return StrategicValue{forces, forces_not}.category();
}

Formula category_formula(PowerCategory cat, AgentSet c, const Formula& f) {
    Formula pos = Formula::eff(c, f);
    Formula neg = Formula::eff(c, Formula::negate(f));
    switch (cat) {
        case PowerCategory::FC: return Formula::conj(pos, neg);
        case PowerCategory::PD: return Formula::conj(pos, Formula::negate(neg));
        case PowerCategory::AD: return Formula::conj(Formula::negate(pos), neg);
        case PowerCategory::FI: return Formula::fi(c, f);
    }
    return Formula::fi(c, f);
}

std::vector<BimonotonicityViolation> check_bimonotonicity(const CoalitionModel& m, const Limits& limits) {
    limits.require_states(m.num_states(), "bimonotonicity sweep");
    limits.require_agents(m.num_agents(), "bimonotonicity sweep");
    using Clause = BimonotonicityViolation::Clause;
    const unsigned n = m.num_states();
    std::vector<BimonotonicityViolation> out;
    for (State w = 0; w < n; ++w) {
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            AgentSet c(static_cast<AgentSet::word_type>(cb));
            for (std::uint64_t xb = 0; xb < subset_count(n); ++xb) {
                StateSet x(static_cast<StateSet::word_type>(xb));
                StrategicValue vx = strategic_value(m, w, c, x);
                for (unsigned u = 0; u < n; ++u) {
                    if (x.contains(u)) continue;
                    StrategicValue vy = strategic_value(m, w, c, x.with(u));
                    if (!leq_t(vx, vy)) out.push_back({Clause::OutcomeInclusion, w, c, c, x, x.with(u), vx, vy});
                }
                for (unsigned i = 0; i < m.num_agents(); ++i) {
                    if (c.contains(i)) continue;
                    StrategicValue vd = strategic_value(m, w, c.with(i), x);
                    if (!leq_k(vx, vd)) out.push_back({Clause::CoalitionInclusion, w, c, c.with(i), x, x, vx, vd});
                }
            }
        }
    }
    return out;
}

namespace {

using PC = PowerCategory;

// Rows transcribed from the migration tables: initial value -> possible values.
bool in_row(PC from, PC to, const std::array<std::pair<PC, std::vector<PC>>, 4>& rows) {
    for (const auto& [src, targets] : rows)
        if (src == from)
            for (PC t : targets)
                if (t == to) return true;
    return false;
}

const std::array<std::pair<PC, std::vector<PC>>, 4>& outcome_rows() {
    static const std::array<std::pair<PC, std::vector<PC>>, 4> rows = {{
        {PC::AD, {PC::AD, PC::FI, PC::FC, PC::PD}},
        {PC::FI, {PC::FI, PC::PD}},
        {PC::FC, {PC::FC, PC::PD}},
        {PC::PD, {PC::PD}},
    }};
    return rows;
}

const std::array<std::pair<PC, std::vector<PC>>, 4>& coalition_rows() {
    static const std::array<std::pair<PC, std::vector<PC>>, 4> rows = {{
        {PC::FI, {PC::FI, PC::PD, PC::AD, PC::FC}},
        {PC::PD, {PC::PD, PC::FC}},
        {PC::AD, {PC::AD, PC::FC}},
        {PC::FC, {PC::FC}},
    }};
    return rows;
}

}  // namespace

bool outcome_migration_allowed(PowerCategory from, PowerCategory to) { return in_row(from, to, outcome_rows()); }
bool coalition_migration_allowed(PowerCategory from, PowerCategory to) { return in_row(from, to, coalition_rows()); }

bool MigrationTally::conforms() const {
    for (PC from : kCategories)
        for (PC to : kCategories) {
            auto f = static_cast<unsigned>(from);
            auto t = static_cast<unsigned>(to);
            if (outcome[f][t] != 0 && !outcome_migration_allowed(from, to)) return false;
            if (coalition[f][t] != 0 && !coalition_migration_allowed(from, to)) return false;
        }
    return true;
}

void MigrationTally::merge(const MigrationTally& other) {
    for (unsigned f = 0; f < 4; ++f)
        for (unsigned t = 0; t < 4; ++t) {
            outcome[f][t] += other.outcome[f][t];
            coalition[f][t] += other.coalition[f][t];
        }
}

MigrationTally tally_migrations(const CoalitionModel& m, const Limits& limits) {
    limits.require_states(m.num_states(), "migration tally");
    limits.require_agents(m.num_agents(), "migration tally");
    const unsigned n = m.num_states();
    const unsigned labels = static_cast<unsigned>(subset_count(n));
    MigrationTally tally;
    std::vector<std::vector<unsigned char>> cats(m.num_coalitions(), std::vector<unsigned char>(labels));
    for (State w = 0; w < n; ++w) {
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            AgentSet c(static_cast<AgentSet::word_type>(cb));
            for (unsigned xb = 0; xb < labels; ++xb)
                cats[cb][xb] = static_cast<unsigned char>(classify_set(m, w, c, StateSet(xb)));
        }
        for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
            for (unsigned yb = 0; yb < labels; ++yb)
                for (unsigned xb = yb;; xb = (xb - 1) & yb) {
                    ++tally.outcome[cats[cb][xb]][cats[cb][yb]];
                    if (xb == 0) break;
                }
            for (unsigned db = cb; db < m.num_coalitions(); ++db) {
                if ((cb & ~db) != 0) continue;
                for (unsigned xb = 0; xb < labels; ++xb) ++tally.coalition[cats[cb][xb]][cats[db][xb]];
            }
        }
    }
    return tally;
}

}  // namespace clfi
