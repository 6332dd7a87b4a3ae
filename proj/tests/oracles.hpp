#pragma once
// Brute-force reference implementations used only by tests. Each one follows
// the textbook definition directly and shares no code with the library paths
// it is compared against.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "clfi/formula.hpp"
#include "clfi/gameform.hpp"
#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"

namespace oracle {

using clfi::AgentSet;
using clfi::Formula;
using clfi::FormulaKind;
using clfi::PowerCategory;
using clfi::State;
using clfi::StateSet;

/// Full upward closure of a generator list, as explicit bit masks.
inline std::vector<bool> upward_closure(const std::vector<StateSet>& gens, unsigned n) {
    std::vector<bool> in(1u << n, false);
    for (unsigned x = 0; x < (1u << n); ++x)
        for (StateSet g : gens)
            if ((g.bits() & ~x) == 0) in[x] = true;
    return in;
}

inline bool forces(const clfi::CoalitionModel& m, State w, AgentSet c, StateSet x) {
    return upward_closure(m.eff(w, c).minimal(), m.num_states())[x.bits()];
}

inline PowerCategory category(bool a, bool b) {
    if (a && b) return PowerCategory::FC;
    if (a) return PowerCategory::PD;
    if (b) return PowerCategory::AD;
    return PowerCategory::FI;
}

/// Naive recursive evaluation with no memoization; FI by its definition.
inline bool holds(const clfi::CoalitionModel& m, State w, const Formula& f);

inline StateSet extension(const clfi::CoalitionModel& m, const Formula& f) {
    StateSet s;
    for (State v = 0; v < m.num_states(); ++v)
        if (holds(m, v, f)) s = s.with(v);
    return s;
}

inline bool holds(const clfi::CoalitionModel& m, State w, const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Atom: return m.valuation(f.name()).contains(w);
        case FormulaKind::Not: return !holds(m, w, f.sub());
        case FormulaKind::And: return holds(m, w, f.left()) && holds(m, w, f.right());
        case FormulaKind::Eff: return forces(m, w, f.coalition(), extension(m, f.sub()));
        case FormulaKind::Fi: {
            StateSet x = extension(m, f.sub());
            StateSet xc = x.complement(m.num_states());
            return !forces(m, w, f.coalition(), x) && !forces(m, w, f.coalition(), xc);
        }
    }
    return false;
}

/// Outcome sets per coalition strategy, found by walking every full profile
/// (as a digit vector) and grouping by the coalition's digits.
inline std::set<std::vector<unsigned>> profiles(const std::vector<unsigned>& actions) {
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> digits(actions.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == actions.size()) {
            out.insert(digits);
            return;
        }
        for (unsigned a = 0; a < actions[i]; ++a) {
            digits[i] = a;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline std::vector<StateSet> cells(const clfi::GameForm& g, State w, AgentSet c) {
    const clfi::StateForm& sf = g.at(w);
    std::map<std::vector<unsigned>, StateSet> by_strategy;
    for (const auto& prof : profiles(sf.actions)) {
        std::size_t index = 0, stride = 1;
        for (std::size_t i = 0; i < prof.size(); ++i) {
            index += prof[i] * stride;
            stride *= sf.actions[i];
        }
        std::vector<unsigned> key;
        for (unsigned i : c.members()) key.push_back(prof[i]);
        by_strategy[key] = by_strategy[key].with(sf.outcomes[index]);
    }
    std::set<StateSet> uniq;
    for (const auto& [k, s] : by_strategy) uniq.insert(s);
    return {uniq.begin(), uniq.end()};
}

inline PowerCategory category_from_cells(const std::vector<StateSet>& cs, StateSet x, unsigned n) {
    bool a = false, b = false;
    StateSet xc = x.complement(n);
    for (StateSet c : cs) {
        a = a || c.subset_of(x);
        b = b || c.subset_of(xc);
    }
    return category(a, b);
}

/// Minimal coalitions that are not FI on f, with minimality over all proper
/// subsets.
inline std::vector<AgentSet> threshold(const clfi::CoalitionModel& m, State w, const Formula& f) {
    StateSet x = extension(m, f);
    StateSet xc = x.complement(m.num_states());
    auto escapes = [&](AgentSet c) { return forces(m, w, c, x) || forces(m, w, c, xc); };
    std::vector<AgentSet> out;
    for (unsigned cb = 0; cb < m.num_coalitions(); ++cb) {
        AgentSet c(static_cast<AgentSet::word_type>(cb));
        if (!escapes(c)) continue;
        bool minimal = true;
        for (unsigned sb = 0; sb < cb && minimal; ++sb) {
            AgentSet s(static_cast<AgentSet::word_type>(sb));
            if (s.proper_subset_of(c) && escapes(s)) minimal = false;
        }
        if (minimal) out.push_back(c);
    }
    return out;
}

/// Order convexity of a family given as a membership mask.
inline bool convex(const std::vector<bool>& in, unsigned n) {
    const unsigned total = 1u << n;
    for (unsigned x = 0; x < total; ++x) {
        if (!in[x]) continue;
        for (unsigned z = 0; z < total; ++z) {
            if (!in[z] || (x & ~z) != 0) continue;
            for (unsigned y = 0; y < total; ++y)
                if ((x & ~y) == 0 && (y & ~z) == 0 && !in[y]) return false;
        }
    }
    return true;
}

}  // namespace oracle
