#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "clfi/formula.hpp"
#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"

namespace clfi {

struct DummyResult {
    bool dummy = false;
    /// First C (by bit value, not containing i) where adding i changes [C]f.
    std::optional<AgentSet> witness;
};

/// Agent i is a dummy for f at w iff [C + i]f <-> [C]f for every C not
/// containing i.
DummyResult is_dummy(const CoalitionModel& m, State w, Agent i, const Formula& f, const Limits& limits = {});

struct DummyFiVerdict {
    enum class Outcome { Confirmed, Vacuous, Refuted } outcome;
    bool dummy_for_f = false;
    bool dummy_for_not_f = false;
    bool empty_coalition_undetermined = false;
    PowerCategory singleton_category = PowerCategory::FI;
};

const char* to_string(DummyFiVerdict::Outcome o);

/// When i is a dummy for f and ~f and the empty coalition forces neither side,
/// {i} must be FI. Reports Vacuous when the premises fail.
DummyFiVerdict dummy_fi_check(const CoalitionModel& m, State w, Agent i, const Formula& f,
                              const Limits& limits = {});

/// Minimal coalitions escaping full inability, sorted by size then bit value.
struct ThresholdReport {
    std::vector<AgentSet> minimal_escaping;
    /// nullopt encodes an infinite degree (no coalition escapes).
    std::optional<unsigned> degree;
};

/// Throws PreconditionError on non-playable input.
ThresholdReport inability_threshold(const CoalitionModel& m, State w, const Formula& f, const Limits& limits = {});

/// degree > k.
bool is_k_robust(const CoalitionModel& m, State w, const Formula& f, unsigned k, const Limits& limits = {});

/// Every coalition of size <= k is FI for f at w.
bool is_k_robust_exhaustive(const CoalitionModel& m, State w, const Formula& f, unsigned k,
                            const Limits& limits = {});

bool is_antichain(const std::vector<AgentSet>& family);

struct ShiftViolation {
    enum class Clause { FiAntiMonotone, FcMonotone } clause;
    State state;
    AgentSet c;
    AgentSet d;  // c plus one agent
    Formula formula;
};

/// Along every covering pair C subset C + i: FI_{C+i} -> FI_C and
/// FC_C -> FC_{C+i}.
std::vector<ShiftViolation> coalitional_shift_check(const CoalitionModel& m, std::span<const Formula> formulas,
                                                    const Limits& limits = {});

/// States at which {i} is FC, PD, AD, FI for f, in that order.
std::array<std::size_t, 4> strategic_profile(const CoalitionModel& m, Agent i, const Formula& f);

}  // namespace clfi
