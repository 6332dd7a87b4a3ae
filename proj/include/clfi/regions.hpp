#pragma once

#include <array>
#include <vector>

#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"

namespace clfi {

/// Downward-closed family {X : complement(X) in E}, stored as its maximal
/// members (sorted by bit value).
struct CoEffFamily {
    std::vector<StateSet> maximal;
    bool operator==(const CoEffFamily&) const = default;
};

bool coeff_contains(const CoEffFamily& fam, StateSet x);

CoEffFamily co_effectivity(const EffFamily& fam, unsigned num_states);

/// Strategic value of every outcome set for one (state, coalition), plus the
/// closure and convexity verdicts computed from the label array.
struct RegionReport {
    State state = 0;
    AgentSet coalition;
    unsigned num_states = 0;
    /// labels[X.bits()] is the category of X; 2^num_states entries.
    std::vector<PowerCategory> labels;

    bool upward_closed = false;    // a-bit under single-element extension
    bool downward_closed = false;  // b-bit under single-element removal
    /// Covering-pair <=_t monotonicity held everywhere.
    bool monotone_certificate = false;
    /// Indexed by category value (FI, AD, PD, FC).
    std::array<bool, 4> convex{};

    std::size_t count(PowerCategory c) const;
    std::vector<StateSet> members(PowerCategory c) const;
    bool all_convex() const { return convex[0] && convex[1] && convex[2] && convex[3]; }
};

RegionReport power_regions(const CoalitionModel& m, State w, AgentSet c, const Limits& limits = {});

/// Upward closure of the a-bit and downward closure of the b-bit.
bool verify_closure(const RegionReport& report);

struct ConvexityVerdict {
    bool monotone_certificate = false;
    std::array<bool, 4> convex{};
};

/// Primary certificate: nu is <=_t-monotone along every covering pair, which
/// makes every fiber order-convex. Without the certificate each region is
/// tested as up(R) & down(R) == R.
ConvexityVerdict verify_convexity(const RegionReport& report);

/// Small-instance oracle (num_states <= 4 by default cap): explicit check of
/// every chain X subset Y subset Z. Indexed by category value.
std::array<bool, 4> convexity_by_chains(const std::vector<PowerCategory>& labels, unsigned num_states);

/// Inclusion-minimal and inclusion-maximal members of a region.
std::vector<StateSet> minimal_members(const std::vector<StateSet>& family);
std::vector<StateSet> maximal_members(const std::vector<StateSet>& family);

}  // namespace clfi
