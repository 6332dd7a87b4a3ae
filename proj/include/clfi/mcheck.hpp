#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "clfi/formula.hpp"
#include "clfi/model.hpp"

namespace clfi {

/// Four-fold power spectrum. Underlying values are the (a,b) bit pairs
/// a*2 + b, with a = "C forces X" and b = "C forces the complement of X".
enum class PowerCategory : unsigned char { FI = 0, AD = 1, PD = 2, FC = 3 };

inline constexpr std::array<PowerCategory, 4> kCategories = {PowerCategory::FC, PowerCategory::PD,
                                                             PowerCategory::AD, PowerCategory::FI};

const char* to_string(PowerCategory c);
/// Accepts "FC", "PD", "AD", "FI".
std::optional<PowerCategory> category_from_string(std::string_view s);

struct StrategicValue {
    bool a = false;
    bool b = false;

    constexpr PowerCategory category() const {
        return static_cast<PowerCategory>((a ? 2 : 0) | (b ? 1 : 0));
    }
    static constexpr StrategicValue of(PowerCategory c) {
        auto v = static_cast<unsigned>(c);
        return {(v & 2u) != 0, (v & 1u) != 0};
    }
    constexpr bool operator==(const StrategicValue&) const = default;
};

/// Determination order: both coordinates non-decreasing.
constexpr bool leq_k(StrategicValue v1, StrategicValue v2) { return v1.a <= v2.a && v1.b <= v2.b; }
/// Directionality order: first coordinate non-decreasing, second non-increasing.
constexpr bool leq_t(StrategicValue v1, StrategicValue v2) { return v1.a <= v2.a && v2.b <= v1.b; }

constexpr bool leq_k(PowerCategory c1, PowerCategory c2) { return leq_k(StrategicValue::of(c1), StrategicValue::of(c2)); }
constexpr bool leq_t(PowerCategory c1, PowerCategory c2) { return leq_t(StrategicValue::of(c1), StrategicValue::of(c2)); }

/// Truth set of f. Eff and Fi are evaluated natively against E_w(C). Atoms
/// absent from the valuation denote the empty set. Throws ModelError when a
/// coalition in f exceeds the model's agents.
StateSet truth_set(const CoalitionModel& m, const Formula& f);

bool satisfies(const CoalitionModel& m, State w, const Formula& f);

/// Category of (C, f) at w from the pair ([C]f, [C]~f).
PowerCategory classify(const CoalitionModel& m, State w, AgentSet c, const Formula& f);

/// Same classification with the truth set of f already computed.
PowerCategory classify_set(const CoalitionModel& m, State w, AgentSet c, StateSet x);

StrategicValue strategic_value(const CoalitionModel& m, State w, AgentSet c, StateSet x);

/// Formula-level readings of the four categories:
///   FC = [C]f & [C]~f, PD = [C]f & ~[C]~f, AD = ~[C]f & [C]~f, FI = FI[C](f).
Formula category_formula(PowerCategory cat, AgentSet c, const Formula& f);

struct BimonotonicityViolation {
    enum class Clause { OutcomeInclusion, CoalitionInclusion } clause;
    State state;
    AgentSet c;       // smaller coalition
    AgentSet d;       // larger coalition (== c for outcome clause)
    StateSet x;       // smaller set
    StateSet y;       // larger set (== x for coalition clause)
    StrategicValue from;
    StrategicValue to;
};

/// Checks nu_C(X) <=_t nu_C(X + u) for every covering pair of outcome sets and
/// nu_C(X) <=_k nu_{C + i}(X) for every covering pair of coalitions.
std::vector<BimonotonicityViolation> check_bimonotonicity(const CoalitionModel& m, const Limits& limits = {});

/// Admissible transitions for X subset of Y (same coalition).
bool outcome_migration_allowed(PowerCategory from, PowerCategory to);
/// Admissible transitions for C subset of D (same outcome set).
bool coalition_migration_allowed(PowerCategory from, PowerCategory to);

/// Transitions observed over all comparable pairs, indexed [from][to] by
/// category value.
struct MigrationTally {
    std::array<std::array<std::size_t, 4>, 4> outcome{};
    std::array<std::array<std::size_t, 4>, 4> coalition{};

    bool conforms() const;
    void merge(const MigrationTally& other);
};

/// Every comparable pair X subset of Y and C subset of D at every state.
MigrationTally tally_migrations(const CoalitionModel& m, const Limits& limits = {});

}  // namespace clfi
