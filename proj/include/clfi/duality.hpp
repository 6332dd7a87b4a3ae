#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "clfi/formula.hpp"
#include "clfi/mcheck.hpp"
#include "clfi/model.hpp"

namespace clfi {

/// Transformations of (coalition, formula) pairs: negate the formula,
/// complement the coalition, or both.
enum class Transform { Id, Neg, Comp, Both };

inline constexpr std::array<Transform, 4> kTransforms = {Transform::Id, Transform::Neg, Transform::Comp,
                                                         Transform::Both};

const char* to_string(Transform t);

/// Neg(C,f) = (C,~f); Comp(C,f) = (complement C, f); Both = Neg after Comp.
std::pair<AgentSet, Formula> apply_transform(Transform t, AgentSet c, const Formula& f, unsigned num_agents);

/// Image of a category label under a transformation in an alpha-dual model.
PowerCategory klein_action(Transform t, PowerCategory c);

/// Label composition of two transforms (the group operation).
Transform compose(Transform outer, Transform inner);

struct KleinRow {
    Transform transform;
    AgentSet coalition;
    Formula formula;
    PowerCategory observed;
    PowerCategory expected;
};

struct KleinTable {
    PowerCategory base;
    std::vector<KleinRow> rows;  // one per transform, Id first
    bool pass() const;
};

/// Classifies all four transforms of (c, f) at w and compares them with the
/// label action. Throws PreconditionError when the model is not alpha-dual at w.
KleinTable klein_table_check(const CoalitionModel& m, State w, AgentSet c, const Formula& f,
                             const Limits& limits = {});

struct DualityViolation {
    State state;
    AgentSet c;
    Formula formula;
    PowerCategory own;         // category of (C, f)
    PowerCategory complement;  // category of (complement C, f)
};

/// FI_C(f) <-> FC_{complement C}(f) and FC_C(f) <-> FI_{complement C}(f) for
/// every state, coalition, and sampled formula. Throws PreconditionError on a
/// model that is not alpha-dual unless `require_alpha_dual` is false.
std::vector<DualityViolation> check_conditional_duality(const CoalitionModel& m, std::span<const Formula> formulas,
                                                        bool require_alpha_dual = true, const Limits& limits = {});

/// Categories the complementary coalition may take in a playable model, given
/// the category of C.
bool complement_category_allowed(PowerCategory own, PowerCategory complement);

/// Playable-model complement constraints: FC -> FI, PD -> {PD,FI},
/// AD -> {AD,FI}, FI unconstrained.
std::vector<DualityViolation> complement_constraints(const CoalitionModel& m, std::span<const Formula> formulas,
                                                     const Limits& limits = {});

}  // namespace clfi
