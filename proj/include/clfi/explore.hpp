#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "clfi/formula.hpp"
#include "clfi/gameform.hpp"
#include "clfi/model.hpp"

namespace clfi {

/// Deterministic random source. Draws are mapped from mt19937_64 output with
/// explicit rejection, so sequences are identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    unsigned between(unsigned lo, unsigned hi) { return lo + static_cast<unsigned>(below(hi - lo + 1)); }
    /// True with probability num/den.
    bool chance(unsigned num, unsigned den) { return below(den) < num; }

private:
    std::mt19937_64 engine_;
};

/// Child seed for shard `index` of a master seed.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

struct Fixture {
    std::string name;
    GameForm form;
    CoalitionModel model;
    std::vector<std::string> state_labels;
};

/// "matching-pennies", "dictator", "veto", "shutdown". Every state reuses the
/// same game form. Throws ModelError on an unknown name.
Fixture fixture(std::string_view name);

std::vector<std::string> fixture_names();

/// Action counts uniform in 1..max_actions, outcomes uniform over states.
GameForm random_game_form(std::uint64_t seed, unsigned num_states, unsigned num_agents, unsigned max_actions);

std::map<std::string, StateSet> random_valuation(Rng& rng, unsigned num_states, const std::vector<std::string>& atoms);

struct RandomModel {
    GameForm form;
    CoalitionModel model;
};

/// Game form plus a random valuation of `atoms`, induced into a playable model.
RandomModel random_model(std::uint64_t seed, unsigned num_states, unsigned num_agents, unsigned max_actions,
                         const std::vector<std::string>& atoms);

struct AlphaDualModel {
    CoalitionModel model;
    bool fallback_used = false;  // some state fell back to a dictator family
    unsigned attempts = 0;
};

/// Rejection sampler over complementary coalition pairs; num_states <= 4,
/// num_agents <= 3. Every returned model is playable and alpha-dual.
AlphaDualModel random_alpha_dual(std::uint64_t seed, unsigned num_states, unsigned num_agents,
                                 unsigned retry_budget = 2000);

struct FormulaOptions {
    std::vector<std::string> atoms = {"p", "q"};
    unsigned num_agents = 2;
    unsigned max_depth = 4;
    bool allow_fi = true;
};

Formula random_formula(Rng& rng, const FormulaOptions& options);

struct SatOptions {
    /// 0 selects max(highest mentioned agent + 1, 2).
    unsigned agents = 0;
    unsigned max_states = 3;
    unsigned max_actions = 3;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 42;
};

struct SatWitness {
    GameForm form;
    CoalitionModel model;
    State state;
};

struct SatResult {
    /// Unknown is never a claim of unsatisfiability.
    enum class Status { Witness, Unknown } status = Status::Unknown;
    std::optional<SatWitness> witness;
    std::uint64_t examined = 0;
    bool exhaustive = false;
    unsigned agents = 0;
};

/// Sound, incomplete search over game-form-induced models and valuations of
/// the formula's atoms. Enumerates exhaustively when the whole space fits the
/// sample budget, otherwise samples. Witnesses are re-verified natively and
/// through the FI-free translation before being returned.
SatResult bounded_sat(const Formula& f, const SatOptions& options);

}  // namespace clfi
