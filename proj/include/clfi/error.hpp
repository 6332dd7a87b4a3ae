#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clfi {

/// Base of every error raised by the library. The CLI maps all of these to
/// exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Malformed model, game-form, or formula/model mismatch.
class ModelError : public Error {
public:
    using Error::Error;
};

/// An exhaustive sweep would exceed the configured size caps.
class CapError : public Error {
public:
    using Error::Error;
};

/// A conditional check was invoked on input that does not meet its premise
/// (non-playable, not alpha-dual). Reported, never silently skipped.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Caps for exhaustive sweeps. Defaults keep analyses desk-scale; raising them
/// is allowed up to the hard limits.
struct Limits {
    static constexpr unsigned kHardAgents = 16;
    static constexpr unsigned kHardStates = 20;

    unsigned max_agents = 8;   // full-coalition sweeps (2^N coalitions)
    unsigned max_states = 16;  // full-subset sweeps (2^|W| outcome sets)

    static constexpr Limits hard() { return Limits{kHardAgents, kHardStates}; }

    void require_agents(unsigned n, const char* what) const {
        if (n > max_agents)
            throw CapError(std::string(what) + ": " + std::to_string(n) + " agents exceeds the coalition-sweep cap of " +
                           std::to_string(max_agents));
    }
    void require_states(unsigned n, const char* what) const {
        if (n > max_states)
            throw CapError(std::string(what) + ": " + std::to_string(n) + " states exceeds the subset-sweep cap of " +
                           std::to_string(max_states));
    }
};

}  // namespace clfi
