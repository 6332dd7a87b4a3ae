#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace clfi {

/// Fixed-width bit set over small index ranges. Complements are always taken
/// relative to an explicit universe size, never the word width.
template <class Word, class Tag>
class SmallSet {
public:
    using word_type = Word;
    static constexpr unsigned capacity = sizeof(Word) * 8;

    constexpr SmallSet() = default;
    constexpr explicit SmallSet(Word bits) : bits_(bits) {}
    constexpr SmallSet(std::initializer_list<unsigned> members) {
        for (unsigned m : members) bits_ |= Word(1) << m;
    }

    static constexpr SmallSet full(unsigned n) {
        if (n >= capacity) return SmallSet(static_cast<Word>(~Word(0)));
        return SmallSet(static_cast<Word>((Word(1) << n) - 1));
    }
    static constexpr SmallSet singleton(unsigned i) { return SmallSet(static_cast<Word>(Word(1) << i)); }

    constexpr Word bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
    constexpr bool contains(unsigned i) const { return (bits_ >> i) & 1u; }

    constexpr SmallSet with(unsigned i) const { return SmallSet(static_cast<Word>(bits_ | (Word(1) << i))); }
    constexpr SmallSet without(unsigned i) const { return SmallSet(static_cast<Word>(bits_ & ~(Word(1) << i))); }

    constexpr bool subset_of(SmallSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool proper_subset_of(SmallSet o) const { return subset_of(o) && bits_ != o.bits_; }
    constexpr bool intersects(SmallSet o) const { return (bits_ & o.bits_) != 0; }
    constexpr bool fits(unsigned n) const { return subset_of(full(n)); }

    constexpr SmallSet complement(unsigned n) const { return SmallSet(static_cast<Word>(~bits_ & full(n).bits_)); }

    constexpr SmallSet operator|(SmallSet o) const { return SmallSet(static_cast<Word>(bits_ | o.bits_)); }
    constexpr SmallSet operator&(SmallSet o) const { return SmallSet(static_cast<Word>(bits_ & o.bits_)); }
    constexpr SmallSet operator-(SmallSet o) const { return SmallSet(static_cast<Word>(bits_ & ~o.bits_)); }

    constexpr bool operator==(const SmallSet&) const = default;
    constexpr auto operator<=>(const SmallSet&) const = default;

    std::vector<unsigned> members() const {
        std::vector<unsigned> out;
        for (Word b = bits_; b != 0; b &= static_cast<Word>(b - 1)) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
        return out;
    }

    /// "{0,2,3}"
    std::string str() const {
        std::string s = "{";
        bool first = true;
        for (unsigned m : members()) {
            if (!first) s += ',';
            s += std::to_string(m);
            first = false;
        }
        return s + "}";
    }

private:
    Word bits_ = 0;
};

struct AgentTag {};
struct StateTag {};

/// Coalition over agents 0..N-1, N <= 16.
using AgentSet = SmallSet<std::uint16_t, AgentTag>;
/// Outcome set over states 0..|W|-1, |W| <= 32.
using StateSet = SmallSet<std::uint32_t, StateTag>;

inline constexpr unsigned kMaxAgents = AgentSet::capacity;
inline constexpr unsigned kMaxStates = StateSet::capacity;

/// Number of subsets of an n-element universe, as a loop bound.
inline constexpr std::uint64_t subset_count(unsigned n) { return std::uint64_t(1) << n; }

}  // namespace clfi
