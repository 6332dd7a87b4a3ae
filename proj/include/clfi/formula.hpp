#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clfi/sets.hpp"

namespace clfi {

enum class FormulaKind { Atom, Not, And, Eff, Fi };

/// Immutable formula of coalition logic with the full-inability modality.
///
/// Only the five primitive constructors exist; disjunction, implication,
/// equivalence and the strategic box are desugared by the parser. Copies share
/// nodes. Equality and hashing are structural.
class Formula {
public:
    static Formula atom(std::string name);
    static Formula negate(Formula sub);
    static Formula conj(Formula left, Formula right);
    static Formula eff(AgentSet coalition, Formula sub);
    static Formula fi(AgentSet coalition, Formula sub);

    FormulaKind kind() const;
    /// Atom name; empty for non-atoms.
    const std::string& name() const;
    /// Operand of Not/Eff/Fi, left operand of And.
    const Formula& sub() const;
    const Formula& left() const { return sub(); }
    const Formula& right() const;
    AgentSet coalition() const;

    std::size_t hash() const;
    /// Number of nodes in the tree (shared subterms counted per occurrence).
    std::size_t tree_size() const;

    /// Identity of the underlying node; stable for the lifetime of any copy.
    const void* node_id() const { return node_.get(); }

    bool operator==(const Formula& other) const;

private:
    struct Node;
    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Parse the ASCII concrete syntax. Throws ParseError.
Formula parse(std::string_view text);

/// Canonical fully-parenthesized form; parse(print(f)) == f.
std::string print(const Formula& f);

/// Removes every Fi node: FI_C(x) becomes (~[C]x') & (~[C](~x')). No other
/// rewriting is performed.
Formula translate(const Formula& f);

bool contains_fi(const Formula& f);

/// Distinct subformulas of f (including f), in post-order of first occurrence.
std::vector<Formula> subformulas(const Formula& f);

/// Subformulas, their negations, and for each FI_C(x) occurrence the four
/// formulas [C]x, [C](~x), ~[C]x, ~[C](~x). Distinct members in
/// deterministic order.
std::vector<Formula> closure_fi(const Formula& f);

/// Atom names in order of first occurrence.
std::vector<std::string> atoms(const Formula& f);

/// Union of all coalitions mentioned by Eff/Fi nodes.
AgentSet mentioned_agents(const Formula& f);

std::size_t modal_depth(const Formula& f);

}  // namespace clfi
