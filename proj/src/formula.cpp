#include "clfi/formula.hpp"

#include <cctype>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "clfi/error.hpp"

namespace clfi {

struct Formula::Node {
    FormulaKind kind;
    std::string name;
    AgentSet coalition;
    Formula a;
    Formula b;
    std::size_t hash;
    std::size_t size;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::atom(std::string name) {
    std::size_t h = mix(0, std::hash<std::string>{}(name));
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Atom, std::move(name), {}, {}, {}, h, 1}));
}

Formula Formula::negate(Formula sub) {
    std::size_t h = mix(1, sub.node_->hash);
    std::size_t n = sub.node_->size + 1;
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, {}, {}, std::move(sub), {}, h, n}));
}

Formula Formula::conj(Formula left, Formula right) {
    std::size_t h = mix(mix(2, left.node_->hash), right.node_->hash);
    std::size_t n = left.node_->size + right.node_->size + 1;
    return Formula(
        std::make_shared<const Node>(Node{FormulaKind::And, {}, {}, std::move(left), std::move(right), h, n}));
}

Formula Formula::eff(AgentSet coalition, Formula sub) {
    std::size_t h = mix(mix(3, coalition.bits()), sub.node_->hash);
    std::size_t n = sub.node_->size + 1;
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Eff, {}, coalition, std::move(sub), {}, h, n}));
}

Formula Formula::fi(AgentSet coalition, Formula sub) {
    std::size_t h = mix(mix(4, coalition.bits()), sub.node_->hash);
    std::size_t n = sub.node_->size + 1;
    return Formula(std::make_shared<const Node>(Node{FormulaKind::Fi, {}, coalition, std::move(sub), {}, h, n}));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
AgentSet Formula::coalition() const { return node_->coalition; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::tree_size() const { return node_->size; }

const Formula& Formula::sub() const { return node_->a; }
const Formula& Formula::right() const { return node_->b; }

bool Formula::operator==(const Formula& other) const {
    const Node* x = node_.get();
    const Node* y = other.node_.get();
    if (x == y) return true;
    if (x->hash != y->hash || x->kind != y->kind || x->size != y->size) return false;
    switch (x->kind) {
        case FormulaKind::Atom: return x->name == y->name;
        case FormulaKind::Not: return sub() == other.sub();
        case FormulaKind::And: return sub() == other.sub() && right() == other.right();
        case FormulaKind::Eff:
        case FormulaKind::Fi: return x->coalition == y->coalition && sub() == other.sub();
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        Formula f = parse_iff();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return f;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool lookahead(std::string_view tok) {
        skip_ws();
        return text_.substr(pos_, tok.size()) == tok;
    }

    bool accept(std::string_view tok) {
        if (!lookahead(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
    static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

    Formula parse_iff() {
        Formula lhs = parse_imp();
        while (accept("<->")) {
            Formula rhs = parse_imp();
            lhs = Formula::conj(implies(lhs, rhs), implies(rhs, lhs));
        }
        return lhs;
    }

    Formula parse_imp() {
        Formula lhs = parse_or();
        // "<->" starts with '<', so "->" cannot be confused with it here.
        if (accept("->")) return implies(lhs, parse_imp());
        return lhs;
    }

    Formula parse_or() {
        Formula lhs = parse_and();
        while (accept("|")) {
            Formula rhs = parse_and();
            lhs = Formula::negate(Formula::conj(Formula::negate(lhs), Formula::negate(rhs)));
        }
        return lhs;
    }

    Formula parse_and() {
        Formula lhs = parse_unary();
        while (accept("&")) lhs = Formula::conj(lhs, parse_unary());
        return lhs;
    }

    Formula parse_unary() {
        skip_ws();
        if (accept("~")) return Formula::negate(parse_unary());
        if (lookahead("[")) {
            AgentSet c = parse_coalition();
            return Formula::eff(c, parse_unary());
        }
        if (keyword("FI")) {
            AgentSet c = parse_coalition();
            return Formula::fi(c, parse_unary());
        }
        if (keyword("Box")) {
            AgentSet c = parse_coalition();
            return Formula::negate(Formula::eff(c, Formula::negate(parse_unary())));
        }
        return parse_primary();
    }

    // A keyword is only a modality when immediately followed by '['.
    bool keyword(std::string_view kw) {
        skip_ws();
        std::size_t end = pos_ + kw.size();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        std::size_t k = end;
        while (k < text_.size() && std::isspace(static_cast<unsigned char>(text_[k]))) ++k;
        if (k >= text_.size() || text_[k] != '[') return false;
        pos_ = end;
        return true;
    }

    Formula parse_primary() {
        skip_ws();
        if (accept("(")) {
            Formula f = parse_iff();
            expect(")");
            return f;
        }
        if (pos_ < text_.size() && ident_start(text_[pos_])) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
            return Formula::atom(std::string(text_.substr(start, pos_ - start)));
        }
        if (pos_ >= text_.size()) fail("unexpected end of input");
        fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

    AgentSet parse_coalition() {
        expect("[");
        expect("{");
        AgentSet c;
        if (!accept("}")) {
            do {
                skip_ws();
                if (pos_ < text_.size() && text_[pos_] == '-') fail("negative agent index");
                std::size_t start = pos_;
                unsigned long value = 0;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                    if (value >= kMaxAgents) {
                        pos_ = start;
                        fail("agent index exceeds " + std::to_string(kMaxAgents - 1));
                    }
                    ++pos_;
                }
                if (pos_ == start) fail("expected agent index");
                auto agent = static_cast<unsigned>(value);
                if (c.contains(agent)) {
                    pos_ = start;
                    fail("duplicate agent " + std::to_string(agent) + " in coalition");
                }
                c = c.with(agent);
            } while (accept(","));
            expect("}");
        }
        expect("]");
        return c;
    }

    static Formula implies(const Formula& a, const Formula& b) {
        return Formula::negate(Formula::conj(a, Formula::negate(b)));
    }
};

void print_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case FormulaKind::Atom: out += f.name(); return;
        case FormulaKind::Not:
            out += "(~";
            print_into(f.sub(), out);
            out += ')';
            return;
        case FormulaKind::And:
            out += '(';
            print_into(f.left(), out);
            out += " & ";
            print_into(f.right(), out);
            out += ')';
            return;
        case FormulaKind::Eff:
            out += '[' + f.coalition().str() + "](";
            print_into(f.sub(), out);
            out += ')';
            return;
        case FormulaKind::Fi:
            out += "FI[" + f.coalition().str() + "](";
            print_into(f.sub(), out);
            out += ')';
            return;
    }
}

}  // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

Formula translate(const Formula& f) {
    std::unordered_map<const void*, Formula> memo;
    std::function<Formula(const Formula&)> go = [&](const Formula& g) -> Formula {
        if (auto it = memo.find(g.node_id()); it != memo.end()) return it->second;
        Formula r = g;
        switch (g.kind()) {
            case FormulaKind::Atom: break;
            case FormulaKind::Not: r = Formula::negate(go(g.sub())); break;
            case FormulaKind::And: r = Formula::conj(go(g.left()), go(g.right())); break;
            case FormulaKind::Eff: r = Formula::eff(g.coalition(), go(g.sub())); break;
            case FormulaKind::Fi: {
                Formula t = go(g.sub());
                r = Formula::conj(Formula::negate(Formula::eff(g.coalition(), t)),
                                  Formula::negate(Formula::eff(g.coalition(), Formula::negate(t))));
                break;
            }
        }
        memo.emplace(g.node_id(), r);
        return r;
    };
    return go(f);
}

bool contains_fi(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Atom: return false;
        case FormulaKind::Fi: return true;
        case FormulaKind::And: return contains_fi(f.left()) || contains_fi(f.right());
        default: return contains_fi(f.sub());
    }
}

namespace {

// Post-order walk visiting each shared node once.
template <class Visit>
void walk_dag(const Formula& f, std::unordered_set<const void*>& seen, Visit&& visit) {
    if (!seen.insert(f.node_id()).second) return;
    switch (f.kind()) {
        case FormulaKind::Atom: break;
        case FormulaKind::And:
            walk_dag(f.left(), seen, visit);
            walk_dag(f.right(), seen, visit);
            break;
        default: walk_dag(f.sub(), seen, visit); break;
    }
    visit(f);
}

class OrderedFormulaSet {
public:
    void insert(const Formula& f) {
        if (set_.insert(f).second) order_.push_back(f);
    }
    std::vector<Formula> take() { return std::move(order_); }

private:
    std::unordered_set<Formula, FormulaHash> set_;
    std::vector<Formula> order_;
};

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
    OrderedFormulaSet out;
    std::unordered_set<const void*> seen;
    walk_dag(f, seen, [&](const Formula& g) { out.insert(g); });
    return out.take();
}

std::vector<Formula> closure_fi(const Formula& f) {
    OrderedFormulaSet out;
    for (const Formula& g : subformulas(f)) {
        out.insert(g);
        out.insert(Formula::negate(g));
        if (g.kind() == FormulaKind::Fi) {
            Formula pos = Formula::eff(g.coalition(), g.sub());
            Formula neg = Formula::eff(g.coalition(), Formula::negate(g.sub()));
            out.insert(pos);
            out.insert(neg);
            out.insert(Formula::negate(pos));
            out.insert(Formula::negate(neg));
        }
    }
    return out.take();
}

std::vector<std::string> atoms(const Formula& f) {
    std::vector<std::string> out;
    std::unordered_set<std::string> names;
    std::unordered_set<const void*> seen;
    walk_dag(f, seen, [&](const Formula& g) {
        if (g.kind() == FormulaKind::Atom && names.insert(g.name()).second) out.push_back(g.name());
    });
    return out;
}

AgentSet mentioned_agents(const Formula& f) {
    AgentSet all;
    std::unordered_set<const void*> seen;
    walk_dag(f, seen, [&](const Formula& g) {
        if (g.kind() == FormulaKind::Eff || g.kind() == FormulaKind::Fi) all = all | g.coalition();
    });
    return all;
}

std::size_t modal_depth(const Formula& f) {
    switch (f.kind()) {
        case FormulaKind::Atom: return 0;
        case FormulaKind::Not: return modal_depth(f.sub());
        case FormulaKind::And: return std::max(modal_depth(f.left()), modal_depth(f.right()));
        default: return 1 + modal_depth(f.sub());
    }
}

}  // namespace clfi
