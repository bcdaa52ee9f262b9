#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace tacho::logic {

enum class Connective { Atom, Not, And, Or, Implies };

/// Immutable formula tree; subtrees are shared.
class Formula {
public:
    static Formula atom(std::string name) { return Formula(Connective::Atom, std::move(name), {}); }
    friend Formula operator!(Formula a) { return Formula(Connective::Not, {}, {std::move(a)}); }
    friend Formula operator&&(Formula a, Formula b) { return Formula(Connective::And, {}, {std::move(a), std::move(b)}); }
    friend Formula operator||(Formula a, Formula b) { return Formula(Connective::Or, {}, {std::move(a), std::move(b)}); }
    static Formula implies(Formula a, Formula b) {
        return Formula(Connective::Implies, {}, {std::move(a), std::move(b)});
    }

    [[nodiscard]] Connective kind() const { return node_->kind; }
    [[nodiscard]] const std::string& name() const { return node_->name; }
    [[nodiscard]] const Formula& lhs() const { return node_->args.at(0); }
    [[nodiscard]] const Formula& rhs() const { return node_->args.at(1); }

    friend bool operator==(const Formula& a, const Formula& b) {
        if (a.node_ == b.node_) return true;
        return a.kind() == b.kind() && a.name() == b.name() && a.node_->args == b.node_->args;
    }

    void collect_atoms(std::set<std::string>& out) const {
        if (kind() == Connective::Atom) {
            out.insert(name());
            return;
        }
        for (const auto& a : node_->args) a.collect_atoms(out);
    }

    [[nodiscard]] std::set<std::string> atoms() const {
        std::set<std::string> s;
        collect_atoms(s);
        return s;
    }

    /// Fully parenthesised, in the parser's syntax.
    [[nodiscard]] std::string to_string() const {
        switch (kind()) {
        case Connective::Atom: return name();
        case Connective::Not: return "!" + lhs().to_string();
        case Connective::And: return "(" + lhs().to_string() + " & " + rhs().to_string() + ")";
        case Connective::Or: return "(" + lhs().to_string() + " | " + rhs().to_string() + ")";
        case Connective::Implies: return "(" + lhs().to_string() + " -> " + rhs().to_string() + ")";
        }
        return {};
    }

private:
    struct Node {
        Connective kind;
        std::string name;
        std::vector<Formula> args;
    };

    Formula(Connective k, std::string name, std::vector<Formula> args)
        : node_(std::make_shared<const Node>(Node{k, std::move(name), std::move(args)})) {}

    std::shared_ptr<const Node> node_;
};

using Valuation = std::map<std::string, bool>;

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Classical two-valued semantics.
inline bool eval(const Formula& f, const Valuation& v) {
    switch (f.kind()) {
    case Connective::Atom: {
        auto it = v.find(f.name());
        if (it == v.end()) throw EvalError("valuation has no value for atom '" + f.name() + "'");
        return it->second;
    }
    case Connective::Not: return !eval(f.lhs(), v);
    case Connective::And: return eval(f.lhs(), v) && eval(f.rhs(), v);
    case Connective::Or: return eval(f.lhs(), v) || eval(f.rhs(), v);
    case Connective::Implies: return !eval(f.lhs(), v) || eval(f.rhs(), v);
    }
    return false;
}

inline constexpr std::size_t kMaxTruthTableAtoms = 20;

/// Calls `fn(valuation)` for every row of the truth table, atoms in sorted order, all-false first.
template <typename Fn>
void for_each_valuation(const Formula& f, Fn&& fn) {
    const auto names = f.atoms();
    if (names.size() > kMaxTruthTableAtoms) throw EvalError("too many atoms for a truth table");
    const std::vector<std::string> order(names.begin(), names.end());
    const std::uint64_t rows = std::uint64_t{1} << order.size();
    Valuation v;
    for (std::uint64_t r = 0; r < rows; ++r) {
        for (std::size_t i = 0; i < order.size(); ++i) v[order[i]] = (r >> (order.size() - 1 - i)) & 1u;
        if (!fn(v)) return;
    }
}

/// First falsifying row of the truth table, if any.
inline std::optional<Valuation> counterexample(const Formula& f) {
    std::optional<Valuation> found;
    for_each_valuation(f, [&](const Valuation& v) {
        if (eval(f, v)) return true;
        found = v;
        return false;
    });
    return found;
}

inline bool is_tautology(const Formula& f) { return !counterexample(f).has_value(); }

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t pos, const std::string& what)
        : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + what), pos_(pos) {}
    [[nodiscard]] std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Precedence `!` > `&` > `|` > `->`; `->` associates to the right, `&` and `|` to the left.
/// Atoms are identifiers.
inline Formula parse_formula(std::string_view text) {
    struct Parser {
        std::string_view s;
        std::size_t i = 0;

        void skip() {
            while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        }
        bool eat(std::string_view tok) {
            skip();
            if (s.substr(i, tok.size()) == tok) {
                i += tok.size();
                return true;
            }
            return false;
        }
        Formula implication() {
            Formula lhs = disjunction();
            if (eat("->")) return Formula::implies(std::move(lhs), implication());
            return lhs;
        }
        Formula disjunction() {
            Formula f = conjunction();
            while (eat("|")) f = std::move(f) || conjunction();
            return f;
        }
        Formula conjunction() {
            Formula f = unary();
            while (eat("&")) f = std::move(f) && unary();
            return f;
        }
        Formula unary() {
            if (eat("!")) return !unary();
            if (eat("(")) {
                Formula f = implication();
                if (!eat(")")) throw SyntaxError(i, "expected ')'");
                return f;
            }
            skip();
            const auto start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            if (start == i) throw SyntaxError(i, i < s.size() ? "unexpected '" + std::string(1, s[i]) + "'" : "unexpected end of input");
            if (std::isdigit(static_cast<unsigned char>(s[start]))) throw SyntaxError(start, "atom must start with a letter");
            return Formula::atom(std::string(s.substr(start, i - start)));
        }
    };

    Parser p{text};
    Formula f = p.implication();
    p.skip();
    if (p.i != text.size()) throw SyntaxError(p.i, "unexpected '" + std::string(1, text[p.i]) + "'");
    return f;
}

}  // namespace tacho::logic
