// ============================================================================
// taut/formula.hpp - the statement language: letters, negation, disjunction
// ============================================================================
//
//   Formula is an immutable tree.  Leaves are letters; inner nodes are
//   Not (one child) or Or (two children).  Equality is structural, so
//   Or(Or(a,b),c) and Or(a,Or(b,c)) are different formulas.  Children are
//   shared between formulas; copying a Formula is one refcount bump.
//
//   A DisjunctList is an ordered sequence of formulas read as a
//   right-associated disjunction.  spine() and join() convert between the
//   two views; join of an empty list is undefined and throws.
//
// ============================================================================

#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace taut {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ── Letter ──────────────────────────────────────────────────────────────────
// Propositional letter.  Names start with an uppercase Latin letter and
// continue with alphanumerics or underscores; equality and ordering are
// exact text comparison.

class Letter {
public:
    explicit Letter(std::string name) : name_(std::move(name)) {
        if (!valid_name(name_))
            throw Error("invalid letter name: \"" + name_ + "\"");
    }

    static bool is_name_start(char c) noexcept { return c >= 'A' && c <= 'Z'; }

    static bool is_name_char(char c) noexcept {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
               (c >= '0' && c <= '9') || c == '_';
    }

    static bool valid_name(std::string_view s) noexcept {
        if (s.empty() || !is_name_start(s[0])) return false;
        for (char c : s.substr(1))
            if (!is_name_char(c)) return false;
        return true;
    }

    const std::string& name() const noexcept { return name_; }

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;

private:
    std::string name_;
};

// ── Formula ─────────────────────────────────────────────────────────────────

class Formula {
public:
    enum class Kind { Atom, Not, Or };

    static Formula atom(Letter letter) {
        return Formula(std::make_shared<const Node>(
            Node{Kind::Atom, std::move(letter), nullptr, nullptr}));
    }

    static Formula atom(std::string name) { return atom(Letter(std::move(name))); }

    static Formula negation(Formula operand) {
        return Formula(std::make_shared<const Node>(
            Node{Kind::Not, std::nullopt, std::move(operand.node_), nullptr}));
    }

    static Formula disjunction(Formula left, Formula right) {
        return Formula(std::make_shared<const Node>(
            Node{Kind::Or, std::nullopt, std::move(left.node_), std::move(right.node_)}));
    }

    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept { return kind() == Kind::Atom; }
    bool is_not() const noexcept { return kind() == Kind::Not; }
    bool is_or() const noexcept { return kind() == Kind::Or; }

    /// The letter of an Atom node.
    const Letter& letter() const { return *expect(Kind::Atom)->letter; }

    /// The operand of a Not node.
    Formula inner() const { return Formula(expect(Kind::Not)->first); }

    Formula left() const { return Formula(expect(Kind::Or)->first); }
    Formula right() const { return Formula(expect(Kind::Or)->second); }

    bool operator==(const Formula& other) const noexcept {
        return equal(node_.get(), other.node_.get());
    }

private:
    struct Node {
        Kind kind;
        std::optional<Letter> letter;        // Atom only
        std::shared_ptr<const Node> first;   // Not: operand, Or: left
        std::shared_ptr<const Node> second;  // Or: right
    };

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    const Node* expect(Kind k) const {
        if (node_->kind != k)
            throw Error("formula accessor does not match the node kind");
        return node_.get();
    }

    static bool equal(const Node* a, const Node* b) noexcept {
        if (a == b) return true;
        if (a->kind != b->kind) return false;
        switch (a->kind) {
        case Kind::Atom: return *a->letter == *b->letter;
        case Kind::Not:  return equal(a->first.get(), b->first.get());
        case Kind::Or:   return equal(a->first.get(), b->first.get()) &&
                                equal(a->second.get(), b->second.get());
        }
        return false;
    }

    std::shared_ptr<const Node> node_;
};

// ── DisjunctList ────────────────────────────────────────────────────────────
// Ordered sequence of formulas standing for a right-associated disjunction.
// The empty list is a legal value; only join() rejects it.

using DisjunctList = std::vector<Formula>;

class EmptyDisjunction : public Error {
public:
    EmptyDisjunction() : Error("empty disjunction") {}
};

namespace detail {

inline void collect_letters(const Formula& f, std::set<Letter>& out) {
    switch (f.kind()) {
    case Formula::Kind::Atom: out.insert(f.letter()); break;
    case Formula::Kind::Not:  collect_letters(f.inner(), out); break;
    case Formula::Kind::Or:
        collect_letters(f.left(), out);
        collect_letters(f.right(), out);
        break;
    }
}

}  // namespace detail

/// All distinct letters of a formula, ordered by name.
inline std::set<Letter> letters(const Formula& f) {
    std::set<Letter> out;
    detail::collect_letters(f, out);
    return out;
}

/// One point per Or node plus one per Not node whose operand is not a
/// letter.  Score zero characterises literals.
inline std::size_t score(const Formula& f) {
    switch (f.kind()) {
    case Formula::Kind::Atom: return 0;
    case Formula::Kind::Not:  return score(f.inner()) + (f.inner().is_atom() ? 0 : 1);
    case Formula::Kind::Or:   return score(f.left()) + score(f.right()) + 1;
    }
    return 0;  // unreachable
}

/// Maximal right-spine decomposition: Or(a, rest) splits into a followed
/// by the spine of rest.  Never empty.
inline DisjunctList spine(const Formula& f) {
    DisjunctList out;
    Formula cur = f;
    while (cur.is_or()) {
        out.push_back(cur.left());
        cur = cur.right();
    }
    out.push_back(cur);
    return out;
}

/// Right fold of a nonempty list with Or; a singleton joins to its sole
/// element.
inline Formula join(const DisjunctList& items) {
    if (items.empty()) throw EmptyDisjunction();
    Formula acc = items.back();
    for (std::size_t i = items.size() - 1; i-- > 0;)
        acc = Formula::disjunction(items[i], acc);
    return acc;
}

}  // namespace taut
