// ============================================================================
// taut/semantics.hpp - truth values, assignments, tables, tautology checks
// ============================================================================
//
// Truth tables and verdicts enumerate assignments in one canonical order:
// letters sorted by name left to right, V before F, and the leftmost
// letter varying slowest.  Over {L, M} the rows are therefore
// (V,V), (V,F), (F,V), (F,F).  "First falsifying assignment" always means
// first in this order.
// ============================================================================

#pragma once

#include "taut/formula.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace taut {

enum class TruthValue : unsigned char { V, F };

constexpr TruthValue truth_not(TruthValue v) noexcept {
    return v == TruthValue::V ? TruthValue::F : TruthValue::V;
}

constexpr TruthValue truth_or(TruthValue a, TruthValue b) noexcept {
    return (a == TruthValue::V || b == TruthValue::V) ? TruthValue::V : TruthValue::F;
}

constexpr char to_char(TruthValue v) noexcept { return v == TruthValue::V ? 'V' : 'F'; }

inline std::ostream& operator<<(std::ostream& os, TruthValue v) { return os << to_char(v); }

class UnboundLetter : public Error {
public:
    explicit UnboundLetter(const Letter& letter)
        : Error("letter " + letter.name() + " has no assigned truth value"),
          name_(letter.name()) {}

    const std::string& letter_name() const noexcept { return name_; }

private:
    std::string name_;
};

class TooManyLetters : public Error {
public:
    TooManyLetters(std::size_t count, std::size_t limit)
        : Error("formula has " + std::to_string(count) + " letters, enumeration is capped at " +
                std::to_string(limit)) {}
};

/// Table enumeration refuses formulas beyond this many letters; 2^24 rows
/// is already past any desk-scale use.
inline constexpr std::size_t kMaxEnumeratedLetters = 24;

// ── Assignment ──────────────────────────────────────────────────────────────
// Finite map from letters to truth values, iterated in letter order.

class Assignment {
public:
    Assignment() = default;

    void set(Letter letter, TruthValue v) { values_.insert_or_assign(std::move(letter), v); }

    bool contains(const Letter& letter) const { return values_.count(letter) != 0; }

    TruthValue value_of(const Letter& letter) const {
        auto it = values_.find(letter);
        if (it == values_.end()) throw UnboundLetter(letter);
        return it->second;
    }

    const std::map<Letter, TruthValue>& values() const noexcept { return values_; }

    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    bool operator==(const Assignment&) const = default;

private:
    std::map<Letter, TruthValue> values_;
};

/// "L=V M=F" style listing in letter order.
inline std::string to_string(const Assignment& a) {
    std::string out;
    for (const auto& [letter, value] : a.values()) {
        if (!out.empty()) out += ' ';
        out += letter.name();
        out += '=';
        out += to_char(value);
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Assignment& a) {
    return os << to_string(a);
}

/// Evaluates under the classical tables for Not and Or.  Both sides of a
/// disjunction are evaluated, so a letter missing from the assignment is
/// detected no matter where it sits.
inline TruthValue eval(const Formula& f, const Assignment& a) {
    switch (f.kind()) {
    case Formula::Kind::Atom: return a.value_of(f.letter());
    case Formula::Kind::Not:  return truth_not(eval(f.inner(), a));
    case Formula::Kind::Or: {
        TruthValue left = eval(f.left(), a);
        TruthValue right = eval(f.right(), a);
        return truth_or(left, right);
    }
    }
    return TruthValue::F;  // unreachable
}

namespace detail {

inline std::vector<Letter> sorted_letters(const Formula& f) {
    std::set<Letter> s = letters(f);
    return std::vector<Letter>(s.begin(), s.end());
}

inline void check_letter_limit(std::size_t count) {
    if (count > kMaxEnumeratedLetters) throw TooManyLetters(count, kMaxEnumeratedLetters);
}

/// Assignment of canonical row `row`: bit 0 of the row index drives the
/// rightmost letter, a clear bit means V.
inline Assignment row_assignment(const std::vector<Letter>& letters, std::size_t row) {
    Assignment a;
    const std::size_t k = letters.size();
    for (std::size_t p = 0; p < k; ++p) {
        bool bit = (row >> (k - 1 - p)) & std::size_t{1};
        a.set(letters[p], bit ? TruthValue::F : TruthValue::V);
    }
    return a;
}

}  // namespace detail

// ── TruthTable ──────────────────────────────────────────────────────────────
// Full table of a formula in canonical row order.  Only the value column
// is materialised; row assignments are recomputed from the row index.

class TruthTable {
public:
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    const Formula& formula() const noexcept { return formula_; }

    std::size_t rows() const noexcept { return column_.size(); }

    Assignment assignment(std::size_t row) const {
        return detail::row_assignment(letters_, row);
    }

    TruthValue value(std::size_t row) const { return column_.at(row); }

private:
    friend TruthTable truth_table(const Formula&);

    TruthTable(std::vector<Letter> letters, Formula formula, std::vector<TruthValue> column)
        : letters_(std::move(letters)), formula_(std::move(formula)), column_(std::move(column)) {}

    std::vector<Letter> letters_;
    Formula formula_;
    std::vector<TruthValue> column_;
};

/// Throws TooManyLetters past kMaxEnumeratedLetters.
inline TruthTable truth_table(const Formula& f) {
    std::vector<Letter> ls = detail::sorted_letters(f);
    detail::check_letter_limit(ls.size());
    const std::size_t n = std::size_t{1} << ls.size();
    std::vector<TruthValue> column;
    column.reserve(n);
    for (std::size_t row = 0; row < n; ++row)
        column.push_back(eval(f, detail::row_assignment(ls, row)));
    return TruthTable(std::move(ls), f, std::move(column));
}

// ── Verdict ─────────────────────────────────────────────────────────────────
// Either "tautology" or the first falsifying assignment in canonical order.

class Verdict {
public:
    static Verdict tautology() { return Verdict(std::nullopt); }
    static Verdict falsified(Assignment witness) { return Verdict(std::move(witness)); }

    bool is_tautology() const noexcept { return !witness_.has_value(); }

    const Assignment& witness() const {
        if (is_tautology()) throw Error("tautology verdict carries no witness");
        return *witness_;
    }

    bool operator==(const Verdict&) const = default;

private:
    explicit Verdict(std::optional<Assignment> witness) : witness_(std::move(witness)) {}

    std::optional<Assignment> witness_;
};

/// Tautology check; stops at the first falsifying row.
inline Verdict is_true(const Formula& f) {
    std::vector<Letter> ls = detail::sorted_letters(f);
    detail::check_letter_limit(ls.size());
    const std::size_t n = std::size_t{1} << ls.size();
    for (std::size_t row = 0; row < n; ++row) {
        Assignment a = detail::row_assignment(ls, row);
        if (eval(f, a) == TruthValue::F) return Verdict::falsified(std::move(a));
    }
    return Verdict::tautology();
}

/// Tautology check of join(items); empty lists are rejected.
inline Verdict is_true_list(const DisjunctList& items) {
    return is_true(join(items));
}

}  // namespace taut
