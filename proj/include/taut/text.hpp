// ============================================================================
// taut/text.hpp - concrete syntax: parsing and rendering
// ============================================================================
//
// Grammar (whitespace between tokens is insignificant):
//
//   formula := disj ("->" formula)?          implication, right-associated
//   disj    := neg  ("|"  disj)?             disjunction, right-associated
//   neg     := "!" neg | atom
//   atom    := LETTER | "(" formula ")"
//   LETTER  := [A-Z][A-Za-z0-9_]*
//
// "A -> B" is an abbreviation and parses directly to !A|B; there is no
// implication node.  The Unicode spellings ¬, ∨ and ⇒ are accepted as
// aliases of !, | and ->.
//
// Rendering is the inverse: minimal parentheses under the convention that
// unparenthesised chains associate to the right, so parse(render(f)) == f.
// ============================================================================

#pragma once

#include "taut/formula.hpp"

#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>

namespace taut {

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t offset, const std::string& message)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
          offset_(offset) {}

    /// Byte offset into the input at which parsing failed.
    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

class EmptyInput : public SyntaxError {
public:
    EmptyInput() : SyntaxError(0, "input contains no formula") {}
};

namespace detail {

class FormulaParser {
public:
    explicit FormulaParser(std::string_view text) : text_(text) {}

    Formula parse_all() {
        skip_whitespace();
        if (at_end()) throw EmptyInput();
        Formula f = parse_formula();
        skip_whitespace();
        if (!at_end())
            throw SyntaxError(pos_, "unexpected trailing input after the formula");
        return f;
    }

private:
    Formula parse_formula() {
        Formula lhs = parse_disjunction();
        skip_whitespace();
        if (consume("->") || consume("\xE2\x87\x92"))  // ⇒
            return Formula::disjunction(Formula::negation(std::move(lhs)), parse_formula());
        return lhs;
    }

    Formula parse_disjunction() {
        Formula first = parse_negation();
        skip_whitespace();
        if (consume("|") || consume("\xE2\x88\xA8"))  // ∨
            return Formula::disjunction(std::move(first), parse_disjunction());
        return first;
    }

    Formula parse_negation() {
        skip_whitespace();
        if (consume("!") || consume("\xC2\xAC"))  // ¬
            return Formula::negation(parse_negation());
        return parse_atom();
    }

    Formula parse_atom() {
        skip_whitespace();
        if (at_end())
            throw SyntaxError(pos_, "unexpected end of input, expected a formula");
        if (consume("(")) {
            Formula f = parse_formula();
            skip_whitespace();
            if (!consume(")"))
                throw SyntaxError(pos_, "expected ')'");
            return f;
        }
        if (Letter::is_name_start(text_[pos_]))
            return Formula::atom(Letter(consume_letter_name()));
        throw SyntaxError(pos_, "unexpected " + describe_current() +
                                    ", expected a letter, '!' or '('");
    }

    std::string consume_letter_name() {
        std::size_t start = pos_;
        ++pos_;
        while (!at_end() && Letter::is_name_char(text_[pos_])) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    bool consume(std::string_view token) {
        if (text_.substr(pos_).starts_with(token)) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void skip_whitespace() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }

    std::string describe_current() const {
        unsigned char c = static_cast<unsigned char>(text_[pos_]);
        if (c >= 0x20 && c < 0x7F) return std::string("'") + static_cast<char>(c) + "'";
        static const char* hex = "0123456789ABCDEF";
        return std::string("byte 0x") + hex[c >> 4] + hex[c & 0xF];
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the canonical ASCII syntax and its Unicode aliases.
/// Throws EmptyInput on blank input, SyntaxError otherwise.
inline Formula parse(std::string_view text) {
    return detail::FormulaParser(text).parse_all();
}

enum class ConnectiveStyle { Ascii, Unicode };

namespace detail {

inline void render_into(const Formula& f, ConnectiveStyle style, std::string& out) {
    auto child = [&](const Formula& c) {
        // Parentheses only where right association would misread the tree.
        if (c.is_or()) {
            out += '(';
            render_into(c, style, out);
            out += ')';
        } else {
            render_into(c, style, out);
        }
    };
    switch (f.kind()) {
    case Formula::Kind::Atom:
        out += f.letter().name();
        break;
    case Formula::Kind::Not:
        out += (style == ConnectiveStyle::Ascii) ? "!" : "\xC2\xAC";
        child(f.inner());
        break;
    case Formula::Kind::Or:
        child(f.left());
        out += (style == ConnectiveStyle::Ascii) ? "|" : "\xE2\x88\xA8";
        render_into(f.right(), style, out);
        break;
    }
}

}  // namespace detail

inline std::string render(const Formula& f, ConnectiveStyle style = ConnectiveStyle::Ascii) {
    std::string out;
    detail::render_into(f, style, out);
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Formula& f) {
    return os << render(f);
}

}  // namespace taut
