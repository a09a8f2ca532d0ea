#pragma once

// Complex representations of the circle T and the 2-torus T^2 as finite
// multisets of characters, with the text grammar used by the CLI.

#include "character.hpp"
#include "lattice.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <string_view>

namespace ellipcp {

/// Error in the representation grammar; `position` is a 0-based offset into
/// the input text.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
          position(pos) {}
    std::size_t position;
};

/// V = sum_n alpha_n z^n: finite-support map from exponent to multiplicity.
class CircleRep {
public:
    void add(Int exponent, Int multiplicity) {
        if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
        terms_[exponent] += multiplicity;
    }

    const std::map<Int, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t component_count() const { return terms_.size(); }

    Int dimension() const {
        Int d = 0;
        for (const auto& [n, m] : terms_) d += m;
        return d;
    }

    friend bool operator==(const CircleRep&, const CircleRep&) = default;

private:
    std::map<Int, Int> terms_;
};

/// W = sum alpha_chi chi over characters of T^2. Characters are stored
/// unreduced; reduction to primitive directions happens in the divisor layer.
class TorusRep {
public:
    void add(const Character& chi, Int multiplicity) {
        if (multiplicity < 1) throw std::invalid_argument("multiplicity must be positive");
        terms_[chi] += multiplicity;
    }

    const std::map<Character, Int>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    Int dimension() const {
        Int d = 0;
        for (const auto& [chi, m] : terms_) d += m;
        return d;
    }

    bool has_trivial_character() const { return terms_.contains(Character{0, 0}); }

    friend bool operator==(const TorusRep&, const TorusRep&) = default;

private:
    std::map<Character, Int> terms_;
};

/// V (x) w: each z^n becomes the T^2-character (n, 1) with the same
/// multiplicity; H1 acts on the second tensor factor. Dimension is preserved.
inline TorusRep tensor_with_w(const CircleRep& v) {
    TorusRep w;
    for (const auto& [n, m] : v.terms()) w.add(Character{n, 1}, m);
    return w;
}

/// dim_C W^F: total multiplicity of the characters of W that restrict
/// trivially to F.
inline Int fixed_dim(const TorusRep& w, const FiniteSubgroup& f) {
    Int dim = 0;
    for (const auto& [chi, m] : w.terms())
        if (f.character_vanishes(chi)) dim += m;
    return dim;
}

namespace detail {

inline constexpr Int kMaxLiteral = 1'000'000;

class RepParser {
public:
    explicit RepParser(std::string_view text) : text_(text) {}

    CircleRep parse_circle() {
        CircleRep rep;
        parse_term_list([&] {
            Int mult = parse_multiplicity();
            skip_ws();
            if (try_word("eps")) {
                rep.add(0, mult);
            } else if (try_char('z')) {
                rep.add(parse_exponent(), mult);
            } else {
                fail("expected 'eps' or 'z'");
            }
        });
        return rep;
    }

    TorusRep parse_torus() {
        TorusRep rep;
        parse_term_list([&] {
            Int mult = parse_multiplicity();
            skip_ws();
            if (try_word("eps")) {
                rep.add(Character{0, 0}, mult);
                return;
            }
            Int lambda = 0, mu = 0;
            bool seen = false;
            if (try_char('x')) {
                lambda = parse_exponent();
                seen = true;
            }
            skip_ws();
            if (try_char('y')) {
                mu = parse_exponent();
                seen = true;
            }
            if (!seen) fail("expected 'eps', 'x' or 'y'");
            rep.add(Character{lambda, mu}, mult);
        });
        return rep;
    }

private:
    template <class Term>
    void parse_term_list(Term term) {
        skip_ws();
        if (at_end()) fail("empty representation");
        term();
        skip_ws();
        while (!at_end()) {
            if (!try_char('+')) fail("expected '+'");
            skip_ws();
            term();
            skip_ws();
        }
    }

    Int parse_multiplicity() {
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) return 1;
        std::size_t start = pos_;
        Int value = parse_natural();
        if (value == 0) fail("zero multiplicity", start);
        return value;
    }

    // optional '^' INT; defaults to 1
    Int parse_exponent() {
        skip_ws();
        if (!try_char('^')) return 1;
        skip_ws();
        bool neg = try_char('-');
        skip_ws();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected integer exponent");
        Int value = parse_natural();
        return neg ? -value : value;
    }

    Int parse_natural() {
        std::size_t start = pos_;
        Int value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            value = value * 10 + (text_[pos_] - '0');
            if (value > kMaxLiteral) fail("integer literal too large", start);
            ++pos_;
        }
        return value;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool at_end() const { return pos_ >= text_.size(); }

    bool try_char(char c) {
        if (!at_end() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    bool try_word(std::string_view w) {
        if (text_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_); }
    [[noreturn]] void fail(const std::string& msg, std::size_t pos) const {
        throw parse_error(msg, pos);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Grammar: REP := TERM ('+' TERM)*; TERM := [alpha] ('eps' | 'z' ['^' n]);
/// alpha a positive integer, n any integer, whitespace ignored.
/// Repeated characters accumulate; 'eps' is z^0.
inline CircleRep parse_circle_rep(std::string_view text) {
    return detail::RepParser(text).parse_circle();
}

/// Grammar: TERM := [alpha] ('eps' | 'x' ['^' l] ['y' ['^' m]] | 'y' ['^' m]);
/// 'eps' is the trivial character x^0 y^0.
inline TorusRep parse_torus_rep(std::string_view text) {
    return detail::RepParser(text).parse_torus();
}

/// Canonical printer, terms sorted by exponent: "eps + z + 3z^2".
inline std::string to_string(const CircleRep& v) {
    if (v.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, m] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m;
        if (n == 0)
            os << "eps";
        else if (n == 1)
            os << "z";
        else
            os << "z^" << n;
    }
    return os.str();
}

/// Canonical printer with explicit exponents: "x^0y^1 + 4x^1y^1".
inline std::string to_string(const TorusRep& w) {
    if (w.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [chi, m] : w.terms()) {
        if (!first) os << " + ";
        first = false;
        if (m != 1) os << m;
        os << "x^" << chi.lambda << "y^" << chi.mu;
    }
    return os.str();
}

}  // namespace ellipcp
